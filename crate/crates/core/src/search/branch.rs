use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{Best, Budget, Forbidden, Meter, Objective, SearchProblem, SearchResult};
use crate::bits::{bit, Combinations};
use crate::canon::{colored_key, CanonicalForm};
use crate::error::{Error, Result};
use crate::expansion::contains_expansion_using;
use crate::hypergraph::{Graph, UniformHypergraph, MAX_VERTICES};

/// States with fewer undecided candidates than this are not memoised; their
/// subtrees are cheaper than a canonical key.
const MEMO_MIN_REMAINING: usize = 3;

/// Candidates decided up front when the search is split across workers.
const SPLIT_DEPTH: usize = 4;

struct Branch<'a> {
    n: usize,
    r: usize,
    f: &'a Graph,
    cands: &'a [u64],
    meter: &'a Meter,
    shared_best: &'a AtomicU64,
    chosen: Vec<u64>,
    memo: HashSet<CanonicalForm>,
    best: Best,
}

impl<'a> Branch<'a> {
    fn admits(&self, e: u64) -> bool {
        let mut masks = self.chosen.clone();
        masks.push(e);
        let h = UniformHypergraph::from_masks_unchecked(self.n, self.r, masks);
        !contains_expansion_using(&h, self.f, e)
    }

    fn bound_ok(&self, d: usize) -> bool {
        let reach = (self.chosen.len() + self.cands.len() - d) as u64;
        let found = self.best.key.as_ref().map_or(0, |_| self.best.value);
        reach >= found.max(self.shared_best.load(Ordering::Relaxed))
    }

    fn fresh_state(&mut self, d: usize) -> bool {
        if self.cands.len() - d < MEMO_MIN_REMAINING {
            return true;
        }
        let mut colored: Vec<(u64, u8)> = self.chosen.iter().map(|&m| (m, 1)).collect();
        colored.extend(self.cands[d..].iter().map(|&m| (m, 0)));
        self.memo.insert(colored_key(self.n, self.r, &colored))
    }

    fn go(&mut self, d: usize) {
        if !self.meter.tick() || !self.bound_ok(d) {
            return;
        }
        if d == self.cands.len() {
            let h = UniformHypergraph::from_masks_unchecked(self.n, self.r, self.chosen.clone());
            self.best.offer(self.chosen.len() as u64, &h);
            self.shared_best.fetch_max(self.best.value, Ordering::Relaxed);
            return;
        }
        if !self.fresh_state(d) {
            return;
        }
        let e = self.cands[d];
        if self.admits(e) {
            self.chosen.push(e);
            self.go(d + 1);
            self.chosen.pop();
        }
        self.go(d + 1);
    }
}

/// Free prefixes over the first `depth` candidates, in include-first order.
fn prefixes(n: usize, r: usize, f: &Graph, cands: &[u64], depth: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &e in &cands[..depth] {
        let mut next = Vec::with_capacity(out.len() * 2);
        for p in out {
            let mut with = p.clone();
            with.push(e);
            let h = UniformHypergraph::from_masks_unchecked(n, r, with.clone());
            if !contains_expansion_using(&h, f, e) {
                next.push(with);
            }
            next.push(p);
        }
        out = next;
    }
    out
}

/// `ex_r(n, F^(r)+)`: most edges in an `n`-vertex `r`-graph without a copy of
/// the expansion of `f`. The witness is the canonical representative with the
/// smallest canonical key among all optima.
pub fn ex_hypergraph(n: usize, r: usize, f: &Graph, budget: &Budget) -> Result<SearchResult> {
    let problem = SearchProblem {
        n,
        host_uniformity: r,
        forbidden: vec![Forbidden::Expansion(f.clone())],
        objective: Objective::Edges,
        budget: budget.clone(),
    };
    problem.validate()?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let cands: Vec<u64> = Combinations::new(n, r).map(|c| c.iter().fold(0u64, |m, &v| m | bit(v))).collect();
    let meter = Meter::new(budget);
    let shared_best = AtomicU64::new(0);
    let run = |start: usize, chosen: Vec<u64>| {
        let mut b = Branch {
            n,
            r,
            f,
            cands: &cands,
            meter: &meter,
            shared_best: &shared_best,
            chosen,
            memo: HashSet::new(),
            best: Best::new(n, r),
        };
        b.go(start);
        b.best
    };
    let best = if budget.parallel && cands.len() > SPLIT_DEPTH {
        let results: Vec<Best> =
            prefixes(n, r, f, &cands, SPLIT_DEPTH).into_par_iter().map(|p| run(SPLIT_DEPTH, p)).collect();
        let mut best = Best::new(n, r);
        for b in results {
            best.merge(b);
        }
        best
    } else {
        run(0, Vec::new())
    };
    Ok(SearchResult {
        problem: problem.summary("ex_hypergraph"),
        value: best.value,
        witness: best.witness,
        exhaustive: !meter.stopped(),
        nodes: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::binomial;
    use crate::embed::contains_subhypergraph;
    use crate::expansion::expand;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn vacuous_hosts_are_complete() {
        assert_eq!(ex_hypergraph(5, 3, &k(3), &Budget::default()).unwrap().value, 10);
        for n in 4..=7 {
            let res = ex_hypergraph(n, 3, &k(4), &Budget::default()).unwrap();
            assert_eq!(res.value, binomial(n as u64, 3));
            assert!(res.exhaustive);
        }
    }

    #[test]
    fn triangle_expansion_on_six_vertices() {
        let res = ex_hypergraph(6, 3, &k(3), &Budget::default()).unwrap();
        assert!(res.exhaustive);
        assert_eq!(res.value, 10);
        assert_eq!(res.witness.edge_count(), 10);
        assert!(!contains_subhypergraph(&res.witness, &expand(&k(3), 3).unwrap()).unwrap());
    }

    #[test]
    fn parallel_agrees() {
        let seq = ex_hypergraph(6, 3, &k(3), &Budget::default()).unwrap();
        let par = ex_hypergraph(6, 3, &k(3), &Budget::default().with_parallel(true)).unwrap();
        assert_eq!((seq.value, &seq.witness), (par.value, &par.witness));
    }

    #[test]
    fn budget_cut() {
        let res = ex_hypergraph(6, 3, &k(3), &Budget::nodes(10)).unwrap();
        assert!(!res.exhaustive);
    }
}

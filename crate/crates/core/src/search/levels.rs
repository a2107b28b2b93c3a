use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Best, Budget, Forbidden, Meter, Objective, SearchProblem, SearchResult};
use crate::bits::{bit, Combinations};
use crate::canon::{labeling_unbounded, CanonicalForm};
use crate::error::Result;
use crate::hypergraph::{Graph, UniformHypergraph};

type Admits<'a> = dyn Fn(&UniformHypergraph, u64) -> bool + Sync + 'a;

/// Free isomorphism classes grouped by edge count. Each class is stored as
/// its canonical representative, levels sorted by canonical key.
pub(crate) struct Classes {
    pub levels: Vec<Vec<(CanonicalForm, UniformHypergraph)>>,
    pub exhaustive: bool,
}

fn extend(
    g: &UniformHypergraph,
    all_sets: &[u64],
    admits: &Admits,
    meter: &Meter,
) -> Vec<(CanonicalForm, UniformHypergraph)> {
    let mut out = Vec::new();
    for &e in all_sets {
        if g.contains_mask(e) {
            continue;
        }
        if !meter.tick() {
            break;
        }
        let h = g.with_mask(e);
        if admits(&h, e) {
            let (key, label) = labeling_unbounded(&h);
            out.push((key, h.relabel_unchecked(&label)));
        }
    }
    out
}

pub(crate) fn enumerate_classes(n: usize, r: usize, admits: &Admits, meter: &Meter, parallel: bool) -> Classes {
    let all_sets: Vec<u64> = Combinations::new(n, r).map(|c| c.iter().fold(0u64, |m, &v| m | bit(v))).collect();
    let empty = UniformHypergraph::from_masks_unchecked(n, r, Vec::new());
    let mut levels = vec![vec![(labeling_unbounded(&empty).0, empty)]];
    loop {
        let current = levels.last().expect("level 0 present");
        let found: Vec<Vec<(CanonicalForm, UniformHypergraph)>> = if parallel {
            current.par_iter().map(|(_, g)| extend(g, &all_sets, admits, meter)).collect()
        } else {
            current.iter().map(|(_, g)| extend(g, &all_sets, admits, meter)).collect()
        };
        let next: BTreeMap<CanonicalForm, UniformHypergraph> = found.into_iter().flatten().collect();
        let done = next.is_empty();
        if !done {
            levels.push(next.into_iter().collect());
        }
        if meter.stopped() {
            return Classes { levels, exhaustive: false };
        }
        if done {
            return Classes { levels, exhaustive: true };
        }
    }
}

pub(crate) fn solve_by_levels(problem: &SearchProblem, kind: &str) -> Result<SearchResult> {
    problem.validate()?;
    let meter = Meter::new(&problem.budget);
    let admits = |h: &UniformHypergraph, e: u64| problem.admits(h, e);
    let classes = enumerate_classes(problem.n, problem.host_uniformity, &admits, &meter, problem.budget.parallel);
    let mut best = Best::new(problem.n, problem.host_uniformity);
    for level in &classes.levels {
        for (key, h) in level {
            best.offer_keyed(problem.objective.value(h), key.clone(), || h.clone());
        }
    }
    Ok(SearchResult {
        problem: problem.summary(kind),
        value: best.value,
        witness: best.witness,
        exhaustive: classes.exhaustive,
        nodes: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

fn graph_problem(n: usize, forbidden: &[Graph], objective: Objective, budget: &Budget) -> SearchProblem {
    SearchProblem {
        n,
        host_uniformity: 2,
        forbidden: forbidden.iter().map(|g| Forbidden::Subgraph(g.hypergraph().clone())).collect(),
        objective,
        budget: budget.clone(),
    }
}

/// `ex(n, 𝓕)`: most edges in an `n`-vertex graph with no member of
/// `forbidden` as a subgraph.
pub fn ex_graph_edges(n: usize, forbidden: &[Graph], budget: &Budget) -> Result<SearchResult> {
    solve_by_levels(&graph_problem(n, forbidden, Objective::Edges, budget), "ex_graph_edges")
}

/// `ex(n, K_order, 𝓕)`: most `order`-cliques in an `n`-vertex graph avoiding
/// `forbidden`.
pub fn ex_graph_cliques(n: usize, order: usize, forbidden: &[Graph], budget: &Budget) -> Result<SearchResult> {
    solve_by_levels(&graph_problem(n, forbidden, Objective::Cliques(order), budget), "ex_graph_cliques")
}

/// Every isomorphism class of `n`-vertex `r`-graphs avoiding `forbidden`, as
/// canonical representatives ordered by edge count then canonical key. The
/// flag reports whether the enumeration completed within the budget.
pub fn free_classes(
    n: usize,
    r: usize,
    forbidden: &[Forbidden],
    budget: &Budget,
) -> Result<(Vec<UniformHypergraph>, bool)> {
    let problem = SearchProblem {
        n,
        host_uniformity: r,
        forbidden: forbidden.to_vec(),
        objective: Objective::Edges,
        budget: budget.clone(),
    };
    problem.validate()?;
    let meter = Meter::new(budget);
    let admits = |h: &UniformHypergraph, e: u64| problem.admits(h, e);
    let classes = enumerate_classes(n, r, &admits, &meter, budget.parallel);
    let all = classes.levels.into_iter().flatten().map(|(_, h)| h).collect();
    Ok((all, classes.exhaustive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_cliques;
    use crate::constructions::turan_graph;
    use crate::error::Error;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn mantel_values() {
        for (n, want) in [(5, 6), (6, 9)] {
            let res = ex_graph_edges(n, &[k(3)], &Budget::default()).unwrap();
            assert_eq!(res.value, want);
            assert!(res.exhaustive);
            assert_eq!(res.witness.edge_count() as u64, want);
        }
    }

    #[test]
    fn zykov_values() {
        let res = ex_graph_cliques(6, 3, &[k(4)], &Budget::default()).unwrap();
        assert_eq!(res.value, 8);
        assert_eq!(res.value, count_cliques(&turan_graph(6, 3).unwrap(), 3));
        for n in 3..=6 {
            assert_eq!(
                ex_graph_cliques(n, 2, &[k(3)], &Budget::default()).unwrap().value,
                ex_graph_edges(n, &[k(3)], &Budget::default()).unwrap().value
            );
        }
    }

    #[test]
    fn all_graphs_on_four_vertices() {
        let (all, done) = free_classes(4, 2, &[], &Budget::default()).unwrap();
        assert!(done);
        assert_eq!(all.len(), 11);
    }

    #[test]
    fn triangle_free_classes_on_five_vertices() {
        let (all, done) =
            free_classes(5, 2, &[Forbidden::Subgraph(k(3).into_hypergraph())], &Budget::default()).unwrap();
        assert!(done);
        assert_eq!(all.len(), 14);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let res = ex_graph_edges(7, &[k(3)], &Budget::nodes(50)).unwrap();
        assert!(!res.exhaustive);
        assert!(res.value <= 12);
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = ex_graph_cliques(6, 3, &[k(4)], &Budget::default()).unwrap();
        let par = ex_graph_cliques(6, 3, &[k(4)], &Budget::default().with_parallel(true)).unwrap();
        assert_eq!((seq.value, &seq.witness), (par.value, &par.witness));
    }

    #[test]
    fn empty_pattern_rejected() {
        assert!(matches!(ex_graph_edges(4, &[Graph::empty(2).unwrap()], &Budget::default()), Err(Error::EmptyPattern)));
    }
}

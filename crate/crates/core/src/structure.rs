//! A finite diagnostic for the structure of near-extremal hosts: split the
//! vertices into `k` parts with as few fat pairs inside parts as possible and
//! flag vertices that keep many fat neighbours in their own part.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::{bit, iter_bits};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::operators::fat_pair_graph;

/// Hosts up to this order are partitioned exactly.
pub const EXACT_PARTITION_LIMIT: usize = 12;

/// A non-negative rational threshold such as `1/4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::BadParameters("zero denominator".into()));
        }
        Ok(Fraction { num, den })
    }

    /// Whether `count >= self * n`.
    pub fn reached_by(&self, count: usize, n: usize) -> bool {
        count as u128 * self.den as u128 >= self.num as u128 * n as u128
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction { num: 1, den: 4 }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `a/b`, an integer, or a finite decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("cannot read {s:?} as a fraction"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            return Fraction::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let frac_val: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Fraction::new(whole.checked_mul(den).and_then(|w| w.checked_add(frac_val)).ok_or_else(bad)?, den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub theta: Fraction,
    /// Edges of the fat-pair graph.
    pub fat_edges: usize,
    pub partition: Vec<Vec<usize>>,
    /// Fat-pair edges with both ends in one part.
    pub internal_edges: usize,
    /// Fat neighbours of each vertex inside its own part.
    pub internal_degree: Vec<usize>,
    pub b_candidates: Vec<usize>,
    /// Whether the partition is a proven optimum.
    pub exact: bool,
    /// Set when `k = 1`: every edge is internal.
    pub degenerate: bool,
}

struct Exact<'a> {
    adj: &'a [u64],
    k: usize,
    blocks: Vec<u64>,
    assign: Vec<usize>,
    best_cost: usize,
    best: Vec<usize>,
}

impl Exact<'_> {
    fn go(&mut self, v: usize, used: usize, cost: usize) {
        if cost >= self.best_cost {
            return;
        }
        let n = self.adj.len();
        if v == n {
            self.best_cost = cost;
            self.best = self.assign.clone();
            return;
        }
        let limit = (used + 1).min(self.k);
        for b in 0..limit {
            let add = (self.adj[v] & self.blocks[b]).count_ones() as usize;
            self.blocks[b] |= bit(v);
            self.assign[v] = b;
            self.go(v + 1, used.max(b + 1), cost + add);
            self.blocks[b] &= !bit(v);
        }
    }
}

fn exact_partition(adj: &[u64], k: usize) -> Vec<usize> {
    let n = adj.len();
    let mut e = Exact { adj, k, blocks: vec![0; k], assign: vec![0; n], best_cost: usize::MAX, best: vec![0; n] };
    e.go(0, 0, 0);
    e.best
}

fn local_partition(adj: &[u64], k: usize) -> Vec<usize> {
    let n = adj.len();
    let mut blocks = vec![0u64; k];
    let mut assign = vec![0usize; n];
    for v in 0..n {
        let b = (0..k).min_by_key(|&b| ((adj[v] & blocks[b]).count_ones(), b)).unwrap();
        blocks[b] |= bit(v);
        assign[v] = b;
    }
    loop {
        let mut improved = false;
        for v in 0..n {
            let here = assign[v];
            let cost_here = (adj[v] & blocks[here] & !bit(v)).count_ones();
            let (b, cost) =
                (0..k).map(|b| (b, (adj[v] & blocks[b] & !bit(v)).count_ones())).min_by_key(|&(b, c)| (c, b)).unwrap();
            if cost < cost_here {
                blocks[here] &= !bit(v);
                blocks[b] |= bit(v);
                assign[v] = b;
                improved = true;
            }
        }
        if !improved {
            return assign;
        }
    }
}

/// Partitions the fat-pair graph `G = fat_pair_graph(h, t)` into `k` parts
/// minimising the edges of `G` inside parts (exactly up to
/// [`EXACT_PARTITION_LIMIT`] vertices, by deterministic local search beyond),
/// and reports the vertices whose internal degree is at least `theta * n`.
pub fn analyze_structure(h: &UniformHypergraph, k: usize, t: usize, theta: Fraction) -> Result<StructureReport> {
    if k == 0 {
        return Err(Error::BadParameters("k must be at least 1".into()));
    }
    let g = fat_pair_graph(h, t)?;
    let n = h.n();
    let adj = g.adjacency();
    let exact = n <= EXACT_PARTITION_LIMIT || k == 1;
    let assign = if k == 1 {
        vec![0; n]
    } else if exact {
        exact_partition(&adj, k)
    } else {
        local_partition(&adj, k)
    };
    let mut blocks = vec![0u64; k];
    for (v, &b) in assign.iter().enumerate() {
        blocks[b] |= bit(v);
    }
    let internal_degree: Vec<usize> = (0..n).map(|v| (adj[v] & blocks[assign[v]]).count_ones() as usize).collect();
    let internal_edges = internal_degree.iter().sum::<usize>() / 2;
    let b_candidates = (0..n).filter(|&v| theta.reached_by(internal_degree[v], n)).collect();
    Ok(StructureReport {
        n,
        k,
        t,
        theta,
        fat_edges: g.edge_count(),
        partition: blocks.iter().map(|&b| iter_bits(b).collect()).collect(),
        internal_edges,
        internal_degree,
        b_candidates,
        exact,
        degenerate: k == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{turan_cone, turan_hypergraph};

    #[test]
    fn turan_host_splits_cleanly() {
        let rep = analyze_structure(&turan_hypergraph(9, 3, 3).unwrap(), 3, 2, Fraction::default()).unwrap();
        assert_eq!(rep.internal_edges, 0);
        assert!(rep.b_candidates.is_empty());
        assert_eq!(rep.partition, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        assert!(rep.exact);
    }

    #[test]
    fn cone_apex_is_flagged() {
        let h = turan_cone(9, 3, 3, 1).unwrap();
        let rep = analyze_structure(&h, 3, 2, Fraction::new(2, 9).unwrap()).unwrap();
        assert_eq!(rep.internal_edges, 2);
        assert_eq!(rep.internal_degree[0], 2);
        assert_eq!(rep.b_candidates, vec![0]);
        let strict = analyze_structure(&h, 3, 2, Fraction::new(1, 3).unwrap()).unwrap();
        assert!(strict.b_candidates.is_empty());
    }

    #[test]
    fn single_part_is_degenerate() {
        let h = turan_hypergraph(6, 3, 3).unwrap();
        let rep = analyze_structure(&h, 1, 1, Fraction::default()).unwrap();
        assert!(rep.degenerate);
        assert_eq!(rep.internal_edges, rep.fat_edges);
    }

    #[test]
    fn local_search_beyond_exact_limit() {
        let rep = analyze_structure(&turan_hypergraph(15, 3, 3).unwrap(), 3, 2, Fraction::default()).unwrap();
        assert!(!rep.exact);
        assert_eq!(rep.internal_edges, 0);
    }

    #[test]
    fn fractions_parse() {
        assert_eq!("1/4".parse::<Fraction>().unwrap(), Fraction { num: 1, den: 4 });
        assert_eq!("0.25".parse::<Fraction>().unwrap(), Fraction { num: 25, den: 100 });
        assert_eq!("2".parse::<Fraction>().unwrap(), Fraction { num: 2, den: 1 });
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
        assert!(Fraction::new(2, 9).unwrap().reached_by(2, 9));
        assert!(!Fraction::new(1, 3).unwrap().reached_by(2, 9));
    }
}

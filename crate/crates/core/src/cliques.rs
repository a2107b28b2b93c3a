//! Clique counting in graphs and hypergraphs, and the clique expansion.

use std::collections::HashSet;

use crate::bits::{above, binomial, bit, iter_bits, submasks_of_size};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph};

/// Pivoting clique-tree walk: every leaf stands for the cliques formed by its
/// held vertices plus any subset of its pivots, so each clique is counted once.
fn pivot_count(adj: &[u64], cand: u64, held: usize, pivots: usize, order: usize, total: &mut u64) {
    if held > order {
        return;
    }
    if cand == 0 {
        if order - held <= pivots {
            *total += binomial(pivots as u64, (order - held) as u64);
        }
        return;
    }
    let pivot = iter_bits(cand).max_by_key(|&u| ((adj[u] & cand).count_ones(), std::cmp::Reverse(u))).unwrap();
    let mut rest = cand;
    for v in iter_bits(cand & !adj[pivot]) {
        rest &= !bit(v);
        let next = adj[v] & rest;
        if v == pivot {
            pivot_count(adj, next, held, pivots + 1, order, total);
        } else {
            pivot_count(adj, next, held + 1, pivots, order, total);
        }
    }
}

/// Number of `order`-vertex cliques in `g`.
pub fn count_cliques(g: &Graph, order: usize) -> u64 {
    if order == 0 {
        return 1;
    }
    let adj = g.adjacency();
    let mut total = 0;
    pivot_count(&adj, g.hypergraph().vertex_mask(), 0, 0, order, &mut total);
    total
}

fn collect_cliques(adj: &[u64], cand: u64, current: u64, remaining: usize, out: &mut Vec<u64>) {
    if remaining == 0 {
        out.push(current);
        return;
    }
    for v in iter_bits(cand) {
        let next = adj[v] & cand & above(v);
        if (next.count_ones() as usize) + 1 >= remaining {
            collect_cliques(adj, next, current | bit(v), remaining - 1, out);
        }
    }
}

/// The `order`-graph whose hyperedges are the vertex sets of `order`-cliques of `g`.
pub fn clique_expansion(g: &Graph, order: usize) -> Result<UniformHypergraph> {
    if order < 2 {
        return Err(Error::UniformityTooLow { r: order });
    }
    let adj = g.adjacency();
    let mut masks = Vec::new();
    collect_cliques(&adj, g.hypergraph().vertex_mask(), 0, order, &mut masks);
    UniformHypergraph::from_masks(g.n(), order, masks)
}

struct HyperCliques<'a> {
    edges: &'a HashSet<u64>,
    s: usize,
    n: usize,
    order: usize,
    count: u64,
}

impl HyperCliques<'_> {
    fn extend(&mut self, set: u64, size: usize, from: usize) {
        if size == self.order {
            self.count += 1;
            return;
        }
        for v in from..self.n {
            if self.n - v < self.order - size {
                break;
            }
            let ok =
                size + 1 < self.s || submasks_of_size(set, self.s - 1).all(|sub| self.edges.contains(&(sub | bit(v))));
            if ok {
                self.extend(set | bit(v), size + 1, v + 1);
            }
        }
    }
}

/// Number of `order`-sets all of whose `h.r()`-subsets are hyperedges.
pub fn count_hypercliques(h: &UniformHypergraph, order: usize) -> Result<u64> {
    if order < h.r() {
        return Err(Error::BadParameters(format!("clique order {order} is below the uniformity {}", h.r())));
    }
    if order == h.r() {
        return Ok(h.edge_count() as u64);
    }
    let edges: HashSet<u64> = h.edge_masks().iter().copied().collect();
    let mut walk = HyperCliques { edges: &edges, s: h.r(), n: h.n(), order, count: 0 };
    walk.extend(0, 0, 0);
    Ok(walk.count)
}

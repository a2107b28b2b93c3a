//! Shadow, heavy shadow, links, matchings and fat sets.

use std::collections::HashMap;

use crate::bits::{bit, iter_bits, mask_of, submasks_of_size};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph};

fn subset_counts(h: &UniformHypergraph) -> HashMap<u64, usize> {
    let mut counts = HashMap::new();
    for &e in h.edge_masks() {
        for v in iter_bits(e) {
            *counts.entry(e & !bit(v)).or_insert(0) += 1;
        }
    }
    counts
}

/// The `(r-1)`-sets contained in some hyperedge.
pub fn shadow(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    heavy_shadow(h, 1)
}

/// The `(r-1)`-sets contained in at least `t` hyperedges.
pub fn heavy_shadow(h: &UniformHypergraph, t: usize) -> Result<UniformHypergraph> {
    if h.r() < 2 {
        return Err(Error::UniformityTooLow { r: h.r() });
    }
    if t == 0 {
        return Err(Error::BadParameters("threshold must be at least 1".into()));
    }
    let masks = subset_counts(h).into_iter().filter(|&(_, c)| c >= t).map(|(m, _)| m).collect();
    Ok(UniformHypergraph::from_masks_unchecked(h.n(), h.r() - 1, masks))
}

/// Applies [`heavy_shadow`] with the same threshold until the uniformity is `target`.
pub fn iterated_heavy(h: &UniformHypergraph, t: usize, target: usize) -> Result<UniformHypergraph> {
    if target < 1 || target >= h.r() {
        return Err(Error::BadTarget { target, r: h.r() });
    }
    let mut cur = h.clone();
    while cur.r() > target {
        cur = heavy_shadow(&cur, t)?;
    }
    Ok(cur)
}

pub(crate) fn link_masks(h: &UniformHypergraph, a: u64) -> Vec<u64> {
    h.edge_masks().iter().filter(|&&e| e & a == a).map(|&e| e & !a).collect()
}

fn checked_set(h: &UniformHypergraph, a: &[usize]) -> Result<u64> {
    let mask = mask_of(a);
    if let Some(&v) = a.iter().find(|&&v| v >= h.n()) {
        return Err(Error::VertexRange { vertex: v, n: h.n() });
    }
    if mask.count_ones() as usize != a.len() {
        return Err(Error::DuplicateVertexInEdge { edge: a.to_vec() });
    }
    if a.len() >= h.r() {
        return Err(Error::SetTooLarge { size: a.len(), r: h.r() });
    }
    Ok(mask)
}

/// `{E \ A : A ⊆ E}` as an `(r-|A|)`-graph on the same vertex set.
pub fn link(h: &UniformHypergraph, a: &[usize]) -> Result<UniformHypergraph> {
    let mask = checked_set(h, a)?;
    Ok(UniformHypergraph::from_masks_unchecked(h.n(), h.r() - a.len(), link_masks(h, mask)))
}

/// A maximum family of pairwise-disjoint hyperedges and the number of
/// branch-and-bound nodes spent finding it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<u64>,
    pub nodes: u64,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

struct Packer<'a> {
    sets: &'a [u64],
    set_size: usize,
    target: Option<usize>,
    current: Vec<u64>,
    best: Vec<u64>,
    nodes: u64,
}

impl Packer<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn upper_bound(&self, start: usize, used: u64) -> usize {
        let mut count = 0;
        let mut cover = 0u64;
        for &s in &self.sets[start..] {
            if s & used == 0 {
                count += 1;
                cover |= s;
            }
        }
        if self.set_size == 0 {
            count
        } else {
            count.min(cover.count_ones() as usize / self.set_size)
        }
    }

    fn search(&mut self, start: usize, used: u64) {
        self.nodes += 1;
        let Some(offset) = self.sets[start..].iter().position(|&s| s & used == 0) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        let i = start + offset;
        if self.current.len() + self.upper_bound(i, used) <= self.best.len() {
            return;
        }
        self.current.push(self.sets[i]);
        self.search(i + 1, used | self.sets[i]);
        self.current.pop();
        if self.done() {
            return;
        }
        self.search(i + 1, used);
    }
}

fn pack(sets: &[u64], set_size: usize, target: Option<usize>) -> Matching {
    let mut packer = Packer { sets, set_size, target, current: Vec::new(), best: Vec::new(), nodes: 0 };
    if target != Some(0) {
        packer.search(0, 0);
    }
    Matching { edges: packer.best, nodes: packer.nodes }
}

/// Exact maximum matching by branching on the lowest-index edge that is still
/// disjoint from the chosen ones, include-branch first.
pub fn maximum_matching(h: &UniformHypergraph) -> Matching {
    pack(h.edge_masks(), h.r(), None)
}

pub fn matching_number(h: &UniformHypergraph) -> usize {
    maximum_matching(h).size()
}

/// Whether `sets` (all of size `set_size`) contain `t` pairwise-disjoint members.
pub(crate) fn has_disjoint(sets: &[u64], set_size: usize, t: usize) -> Option<Vec<u64>> {
    if sets.len() < t {
        return None;
    }
    let m = pack(sets, set_size, Some(t));
    (m.size() >= t).then(|| m.edges[..t].to_vec())
}

/// `t` hyperedges through `a` whose pairwise intersections are exactly `a`,
/// returned as their link sets, if they exist.
pub(crate) fn fat_witness(h: &UniformHypergraph, a: u64, t: usize) -> Option<Vec<u64>> {
    let size = h.r() - a.count_ones() as usize;
    has_disjoint(&link_masks(h, a), size, t)
}

/// `A` is `t`-fat when `t` hyperedges pairwise intersect exactly in `A`,
/// i.e. the link of `A` has a matching of size `t`.
pub fn is_fat(h: &UniformHypergraph, a: &[usize], t: usize) -> Result<bool> {
    let mask = checked_set(h, a)?;
    Ok(fat_witness(h, mask, t).is_some())
}

/// The graph of `t`-fat pairs.
pub fn fat_pair_graph(h: &UniformHypergraph, t: usize) -> Result<Graph> {
    if h.r() < 2 {
        return Err(Error::UniformityTooLow { r: h.r() });
    }
    let candidates: Vec<u64> = if t == 0 {
        submasks_of_size(h.vertex_mask(), 2).collect()
    } else {
        let mut pairs: Vec<u64> = h.edge_masks().iter().flat_map(|&e| submasks_of_size(e, 2)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    };
    let masks = candidates.into_iter().filter(|&p| fat_witness(h, p, t).is_some()).collect();
    Graph::from_hypergraph(UniformHypergraph::from_masks_unchecked(h.n(), 2, masks))
}

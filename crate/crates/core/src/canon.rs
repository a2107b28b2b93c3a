//! Exact canonical forms by individualisation and refinement.
//!
//! Cells of an ordered vertex partition are refined by a label-invariant
//! signature until stable; the first non-singleton cell is then split on each
//! of its vertices in turn. Every discrete partition yields a relabelling, and
//! the canonical key is the smallest relabelled edge list over all of them.
//! Branches on `v` are skipped when swapping `v` with an already tried vertex
//! of the same cell is an automorphism, since those subtrees produce the same
//! keys.

use std::collections::HashMap;

use crate::bits::{bit, iter_bits};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

pub const DEFAULT_CANON_BOUND: usize = 12;

/// A byte key identifying a hypergraph up to isomorphism. Keys are totally
/// ordered and equal exactly for isomorphic hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[inline]
fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    splitmix(h ^ splitmix(x))
}

type Cells = Vec<Vec<usize>>;

struct Canonizer<'a> {
    n: usize,
    edges: &'a [(u64, u8)],
    incident: Vec<Vec<usize>>,
    lookup: HashMap<u64, u8>,
    swaps: HashMap<(usize, usize), bool>,
    best: Option<(Vec<(u8, u64)>, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(n: usize, edges: &'a [(u64, u8)]) -> Self {
        let mut incident = vec![Vec::new(); n];
        for (i, &(m, _)) in edges.iter().enumerate() {
            for v in iter_bits(m) {
                incident[v].push(i);
            }
        }
        let lookup = edges.iter().copied().collect();
        Canonizer { n, edges, incident, lookup, swaps: HashMap::new(), best: None }
    }

    fn refine(&self, mut cells: Cells) -> Cells {
        let mut cell_of = vec![0usize; self.n];
        let mut sig = vec![0u64; self.n];
        let mut codes = Vec::new();
        let mut others = Vec::new();
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            for v in 0..self.n {
                codes.clear();
                for &e in &self.incident[v] {
                    let (mask, color) = self.edges[e];
                    others.clear();
                    others.extend(iter_bits(mask & !bit(v)).map(|w| cell_of[w] as u64));
                    others.sort_unstable();
                    codes.push(others.iter().fold(u64::from(color) + 1, |h, &c| mix(h, c)));
                }
                codes.sort_unstable();
                sig[v] = codes.iter().fold(codes.len() as u64, |h, &c| mix(h, c));
            }
            let mut changed = false;
            let mut next = Vec::with_capacity(cells.len());
            for mut cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                cell.sort_unstable_by_key(|&v| (sig[v], v));
                let mut start = 0;
                for i in 1..=cell.len() {
                    if i == cell.len() || sig[cell[i]] != sig[cell[start]] {
                        if start > 0 || i < cell.len() {
                            changed = true;
                        }
                        next.push(cell[start..i].to_vec());
                        start = i;
                    }
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn swap_is_automorphism(&mut self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        if let Some(&ans) = self.swaps.get(&key) {
            return ans;
        }
        let pair = bit(u) | bit(v);
        let ans = self.edges.iter().all(|&(m, c)| {
            let hit = m & pair;
            if hit == 0 || hit == pair {
                return true;
            }
            self.lookup.get(&(m ^ pair)) == Some(&c)
        });
        self.swaps.insert(key, ans);
        ans
    }

    fn leaf(&mut self, cells: &Cells) {
        let mut label = vec![0usize; self.n];
        for (i, cell) in cells.iter().enumerate() {
            label[cell[0]] = i;
        }
        let mut key: Vec<(u8, u64)> =
            self.edges.iter().map(|&(m, c)| (c, iter_bits(m).fold(0u64, |acc, v| acc | bit(label[v])))).collect();
        key.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((best, _)) => key < *best,
        };
        if better {
            self.best = Some((key, label));
        }
    }

    fn search(&mut self, cells: Cells) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.swap_is_automorphism(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }

    fn run(mut self) -> (Vec<(u8, u64)>, Vec<usize>) {
        if self.n == 0 {
            return (Vec::new(), Vec::new());
        }
        self.search(vec![(0..self.n).collect()]);
        self.best.expect("search visits at least one leaf")
    }
}

fn encode(n: usize, r: usize, key: &[(u8, u64)], colored: bool) -> Vec<u8> {
    let width = n.div_ceil(8).max(1);
    let mut out = Vec::with_capacity(2 + key.len() * (width + 1));
    out.push(n as u8);
    out.push(r as u8);
    for &(c, m) in key {
        if colored {
            out.push(c);
        }
        out.extend_from_slice(&m.to_be_bytes()[8 - width..]);
    }
    out
}

/// Canonical form with the default vertex bound.
pub fn canonical_form(h: &UniformHypergraph) -> Result<CanonicalForm> {
    canonical_form_bounded(h, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(h: &UniformHypergraph, bound: usize) -> Result<CanonicalForm> {
    canonical_labeling(h, bound).map(|(key, _)| key)
}

/// The canonical key together with the labelling attaining it (`label[v]` is
/// the new name of `v`).
pub fn canonical_labeling(h: &UniformHypergraph, bound: usize) -> Result<(CanonicalForm, Vec<usize>)> {
    if h.n() > bound {
        return Err(Error::TooLarge { n: h.n(), bound });
    }
    Ok(labeling_unbounded(h))
}

pub(crate) fn labeling_unbounded(h: &UniformHypergraph) -> (CanonicalForm, Vec<usize>) {
    let edges: Vec<(u64, u8)> = h.edge_masks().iter().map(|&m| (m, 0)).collect();
    let (key, label) = Canonizer::new(h.n(), &edges).run();
    (CanonicalForm(encode(h.n(), h.r(), &key, false)), label)
}

/// The hypergraph relabelled into its canonical labelling: isomorphic inputs
/// produce identical outputs.
pub fn canonical_representative(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    let (_, label) = canonical_labeling(h, DEFAULT_CANON_BOUND)?;
    Ok(h.relabel_unchecked(&label))
}

/// Canonical key of an edge-coloured hypergraph; used to detect equivalent
/// search states.
pub(crate) fn colored_key(n: usize, r: usize, edges: &[(u64, u8)]) -> CanonicalForm {
    let (key, _) = Canonizer::new(n, edges).run();
    CanonicalForm(encode(n, r, &key, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Graph;

    fn key(g: &Graph) -> CanonicalForm {
        canonical_form(g.hypergraph()).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(key(&a), key(&b));
        assert_ne!(key(&a), key(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn vertex_count_matters() {
        let a = Graph::new(3, &[(0, 1)]).unwrap();
        let b = Graph::new(4, &[(0, 1)]).unwrap();
        assert_ne!(key(&a), key(&b));
        let h = UniformHypergraph::empty(3, 3).unwrap();
        assert_ne!(canonical_form(&h).unwrap(), key(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn bound_enforced() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(canonical_form(g.hypergraph()), Err(Error::TooLarge { n: 13, bound: 12 })));
        assert!(canonical_form_bounded(g.hypergraph(), 13).is_ok());
    }

    #[test]
    fn symmetric_inputs_are_fast() {
        for n in [0, 1, 12] {
            let e = Graph::empty(n).unwrap();
            let k = Graph::complete(n).unwrap();
            assert!(canonical_form(e.hypergraph()).is_ok());
            assert!(canonical_form(k.hypergraph()).is_ok());
        }
        let m = Graph::matching(6).unwrap();
        let relabelled = m.hypergraph().relabel(&[11, 3, 0, 7, 1, 9, 2, 8, 4, 6, 5, 10]).unwrap();
        assert_eq!(canonical_form(m.hypergraph()).unwrap(), canonical_form(&relabelled).unwrap());
    }

    #[test]
    fn representative_is_canonical() {
        let c6 = Graph::cycle(6).unwrap();
        let relabelled = c6.hypergraph().relabel(&[3, 5, 0, 1, 4, 2]).unwrap();
        assert_eq!(canonical_representative(c6.hypergraph()).unwrap(), canonical_representative(&relabelled).unwrap());
    }

    #[test]
    fn colors_distinguish() {
        let a = colored_key(3, 2, &[(0b011, 0), (0b110, 1)]);
        let b = colored_key(3, 2, &[(0b011, 1), (0b110, 0)]);
        let c = colored_key(3, 2, &[(0b011, 1), (0b110, 1)]);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}

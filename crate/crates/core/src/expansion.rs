//! The expansion `F^(r)+` of a graph and the decision procedure for
//! `F^(r)+ ⊆ host`.
//!
//! Containment is decided in two stages. The core `F` is embedded into the
//! pair shadow of the host (every core edge must lie in some hyperedge), then
//! each core edge is assigned a hyperedge through its image so that the
//! `r - 2` extension vertices of the assigned hyperedges avoid the core image
//! and one another.

use serde::Serialize;

use crate::bits::{bit, iter_bits};
use crate::embed::{connected_order, pair_adjacency};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph, MAX_VERTICES};
use crate::operators::fat_witness;

/// The hyperedge standing in for one core edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssignedEdge {
    pub core_edge: (usize, usize),
    pub hyperedge: Vec<usize>,
}

/// A certificate that a host contains `F^(r)+`: where the core vertices go and
/// which hyperedge carries each core edge. Partial witnesses assign only some
/// of the core edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionWitness {
    pub core_map: Vec<usize>,
    pub edge_assignment: Vec<AssignedEdge>,
}

impl ExpansionWitness {
    fn core_image(&self) -> u64 {
        self.core_map.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Checks every witness invariant against `host` and `f`. With `complete`
    /// set, each edge of `f` must be assigned exactly once.
    pub fn check(&self, host: &UniformHypergraph, f: &Graph, complete: bool) -> std::result::Result<(), String> {
        if self.core_map.len() != f.n() {
            return Err(format!("core map covers {} vertices, core has {}", self.core_map.len(), f.n()));
        }
        if let Some(&v) = self.core_map.iter().find(|&&v| v >= host.n()) {
            return Err(format!("core vertex mapped outside the host: {v}"));
        }
        let image = self.core_image();
        if image.count_ones() as usize != f.n() {
            return Err("core map is not injective".into());
        }
        let mut ext_used = 0u64;
        let mut seen = Vec::new();
        for a in &self.edge_assignment {
            let (u, v) = a.core_edge;
            if !f.has_edge(u, v) || u > v {
                return Err(format!("({u}, {v}) is not an edge of the core"));
            }
            if seen.contains(&a.core_edge) {
                return Err(format!("core edge ({u}, {v}) assigned twice"));
            }
            seen.push(a.core_edge);
            if !host.contains_edge(&a.hyperedge) {
                return Err(format!("{:?} is not a hyperedge of the host", a.hyperedge));
            }
            let mask = a.hyperedge.iter().fold(0u64, |m, &x| m | bit(x));
            let pair = bit(self.core_map[u]) | bit(self.core_map[v]);
            if mask & pair != pair {
                return Err(format!("{:?} misses the image of ({u}, {v})", a.hyperedge));
            }
            let ext = mask & !pair;
            if ext & image != 0 {
                return Err(format!("extension of ({u}, {v}) meets the core"));
            }
            if ext & ext_used != 0 {
                return Err(format!("extension of ({u}, {v}) meets another extension"));
            }
            ext_used |= ext;
        }
        if complete && seen.len() != f.edge_count() {
            return Err(format!("{} of {} core edges assigned", seen.len(), f.edge_count()));
        }
        Ok(())
    }
}

/// Adds `r - 2` fresh vertices to every edge. Core vertices keep their
/// labels; fresh vertices are numbered from `|V(F)|` upwards, following the
/// lexicographic order of the edges they extend.
pub fn expand(f: &Graph, r: usize) -> Result<UniformHypergraph> {
    if r < 2 {
        return Err(Error::UniformityTooLow { r });
    }
    let n = f.n() + (r - 2) * f.edge_count();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let mut next = f.n();
    let masks: Vec<u64> = f
        .hypergraph()
        .edge_masks()
        .iter()
        .map(|&e| {
            let mut m = e;
            for _ in 0..r - 2 {
                m |= bit(next);
                next += 1;
            }
            m
        })
        .collect();
    UniformHypergraph::from_masks(n, r, masks)
}

/// `(r-2)|E(F)| + |V(F)|`, the fatness threshold that lets partial copies of
/// the expansion be completed greedily.
pub fn default_t(f: &Graph, r: usize) -> usize {
    r.saturating_sub(2) * f.edge_count() + f.n()
}

struct ExpansionSearch<'a> {
    host: &'a UniformHypergraph,
    r: usize,
    f_n: usize,
    f_adj: Vec<u64>,
    f_deg: Vec<usize>,
    f_edges: Vec<(usize, usize)>,
    pair_edges: Vec<Vec<u64>>,
    shadow_adj: Vec<u64>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
    forbidden: u64,
    forced: Option<(usize, u64)>,
}

impl<'a> ExpansionSearch<'a> {
    fn new(host: &'a UniformHypergraph, f: &Graph, r: usize) -> Self {
        let n = host.n();
        let mut pair_edges = vec![Vec::new(); n * n];
        for &e in host.edge_masks() {
            let vs: Vec<usize> = iter_bits(e).collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    pair_edges[a * n + b].push(e);
                }
            }
        }
        ExpansionSearch {
            host,
            r,
            f_n: f.n(),
            f_adj: f.adjacency(),
            f_deg: f.hypergraph().degrees(),
            f_edges: f.edge_pairs(),
            pair_edges,
            shadow_adj: pair_adjacency(host),
            order: Vec::new(),
            map: vec![usize::MAX; f.n()],
            used: 0,
            forbidden: 0,
            forced: None,
        }
    }

    fn edges_through(&self, a: usize, b: usize) -> &[u64] {
        let (a, b) = (a.min(b), a.max(b));
        &self.pair_edges[a * self.host.n() + b]
    }

    fn prepare(&mut self, first: &[usize]) {
        let touched = self.f_edges.iter().fold(0u64, |m, &(u, v)| m | bit(u) | bit(v));
        self.order = connected_order(&self.f_adj, &self.f_deg, touched, first);
        self.map = vec![usize::MAX; self.f_n];
        self.used = 0;
    }

    fn fits(&self, p: usize, c: usize) -> bool {
        if (self.used | self.forbidden) & bit(c) != 0 || (self.shadow_adj[c].count_ones() as usize) < self.f_deg[p] {
            return false;
        }
        iter_bits(self.f_adj[p]).all(|q| self.map[q] == usize::MAX || self.shadow_adj[c] & bit(self.map[q]) != 0)
    }

    fn embed_core(&mut self, pos: usize) -> Option<Vec<u64>> {
        if pos == self.order.len() {
            return self.assign_edges();
        }
        let p = self.order[pos];
        let fixed = self.map[p];
        let candidates: Vec<usize> = if fixed != usize::MAX {
            self.map[p] = usize::MAX;
            vec![fixed]
        } else {
            (0..self.host.n()).collect()
        };
        for c in candidates {
            if !self.fits(p, c) {
                continue;
            }
            self.map[p] = c;
            self.used |= bit(c);
            if let Some(found) = self.embed_core(pos + 1) {
                return Some(found);
            }
            self.used &= !bit(c);
            self.map[p] = usize::MAX;
        }
        if fixed != usize::MAX {
            self.map[p] = fixed;
        }
        None
    }

    /// Picks pairwise-disjoint extensions for the embedded core; returns the
    /// chosen hyperedge per core edge.
    fn assign_edges(&self) -> Option<Vec<u64>> {
        let image = self.used;
        let mut candidates: Vec<Vec<u64>> = Vec::with_capacity(self.f_edges.len());
        for (i, &(u, v)) in self.f_edges.iter().enumerate() {
            let (a, b) = (self.map[u], self.map[v]);
            let pair = bit(a) | bit(b);
            let list: Vec<u64> = match self.forced {
                Some((j, m)) if j == i => vec![m],
                _ => self.edges_through(a, b).to_vec(),
            };
            let list: Vec<u64> = list.into_iter().filter(|&h| h & pair == pair && (h & !pair) & image == 0).collect();
            if list.is_empty() {
                return None;
            }
            candidates.push(list);
        }
        let mut by_size: Vec<usize> = (0..candidates.len()).collect();
        by_size.sort_by_key(|&i| (candidates[i].len(), i));
        let mut chosen = vec![0u64; candidates.len()];
        if self.pick_disjoint(&candidates, &by_size, 0, 0, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn pick_disjoint(&self, cands: &[Vec<u64>], order: &[usize], pos: usize, used: u64, chosen: &mut [u64]) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        let (u, v) = self.f_edges[i];
        let pair = bit(self.map[u]) | bit(self.map[v]);
        for &h in &cands[i] {
            let ext = h & !pair;
            if ext & used != 0 {
                continue;
            }
            chosen[i] = h;
            if self.pick_disjoint(cands, order, pos + 1, used | ext, chosen) {
                return true;
            }
        }
        false
    }

    fn witness(&self, chosen: &[u64]) -> ExpansionWitness {
        let ext_used = chosen.iter().fold(0u64, |m, &h| m | h);
        let mut core_map = self.map.clone();
        let mut free = iter_bits(self.host.vertex_mask() & !(self.used | ext_used));
        for v in core_map.iter_mut() {
            if *v == usize::MAX {
                *v = free.next().expect("vertex count checked up front");
            }
        }
        let edge_assignment = self
            .f_edges
            .iter()
            .zip(chosen)
            .map(|(&core_edge, &h)| AssignedEdge { core_edge, hyperedge: iter_bits(h).collect() })
            .collect();
        ExpansionWitness { core_map, edge_assignment }
    }

    fn too_small(&self) -> bool {
        self.f_n + (self.r - 2) * self.f_edges.len() > self.host.n() || self.f_edges.len() > self.host.edge_count()
    }
}

fn check_args(host: &UniformHypergraph, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::UniformityTooLow { r });
    }
    if host.r() != r {
        return Err(Error::UniformityMismatch { host: host.r(), pattern: r });
    }
    Ok(())
}

/// A witness for `F^(r)+ ⊆ host`, if the host contains the expansion.
pub fn contains_expansion(host: &UniformHypergraph, f: &Graph, r: usize) -> Result<Option<ExpansionWitness>> {
    check_args(host, r)?;
    let mut s = ExpansionSearch::new(host, f, r);
    if s.too_small() {
        return Ok(None);
    }
    s.prepare(&[]);
    Ok(s.embed_core(0).map(|chosen| s.witness(&chosen)))
}

pub fn is_expansion_free(host: &UniformHypergraph, f: &Graph, r: usize) -> Result<bool> {
    contains_expansion(host, f, r).map(|w| w.is_none())
}

/// Whether some copy of `F^(r)+` in `host` uses the hyperedge `anchor`.
pub(crate) fn contains_expansion_using(host: &UniformHypergraph, f: &Graph, anchor: u64) -> bool {
    let r = host.r();
    let mut s = ExpansionSearch::new(host, f, r);
    if s.too_small() {
        return false;
    }
    let anchor_vertices: Vec<usize> = iter_bits(anchor).collect();
    for (i, &(x, y)) in s.f_edges.clone().iter().enumerate() {
        for &a in &anchor_vertices {
            for &b in &anchor_vertices {
                if a == b {
                    continue;
                }
                s.prepare(&[x, y]);
                s.map[x] = a;
                s.map[y] = b;
                s.forbidden = anchor & !(bit(a) | bit(b));
                s.forced = Some((i, anchor));
                if s.embed_core(0).is_some() {
                    return true;
                }
            }
        }
    }
    false
}

/// Completes a partial expansion greedily. `partial` maps every core vertex
/// and assigns hyperedges to a subgraph `F_0`; every other core edge must map
/// to a `t`-fat pair and `t` must be at least [`default_t`]. Under these
/// conditions a disjoint extension always exists.
pub fn greedy_extend(
    host: &UniformHypergraph,
    partial: &ExpansionWitness,
    f: &Graph,
    t: usize,
) -> Result<Option<ExpansionWitness>> {
    let r = host.r();
    if r < 2 {
        return Err(Error::UniformityTooLow { r });
    }
    let need = default_t(f, r);
    if t < need {
        return Err(Error::PreconditionViolated(format!("threshold {t} is below {need}")));
    }
    partial.check(host, f, false).map_err(Error::PreconditionViolated)?;
    let image = partial.core_image();
    let mut used = image;
    let mut assigned: Vec<Option<u64>> = vec![None; f.edge_count()];
    let pairs = f.edge_pairs();
    for a in &partial.edge_assignment {
        let idx = pairs.iter().position(|&p| p == a.core_edge).expect("checked above");
        let mask = a.hyperedge.iter().fold(0u64, |m, &x| m | bit(x));
        used |= mask;
        assigned[idx] = Some(mask);
    }
    let mut pools = vec![Vec::new(); pairs.len()];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if assigned[i].is_some() {
            continue;
        }
        let pair = bit(partial.core_map[u]) | bit(partial.core_map[v]);
        match fat_witness(host, pair, t) {
            Some(links) => pools[i] = links,
            None => {
                return Err(Error::PreconditionViolated(format!(
                    "pair {:?} carrying core edge ({u}, {v}) is not {t}-fat",
                    (partial.core_map[u], partial.core_map[v])
                )))
            }
        }
    }
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if assigned[i].is_some() {
            continue;
        }
        let pair = bit(partial.core_map[u]) | bit(partial.core_map[v]);
        let Some(&link) = pools[i].iter().find(|&&l| l & used == 0) else {
            return Ok(None);
        };
        used |= link;
        assigned[i] = Some(link | pair);
    }
    let edge_assignment = pairs
        .iter()
        .zip(&assigned)
        .map(|(&core_edge, m)| AssignedEdge { core_edge, hyperedge: iter_bits(m.expect("all assigned")).collect() })
        .collect();
    Ok(Some(ExpansionWitness { core_map: partial.core_map.clone(), edge_assignment }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::book_graph;
    use crate::embed::contains_subhypergraph;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn expand_examples() {
        let e = expand(&k3(), 3).unwrap();
        assert_eq!(e.n(), 6);
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5]]);
        assert_eq!(expand(&k3(), 2).unwrap(), k3().hypergraph().clone());
        let b = expand(&book_graph(2).unwrap(), 3).unwrap();
        assert_eq!((b.n(), b.edge_count()), (11, 6));
    }

    #[test]
    fn default_t_examples() {
        assert_eq!(default_t(&k3(), 3), 6);
        assert_eq!(default_t(&Graph::complete(4).unwrap(), 3), 10);
        assert_eq!(default_t(&Graph::cycle(5).unwrap(), 2), 5);
    }

    #[test]
    fn containment_examples() {
        let k6 = UniformHypergraph::complete(6, 3).unwrap();
        let w = contains_expansion(&k6, &k3(), 3).unwrap().unwrap();
        w.check(&k6, &k3(), true).unwrap();
        assert!(contains_expansion(&UniformHypergraph::complete(5, 3).unwrap(), &k3(), 3).unwrap().is_none());
        let copy = UniformHypergraph::new(6, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]).unwrap();
        let w = contains_expansion(&copy, &k3(), 3).unwrap().unwrap();
        let mut core = w.core_map.clone();
        core.sort();
        assert_eq!(core, vec![0, 1, 2]);
        assert!(matches!(contains_expansion(&copy, &k3(), 4), Err(Error::UniformityMismatch { host: 3, pattern: 4 })));
    }

    #[test]
    fn freeness_examples() {
        let f = book_graph(2).unwrap();
        let host = expand(&f, 3).unwrap();
        assert!(!is_expansion_free(&host, &f, 3).unwrap());
        assert!(is_expansion_free(&UniformHypergraph::empty(12, 3).unwrap(), &f, 3).unwrap());
    }

    #[test]
    fn isolated_core_vertices_consume_room() {
        let f = Graph::new(4, &[(0, 1)]).unwrap();
        let host = UniformHypergraph::new(5, 3, [[0, 1, 2]]).unwrap();
        let w = contains_expansion(&host, &f, 3).unwrap().unwrap();
        w.check(&host, &f, true).unwrap();
        let tight = UniformHypergraph::new(4, 3, [[0, 1, 2]]).unwrap();
        assert!(contains_expansion(&tight, &f, 3).unwrap().is_none());
    }

    #[test]
    fn graph_case_is_subgraph_containment() {
        let host = Graph::cycle(5).unwrap();
        for f in [Graph::path(4).unwrap(), k3(), Graph::matching(2).unwrap()] {
            assert_eq!(
                contains_expansion(host.hypergraph(), &f, 2).unwrap().is_some(),
                contains_subhypergraph(host.hypergraph(), f.hypergraph()).unwrap()
            );
        }
    }

    #[test]
    fn anchored_containment() {
        let copy = UniformHypergraph::new(8, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5], [4, 6, 7]]).unwrap();
        assert!(contains_expansion_using(&copy, &k3(), 0b0000_1011));
        assert!(!contains_expansion_using(&copy, &k3(), 0b1101_0000));
        let second = UniformHypergraph::new(7, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5], [4, 5, 6]]).unwrap();
        assert!(contains_expansion_using(&second, &k3(), 0b111_0000));
    }

    #[test]
    fn greedy_examples() {
        let host = UniformHypergraph::complete(9, 3).unwrap();
        let partial = ExpansionWitness { core_map: vec![0, 1, 2], edge_assignment: vec![] };
        let w = greedy_extend(&host, &partial, &k3(), 6).unwrap().unwrap();
        w.check(&host, &k3(), true).unwrap();

        let full = contains_expansion(&host, &k3(), 3).unwrap().unwrap();
        assert_eq!(greedy_extend(&host, &full, &k3(), 6).unwrap().unwrap(), full);

        let thin = UniformHypergraph::new(9, 3, [[0, 1, 3]]).unwrap();
        assert!(matches!(greedy_extend(&thin, &partial, &k3(), 6), Err(Error::PreconditionViolated(_))));
        assert!(matches!(greedy_extend(&host, &partial, &k3(), 5), Err(Error::PreconditionViolated(_))));
    }
}

//! Generic sub-hypergraph containment by backtracking over injective maps.

use crate::bits::{bit, iter_bits};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Pairs of vertices that share a hyperedge, as adjacency masks.
pub(crate) fn pair_adjacency(h: &UniformHypergraph) -> Vec<u64> {
    let mut adj = vec![0u64; h.n()];
    for &e in h.edge_masks() {
        for v in iter_bits(e) {
            adj[v] |= e & !bit(v);
        }
    }
    adj
}

/// Orders the vertices of `mask` so that each one shares as many `adj`
/// neighbours as possible with those already placed; ties go to the higher
/// degree, then the smaller index. `first` vertices are placed up front.
pub(crate) fn connected_order(adj: &[u64], degree: &[usize], mask: u64, first: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = first.to_vec();
    let mut placed = first.iter().fold(0u64, |m, &v| m | bit(v));
    let mut left = mask & !placed;
    while left != 0 {
        let v =
            iter_bits(left).max_by_key(|&v| ((adj[v] & placed).count_ones(), degree[v], std::cmp::Reverse(v))).unwrap();
        order.push(v);
        placed |= bit(v);
        left &= !bit(v);
    }
    order
}

struct Embedder<'a> {
    host: &'a UniformHypergraph,
    host_adj: Vec<u64>,
    host_deg: Vec<usize>,
    pat_adj: Vec<u64>,
    pat_deg: Vec<usize>,
    order: Vec<usize>,
    checks: Vec<Vec<u64>>,
    isolated: usize,
    map: Vec<usize>,
    used: u64,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a UniformHypergraph, pattern: &UniformHypergraph, first: &[usize]) -> Self {
        let pat_adj = pair_adjacency(pattern);
        let pat_deg = pattern.degrees();
        let touched = pattern.edge_masks().iter().fold(0u64, |m, &e| m | e);
        let order = connected_order(&pat_adj, &pat_deg, touched, first);
        let mut pos = vec![usize::MAX; pattern.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for &e in pattern.edge_masks() {
            let last = iter_bits(e).map(|v| pos[v]).max().unwrap();
            checks[last].push(e);
        }
        Embedder {
            host,
            host_adj: pair_adjacency(host),
            host_deg: host.degrees(),
            pat_adj,
            pat_deg,
            isolated: pattern.n() - order.len(),
            order,
            checks,
            map: vec![usize::MAX; pattern.n()],
            used: 0,
        }
    }

    fn edges_ok(&self, pos: usize) -> bool {
        self.checks[pos].iter().all(|&e| self.host.contains_mask(iter_bits(e).fold(0u64, |m, v| m | bit(self.map[v]))))
    }

    fn fits(&self, p: usize, c: usize) -> bool {
        if self.used & bit(c) != 0 || self.host_deg[c] < self.pat_deg[p] {
            return false;
        }
        iter_bits(self.pat_adj[p]).all(|q| self.map[q] == usize::MAX || self.host_adj[c] & bit(self.map[q]) != 0)
    }

    fn search(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return self.host.n() - self.used.count_ones() as usize >= self.isolated;
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
            if self.edges_ok(pos) && self.search(pos + 1) {
                return true;
            }
            self.used &= !bit(c);
            self.map[p] = usize::MAX;
        }
        if fixed != usize::MAX {
            self.map[p] = fixed;
        }
        false
    }

    fn finish(mut self) -> Vec<usize> {
        let mut free = iter_bits(self.host.vertex_mask() & !self.used);
        for v in self.map.iter_mut() {
            if *v == usize::MAX {
                *v = free.next().expect("vertex count checked");
            }
        }
        self.map
    }
}

fn quick_reject(host: &UniformHypergraph, pattern: &UniformHypergraph) -> bool {
    pattern.n() > host.n() || pattern.edge_count() > host.edge_count()
}

/// An injective map `pattern vertex -> host vertex` sending every pattern
/// edge onto a host edge, if one exists.
pub fn find_subhypergraph(host: &UniformHypergraph, pattern: &UniformHypergraph) -> Result<Option<Vec<usize>>> {
    if host.r() != pattern.r() {
        return Err(Error::UniformityMismatch { host: host.r(), pattern: pattern.r() });
    }
    if quick_reject(host, pattern) {
        return Ok(None);
    }
    let mut e = Embedder::new(host, pattern, &[]);
    Ok(if e.search(0) { Some(e.finish()) } else { None })
}

pub fn contains_subhypergraph(host: &UniformHypergraph, pattern: &UniformHypergraph) -> Result<bool> {
    find_subhypergraph(host, pattern).map(|m| m.is_some())
}

pub(crate) fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Whether some copy of `pattern` in `host` uses the host edge `anchor`.
/// Uniformities must agree.
pub(crate) fn contains_with_edge(host: &UniformHypergraph, pattern: &UniformHypergraph, anchor: u64) -> bool {
    debug_assert_eq!(host.r(), pattern.r());
    if quick_reject(host, pattern) {
        return false;
    }
    let targets: Vec<usize> = iter_bits(anchor).collect();
    let images = permutations(&targets);
    for &pe in pattern.edge_masks() {
        let first: Vec<usize> = iter_bits(pe).collect();
        let mut e = Embedder::new(host, pattern, &first);
        for image in &images {
            for (&p, &c) in first.iter().zip(image) {
                e.map[p] = c;
            }
            if e.search(0) {
                return true;
            }
            for &p in &first {
                e.map[p] = usize::MAX;
            }
            e.used = 0;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Graph;

    #[test]
    fn single_edge_pattern() {
        let host = UniformHypergraph::new(5, 3, [[1, 2, 4]]).unwrap();
        let pat = UniformHypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(contains_subhypergraph(&host, &pat).unwrap());
    }

    #[test]
    fn pattern_larger_than_host() {
        let host = UniformHypergraph::complete(4, 2).unwrap();
        let pat = Graph::empty(5).unwrap();
        assert!(!contains_subhypergraph(&host, pat.hypergraph()).unwrap());
    }

    #[test]
    fn literal_expansion_copy() {
        let host = UniformHypergraph::new(6, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]).unwrap();
        let pat = UniformHypergraph::new(6, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]).unwrap();
        assert!(contains_subhypergraph(&host, &pat).unwrap());
    }

    #[test]
    fn uniformity_mismatch() {
        let host = UniformHypergraph::complete(4, 3).unwrap();
        assert!(matches!(
            contains_subhypergraph(&host, Graph::complete(3).unwrap().hypergraph()),
            Err(Error::UniformityMismatch { host: 3, pattern: 2 })
        ));
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let host = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p3_plus_isolated = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert!(contains_subhypergraph(host.hypergraph(), p3_plus_isolated.hypergraph()).unwrap());
        let two_isolated = Graph::new(5, &[(0, 1), (1, 2)]).unwrap();
        assert!(!contains_subhypergraph(host.hypergraph(), two_isolated.hypergraph()).unwrap());
    }

    #[test]
    fn witness_map_is_valid() {
        let host = Graph::cycle(7).unwrap();
        let pat = Graph::path(5).unwrap();
        let map = find_subhypergraph(host.hypergraph(), pat.hypergraph()).unwrap().unwrap();
        for (u, v) in pat.edge_pairs() {
            assert!(host.has_edge(map[u], map[v]));
        }
        let mut sorted = map.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), map.len());
    }

    #[test]
    fn anchored_search() {
        let host = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert!(contains_with_edge(host.hypergraph(), p3.hypergraph(), 0b00011));
        assert!(!contains_with_edge(host.hypergraph(), p3.hypergraph(), 0b11000));
    }
}

//! Uniform hypergraphs and graphs over the vertex set `0..n`.
//!
//! Edges are stored as `u64` vertex masks, which caps the vertex count at
//! [`MAX_VERTICES`]. Iteration always follows the lexicographic order of the
//! sorted vertex tuples.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bits::{bit, iter_bits, lex_key, Combinations};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An `r`-uniform hypergraph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<u64>,
}

fn check_shape(n: usize, r: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    if r == 0 || r > MAX_VERTICES {
        return Err(Error::BadUniformity { r });
    }
    Ok(())
}

impl UniformHypergraph {
    /// Builds a hypergraph from vertex tuples in any order. Duplicate edges
    /// (including reorderings of the same set) are merged.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_shape(n, r)?;
        let mut masks = Vec::new();
        for edge in edges {
            let edge = edge.as_ref();
            if edge.len() != r {
                return Err(Error::Arity { edge: edge.to_vec(), expected: r, found: edge.len() });
            }
            let mut mask = 0u64;
            for &v in edge {
                if v >= n {
                    return Err(Error::VertexRange { vertex: v, n });
                }
                if mask & bit(v) != 0 {
                    return Err(Error::DuplicateVertexInEdge { edge: edge.to_vec() });
                }
                mask |= bit(v);
            }
            masks.push(mask);
        }
        Ok(Self::from_masks_unchecked(n, r, masks))
    }

    /// Builds a hypergraph from vertex masks, validating size and range.
    pub fn from_masks(n: usize, r: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_shape(n, r)?;
        let range = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut out = Vec::new();
        for mask in masks {
            if mask & !range != 0 {
                let vertex = iter_bits(mask & !range).next().unwrap_or(n);
                return Err(Error::VertexRange { vertex, n });
            }
            if mask.count_ones() as usize != r {
                return Err(Error::Arity {
                    edge: iter_bits(mask).collect(),
                    expected: r,
                    found: mask.count_ones() as usize,
                });
            }
            out.push(mask);
        }
        Ok(Self::from_masks_unchecked(n, r, out))
    }

    pub(crate) fn from_masks_unchecked(n: usize, r: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable_by_key(|&m| lex_key(m));
        masks.dedup();
        UniformHypergraph { n, r, edges: masks }
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        check_shape(n, r)?;
        Ok(UniformHypergraph { n, r, edges: Vec::new() })
    }

    /// All `r`-subsets of `0..n`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        check_shape(n, r)?;
        let edges = Combinations::new(n, r).map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        Ok(UniformHypergraph { n, r, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge masks in lexicographic order of their vertex tuples.
    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|&m| iter_bits(m).collect())
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.edges.binary_search_by_key(&lex_key(mask), |&m| lex_key(m)).is_ok()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        if edge.len() != self.r || edge.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mask = edge.iter().fold(0u64, |m, &v| m | bit(v));
        mask.count_ones() as usize == self.r && self.contains_mask(mask)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&m| m & bit(v) != 0).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &m in &self.edges {
            for v in iter_bits(m) {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Returns a copy with `mask` added. `mask` must be a valid `r`-set.
    pub fn with_mask(&self, mask: u64) -> Self {
        debug_assert_eq!(mask.count_ones() as usize, self.r);
        debug_assert_eq!(mask & !self.vertex_mask(), 0);
        let key = lex_key(mask);
        let mut edges = self.edges.clone();
        if let Err(pos) = edges.binary_search_by_key(&key, |&m| lex_key(m)) {
            edges.insert(pos, mask);
        }
        UniformHypergraph { n: self.n, r: self.r, edges }
    }

    pub fn without_mask(&self, mask: u64) -> Self {
        let edges = self.edges.iter().copied().filter(|&m| m != mask).collect();
        UniformHypergraph { n: self.n, r: self.r, edges }
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadParameters(format!("permutation has length {}, expected {}", perm.len(), self.n)));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::BadParameters("not a permutation".into()));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Self {
        let masks = self.edges.iter().map(|&m| iter_bits(m).fold(0u64, |acc, v| acc | bit(perm[v]))).collect();
        Self::from_masks_unchecked(self.n, self.r, masks)
    }

    /// The sub-hypergraph induced on `vertices`, relabelled `0..vertices.len()`
    /// in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut pos = [usize::MAX; MAX_VERTICES];
        let mut keep = 0u64;
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
            keep |= bit(v);
        }
        let masks = self
            .edges
            .iter()
            .filter(|&&m| m & !keep == 0)
            .map(|&m| iter_bits(m).fold(0u64, |acc, v| acc | bit(pos[v])))
            .collect();
        Self::from_masks_unchecked(vertices.len(), self.r, masks)
    }

    /// Same edges on a larger vertex set.
    pub fn with_vertex_count(&self, n: usize) -> Result<Self> {
        check_shape(n, self.r)?;
        if n < self.n && self.edges.iter().any(|&m| m >> n != 0) {
            return Err(Error::BadParameters(format!("edges use vertices beyond {n}")));
        }
        Ok(UniformHypergraph { n, r: self.r, edges: self.edges.clone() })
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformHypergraph(n={}, r={}, [", self.n, self.r)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        write!(f, "])")
    }
}

impl Serialize for UniformHypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("UniformHypergraph", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        s.end()
    }
}

pub fn make_hypergraph<E: AsRef<[usize]>>(n: usize, r: usize, edges: &[E]) -> Result<UniformHypergraph> {
    UniformHypergraph::new(n, r, edges)
}

/// A simple undirected graph: a 2-uniform hypergraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph(UniformHypergraph);

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let tuples: Vec<[usize; 2]> = edges.iter().map(|&(a, b)| [a, b]).collect();
        Ok(Graph(UniformHypergraph::new(n, 2, tuples)?))
    }

    pub fn from_hypergraph(h: UniformHypergraph) -> Result<Self> {
        if h.r() != 2 {
            return Err(Error::NotAGraph { r: h.r() });
        }
        Ok(Graph(h))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Ok(Graph(UniformHypergraph::empty(n, 2)?))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph(UniformHypergraph::complete(n, 2)?))
    }

    /// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameters(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges)
    }

    /// `k` disjoint edges.
    pub fn matching(k: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::new(2 * k, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::new(a + b, &edges)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    pub fn hypergraph(&self) -> &UniformHypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> UniformHypergraph {
        self.0
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.0
            .edge_masks()
            .iter()
            .map(|&m| {
                let u = m.trailing_zeros() as usize;
                let v = 63 - m.leading_zeros() as usize;
                (u, v)
            })
            .collect()
    }

    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n()];
        for (u, v) in self.edge_pairs() {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && v < self.n() && self.0.contains_mask(bit(u) | bit(v))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        Graph(self.0.without_mask(bit(u) | bit(v)))
    }

    /// Vertices incident to at least one edge.
    pub fn non_isolated_mask(&self) -> u64 {
        self.0.edge_masks().iter().fold(0, |acc, &m| acc | m)
    }

    pub fn induced(&self, vertices: &[usize]) -> Self {
        Graph(self.0.induced(vertices))
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0;
                for v in iter_bits(frontier) {
                    next |= adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(iter_bits(comp).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n(), self.edge_pairs())
    }
}

impl AsRef<UniformHypergraph> for Graph {
    fn as_ref(&self) -> &UniformHypergraph {
        &self.0
    }
}

impl TryFrom<UniformHypergraph> for Graph {
    type Error = Error;

    fn try_from(h: UniformHypergraph) -> Result<Self> {
        Graph::from_hypergraph(h)
    }
}

impl From<Graph> for UniformHypergraph {
    fn from(g: Graph) -> Self {
        g.0
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// An ordered partition of `0..n` into `k` parts.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates disjointness and coverage. Empty parts are rejected unless
    /// `allow_empty` is set.
    pub fn new(n: usize, parts: Vec<Vec<usize>>, allow_empty: bool) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in &parts {
            if part.is_empty() && !allow_empty {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::VertexRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(VertexPartition { parts })
    }

    /// Contiguous parts of the given sizes.
    pub fn contiguous(sizes: &[usize]) -> Self {
        let mut next = 0;
        let parts = sizes
            .iter()
            .map(|&s| {
                let part: Vec<usize> = (next..next + s).collect();
                next += s;
                part
            })
            .collect();
        VertexPartition { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// `part_of()[v]` is the index of the part holding `v`.
    pub fn part_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v] = i;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_reordered_pair() {
        let g = make_hypergraph(3, 2, &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![vec![0, 1]]);
    }

    #[test]
    fn two_disjoint_triples() {
        let h = make_hypergraph(6, 3, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!((h.n(), h.r(), h.edge_count()), (6, 3, 2));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(make_hypergraph(2, 3, &[[0, 1, 1]]), Err(Error::DuplicateVertexInEdge { .. })));
        assert!(matches!(make_hypergraph(3, 3, &[[0, 1, 3]]), Err(Error::VertexRange { vertex: 3, n: 3 })));
        assert!(matches!(UniformHypergraph::new(4, 3, [vec![0, 1]]), Err(Error::Arity { expected: 3, found: 2, .. })));
        assert!(matches!(UniformHypergraph::empty(65, 2), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn iteration_is_lexicographic() {
        let h = make_hypergraph(5, 3, &[[1, 2, 3], [0, 3, 4], [0, 1, 4], [0, 1, 2], [0, 2, 3]]).unwrap();
        let edges: Vec<Vec<usize>> = h.edges().collect();
        let mut sorted = edges.clone();
        sorted.sort();
        assert_eq!(edges, sorted);
        assert!(h.contains_edge(&[3, 0, 4]));
        assert!(!h.contains_edge(&[0, 1, 3]));
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 2], vec![1]], false).is_ok());
        assert!(VertexPartition::new(3, vec![vec![0, 2], vec![2, 1]], false).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 2]], false).is_err());
        assert!(VertexPartition::new(2, vec![vec![0, 1], vec![]], false).is_err());
        assert!(VertexPartition::new(2, vec![vec![0, 1], vec![]], true).is_ok());
    }

    #[test]
    fn components_of_two_paths() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }
}

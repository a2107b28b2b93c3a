//! Chromatic number, proper colourings, colour-critical edges and the
//! decomposition family of a graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::{bit, iter_bits};
use crate::canon::{labeling_unbounded, CanonicalForm};
use crate::embed::contains_subhypergraph;
use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::search::{ex_graph_edges, Budget, SearchResult};

/// A proper colouring using every colour in `0..c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub c: usize,
}

impl ColoringCertificate {
    /// Vertices of each colour class, in colour order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.c];
        for (v, &col) in self.colors.iter().enumerate() {
            out[col].push(v);
        }
        out
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edge_pairs().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
            && (0..self.c).all(|c| self.colors.contains(&c))
    }
}

fn max_clique(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        max_clique(adj, adj[v] & rest, size + 1, best);
    }
}

pub(crate) fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    max_clique(&g.adjacency(), g.hypergraph().vertex_mask(), 0, &mut best);
    best
}

struct Dsatur {
    adj: Vec<u64>,
    n: usize,
    colors: Vec<usize>,
    classes: Vec<u64>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Dsatur {
    fn pick(&self, uncolored: u64) -> usize {
        iter_bits(uncolored)
            .max_by_key(|&v| {
                let sat = self.classes.iter().filter(|&&c| c & self.adj[v] != 0).count();
                (sat, (self.adj[v] & uncolored).count_ones(), std::cmp::Reverse(v))
            })
            .unwrap()
    }

    fn search(&mut self, uncolored: u64) {
        if self.classes.len() >= self.best || self.best == self.lower {
            return;
        }
        if uncolored == 0 {
            self.best = self.classes.len();
            self.best_colors = self.colors.clone();
            return;
        }
        let v = self.pick(uncolored);
        let rest = uncolored & !bit(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & self.adj[v] == 0 {
                self.classes[c] |= bit(v);
                self.colors[v] = c;
                self.search(rest);
                self.classes[c] &= !bit(v);
            }
        }
        if self.classes.len() + 1 < self.best {
            self.colors[v] = self.classes.len();
            self.classes.push(bit(v));
            self.search(rest);
            self.classes.pop();
        }
    }
}

/// An optimal colouring found by DSATUR-ordered branch and bound, seeded with
/// the clique number as lower bound.
pub fn optimal_coloring(g: &Graph) -> ColoringCertificate {
    let n = g.n();
    if n == 0 {
        return ColoringCertificate { colors: Vec::new(), c: 0 };
    }
    if g.edge_count() == 0 {
        return ColoringCertificate { colors: vec![0; n], c: 1 };
    }
    let mut s = Dsatur {
        adj: g.adjacency(),
        n,
        colors: vec![0; n],
        classes: Vec::new(),
        best: n + 1,
        best_colors: Vec::new(),
        lower: clique_number(g),
    };
    s.search(g.hypergraph().vertex_mask());
    debug_assert_eq!(s.best_colors.len(), s.n);
    ColoringCertificate { colors: s.best_colors, c: s.best }
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).c
}

fn partitions_rec(
    adj: &[u64],
    c: usize,
    v: usize,
    classes: &mut Vec<u64>,
    colors: &mut Vec<usize>,
    out: &mut Vec<ColoringCertificate>,
) {
    let n = adj.len();
    if v == n {
        if classes.len() == c {
            out.push(ColoringCertificate { colors: colors.clone(), c });
        }
        return;
    }
    if c - classes.len() > n - v {
        return;
    }
    for col in 0..classes.len() {
        if classes[col] & adj[v] == 0 {
            classes[col] |= bit(v);
            colors[v] = col;
            partitions_rec(adj, c, v + 1, classes, colors, out);
            classes[col] &= !bit(v);
        }
    }
    if classes.len() < c {
        colors[v] = classes.len();
        classes.push(bit(v));
        partitions_rec(adj, c, v + 1, classes, colors, out);
        classes.pop();
    }
}

/// Every partition of the vertices into exactly `c` independent sets, one
/// colouring per partition (colours numbered by first appearance).
pub fn proper_colorings(g: &Graph, c: usize) -> Result<Vec<ColoringCertificate>> {
    let chi = chromatic_number(g);
    if c < chi {
        return Err(Error::TooFewColors { colors: c, chromatic: chi });
    }
    let mut out = Vec::new();
    if c <= g.n() {
        partitions_rec(&g.adjacency(), c, 0, &mut Vec::new(), &mut vec![0; g.n()], &mut out);
    }
    Ok(out)
}

/// Edges whose deletion lowers the chromatic number.
pub fn color_critical_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let chi = chromatic_number(g);
    Ok(g.edge_pairs().into_iter().filter(|&(u, v)| chromatic_number(&g.without_edge(u, v)) + 1 == chi).collect())
}

/// True when all edges share a common vertex (vacuously true without edges).
pub fn is_star(g: &Graph) -> bool {
    g.hypergraph().edge_masks().iter().fold(u64::MAX, |acc, &m| acc & m) != 0
}

/// Bipartite graphs left after deleting all but two colour classes of a
/// proper `χ(F)`-colouring, up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionFamily {
    pub members: Vec<Graph>,
    pub minimal: bool,
}

impl DecompositionFamily {
    pub fn contains_isomorphic(&self, g: &Graph) -> bool {
        let key = labeling_unbounded(g.hypergraph()).0;
        self.members.iter().any(|m| labeling_unbounded(m.hypergraph()).0 == key)
    }
}

pub fn decomposition_family(f: &Graph, minimal: bool) -> Result<DecompositionFamily> {
    if f.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let chi = chromatic_number(f);
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for coloring in proper_colorings(f, chi)? {
        let classes = coloring.classes();
        for i in 0..chi {
            for j in i + 1..chi {
                let mut kept: Vec<usize> = classes[i].iter().chain(&classes[j]).copied().collect();
                kept.sort_unstable();
                let member = f.induced(&kept);
                if member.edge_count() == 0 {
                    continue;
                }
                let (key, label) = labeling_unbounded(member.hypergraph());
                found.entry(key).or_insert_with(|| {
                    Graph::from_hypergraph(member.hypergraph().relabel_unchecked(&label)).expect("2-uniform")
                });
            }
        }
    }
    let mut members: Vec<Graph> = found.into_values().collect();
    members.sort_by_key(|g| (g.n(), g.edge_count()));
    if minimal {
        let all = members.clone();
        members.retain(|m| {
            !all.iter()
                .any(|o| o != m && contains_subhypergraph(m.hypergraph(), o.hypergraph()).expect("same uniformity"))
        });
    }
    Ok(DecompositionFamily { members, minimal })
}

/// Largest edge count of an `n`-vertex graph avoiding the decomposition family of `f`.
pub fn biex_search(n: usize, f: &Graph, minimal: bool, budget: &Budget) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::BadParameters("biex needs n >= 1".into()));
    }
    let family = decomposition_family(f, minimal)?;
    ex_graph_edges(n, &family.members, budget)
}

/// [`biex_search`] reduced to its value; an incomplete search is an error.
pub fn biex(n: usize, f: &Graph, minimal: bool) -> Result<u64> {
    let res = biex_search(n, f, minimal, &Budget::default())?;
    if !res.exhaustive {
        return Err(Error::BudgetExceeded { best: res.value });
    }
    Ok(res.value)
}

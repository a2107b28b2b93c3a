//! Exact extremal searches and a local-search lower-bound prover.
//!
//! Graph problems (and any clique-count objective) run a level-wise
//! generation of isomorphism classes: level `l` holds one canonical
//! representative for every forbidden-free hypergraph with `l` edges, and
//! level `l + 1` is built by adding one edge to each. Freeness is closed
//! under deletion, so every free class is reached. Edge-count hypergraph
//! problems use branch and bound over edges in lexicographic order.

mod branch;
mod gap;
mod levels;
mod local;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canon::labeling_unbounded;
use crate::cliques::{count_cliques, count_hypercliques};
use crate::embed::{contains_subhypergraph, contains_with_edge};
use crate::error::{Error, Result};
use crate::expansion::{contains_expansion, contains_expansion_using};
use crate::hypergraph::{Graph, UniformHypergraph, MAX_VERTICES};

pub use branch::ex_hypergraph;
pub use gap::{gap_table, gap_table_csv, GapRow};
pub use levels::{ex_graph_cliques, ex_graph_edges, free_classes};
pub use local::lower_bound_local_search;

/// Limits on a search, and whether it may use a worker pool.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
    pub parallel: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_time: Duration::from_secs(300), parallel: false }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, ..Budget::default() }
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

/// Shared node counter and clock enforcing a [`Budget`].
pub(crate) struct Meter {
    nodes: AtomicU64,
    stopped: AtomicBool,
    start: Instant,
    max_nodes: u64,
    max_time: Duration,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            stopped: AtomicBool::new(false),
            start: Instant::now(),
            max_nodes: budget.max_nodes,
            max_time: budget.max_time,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if k > self.max_nodes || (k.is_multiple_of(512) && self.start.elapsed() > self.max_time) {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max_nodes)
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

/// A pattern the host must avoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forbidden {
    /// A literal sub-hypergraph of the host's uniformity.
    Subgraph(UniformHypergraph),
    /// The expansion of a graph to the host's uniformity.
    Expansion(Graph),
}

impl Forbidden {
    fn validate(&self, r: usize) -> Result<()> {
        match self {
            Forbidden::Subgraph(p) => {
                if p.r() != r {
                    return Err(Error::UniformityMismatch { host: r, pattern: p.r() });
                }
                if p.is_empty() {
                    return Err(Error::EmptyPattern);
                }
            }
            Forbidden::Expansion(f) => {
                if f.edge_count() == 0 {
                    return Err(Error::EmptyPattern);
                }
            }
        }
        Ok(())
    }

    /// Whether `h` avoids the pattern, given that `h` minus `e` does.
    pub(crate) fn admits(&self, h: &UniformHypergraph, e: u64) -> bool {
        match self {
            Forbidden::Subgraph(p) => !contains_with_edge(h, p, e),
            Forbidden::Expansion(f) => !contains_expansion_using(h, f, e),
        }
    }

    pub(crate) fn avoided_by(&self, h: &UniformHypergraph) -> Result<bool> {
        match self {
            Forbidden::Subgraph(p) => Ok(!contains_subhypergraph(h, p)?),
            Forbidden::Expansion(f) => Ok(contains_expansion(h, f, h.r())?.is_none()),
        }
    }

    fn summary(&self) -> PatternSummary {
        match self {
            Forbidden::Subgraph(p) => PatternSummary { kind: "subgraph", n: p.n(), edges: p.edges().collect() },
            Forbidden::Expansion(f) => {
                PatternSummary { kind: "expansion", n: f.n(), edges: f.hypergraph().edges().collect() }
            }
        }
    }
}

/// What a search maximises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Edges,
    /// Number of `order`-sets all of whose `r`-subsets are edges.
    Cliques(usize),
}

impl Objective {
    pub(crate) fn value(&self, h: &UniformHypergraph) -> u64 {
        match *self {
            Objective::Edges => h.edge_count() as u64,
            Objective::Cliques(order) if h.r() == 2 => {
                count_cliques(&Graph::from_hypergraph(h.clone()).expect("2-uniform"), order)
            }
            Objective::Cliques(order) => count_hypercliques(h, order).expect("order validated"),
        }
    }

    fn label(&self) -> String {
        match self {
            Objective::Edges => "edges".into(),
            Objective::Cliques(order) => format!("cliques({order})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub n: usize,
    pub host_uniformity: usize,
    pub forbidden: Vec<Forbidden>,
    pub objective: Objective,
    pub budget: Budget,
}

impl SearchProblem {
    pub fn validate(&self) -> Result<()> {
        let r = self.host_uniformity;
        if r < 2 {
            return Err(Error::UniformityTooLow { r });
        }
        if self.n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n });
        }
        if let Objective::Cliques(order) = self.objective {
            if order < r {
                return Err(Error::BadParameters(format!("clique order {order} is below the uniformity {r}")));
            }
        }
        self.forbidden.iter().try_for_each(|f| f.validate(r))
    }

    pub(crate) fn admits(&self, h: &UniformHypergraph, e: u64) -> bool {
        self.forbidden.iter().all(|f| f.admits(h, e))
    }

    /// Whether `h` avoids every forbidden pattern.
    pub fn is_free(&self, h: &UniformHypergraph) -> Result<bool> {
        for f in &self.forbidden {
            if !f.avoided_by(h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn summary(&self, kind: &str) -> ProblemSummary {
        ProblemSummary {
            kind: kind.to_string(),
            n: self.n,
            r: self.host_uniformity,
            objective: self.objective.label(),
            forbidden: self.forbidden.iter().map(Forbidden::summary).collect(),
        }
    }

    /// Runs the exact search suited to the problem.
    pub fn solve(&self) -> Result<SearchResult> {
        self.validate()?;
        let expansions_only: Option<Vec<&Graph>> = self
            .forbidden
            .iter()
            .map(|f| match f {
                Forbidden::Expansion(g) => Some(g),
                Forbidden::Subgraph(_) => None,
            })
            .collect();
        match (self.objective, expansions_only.as_deref()) {
            (Objective::Edges, Some([f])) if self.host_uniformity > 2 => {
                ex_hypergraph(self.n, self.host_uniformity, f, &self.budget)
            }
            _ => levels::solve_by_levels(self, "exhaustive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternSummary {
    pub kind: &'static str,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemSummary {
    pub kind: String,
    pub n: usize,
    pub r: usize,
    pub objective: String,
    pub forbidden: Vec<PatternSummary>,
}

/// Outcome of a search. `exhaustive` is false exactly when the budget ran
/// out, in which case `value` is only a lower bound.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub problem: ProblemSummary,
    pub value: u64,
    pub witness: UniformHypergraph,
    pub exhaustive: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SearchResult", 6)?;
        s.serialize_field("problem", &self.problem)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("witness_edges", &self.witness.edges().collect::<Vec<_>>())?;
        s.serialize_field("exhaustive", &self.exhaustive)?;
        s.serialize_field("nodes", &self.nodes)?;
        s.serialize_field("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        s.end()
    }
}

/// Running optimum: larger value wins, then the smaller canonical key.
#[derive(Clone, Debug)]
pub(crate) struct Best {
    pub value: u64,
    pub key: Option<crate::canon::CanonicalForm>,
    pub witness: UniformHypergraph,
}

impl Best {
    pub(crate) fn new(n: usize, r: usize) -> Self {
        Best { value: 0, key: None, witness: UniformHypergraph::from_masks_unchecked(n, r, Vec::new()) }
    }

    /// Offers `h` (not necessarily canonical) with objective `value`.
    pub(crate) fn offer(&mut self, value: u64, h: &UniformHypergraph) {
        if self.key.is_some() && value < self.value {
            return;
        }
        let (key, label) = labeling_unbounded(h);
        self.offer_keyed(value, key, || h.relabel_unchecked(&label));
    }

    pub(crate) fn offer_keyed(
        &mut self,
        value: u64,
        key: crate::canon::CanonicalForm,
        witness: impl FnOnce() -> UniformHypergraph,
    ) {
        let better = match &self.key {
            None => true,
            Some(k) => value > self.value || (value == self.value && key < *k),
        };
        if better {
            self.value = value;
            self.key = Some(key);
            self.witness = witness();
        }
    }

    pub(crate) fn merge(&mut self, other: Best) {
        if let Some(key) = other.key {
            let w = other.witness;
            self.offer_keyed(other.value, key, || w);
        }
    }
}

//! Turán-type extremal problems for hypergraph expansions of graphs.
//!
//! The crate provides uniform hypergraphs with shadow and fat-set operators,
//! exact isomorphism and containment tests, chromatic machinery (colour-critical
//! edges, decomposition families), the expansion operator with a complete
//! containment search, the standard extremal constructions, exhaustive
//! extremal searches, and verification suites tying these together.

mod bits;
pub mod canon;
pub mod chromatic;
pub mod cliques;
pub mod constructions;
pub mod embed;
mod error;
pub mod expansion;
pub mod format;
pub mod hypergraph;
pub mod operators;
pub mod search;
pub mod structure;
pub mod verify;

pub use bits::binomial;
pub use canon::{canonical_form, canonical_form_bounded, canonical_labeling, canonical_representative, CanonicalForm};
pub use chromatic::{
    biex, biex_search, chromatic_number, color_critical_edges, decomposition_family, is_star, optimal_coloring,
    proper_colorings, ColoringCertificate, DecompositionFamily,
};
pub use cliques::{clique_expansion, count_cliques, count_hypercliques};
pub use constructions::{
    book_graph, complete_multipartite, elementary_symmetric, fixed_vertex_hypergraph, h_part, h_prime, h_prime_count,
    optimal_m, optimal_m_set, turan_cone, turan_cone_count, turan_count, turan_graph, turan_hypergraph,
    PartSizeProfile,
};
pub use embed::{contains_subhypergraph, find_subhypergraph};
pub use error::{Error, Result};
pub use expansion::{contains_expansion, default_t, expand, greedy_extend, is_expansion_free, ExpansionWitness};
pub use format::{parse_graph_spec, parse_hg, write_hg};
pub use hypergraph::{make_hypergraph, Graph, UniformHypergraph, VertexPartition, MAX_VERTICES};
pub use operators::{
    fat_pair_graph, heavy_shadow, is_fat, iterated_heavy, link, matching_number, maximum_matching, shadow, Matching,
};
pub use search::{
    ex_graph_cliques, ex_graph_edges, ex_hypergraph, free_classes, gap_table, gap_table_csv, lower_bound_local_search,
    Budget, Forbidden, GapRow, Objective, SearchProblem, SearchResult,
};
pub use structure::{analyze_structure, Fraction, StructureReport};
pub use verify::{verify_suite, Claim, ClaimStatus, VerifyOptions, VerifySuiteReport, SUITES};

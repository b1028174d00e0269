//! Exact invariants of splitting graphs.
//!
//! The splitting graph `S(G)` adds, for every vertex `v` of `G`, a copy `v'`
//! adjacent to the neighbours of `v`. This crate builds `S(G)`, computes the
//! independence, vertex-cover, matching and edge-cover numbers exactly, and
//! computes the deficiency `β₀*(G) = max |S| − |N(S)|` over independent `S`.
//! The [`harness`] module checks the identities linking them.

pub mod bitset;
pub mod cli;
pub mod deficiency;
pub mod format;
pub mod graph;
pub mod harness;
pub mod operators;
pub mod solvers;

pub use bitset::VertexSet;
pub use deficiency::{beta0_star_bruteforce, beta0_star_fast, DeficiencyCertificate, DeficiencyError};
pub use format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, FormatError};
pub use graph::{EdgeSet, Graph, GraphError};
pub use harness::{run_campaign, CampaignConfig, CampaignReport, ClaimId, HarnessError, Verdict, VerificationOutcome};
pub use operators::{counterexample_graph, splitting_graph, FamilyGraph, FamilySpec, OperatorError, SplitGraph};
pub use solvers::{SolveError, VertexSolution};

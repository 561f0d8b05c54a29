//! Heterochromatic (rainbow) path algorithms for edge-colored,
//! rainbow-triangle-free graphs.
//!
//! The crate provides:
//!
//! - [`graph`]: edge-colored simple graphs, color degrees, rainbow-triangle
//!   detection, path validation;
//! - [`builder`]: the constructive rainbow u-path builder for Gallai-colored
//!   complete graphs (length exactly d^c(u), with a per-step invariant and
//!   optional trace);
//! - [`oracle`]: exact longest-rainbow-path search with admissible pruning
//!   and explicit budgets, plus the 3k/4 bound check;
//! - [`endpoints`] and [`lemmas`]: the endpoint-counting analysis and the
//!   spoke-lemma checkers behind the 3k/4 bound;
//! - [`gen`]: seeded instance generators, including the extremal hypercube
//!   family G_k;
//! - [`io`]: edge-list and JSON interchange formats;
//! - [`suites`] and [`report`]: the seeded verification harness.

pub mod builder;
pub mod endpoints;
pub mod gen;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod oracle;
pub mod report;
pub mod suites;

pub use builder::{
    build_rainbow_u_path, build_rainbow_u_path_unchecked, builder_step, check_condition_a,
    select_rainbow_fan, BuildError, BuildTrace, BuilderState, StepCase, StepRecord,
};
pub use endpoints::{analyze_endpoints, analyze_endpoints_auto, AnalyzeError, EndpointAnalysis};
pub use gen::{
    gen_gallai_substitution, gen_gk, gen_kgood_triangle_free, gen_uniform_coloring, GenError,
    GenSpec,
};
pub use graph::{Color, ColorSet, EdgeColoredGraph, GraphError, PathCheck, PathError, VertexPath};
pub use io::{parse_edge_list, parse_json, read_graph, write_edge_list, write_json, ParseError};
pub use lemmas::{check_all_lemma_tuples, check_lemma1, check_lemma2, LemmaOutcome, LemmaWitness};
pub use oracle::{
    enumerate_rainbow_paths, exhaustive_longest_rainbow_path, longest_rainbow_path,
    verify_bound34, BoundCheck, BoundCheckError, SearchBudget, SearchOutcome,
};
pub use report::{Aggregate, BudgetSpec, ExperimentReport, TrialRecord, SCHEMA_VERSION};
pub use suites::{run_suite, run_suite_with_dumps, SuiteError, SUITES};

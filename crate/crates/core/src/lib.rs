//! Strong biconnectivity of directed graphs and sparse 3-vertex strongly
//! biconnected spanning subgraphs.
//!
//! * [`graph`]: simple digraphs with an ordered, maskable edge sequence.
//! * [`edge_list`]: the `n m` / `u v` text format.
//! * [`connectivity`]: strong connectivity, articulation points, strong
//!   biconnectivity and k-vsb tests with replayable witnesses.
//! * [`extraction`]: greedy minimal and two-phase spanning subgraph
//!   extraction.
//! * [`generator`]: seeded random 3-vsb instances.
//! * [`harness`]: timing experiments and result tables.
//! * [`oracle`]: brute-force reference predicates for tests.

pub mod connectivity;
pub mod edge_list;
pub mod exec;
pub mod extraction;
pub mod generator;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod rng;

pub use connectivity::{
    articulation_points, is_k_vsb, is_k_vsb_with, is_strongly_biconnected, is_strongly_connected,
    reachable_from, ConnectivityError, ConnectivityReport, Witness,
};
pub use edge_list::{parse_edge_list, serialize_edge_list};
pub use exec::Execution;
pub use extraction::{
    compute_2vsb_spanning, minimal_k_vsb, two_phase_3vsb, EdgeBudget, EdgeOrder, ExtractionError,
    ExtractionResult, ExtractionStats,
};
pub use generator::{generate_instance, GeneratedInstance, GeneratorError, InstanceSpec};
pub use graph::{Digraph, Edge, EdgeId, EdgeSubset, GraphError, UndirectedGraph, VertexId};
pub use harness::{emit_table, run_experiment, ExperimentPlan, ExperimentRow, TableFormat};

//! Sparse k-vsb spanning subgraphs by greedy edge deletion.
//!
//! [`minimal_k_vsb`] walks the edges once and drops every edge whose removal
//! keeps the graph k-vsb; the result is minimal, since a later deletion can
//! only make earlier retained edges more necessary. [`two_phase_3vsb`] first
//! computes a 2-vsb spanning subgraph E+ and then runs the same walk at k = 3
//! over the edges outside E+ only, so E+ is never touched.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::connectivity::{is_k_vsb, ConnectivityError, Witness};
use crate::graph::{Digraph, Edge, EdgeSubset};
use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error("input is not {k}-vertex strongly biconnected: {witness}")]
    NotKVsb { k: usize, witness: Witness },
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
}

/// Order in which candidate edges are offered for deletion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeOrder {
    /// The input graph's edge sequence.
    #[default]
    Input,
    /// A seeded Fisher-Yates permutation of the input sequence.
    Shuffled { seed: u64 },
}

impl EdgeOrder {
    pub fn arrange(self, g: &Digraph) -> Vec<Edge> {
        let mut edges = g.edge_vec();
        if let EdgeOrder::Shuffled { seed } = self {
            SeededRng::new(seed).shuffle(&mut edges);
        }
        edges
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtractionStats {
    pub edges_in: usize,
    pub edges_out: usize,
    /// Number of `is_k_vsb` evaluations, precondition included.
    pub tests_performed: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct ExtractionResult {
    /// Same vertex set as the input, a subset of its edges.
    pub subgraph: Digraph,
    /// Input edges that were deleted, in deletion order.
    pub removed: EdgeSubset,
    /// Edges that were never offered for deletion (E+ for the two-phase
    /// method, empty otherwise).
    pub protected: EdgeSubset,
    pub stats: ExtractionStats,
}

fn require_k_vsb(g: &Digraph, k: usize, tests: &mut usize) -> Result<(), ExtractionError> {
    *tests += 1;
    let report = is_k_vsb(g, k)?;
    match report.witness {
        None => Ok(()),
        Some(witness) => Err(ExtractionError::NotKVsb { k, witness }),
    }
}

/// Offers each candidate for deletion in turn; keeps the deletion iff the
/// graph stays k-vsb.
fn greedy_delete(
    work: &mut Digraph,
    candidates: impl IntoIterator<Item = Edge>,
    k: usize,
    tests: &mut usize,
    removed: &mut EdgeSubset,
) -> Result<(), ExtractionError> {
    for e in candidates {
        let id = work
            .remove_edge(e)
            .expect("candidates are edges of the working graph");
        *tests += 1;
        if is_k_vsb(work, k)?.verdict {
            removed.push(e);
        } else {
            work.restore_edge(id);
        }
    }
    Ok(())
}

/// Greedy minimal k-vsb spanning subgraph, k in {2, 3}.
pub fn minimal_k_vsb(
    g: &Digraph,
    k: usize,
    order: EdgeOrder,
) -> Result<ExtractionResult, ExtractionError> {
    if !(2..=3).contains(&k) {
        return Err(ConnectivityError::InvalidK(k).into());
    }
    let start = Instant::now();
    let mut tests = 0;
    require_k_vsb(g, k, &mut tests)?;

    let mut work = g.clone();
    let mut removed = EdgeSubset::new();
    greedy_delete(&mut work, order.arrange(g), k, &mut tests, &mut removed)?;
    let subgraph = work.compacted();
    let elapsed = start.elapsed();

    Ok(ExtractionResult {
        stats: ExtractionStats {
            edges_in: g.edge_count(),
            edges_out: subgraph.edge_count(),
            tests_performed: tests,
            elapsed,
        },
        subgraph,
        removed,
        protected: EdgeSubset::new(),
    })
}

/// 2-vsb spanning subgraph E+ used as the protected core of
/// [`two_phase_3vsb`]. Computed as a greedy minimal 2-vsb subgraph.
pub fn compute_2vsb_spanning(
    g: &Digraph,
    order: EdgeOrder,
) -> Result<ExtractionResult, ExtractionError> {
    minimal_k_vsb(g, 2, order)
}

/// Two-phase 3-vsb spanning subgraph: protect a 2-vsb spanning subgraph E+,
/// then greedily delete among the remaining edges at k = 3. The result
/// contains E+ and is 3-vsb but need not be minimal.
pub fn two_phase_3vsb(g: &Digraph, order: EdgeOrder) -> Result<ExtractionResult, ExtractionError> {
    let start = Instant::now();
    let mut tests = 0;
    require_k_vsb(g, 3, &mut tests)?;

    let core = compute_2vsb_spanning(g, order)?;
    tests += core.stats.tests_performed;
    let protected_set: HashSet<Edge> = core.subgraph.edges().collect();
    let protected =
        EdgeSubset::of(g, core.subgraph.edge_vec()).expect("E+ is a subset of the input");

    let mut work = g.clone();
    let mut removed = EdgeSubset::new();
    let candidates = order
        .arrange(g)
        .into_iter()
        .filter(|e| !protected_set.contains(e));
    greedy_delete(&mut work, candidates, 3, &mut tests, &mut removed)?;
    let subgraph = work.compacted();
    let elapsed = start.elapsed();

    Ok(ExtractionResult {
        stats: ExtractionStats {
            edges_in: g.edge_count(),
            edges_out: subgraph.edge_count(),
            tests_performed: tests,
            elapsed,
        },
        subgraph,
        removed,
        protected,
    })
}

/// Where an output edge count sits relative to the known bounds for 3-vsb
/// spanning subgraphs on `n >= 4` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeBudget {
    /// `m < 3n`: impossible, every vertex needs in- and out-degree 3.
    BelowDegreeBound,
    /// `3n <= m < 4n`: the range observed on random instances.
    Typical,
    /// `4n <= m <= 10n`: legal, but sparser outputs are expected.
    AboveTypical,
    /// `m > 10n`: exceeds the ceiling for minimal 3-vsb digraphs.
    AboveCeiling,
}

impl EdgeBudget {
    pub fn classify(n: usize, m: usize) -> Self {
        if m < 3 * n {
            EdgeBudget::BelowDegreeBound
        } else if m < 4 * n {
            EdgeBudget::Typical
        } else if m <= 10 * n {
            EdgeBudget::AboveTypical
        } else {
            EdgeBudget::AboveCeiling
        }
    }

    /// Hard failure (as opposed to a warning).
    pub fn is_violation(self) -> bool {
        matches!(
            self,
            EdgeBudget::BelowDegreeBound | EdgeBudget::AboveCeiling
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_is_minimal, oracle_k_vsb};

    #[test]
    fn k4_keeps_everything() {
        let k4 = Digraph::complete_bidirected(4);
        let r = minimal_k_vsb(&k4, 3, EdgeOrder::Input).unwrap();
        assert_eq!(r.subgraph, k4);
        assert!(r.removed.is_empty());
        assert_eq!(r.stats.tests_performed, 13);

        let r = two_phase_3vsb(&k4, EdgeOrder::Input).unwrap();
        assert_eq!(r.subgraph, k4);
        assert!(r.removed.is_empty());
        assert!(r.protected.iter().all(|e| r.subgraph.contains_edge(e)));
    }

    #[test]
    fn k5_input_order() {
        let k5 = Digraph::complete_bidirected(5);
        let r = minimal_k_vsb(&k5, 3, EdgeOrder::Input).unwrap();
        let m = r.subgraph.edge_count();
        assert!((15..20).contains(&m), "{m}");
        assert_eq!(r.removed.len() + m, 20);
        assert!(oracle_k_vsb(&r.subgraph, 3).unwrap());
        assert!(oracle_is_minimal(&r.subgraph, 3).unwrap());
    }

    #[test]
    fn minimal_output_is_fixed_point() {
        let k5 = Digraph::complete_bidirected(5);
        let once = minimal_k_vsb(&k5, 3, EdgeOrder::Shuffled { seed: 9 }).unwrap();
        let twice = minimal_k_vsb(&once.subgraph, 3, EdgeOrder::Input).unwrap();
        assert!(twice.removed.is_empty());
        assert_eq!(twice.subgraph, once.subgraph);
    }

    #[test]
    fn two_vsb_core_of_k4() {
        let k4 = Digraph::complete_bidirected(4);
        let r = compute_2vsb_spanning(&k4, EdgeOrder::Input).unwrap();
        assert!(r.subgraph.edge_count() >= 8);
        assert!(is_k_vsb(&r.subgraph, 2).unwrap().verdict);
        assert!(oracle_is_minimal(&r.subgraph, 2).unwrap());
    }

    #[test]
    fn rejects_non_conforming_input() {
        let bc4 = Digraph::build(
            4,
            [
                (0, 1),
                (1, 0),
                (1, 2),
                (2, 1),
                (2, 3),
                (3, 2),
                (3, 0),
                (0, 3),
            ],
        )
        .unwrap();
        assert!(matches!(
            compute_2vsb_spanning(&bc4, EdgeOrder::Input),
            Err(ExtractionError::NotKVsb { k: 2, .. })
        ));
        assert!(matches!(
            two_phase_3vsb(&Digraph::cycle(5), EdgeOrder::Input),
            Err(ExtractionError::NotKVsb { k: 3, .. })
        ));
        assert!(matches!(
            minimal_k_vsb(&Digraph::complete_bidirected(4), 1, EdgeOrder::Input),
            Err(ExtractionError::Connectivity(ConnectivityError::InvalidK(
                1
            )))
        ));
    }

    #[test]
    fn budget_classes() {
        assert_eq!(EdgeBudget::classify(10, 29), EdgeBudget::BelowDegreeBound);
        assert_eq!(EdgeBudget::classify(10, 30), EdgeBudget::Typical);
        assert_eq!(EdgeBudget::classify(10, 40), EdgeBudget::AboveTypical);
        assert_eq!(EdgeBudget::classify(10, 100), EdgeBudget::AboveTypical);
        assert_eq!(EdgeBudget::classify(10, 101), EdgeBudget::AboveCeiling);
        assert!(!EdgeBudget::AboveTypical.is_violation());
    }
}

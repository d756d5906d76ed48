//! Experiment harness: generate instances, time both extraction algorithms on
//! each, and render the comparison table.

use std::fmt::Write;
use std::time::Duration;

use thiserror::Error;

use crate::exec::{map_ordered, Execution};
use crate::extraction::{minimal_k_vsb, two_phase_3vsb, EdgeOrder, ExtractionError};
use crate::generator::{generate_instance, GeneratorError, InstanceSpec, DEFAULT_EDGE_MULTIPLIER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("experiment plan has no sizes")]
    NoSizes,
    #[error("experiment plan has no seeds")]
    NoSeeds,
    #[error("instance size {0} is below the minimum of 4")]
    SizeTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowError {
    #[error("n={n} seed={seed}: generation failed: {source}")]
    Generation {
        n: usize,
        seed: u64,
        source: GeneratorError,
    },
    #[error("n={n} seed={seed}: {algorithm} failed: {source}")]
    Extraction {
        n: usize,
        seed: u64,
        algorithm: &'static str,
        source: ExtractionError,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableFormat {
    #[default]
    Csv,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentPlan {
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub multiplier: usize,
    pub order: EdgeOrder,
    /// Row-level scheduling; each algorithm run stays single-threaded.
    pub execution: Execution,
}

impl ExperimentPlan {
    /// Seeds `1..=seeds_per_size` for every size, `8n` initial arcs.
    pub fn new(sizes: Vec<usize>, seeds_per_size: u64) -> Self {
        ExperimentPlan {
            sizes,
            seeds: (1..=seeds_per_size).collect(),
            multiplier: DEFAULT_EDGE_MULTIPLIER,
            order: EdgeOrder::Input,
            execution: Execution::Sequential,
        }
    }

    pub fn validate(&self) -> Result<(), PlanError> {
        if self.sizes.is_empty() {
            return Err(PlanError::NoSizes);
        }
        if self.seeds.is_empty() {
            return Err(PlanError::NoSeeds);
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| n < 4) {
            return Err(PlanError::SizeTooSmall(n));
        }
        Ok(())
    }

    fn jobs(&self) -> Vec<(usize, u64)> {
        self.sizes
            .iter()
            .flat_map(|&n| self.seeds.iter().map(move |&s| (n, s)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRow {
    pub n: usize,
    pub seed: u64,
    /// Arcs sampled before growth.
    pub m_initial: usize,
    /// Arcs of the grown 3-vsb instance fed to both algorithms.
    pub m_input: usize,
    pub algo1_time: Duration,
    pub algo1_edges: usize,
    pub algo1_tests: usize,
    pub algo2_time: Duration,
    pub algo2_edges: usize,
    pub algo2_tests: usize,
}

/// Generates one instance and runs both algorithms on it. Only the
/// extraction calls are inside the timed region.
pub fn run_row(
    n: usize,
    seed: u64,
    multiplier: usize,
    order: EdgeOrder,
) -> Result<ExperimentRow, RowError> {
    let spec = InstanceSpec::with_multiplier(n, multiplier, seed);
    let inst =
        generate_instance(spec).map_err(|source| RowError::Generation { n, seed, source })?;
    let extraction_err = |algorithm| {
        move |source| RowError::Extraction {
            n,
            seed,
            algorithm,
            source,
        }
    };

    let a1 = minimal_k_vsb(&inst.graph, 3, order).map_err(extraction_err("minimal"))?;
    let a2 = two_phase_3vsb(&inst.graph, order).map_err(extraction_err("two-phase"))?;

    Ok(ExperimentRow {
        n,
        seed,
        m_initial: spec.initial_edges,
        m_input: inst.graph.edge_count(),
        algo1_time: a1.stats.elapsed,
        algo1_edges: a1.stats.edges_out,
        algo1_tests: a1.stats.tests_performed,
        algo2_time: a2.stats.elapsed,
        algo2_edges: a2.stats.edges_out,
        algo2_tests: a2.stats.tests_performed,
    })
}

/// One outcome per `(size, seed)` pair, in plan order. A failing row does not
/// stop the others.
pub fn run_experiment(
    plan: &ExperimentPlan,
) -> Result<Vec<Result<ExperimentRow, RowError>>, PlanError> {
    plan.validate()?;
    let (multiplier, order) = (plan.multiplier, plan.order);
    Ok(map_ordered(plan.execution, plan.jobs(), |(n, seed)| {
        run_row(n, seed, multiplier, order)
    }))
}

pub const CSV_HEADER: &str = "n,m_input,seed,algo1_time_ms,algo1_edges,algo2_time_ms,algo2_edges";

/// `2 s`, `1 m 13 s`, `1 h 29 m 28 s`; sub-second values as `N ms`.
pub fn human_duration(d: Duration) -> String {
    let secs = d.as_secs();
    if secs == 0 {
        return format!("{} ms", d.as_millis());
    }
    let (h, m, s) = (secs / 3600, secs / 60 % 60, secs % 60);
    if h > 0 {
        format!("{h} h {m} m {s} s")
    } else if m > 0 {
        format!("{m} m {s} s")
    } else {
        format!("{s} s")
    }
}

pub fn emit_table(rows: &[ExperimentRow], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n,
                    r.m_input,
                    r.seed,
                    r.algo1_time.as_millis(),
                    r.algo1_edges,
                    r.algo2_time.as_millis(),
                    r.algo2_edges
                )
                .unwrap();
            }
        }
        TableFormat::Markdown => {
            out.push_str("| Input | Algorithm1 | Algorithm1 | Algorithm2 | Algorithm2 |\n");
            out.push_str("|---|---|---|---|---|\n");
            out.push_str("| ( V , E ) | Time | Edges | Time | Edges |\n");
            for r in rows {
                writeln!(
                    out,
                    "| ( {} , {} ) | {} | {} | {} | {} |",
                    r.n,
                    r.m_input,
                    human_duration(r.algo1_time),
                    r.algo1_edges,
                    human_duration(r.algo2_time),
                    r.algo2_edges
                )
                .unwrap();
            }
        }
    }
    out
}

//! Random 3-vsb instances: sample a uniform simple digraph with `8n` arcs,
//! then insert uniformly random absent arcs one at a time until the graph is
//! 3-vertex strongly biconnected.

use thiserror::Error;

use crate::connectivity::is_k_vsb;
use crate::graph::{Digraph, Edge};
use crate::rng::SeededRng;

pub const DEFAULT_EDGE_MULTIPLIER: usize = 8;

/// Offset mixed into the instance seed to obtain the growth-phase stream.
const GROWTH_STREAM: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("generated instances need n >= 4 (got {0})")]
    TooFewVertices(usize),
    #[error("{requested} arcs requested but only {max} fit on {n} vertices")]
    TooManyEdges {
        n: usize,
        requested: usize,
        max: usize,
    },
    #[error("graph on {0} vertices became complete without being 3-vsb")]
    Saturated(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n: usize,
    pub initial_edges: usize,
    pub seed: u64,
}

impl InstanceSpec {
    /// `n` vertices, `8n` initial arcs (capped at `n(n-1)`).
    pub fn new(n: usize, seed: u64) -> Self {
        InstanceSpec::with_multiplier(n, DEFAULT_EDGE_MULTIPLIER, seed)
    }

    pub fn with_multiplier(n: usize, multiplier: usize, seed: u64) -> Self {
        InstanceSpec {
            n,
            initial_edges: (multiplier * n).min(max_arcs(n)),
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.n < 4 {
            return Err(GeneratorError::TooFewVertices(self.n));
        }
        if self.initial_edges > max_arcs(self.n) {
            return Err(GeneratorError::TooManyEdges {
                n: self.n,
                requested: self.initial_edges,
                max: max_arcs(self.n),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedInstance {
    pub spec: InstanceSpec,
    pub graph: Digraph,
    pub edges_added_in_growth: usize,
}

fn max_arcs(n: usize) -> usize {
    n * n.saturating_sub(1)
}

/// Arc index in `[0, n(n-1))` to `(u, v)`: `u = i / (n-1)`, and the target
/// skips `u`.
fn arc_from_index(n: usize, index: usize) -> Edge {
    let u = index / (n - 1);
    let r = index % (n - 1);
    Edge::new(u, if r < u { r } else { r + 1 })
}

fn arc_to_index(n: usize, e: Edge) -> usize {
    let (u, v) = (e.source.0, e.target.0);
    u * (n - 1) + if v < u { v } else { v - 1 }
}

/// Uniform simple digraph with exactly `initial_edges` arcs: a partial
/// shuffle of the arc index space, arcs kept in sampled order.
pub fn random_digraph(spec: &InstanceSpec) -> Result<Digraph, GeneratorError> {
    spec.validate()?;
    Ok(sample_digraph(spec.n, spec.initial_edges, spec.seed))
}

/// Same sampler without the `n >= 4` instance restriction.
pub fn sample_digraph(n: usize, m: usize, seed: u64) -> Digraph {
    assert!(m <= max_arcs(n), "too many arcs for {n} vertices");
    let mut arcs: Vec<usize> = (0..max_arcs(n)).collect();
    SeededRng::new(seed).partial_shuffle(&mut arcs, m);
    Digraph::build(n, arcs[..m].iter().map(|&i| arc_from_index(n, i)))
        .expect("sampled arcs are distinct")
}

/// Inserts uniformly random absent arcs one at a time, re-testing 3-vsb after
/// each insertion, until the test passes.
pub fn grow_until_3vsb(graph: Digraph, seed: u64) -> Result<(Digraph, usize), GeneratorError> {
    let n = graph.vertex_count();
    if n < 4 {
        return Err(GeneratorError::TooFewVertices(n));
    }
    let mut g = graph;
    let three_vsb = |g: &Digraph| is_k_vsb(g, 3).expect("n >= 4").verdict;
    if three_vsb(&g) {
        return Ok((g, 0));
    }
    let mut present = vec![false; max_arcs(n)];
    for e in g.edges() {
        present[arc_to_index(n, e)] = true;
    }
    let mut absent: Vec<usize> = (0..max_arcs(n)).filter(|&i| !present[i]).collect();
    let mut rng = SeededRng::new(seed);
    let mut added = 0;
    while !absent.is_empty() {
        let pick = absent.swap_remove(rng.index(absent.len()));
        let e = arc_from_index(n, pick);
        g.insert_edge(e.source.0, e.target.0)
            .expect("arc was absent");
        added += 1;
        if three_vsb(&g) {
            return Ok((g, added));
        }
    }
    Err(GeneratorError::Saturated(n))
}

/// Random digraph grown to a 3-vsb instance. The growth phase draws from a
/// second stream seeded with `seed ^ 0x9E3779B97F4A7C15`.
pub fn generate_instance(spec: InstanceSpec) -> Result<GeneratedInstance, GeneratorError> {
    let initial = random_digraph(&spec)?;
    let (graph, added) = grow_until_3vsb(initial, spec.seed ^ GROWTH_STREAM)?;
    Ok(GeneratedInstance {
        spec,
        graph,
        edges_added_in_growth: added,
    })
}

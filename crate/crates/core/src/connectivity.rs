//! Connectivity predicates for digraphs: strong connectivity, undirected
//! articulation points, strong biconnectivity, and k-vertex strong
//! biconnectivity for k in {1, 2, 3}.
//!
//! A digraph is strongly biconnected when it is strongly connected and its
//! underlying undirected graph has no articulation point. It is k-vertex
//! strongly biconnected (k-vsb) when deleting any set of at most k - 1
//! vertices leaves a strongly biconnected graph.
//!
//! All residual checks run on masked views of the input: deleted vertices and
//! inactive arcs are skipped during traversal, so no residual graph is ever materialized and
//! witnesses are reported in the caller's vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exec::Execution;
use crate::graph::{Digraph, UndirectedGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("k must be 1, 2 or 3 (got {0})")]
    InvalidK(usize),
    #[error("{k}-vsb needs at least {} vertices, graph has {n}", k + 1)]
    TooFewVertices { n: usize, k: usize },
}

/// Certificate that a predicate failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// No directed path from `from` to `to`.
    Unreachable { from: VertexId, to: VertexId },
    /// Cut vertex of the underlying undirected graph.
    ArticulationPoint(VertexId),
    /// Deleting `deleted` leaves a graph that is not strongly biconnected for
    /// the reason given by `cause`.
    DeletionSet {
        deleted: Vec<VertexId>,
        cause: Box<Witness>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Unreachable { from, to } => write!(f, "no path from {from} to {to}"),
            Witness::ArticulationPoint(v) => write!(f, "vertex {v} is an articulation point"),
            Witness::DeletionSet { deleted, cause } => {
                let ids: Vec<String> = deleted.iter().map(|v| v.to_string()).collect();
                write!(f, "after deleting {{{}}}: {cause}", ids.join(", "))
            }
        }
    }
}

impl Witness {
    /// Independently re-establishes the failure on `g`, using
    /// `delete_vertices` and plain traversals rather than the masked checks.
    pub fn confirms(&self, g: &Digraph) -> bool {
        match self {
            Witness::Unreachable { from, to } => {
                from.0 < g.vertex_count()
                    && to.0 < g.vertex_count()
                    && !reachable_from(g, *from).contains(to)
            }
            Witness::ArticulationPoint(v) => {
                if v.0 >= g.vertex_count() {
                    return false;
                }
                let before = count_components(&g.underlying_undirected());
                match g.delete_vertices(&[*v]) {
                    Ok((rest, _)) => count_components(&rest.underlying_undirected()) > before,
                    Err(_) => false,
                }
            }
            Witness::DeletionSet { deleted, cause } => {
                let Ok((rest, back)) = g.delete_vertices(deleted) else {
                    return false;
                };
                let Some(local) = cause.relabel(&back) else {
                    return false;
                };
                !is_strongly_biconnected(&rest).verdict && local.confirms(&rest)
            }
        }
    }

    fn relabel(&self, back: &[VertexId]) -> Option<Witness> {
        let local = |v: &VertexId| back.iter().position(|b| b == v).map(VertexId);
        Some(match self {
            Witness::Unreachable { from, to } => Witness::Unreachable {
                from: local(from)?,
                to: local(to)?,
            },
            Witness::ArticulationPoint(v) => Witness::ArticulationPoint(local(v)?),
            Witness::DeletionSet { .. } => return None,
        })
    }
}

fn count_components(u: &UndirectedGraph) -> usize {
    let n = u.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in u.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Verdict of a connectivity query. A failing report always carries a
/// witness; a passing one never does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl ConnectivityReport {
    pub fn holds() -> Self {
        ConnectivityReport {
            verdict: true,
            witness: None,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        ConnectivityReport {
            verdict: false,
            witness: Some(witness),
        }
    }

    fn from_witness(w: Option<Witness>) -> Self {
        w.map_or_else(Self::holds, Self::fails)
    }
}

/// Up to two deleted vertices, sorted ascending.
#[derive(Clone, Copy, Debug)]
struct Deleted {
    ids: [usize; 2],
    len: usize,
}

impl Deleted {
    const NONE: Deleted = Deleted {
        ids: [usize::MAX; 2],
        len: 0,
    };

    fn one(a: usize) -> Self {
        Deleted {
            ids: [a, usize::MAX],
            len: 1,
        }
    }

    fn two(a: usize, b: usize) -> Self {
        Deleted {
            ids: [a, b],
            len: 2,
        }
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        self.ids[0] == v || self.ids[1] == v
    }

    fn to_vec(self) -> Vec<VertexId> {
        self.ids[..self.len].iter().map(|&v| VertexId(v)).collect()
    }
}

/// Undirected neighbourhoods addressed by slot, so the lowpoint search can run
/// on an [`UndirectedGraph`] or directly on a digraph's masked arcs. Slots
/// may repeat a neighbour (antiparallel arcs); that does not affect cut
/// vertices.
trait UndirectedView {
    fn slots(&self, v: usize) -> usize;
    fn neighbor(&self, v: usize, slot: usize) -> Option<usize>;
}

impl UndirectedView for UndirectedGraph {
    fn slots(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    fn neighbor(&self, v: usize, slot: usize) -> Option<usize> {
        Some(self.neighbors(v)[slot])
    }
}

impl UndirectedView for Digraph {
    fn slots(&self, v: usize) -> usize {
        self.incident_slots(v)
    }

    #[inline]
    fn neighbor(&self, v: usize, slot: usize) -> Option<usize> {
        self.incident_neighbor(v, slot)
    }
}

/// Reusable traversal buffers for masked checks.
struct Scratch {
    seen: Vec<bool>,
    stack: Vec<usize>,
    disc: Vec<u32>,
    low: Vec<u32>,
    frames: Vec<(usize, usize, usize)>,
    cut: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            seen: vec![false; n],
            stack: Vec::with_capacity(n),
            disc: vec![0; n],
            low: vec![0; n],
            frames: Vec::with_capacity(n),
            cut: vec![false; n],
        }
    }
}

const NO_PARENT: usize = usize::MAX;

/// Directed search from `root` skipping deleted vertices. Returns the number
/// of vertices reached; `scratch.seen` marks them.
fn masked_search(
    g: &Digraph,
    root: usize,
    deleted: Deleted,
    forward: bool,
    scratch: &mut Scratch,
) -> usize {
    scratch.seen.fill(false);
    scratch.stack.clear();
    scratch.seen[root] = true;
    scratch.stack.push(root);
    let mut reached = 1;
    while let Some(v) = scratch.stack.pop() {
        let v = VertexId(v);
        let mut visit = |w: VertexId, sc: &mut Scratch| {
            if !deleted.contains(w.0) && !sc.seen[w.0] {
                sc.seen[w.0] = true;
                sc.stack.push(w.0);
                reached += 1;
            }
        };
        if forward {
            for w in g.out_neighbors(v) {
                visit(w, scratch);
            }
        } else {
            for w in g.in_neighbors(v) {
                visit(w, scratch);
            }
        }
    }
    reached
}

/// Lowpoint search over the component of `root`, skipping deleted vertices.
/// Sets `scratch.cut[v]` for every articulation point found. `disc` entries
/// must be zero for unvisited vertices; `time` is the running counter.
fn mark_cut_vertices(
    u: &impl UndirectedView,
    root: usize,
    deleted: Deleted,
    scratch: &mut Scratch,
    time: &mut u32,
) {
    *time += 1;
    scratch.disc[root] = *time;
    scratch.low[root] = *time;
    scratch.frames.clear();
    scratch.frames.push((root, NO_PARENT, 0));
    let mut root_children = 0;

    while let Some(top) = scratch.frames.last_mut() {
        let (v, parent, next) = *top;
        if next < u.slots(v) {
            top.2 += 1;
            let Some(w) = u.neighbor(v, next) else {
                continue;
            };
            if deleted.contains(w) {
                continue;
            }
            if scratch.disc[w] == 0 {
                *time += 1;
                scratch.disc[w] = *time;
                scratch.low[w] = *time;
                if v == root {
                    root_children += 1;
                }
                scratch.frames.push((w, v, 0));
            } else if w != parent {
                scratch.low[v] = scratch.low[v].min(scratch.disc[w]);
            }
        } else {
            scratch.frames.pop();
            if parent != NO_PARENT {
                scratch.low[parent] = scratch.low[parent].min(scratch.low[v]);
                if parent != root && scratch.low[v] >= scratch.disc[parent] {
                    scratch.cut[parent] = true;
                }
            }
        }
    }
    if root_children >= 2 {
        scratch.cut[root] = true;
    }
}

/// Strong biconnectivity of `g - deleted`.
fn residual_failure(g: &Digraph, deleted: Deleted, scratch: &mut Scratch) -> Option<Witness> {
    let n = g.vertex_count();
    let alive = n - deleted.len;
    let root = (0..n).find(|&v| !deleted.contains(v))?;
    let last_missed = |sc: &Scratch| (0..n).rev().find(|&v| !deleted.contains(v) && !sc.seen[v]);

    if masked_search(g, root, deleted, true, scratch) < alive {
        let to = last_missed(scratch).expect("some vertex was missed");
        return Some(Witness::Unreachable {
            from: VertexId(root),
            to: VertexId(to),
        });
    }
    if masked_search(g, root, deleted, false, scratch) < alive {
        let from = last_missed(scratch).expect("some vertex was missed");
        return Some(Witness::Unreachable {
            from: VertexId(from),
            to: VertexId(root),
        });
    }

    // strongly connected, so the underlying graph is connected
    scratch.disc.fill(0);
    scratch.cut.fill(false);
    let mut time = 0;
    mark_cut_vertices(g, root, deleted, scratch, &mut time);
    scratch
        .cut
        .iter()
        .position(|&c| c)
        .map(|v| Witness::ArticulationPoint(VertexId(v)))
}

/// Vertices reachable from `v` by directed paths, including `v`, ascending.
pub fn reachable_from(g: &Digraph, v: VertexId) -> Vec<VertexId> {
    let mut scratch = Scratch::new(g.vertex_count());
    masked_search(g, v.0, Deleted::NONE, true, &mut scratch);
    scratch
        .seen
        .iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| VertexId(i))
        .collect()
}

/// Forward and backward search from vertex 0; a failing report names the
/// highest-id vertex the search missed. The empty graph counts as strongly
/// connected.
pub fn is_strongly_connected(g: &Digraph) -> ConnectivityReport {
    let n = g.vertex_count();
    if n == 0 {
        return ConnectivityReport::holds();
    }
    let mut scratch = Scratch::new(n);
    let missed = |sc: &Scratch| sc.seen.iter().rposition(|&s| !s);
    if masked_search(g, 0, Deleted::NONE, true, &mut scratch) < n {
        let to = missed(&scratch).unwrap();
        return ConnectivityReport::fails(Witness::Unreachable {
            from: VertexId(0),
            to: VertexId(to),
        });
    }
    if masked_search(g, 0, Deleted::NONE, false, &mut scratch) < n {
        let from = missed(&scratch).unwrap();
        return ConnectivityReport::fails(Witness::Unreachable {
            from: VertexId(from),
            to: VertexId(0),
        });
    }
    ConnectivityReport::holds()
}

/// All articulation points of `u`, over every connected component.
pub fn articulation_points(u: &UndirectedGraph) -> BTreeSet<VertexId> {
    let n = u.vertex_count();
    let mut scratch = Scratch::new(n);
    let mut time = 0;
    for root in 0..n {
        if scratch.disc[root] == 0 {
            mark_cut_vertices(u, root, Deleted::NONE, &mut scratch, &mut time);
        }
    }
    scratch
        .cut
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(v, _)| VertexId(v))
        .collect()
}

/// Strongly connected and no articulation point in the underlying
/// undirected graph. One vertex is strongly biconnected; two vertices are
/// iff both arcs between them are present.
pub fn is_strongly_biconnected(g: &Digraph) -> ConnectivityReport {
    if g.vertex_count() == 0 {
        return ConnectivityReport::holds();
    }
    let mut scratch = Scratch::new(g.vertex_count());
    ConnectivityReport::from_witness(residual_failure(g, Deleted::NONE, &mut scratch))
}

fn deletion_sets(n: usize, size: usize) -> Box<dyn Iterator<Item = Deleted> + Send> {
    match size {
        0 => Box::new(std::iter::once(Deleted::NONE)),
        1 => Box::new((0..n).map(Deleted::one)),
        2 => Box::new((0..n).flat_map(move |a| (a + 1..n).map(move |b| Deleted::two(a, b)))),
        _ => unreachable!("deletion sets are at most two vertices"),
    }
}

fn validate_k(g: &Digraph, k: usize) -> Result<(), ConnectivityError> {
    if !(1..=3).contains(&k) {
        return Err(ConnectivityError::InvalidK(k));
    }
    if g.vertex_count() <= k {
        return Err(ConnectivityError::TooFewVertices {
            n: g.vertex_count(),
            k,
        });
    }
    Ok(())
}

fn into_report(failure: Option<(Deleted, Witness)>) -> ConnectivityReport {
    ConnectivityReport::from_witness(failure.map(|(d, cause)| Witness::DeletionSet {
        deleted: d.to_vec(),
        cause: Box::new(cause),
    }))
}

/// k-vertex strong biconnectivity: every deletion set of size 0..k-1 leaves a
/// strongly biconnected graph. Sets are tried by increasing size, then in
/// lexicographic order; the first failing set is the witness.
pub fn is_k_vsb(g: &Digraph, k: usize) -> Result<ConnectivityReport, ConnectivityError> {
    validate_k(g, k)?;
    let n = g.vertex_count();
    let mut scratch = Scratch::new(n);
    let failure = (0..k)
        .flat_map(|size| deletion_sets(n, size))
        .find_map(|d| residual_failure(g, d, &mut scratch).map(|w| (d, w)));
    Ok(into_report(failure))
}

/// [`is_k_vsb`] with the deletion-set sweep of each size level spread over a
/// thread pool. The witness is the same one the sequential sweep returns.
pub fn is_k_vsb_with(
    g: &Digraph,
    k: usize,
    exec: Execution,
) -> Result<ConnectivityReport, ConnectivityError> {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;

        validate_k(g, k)?;
        let n = g.vertex_count();
        for size in 0..k {
            let sets: Vec<Deleted> = deletion_sets(n, size).collect();
            let failure = sets
                .par_iter()
                .map_init(
                    || Scratch::new(n),
                    |scratch, &d| residual_failure(g, d, scratch).map(|w| (d, w)),
                )
                .find_first(Option::is_some)
                .flatten();
            if failure.is_some() {
                return Ok(into_report(failure));
            }
        }
        return Ok(ConnectivityReport::holds());
    }
    let _ = exec;
    is_k_vsb(g, k)
}

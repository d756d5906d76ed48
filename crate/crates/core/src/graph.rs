//! Simple directed graphs with an ordered edge sequence and cheap edge
//! deactivation.
//!
//! A [`Digraph`] never forgets an edge once it has been inserted: removing an
//! edge clears its entry in an "active" mask, and restoring it sets the entry
//! again at its original position. The greedy extraction loops rely on this to
//! test a deletion and undo it in O(1).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Dense vertex identifier in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

/// A directed arc `source -> target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: VertexId,
    pub target: VertexId,
}

impl Edge {
    pub fn new(source: usize, target: usize) -> Self {
        Edge {
            source: VertexId(source),
            target: VertexId(target),
        }
    }

    pub fn reversed(self) -> Self {
        Edge {
            source: self.target,
            target: self.source,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.source, self.target)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

/// Position of an edge in a graph's edge sequence. Stable for the lifetime
/// of the graph, including across deactivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),
    #[error("deleting {deleted} of {n} vertices leaves an empty graph")]
    EmptyResult { deleted: usize, n: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Simple digraph: no self-loops, no parallel arcs, insertion order preserved.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
    active: Vec<bool>,
    active_count: usize,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    index: HashMap<Edge, EdgeId>,
}

impl Digraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            edges: Vec::new(),
            active: Vec::new(),
            active_count: 0,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Builds a graph from `(source, target)` pairs, keeping their order.
    pub fn build<I, P>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = P>,
        P: Into<Edge>,
    {
        let mut g = Digraph::empty(n);
        for p in pairs {
            let e = p.into();
            g.insert_edge(e.source.0, e.target.0)?;
        }
        Ok(g)
    }

    /// Bidirected complete graph: every ordered pair `(u, v)`, `u != v`, in
    /// lexicographic order.
    pub fn complete_bidirected(n: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::build(n, pairs).expect("complete graph is simple")
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        Digraph::build(n, (0..n).map(|u| (u, (u + 1) % n))).expect("cycle is simple for n >= 2")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of active edges.
    pub fn edge_count(&self) -> usize {
        self.active_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    /// Active edges in sequence order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(&e, _)| e)
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edge_id(e).is_some()
    }

    /// Identity of an active edge.
    pub fn edge_id(&self, e: Edge) -> Option<EdgeId> {
        self.index.get(&e).copied().filter(|id| self.active[id.0])
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id.0]
    }

    pub fn is_active(&self, id: EdgeId) -> bool {
        self.active[id.0]
    }

    /// Targets of active out-arcs of `v`.
    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_adj[v.0]
            .iter()
            .filter(|id| self.active[id.0])
            .map(|id| self.edges[id.0].target)
    }

    /// Sources of active in-arcs of `v`.
    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_adj[v.0]
            .iter()
            .filter(|id| self.active[id.0])
            .map(|id| self.edges[id.0].source)
    }

    /// Arc slots at `v` seen without direction: out-arcs, then in-arcs.
    pub(crate) fn incident_slots(&self, v: usize) -> usize {
        self.out_adj[v].len() + self.in_adj[v].len()
    }

    /// Other endpoint of incident slot `i` of `v`, `None` if that arc is
    /// inactive.
    #[inline]
    pub(crate) fn incident_neighbor(&self, v: usize, i: usize) -> Option<usize> {
        let out = &self.out_adj[v];
        let (id, other) = if i < out.len() {
            let id = out[i];
            (id, self.edges[id.0].target)
        } else {
            let id = self.in_adj[v][i - out.len()];
            (id, self.edges[id.0].source)
        };
        self.active[id.0].then_some(other.0)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_neighbors(v).count()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Adds `(u, v)`. An edge that was previously removed is reactivated at its
    /// original position in the sequence; a new edge is appended.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = Edge::new(u, v);
        if let Some(&id) = self.index.get(&e) {
            if self.active[id.0] {
                return Err(GraphError::DuplicateEdge(e));
            }
            self.active[id.0] = true;
            self.active_count += 1;
            return Ok(id);
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(e);
        self.active.push(true);
        self.active_count += 1;
        self.out_adj[u].push(id);
        self.in_adj[v].push(id);
        self.index.insert(e, id);
        Ok(id)
    }

    /// Deactivates `e`; the relative order of the remaining edges is unchanged.
    pub fn remove_edge(&mut self, e: Edge) -> Result<EdgeId, GraphError> {
        let id = self.edge_id(e).ok_or(GraphError::EdgeAbsent(e))?;
        self.active[id.0] = false;
        self.active_count -= 1;
        Ok(id)
    }

    /// Reactivates an edge previously removed with [`Digraph::remove_edge`].
    pub fn restore_edge(&mut self, id: EdgeId) {
        if !self.active[id.0] {
            self.active[id.0] = true;
            self.active_count += 1;
        }
    }

    /// Non-mutating variant of [`Digraph::remove_edge`].
    pub fn without_edge(&self, e: Edge) -> Result<Digraph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(e)?;
        Ok(g.compacted())
    }

    /// Copy holding only the active edges, in order.
    pub fn compacted(&self) -> Digraph {
        Digraph::build(self.n, self.edges()).expect("active edges form a simple graph")
    }

    /// Induced subgraph on `V \ deleted`, re-indexed densely in increasing
    /// original-id order. The returned map sends new ids to original ids.
    pub fn delete_vertices(
        &self,
        deleted: &[VertexId],
    ) -> Result<(Digraph, Vec<VertexId>), GraphError> {
        let mut gone = vec![false; self.n];
        for &v in deleted {
            self.check_vertex(v.0)?;
            gone[v.0] = true;
        }
        let removed = gone.iter().filter(|&&g| g).count();
        if removed == self.n {
            return Err(GraphError::EmptyResult {
                deleted: removed,
                n: self.n,
            });
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut back = Vec::with_capacity(self.n - removed);
        for v in 0..self.n {
            if !gone[v] {
                new_id[v] = back.len();
                back.push(VertexId(v));
            }
        }
        let pairs = self
            .edges()
            .filter(|e| !gone[e.source.0] && !gone[e.target.0])
            .map(|e| (new_id[e.source.0], new_id[e.target.0]));
        let g = Digraph::build(back.len(), pairs).expect("induced subgraph is simple");
        Ok((g, back))
    }

    /// The graph with edge directions ignored.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        let mut adj = vec![Vec::new(); self.n];
        for e in self.edges() {
            adj[e.source.0].push(e.target.0);
            adj[e.target.0].push(e.source.0);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        UndirectedGraph { adj }
    }
}

/// Two graphs are equal when they have the same vertex count and the same
/// active edge sequence.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.active_count == other.active_count
            && self.edges().eq(other.edges())
    }
}

impl Eq for Digraph {}

/// Simple undirected graph as sorted, deduplicated adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(
                u < n && v < n && u != v,
                "invalid undirected edge ({u}, {v})"
            );
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        UndirectedGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Ordered set of edges drawn from one parent graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSubset {
    edges: Vec<Edge>,
}

impl EdgeSubset {
    pub fn new() -> Self {
        EdgeSubset::default()
    }

    /// Checks membership of every edge in `parent`.
    pub fn of(parent: &Digraph, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if let Some(&e) = edges.iter().find(|&&e| !parent.contains_edge(e)) {
            return Err(GraphError::EdgeAbsent(e));
        }
        Ok(EdgeSubset { edges })
    }

    pub(crate) fn push(&mut self, e: Edge) {
        self.edges.push(e);
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn is_subset_of(&self, g: &Digraph) -> bool {
        self.edges.iter().all(|&e| g.contains_edge(e))
    }
}

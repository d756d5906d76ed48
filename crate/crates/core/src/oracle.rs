//! Brute-force reference predicates for testing the fast connectivity code.
//!
//! These take a different route on purpose: strong connectivity by a full
//! transitive closure, cut vertices by counting components after removing
//! each vertex, and residual graphs built explicitly with `delete_vertices`.
//! Size guards keep them from running away in CI.

use thiserror::Error;

use crate::graph::{Digraph, VertexId};

pub const MAX_CLOSURE_VERTICES: usize = 12;
pub const MAX_KVSB_VERTICES: usize = 10;
pub const MAX_MINIMALITY_EDGES: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph too large for the brute-force oracle ({what} = {size}, limit {limit})")]
pub struct TooLarge {
    pub what: &'static str,
    pub size: usize,
    pub limit: usize,
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<(), TooLarge> {
    if size > limit {
        Err(TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

fn closure(g: &Digraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for e in g.edges() {
        reach[e.source.0][e.target.0] = true;
    }
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut() {
            if row[k] {
                for (r, &v) in row.iter_mut().zip(&via) {
                    *r |= v;
                }
            }
        }
    }
    reach
}

fn strongly_connected_unguarded(g: &Digraph) -> bool {
    closure(g).iter().all(|row| row.iter().all(|&r| r))
}

/// Union-find component count of the undirected graph on the vertices with
/// `alive[v]`, built straight from the arc list.
fn undirected_components(g: &Digraph, alive: &[bool]) -> usize {
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for e in g.edges() {
        let (u, v) = (e.source.0, e.target.0);
        if alive[u] && alive[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    (0..n)
        .filter(|&v| alive[v] && find(&mut parent, v) == v)
        .count()
}

fn strongly_biconnected_unguarded(g: &Digraph) -> bool {
    let n = g.vertex_count();
    if !strongly_connected_unguarded(g) {
        return false;
    }
    let mut alive = vec![true; n];
    let base = undirected_components(g, &alive);
    (0..n).all(|v| {
        alive[v] = false;
        let c = undirected_components(g, &alive);
        alive[v] = true;
        c <= base
    })
}

pub fn oracle_strongly_connected(g: &Digraph) -> Result<bool, TooLarge> {
    guard("n", g.vertex_count(), MAX_CLOSURE_VERTICES)?;
    Ok(strongly_connected_unguarded(g))
}

pub fn oracle_strongly_biconnected(g: &Digraph) -> Result<bool, TooLarge> {
    guard("n", g.vertex_count(), MAX_CLOSURE_VERTICES)?;
    Ok(strongly_biconnected_unguarded(g))
}

fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<VertexId>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::<VertexId>::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |v| v.0 + 1);
            for v in start..n {
                let mut t = s.clone();
                t.push(VertexId(v));
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn k_vsb_unguarded(g: &Digraph, k: usize) -> bool {
    subsets_up_to(g.vertex_count(), k.saturating_sub(1))
        .iter()
        .all(|s| match g.delete_vertices(s) {
            Ok((rest, _)) => strongly_biconnected_unguarded(&rest),
            Err(_) => false,
        })
}

/// Literal enumeration of every deletion set of size at most `k - 1`.
pub fn oracle_k_vsb(g: &Digraph, k: usize) -> Result<bool, TooLarge> {
    guard("n", g.vertex_count(), MAX_KVSB_VERTICES)?;
    Ok(k_vsb_unguarded(g, k))
}

/// True iff no single edge can be dropped from `g` without losing k-vsb.
/// Accepts graphs with `n <= 10` or `m <= 400`.
pub fn oracle_is_minimal(g: &Digraph, k: usize) -> Result<bool, TooLarge> {
    if g.vertex_count() > MAX_KVSB_VERTICES {
        guard("m", g.edge_count(), MAX_MINIMALITY_EDGES)?;
    }
    for e in g.edge_vec() {
        let rest = g.without_edge(e).expect("edge taken from the graph");
        if k_vsb_unguarded(&rest, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

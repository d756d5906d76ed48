use proptest::prelude::*;

use vsb::generator::sample_digraph;
use vsb::{parse_edge_list, serialize_edge_list, Digraph, Edge, VertexId};

fn digraph() -> impl Strategy<Value = Digraph> {
    (2usize..12).prop_flat_map(|n| {
        (Just(n), 0..=n * (n - 1), any::<u64>()).prop_map(|(n, m, seed)| sample_digraph(n, m, seed))
    })
}

proptest! {
    #[test]
    fn remove_edge_drops_exactly_one(g in digraph(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let edges = g.edge_vec();
        let e = edges[pick.index(edges.len())];
        let h = g.without_edge(e).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count() - 1);
        prop_assert!(!h.contains_edge(e));
        let kept: Vec<Edge> = edges.into_iter().filter(|&x| x != e).collect();
        prop_assert_eq!(h.edge_vec(), kept);
    }

    #[test]
    fn delete_vertices_counts(g in digraph(), mask in any::<u16>()) {
        let n = g.vertex_count();
        let deleted: Vec<VertexId> = (0..n).filter(|v| mask >> v & 1 == 1).map(VertexId).collect();
        prop_assume!(deleted.len() < n);
        let (h, back) = g.delete_vertices(&deleted).unwrap();
        prop_assert_eq!(h.vertex_count(), n - deleted.len());
        let survivors = g
            .edges()
            .filter(|e| !deleted.contains(&e.source) && !deleted.contains(&e.target))
            .count();
        prop_assert_eq!(h.edge_count(), survivors);
        prop_assert!(back.windows(2).all(|w| w[0] < w[1]));
        for e in h.edges() {
            let original = Edge { source: back[e.source.0], target: back[e.target.0] };
            prop_assert!(g.contains_edge(original));
        }
    }

    #[test]
    fn edge_list_round_trip(g in digraph()) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_edge_list(&back), text);
    }

    #[test]
    fn underlying_ignores_orientation(g in digraph(), flips in any::<u64>()) {
        // reorient some arcs whose reverse is absent, and add reverses of others
        let n = g.vertex_count();
        let mut h = Digraph::empty(n);
        for (i, e) in g.edges().enumerate() {
            let e = if flips >> (i % 64) & 1 == 1 && !g.contains_edge(e.reversed()) { e.reversed() } else { e };
            let _ = h.insert_edge(e.source.0, e.target.0);
            if flips >> ((i + 17) % 64) & 1 == 1 {
                let _ = h.insert_edge(e.target.0, e.source.0);
            }
        }
        prop_assert_eq!(g.underlying_undirected(), h.underlying_undirected());
    }
}

#[test]
fn empty_graph_serializes() {
    let g = Digraph::empty(5);
    assert_eq!(serialize_edge_list(&g), "5 0\n");
    assert_eq!(parse_edge_list("5 0\n").unwrap(), g);
}

mod common;

use proptest::prelude::*;

use common::naive_distance_sums;
use wiener_cut::enumerate::{canonical_certificate, canonical_form};
use wiener_cut::families::{build, FamilySpec};
use wiener_cut::graph::graph6;
use wiener_cut::structure::{count_cut_vertices, decompose, is_two_connected};
use wiener_cut::Graph;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A random tree plus extra edges, so always connected.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        (parents, prop::collection::vec(0.0..1.0f64, n * n), 0.0..0.5f64).prop_map(move |(parents, coins, p)| {
            let mut edges: Vec<_> = parents.iter().enumerate().map(|(i, &u)| (u, i + 1)).collect();
            for u in 0..n {
                for v in u + 1..n {
                    if coins[u * n + v] < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_permutation<S: Strategy<Value = Graph>>(s: S) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    s.prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trips(g in any_graph(20)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn certificates_ignore_labels((g, perm) in with_permutation(any_graph(11))) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_certificate(&g).unwrap(), canonical_certificate(&h).unwrap());
    }

    #[test]
    fn canonical_form_is_a_relabelling(g in any_graph(11)) {
        let (c, labels) = canonical_form(&g).unwrap();
        prop_assert_eq!(g.permuted(&labels), c.clone());
        prop_assert_eq!(canonical_certificate(&g).unwrap().to_graph(), c);
    }

    #[test]
    fn distances_match_the_oracle(g in connected_graph(16)) {
        let d = g.vertex_distances().unwrap();
        prop_assert_eq!(&d, &naive_distance_sums(&g));
        prop_assert_eq!(d.iter().sum::<u64>(), 2 * g.wiener_index().unwrap());
    }

    #[test]
    fn removing_a_non_bridge_edge_raises_w(g in connected_graph(12)) {
        let w = g.wiener_index().unwrap();
        let d = g.vertex_distances().unwrap();
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).unwrap();
            if h.is_connected() {
                prop_assert!(h.wiener_index().unwrap() > w);
                let hd = h.vertex_distances().unwrap();
                prop_assert!(hd.iter().zip(&d).all(|(a, b)| a >= b));
            }
        }
    }

    #[test]
    fn block_structure_invariants(g in connected_graph(14)) {
        let n = g.order();
        let dec = decompose(&g).unwrap();
        // cut vertices by deletion
        let brute = (0..n).filter(|&v| {
            let rest = g.vertices().difference(wiener_cut::VertexSet::singleton(v));
            !g.induced(rest).unwrap().0.is_connected()
        }).count();
        prop_assert_eq!(dec.cut_vertex_count(), brute);
        prop_assert_eq!(count_cut_vertices(&g).unwrap(), brute);
        // block-cut tree: sizes add up, each edge in one block
        prop_assert_eq!(dec.blocks().iter().map(|b| b.order() - 1).sum::<usize>(), n - 1);
        for (u, v) in g.edges() {
            let holders = dec.blocks().iter().filter(|b| b.vertices.contains(u) && b.vertices.contains(v)).count();
            prop_assert_eq!(holders, 1);
        }
        for b in dec.blocks() {
            let (sub, _) = g.induced(b.vertices).unwrap();
            prop_assert!(b.is_bridge() || is_two_connected(&sub));
            prop_assert_eq!(b.cut_vertices, b.vertices.intersection(dec.cut_vertices()));
            if dec.blocks().len() > 1 {
                prop_assert_eq!(b.kind.is_pendant(), b.cut_vertices.len() == 1);
            }
        }
        let firsts: Vec<_> = dec.blocks().iter().map(|b| b.vertices.first()).collect();
        prop_assert!(firsts.windows(2).all(|w| w[0] <= w[1]));
        if dec.cut_vertex_count() >= 2 {
            prop_assert!(dec.s_pendant_blocks().count() >= 2);
        }
    }

    #[test]
    fn families_have_their_stated_class(n in 3u64..40, a in 3u64..40, b in 3u64..40) {
        let mut specs = vec![FamilySpec::Path { n }, FamilySpec::Cycle { n }, FamilySpec::Star { n }];
        if a <= n {
            specs.push(FamilySpec::Lollipop { n, g: a });
        }
        if a + b <= n + 1 {
            specs.push(FamilySpec::Dumbbell { m1: a, m2: b, n });
        }
        for s in specs {
            let g = build(&s).unwrap();
            prop_assert_eq!(g.order() as u64, s.order());
            prop_assert_eq!(count_cut_vertices(&g).unwrap() as u64, s.cut_vertices());
        }
    }
}

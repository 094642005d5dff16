use std::collections::BTreeSet;

use wiener_cut::enumerate::{
    canonical_certificate, count, fold_graphs, generate, CanonicalCertificate, EnumerationConfig,
};
use wiener_cut::structure::count_cut_vertices;
use wiener_cut::Graph;

/// Certificates of all labelled graphs on `n` vertices.
fn brute_force(n: usize, connected: bool) -> BTreeSet<CanonicalCertificate> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if !connected || g.is_connected() {
            out.insert(canonical_certificate(&g).unwrap());
        }
    }
    out
}

fn generated(config: &EnumerationConfig) -> Vec<CanonicalCertificate> {
    generate(config).unwrap().map(|r| r.unwrap().1).collect()
}

#[test]
fn augmentation_matches_brute_force() {
    for n in 1..=7 {
        for connected in [true, false] {
            let mut config = EnumerationConfig::new(n);
            config.connected_only = connected;
            let got = generated(&config);
            let set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "duplicates at n={n}");
            assert_eq!(set, brute_force(n, connected), "n={n} connected={connected}");
        }
    }
}

#[test]
fn connected_counts() {
    let expected = [1u64, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &want) in expected.iter().enumerate() {
        assert_eq!(count(&EnumerationConfig::new(i + 1)).unwrap(), want, "n={}", i + 1);
    }
}

#[test]
fn classes_partition_the_connected_graphs() {
    for n in 2..=8 {
        let total = count(&EnumerationConfig::new(n)).unwrap();
        let by_k: u64 = (0..n).map(|k| count(&EnumerationConfig::new(n).with_cut_vertices(k)).unwrap_or(0)).sum();
        assert_eq!(by_k, total, "n={n}");
    }
    // only the path has n - 2 cut vertices
    assert_eq!(count(&EnumerationConfig::new(8).with_cut_vertices(6)).unwrap(), 1);
}

#[test]
fn class_members_have_k_cut_vertices() {
    for item in generate(&EnumerationConfig::new(7).with_cut_vertices(2)).unwrap() {
        let (g, _) = item.unwrap();
        assert_eq!(count_cut_vertices(&g).unwrap(), 2);
    }
}

#[test]
fn partition_count_does_not_change_the_multiset() {
    let certs = |p| {
        fold_graphs(
            &EnumerationConfig::new(8).with_partitions(p),
            Vec::new,
            |acc: &mut Vec<CanonicalCertificate>, _, c| acc.push(c.clone()),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
        .unwrap()
    };
    let base = certs(1);
    assert_eq!(base.len(), 11117);
    for p in [2, 8] {
        let mut other = certs(p);
        let mut sorted = base.clone();
        sorted.sort();
        other.sort();
        assert_eq!(other, sorted, "p={p}");
    }
}

#[test]
fn stream_order_is_deterministic() {
    let config = EnumerationConfig::new(7).with_partitions(3);
    assert_eq!(generated(&config), generated(&EnumerationConfig::new(7)));
}

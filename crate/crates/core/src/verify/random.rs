//! Seeded random instances for the rewiring checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Random connected graph on `n` vertices: a random tree plus each other
/// edge with probability `p`.
pub(crate) fn connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    shuffle(rng, &Graph::from_edges(n, edges).expect("ids are in range"))
}

/// Random 2-connected graph on `m >= 3` vertices built from an ear
/// decomposition: a cycle, then paths between existing vertices, then
/// chords. Every 2-connected graph arises this way.
pub(crate) fn two_connected<R: Rng>(rng: &mut R, m: usize) -> Graph {
    let start = rng.gen_range(3..=m);
    let mut edges: Vec<(usize, usize)> = (0..start).map(|i| (i, (i + 1) % start)).collect();
    let mut used = start;
    while used < m {
        let inner = rng.gen_range(1..=m - used);
        let a = rng.gen_range(0..used);
        let mut b = rng.gen_range(0..used - 1);
        if b >= a {
            b += 1;
        }
        let mut prev = a;
        for v in used..used + inner {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, b));
        used += inner;
    }
    for _ in 0..rng.gen_range(0..=m) {
        let (a, b) = (rng.gen_range(0..m), rng.gen_range(0..m));
        if a != b {
            edges.push((a, b));
        }
    }
    shuffle(rng, &Graph::from_edges(m, edges).expect("ids are in range"))
}

fn shuffle<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

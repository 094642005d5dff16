//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `n` vertices is produced from a graph on `n - 1` vertices by
//! adding a vertex `v` adjacent to a subset `S` of the old vertices. The
//! child is kept only when `v` is the canonically chosen deletion vertex: a
//! vertex of least `(degree, neighbour degree sum)` among the deletable
//! vertices, ties broken by the canonical labelling. Deletable means any
//! vertex in the all-graphs mode and a non-cut vertex in the connected mode,
//! so every connected child has a connected parent. Each isomorphism class
//! then arises from exactly one parent class; duplicates from the same
//! parent are removed by certificate.

use crate::graph::{reach, Bits, Graph};
use crate::structure::cut_vertex_mask;

use super::canon::{canonize, CanonError, CanonicalCertificate, MAX_CANON_ORDER};

/// A canonical graph with its certificate.
#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub graph: Graph,
    pub cert: CanonicalCertificate,
}

impl Node {
    pub fn root() -> Node {
        let graph = Graph::from_rows_unchecked(vec![0]);
        let cert = CanonicalCertificate::from_rows(graph.rows());
        Node { graph, cert }
    }
}

/// All isomorphism classes of order `n` (connected ones when `connected`),
/// each in canonical form, sorted by certificate.
pub(crate) fn level(n: usize, connected: bool, budget: u64) -> Result<Vec<Node>, CanonError> {
    let mut nodes = vec![Node::root()];
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &nodes {
            next.extend(children(p, connected, budget)?);
        }
        nodes = next;
    }
    Ok(nodes)
}

/// Children of `parent` with one more vertex, sorted by certificate.
pub(crate) fn children(parent: &Node, connected: bool, budget: u64) -> Result<Vec<Node>, CanonError> {
    let prow = parent.graph.rows();
    let m = prow.len();
    let n = m + 1;
    if n > MAX_CANON_ORDER {
        return Err(CanonError::TooLarge(n));
    }
    let v = m;
    let pdeg: Vec<u32> = prow.iter().map(|r| r.count_ones()).collect();
    let all = (1u64 << m) - 1;

    // For a cut vertex u of the parent, the components of parent - u. Adding
    // v keeps u a cut vertex unless S \ {u} meets all of them.
    let cut = if connected { cut_vertex_mask(prow) } else { 0 };
    let mut pieces: Vec<Vec<u64>> = vec![Vec::new(); m];
    for u in Bits(cut) {
        let mut left = all & !(1 << u);
        while left != 0 {
            let c = reach(prow, left & left.wrapping_neg(), all & !(1 << u));
            pieces[u].push(c);
            left &= !c;
        }
    }

    let mut out: Vec<Node> = Vec::new();
    let mut rows = [0u64; MAX_CANON_ORDER];
    let mut deg = [0u32; MAX_CANON_ORDER];
    let first = if connected { 1u64 } else { 0 };
    'subsets: for s in first..=all {
        let dv = s.count_ones();
        let mut eligible = 1u64 << v;
        for u in 0..m {
            let ok = if !connected {
                true
            } else if cut >> u & 1 == 1 {
                let rest = s & !(1 << u);
                pieces[u].iter().all(|&c| c & rest != 0)
            } else {
                s != 1 << u
            };
            if ok {
                let d = pdeg[u] + (s >> u & 1) as u32;
                if d < dv {
                    continue 'subsets;
                }
                eligible |= 1 << u;
            }
        }

        for u in 0..m {
            rows[u] = prow[u] | ((s >> u & 1) << v);
            deg[u] = rows[u].count_ones();
        }
        rows[v] = s;
        deg[v] = dv;
        let key = |x: usize| -> u64 {
            let sum: u32 = Bits(rows[x]).map(|y| deg[y]).sum();
            (deg[x] as u64) << 16 | sum as u64
        };
        let kv = key(v);
        let mut ties = 1u64 << v;
        for u in Bits(eligible & !(1 << v)) {
            if deg[u] != dv {
                continue;
            }
            let ku = key(u);
            if ku < kv {
                continue 'subsets;
            }
            if ku == kv {
                ties |= 1 << u;
            }
        }

        let leaf = canonize(&rows[..n], budget)?;
        let accept = if ties == 1 << v {
            true
        } else {
            let pos = leaf.positions();
            let c = Bits(ties).min_by_key(|&t| pos[t]).expect("ties contain v");
            c == v || {
                let mut sub = [0u64; MAX_CANON_ORDER];
                let low = (1u64 << c) - 1;
                let mut j = 0;
                for (i, &r) in rows[..n].iter().enumerate() {
                    if i != c {
                        sub[j] = (r & low) | ((r >> 1) & !low);
                        j += 1;
                    }
                }
                canonize(&sub[..m], budget)?.certificate() == parent.cert
            }
        };
        if accept {
            out.push(Node { graph: Graph::from_rows_unchecked(leaf.rows().to_vec()), cert: leaf.certificate() });
        }
    }
    out.sort_unstable_by(|a, b| a.cert.cmp(&b.cert));
    out.dedup_by(|a, b| a.cert == b.cert);
    Ok(out)
}

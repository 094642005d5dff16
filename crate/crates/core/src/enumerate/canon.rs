//! Canonical labelling by partition refinement and backtracking.
//!
//! The vertex set starts out partitioned by degree and distance profile and
//! is refined until every vertex in a cell sees the same number of neighbours
//! in every cell. When cells remain that are not singletons, the search
//! individualises each vertex of the first such cell in turn and refines
//! again. Every discrete partition reached is a candidate labelling; the
//! canonical form is the lexicographically smallest relabelled adjacency.
//!
//! Two prunings keep the tree small without changing the minimum:
//! interchangeable twins (same neighbourhood up to each other) are only tried
//! once per node, and at the root vertices already known to share an orbit
//! under the automorphisms found so far are skipped.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{graph6, Bits, Graph};

/// Largest order accepted by the canonical labeller.
pub const MAX_CANON_ORDER: usize = 32;

/// Search-tree node budget per graph.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("order {0} exceeds the canonical labelling limit of 32")]
    TooLarge(usize),
    #[error("canonical search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

/// Isomorphism invariant of a graph: the graph6 line of its canonical form.
///
/// Two graphs of order at most 32 have equal certificates exactly when they
/// are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCertificate(SmallVec<[u8; 16]>);

impl CanonicalCertificate {
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        CanonicalCertificate(SmallVec::from_vec(graph6::encode_rows(rows)))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("certificate is valid graph6")
    }
}

impl fmt::Display for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.as_str())
    }
}

/// A canonical labelling: `order[i]` is the vertex placed at position `i`,
/// `rows[i]` is the neighbourhood of that position in position space.
#[derive(Clone)]
pub(crate) struct Leaf {
    pub n: usize,
    pub order: [u8; MAX_CANON_ORDER],
    pub rows: [u64; MAX_CANON_ORDER],
}

impl Leaf {
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    /// Position of each vertex.
    pub fn positions(&self) -> [u8; MAX_CANON_ORDER] {
        let mut pos = [0u8; MAX_CANON_ORDER];
        for (i, &v) in self.order[..self.n].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        pos
    }

    pub fn certificate(&self) -> CanonicalCertificate {
        CanonicalCertificate::from_rows(self.rows())
    }
}

#[derive(Clone, Copy)]
struct Cells {
    m: [u64; MAX_CANON_ORDER],
    len: usize,
}

impl Cells {
    fn new() -> Self {
        Cells { m: [0; MAX_CANON_ORDER], len: 0 }
    }

    #[inline]
    fn push(&mut self, c: u64) {
        self.m[self.len] = c;
        self.len += 1;
    }

    fn cells(&self) -> &[u64] {
        &self.m[..self.len]
    }
}

const MIX: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(MIX).rotate_left(29)
}

/// Sorts `items` by key (insertion sort; cells are small) and appends the
/// groups of equal keys to `out`. Returns whether the cell was split.
#[inline]
fn split_by_key(items: &mut [(u64, u8)], out: &mut Cells) -> bool {
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && items[j - 1].0 > items[j].0 {
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    let mut mask = 0u64;
    let mut split = false;
    for i in 0..items.len() {
        if i > 0 && items[i].0 != items[i - 1].0 {
            out.push(mask);
            mask = 0;
            split = true;
        }
        mask |= 1 << items[i].1;
    }
    out.push(mask);
    split
}

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    twins: [u64; MAX_CANON_ORDER],
    orbit: [u8; MAX_CANON_ORDER],
    best: Option<Leaf>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] as usize != v {
            let p = self.orbit[v] as usize;
            self.orbit[v] = self.orbit[p];
            v = p;
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.orbit[hi] = lo as u8;
        }
    }

    fn initial(&self) -> Cells {
        let n = self.n;
        let mut items = [(0u64, 0u8); MAX_CANON_ORDER];
        for (v, item) in items.iter_mut().enumerate().take(n) {
            // degree followed by the number of vertices at each distance
            let mut h = mix(0, self.adj[v].count_ones() as u64);
            let mut seen = 1u64 << v;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                for u in Bits(frontier) {
                    next |= self.adj[u];
                }
                frontier = next & !seen;
                seen |= frontier;
                h = mix(h, frontier.count_ones() as u64);
            }
            h = mix(h, seen.count_ones() as u64);
            *item = (h, v as u8);
        }
        let mut cells = Cells::new();
        split_by_key(&mut items[..n], &mut cells);
        cells
    }

    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut out = Cells::new();
            let mut split = false;
            for &c in cells.cells() {
                if c & (c - 1) == 0 {
                    out.push(c);
                    continue;
                }
                let mut items = [(0u64, 0u8); MAX_CANON_ORDER];
                let mut len = 0;
                for v in Bits(c) {
                    let row = self.adj[v];
                    let mut h = 0u64;
                    for &d in cells.cells() {
                        h = mix(h, (row & d).count_ones() as u64);
                    }
                    items[len] = (h, v as u8);
                    len += 1;
                }
                split |= split_by_key(&mut items[..len], &mut out);
            }
            *cells = out;
            if !split {
                return;
            }
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.n;
        let mut order = [0u8; MAX_CANON_ORDER];
        let mut pos = [0u8; MAX_CANON_ORDER];
        for (i, &c) in cells.cells().iter().enumerate() {
            let v = c.trailing_zeros() as u8;
            order[i] = v;
            pos[v as usize] = i as u8;
        }
        let mut rows = [0u64; MAX_CANON_ORDER];
        for i in 0..n {
            rows[i] = Bits(self.adj[order[i] as usize]).fold(0, |acc, u| acc | 1 << pos[u]);
        }
        match &self.best {
            None => self.best = Some(Leaf { n, order, rows }),
            Some(best) => match rows[..n].cmp(&best.rows[..n]) {
                std::cmp::Ordering::Less => self.best = Some(Leaf { n, order, rows }),
                std::cmp::Ordering::Equal => {
                    // best.order[i] -> order[i] is an automorphism
                    let prev = best.order;
                    for i in 0..n {
                        self.union(prev[i] as usize, order[i] as usize);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn search(&mut self, cells: &Cells, depth: usize) -> Result<(), CanonError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CanonError::BudgetExceeded(self.budget));
        }
        let Some(t) = cells.cells().iter().position(|&c| c & (c - 1) != 0) else {
            self.leaf(cells);
            return Ok(());
        };
        let cell = cells.m[t];
        let mut tried = 0u64;
        let mut tried_roots = 0u64;
        for v in Bits(cell) {
            if self.twins[v] & tried != 0 {
                continue;
            }
            if depth == 0 {
                let r = self.find(v);
                if tried_roots >> r & 1 == 1 {
                    continue;
                }
            }
            tried |= 1 << v;
            let mut child = Cells::new();
            for (i, &c) in cells.cells().iter().enumerate() {
                if i == t {
                    child.push(1 << v);
                    child.push(c & !(1 << v));
                } else {
                    child.push(c);
                }
            }
            self.refine(&mut child);
            self.search(&child, depth + 1)?;
            if depth == 0 {
                // orbits may have merged while exploring
                tried_roots = Bits(tried).fold(0, |acc, u| acc | 1 << self.find(u));
            }
        }
        Ok(())
    }
}

/// Canonical labelling of the graph given by `rows`.
pub(crate) fn canonize(rows: &[u64], budget: u64) -> Result<Leaf, CanonError> {
    let n = rows.len();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::TooLarge(n));
    }
    let mut twins = [0u64; MAX_CANON_ORDER];
    for u in 0..n {
        for v in u + 1..n {
            let (bu, bv) = (1u64 << u, 1u64 << v);
            if rows[u] & !bv == rows[v] & !bu {
                twins[u] |= bv;
                twins[v] |= bu;
            }
        }
    }
    let mut orbit = [0u8; MAX_CANON_ORDER];
    for (i, o) in orbit.iter_mut().enumerate() {
        *o = i as u8;
    }
    let mut s = Search { n, adj: rows, twins, orbit, best: None, nodes: 0, budget };
    let mut cells = s.initial();
    s.refine(&mut cells);
    s.search(&cells, 0)?;
    Ok(s.best.expect("search reaches at least one leaf"))
}

/// Certificate of `g`: equal for isomorphic graphs, different otherwise.
pub fn canonical_certificate(g: &Graph) -> Result<CanonicalCertificate, CanonError> {
    Ok(canonize(g.rows(), DEFAULT_NODE_BUDGET)?.certificate())
}

/// The canonical form of `g` together with the labelling that produces it:
/// `labels[v]` is the position of vertex `v` in the canonical graph.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>), CanonError> {
    let leaf = canonize(g.rows(), DEFAULT_NODE_BUDGET)?;
    let pos = leaf.positions();
    let labels = pos[..g.order()].iter().map(|&p| p as usize).collect();
    Ok((Graph::from_rows_unchecked(leaf.rows().to_vec()), labels))
}

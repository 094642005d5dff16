//! Small simple undirected graphs stored as one adjacency bit row per vertex.
//!
//! Every other module speaks in terms of [`Graph`]. Vertices are `0..n` with
//! `1 <= n <= 64`, so a row fits in a single `u64` and most queries reduce to
//! word operations.

pub mod graph6;

use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// Marks an unreachable pair in a [`DistanceMatrix`].
pub const UNREACHABLE: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} outside 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A set of vertex ids backed by one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Row `v` holds the neighbourhood of `v` as a bit mask. Rows are symmetric
/// and loop-free; connectivity is not assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = Graph::empty(n)?.rows;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from raw rows, checking symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let full = VertexSet::full(n).0;
        for (v, &r) in rows.iter().enumerate() {
            if r & !full != 0 {
                let w = (r & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
            if r >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in Bits(r) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::NotAnEdge(u, v));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Trusted constructor for rows produced by this crate.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &r)| Bits(r & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).map(move |v| (u, v)))
    }

    /// Copy of the graph without the edge `uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Graph { rows })
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph { rows })
    }

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    /// Returns the graph and, for each new vertex, its old id.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let old: Vec<usize> = keep.intersection(self.vertices()).iter().collect();
        if old.is_empty() {
            return Err(GraphError::OrderOutOfRange(0));
        }
        let rows = old
            .iter()
            .map(|&u| {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[u] >> w & 1 == 1)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok((Graph { rows }, old))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut rows = vec![0u64; self.order()];
        for (u, &r) in self.rows.iter().enumerate() {
            rows[perm[u]] = Bits(r).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        Graph { rows }
    }

    /// Identifies vertex `at` of `self` with vertex `other_at` of `other`.
    /// Vertices of `self` keep their ids; the remaining vertices of `other`
    /// follow in increasing order.
    pub fn glue(&self, at: usize, other: &Graph, other_at: usize) -> Result<Graph, GraphError> {
        let n1 = self.order();
        let n = n1 + other.order() - 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        for (v, ord) in [(at, n1), (other_at, other.order())] {
            if v >= ord {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: ord });
            }
        }
        let map: Vec<usize> = (0..other.order())
            .map(|v| match v.cmp(&other_at) {
                std::cmp::Ordering::Less => n1 + v,
                std::cmp::Ordering::Equal => at,
                std::cmp::Ordering::Greater => n1 + v - 1,
            })
            .collect();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (map[u], map[v]))).collect::<Vec<_>>();
        Graph::from_edges(n, edges)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        VertexSet(reach(&self.rows, 1 << start, u64::MAX))
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.order()
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.rows[u] & self.rows[v] != 0)
    }

    /// Breadth-first distances from every vertex.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut d = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0u16;
            while frontier != 0 {
                for v in Bits(frontier) {
                    row[v] = level;
                }
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !seen;
                seen |= frontier;
                level += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    /// `D(v)`: sum of distances from `v` to every vertex.
    pub fn vertex_distance(&self, v: usize) -> Result<u64, GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() });
        }
        transmission(&self.rows, v).ok_or(GraphError::Disconnected)
    }

    /// `D(v)` for every vertex.
    pub fn vertex_distances(&self) -> Result<Vec<u64>, GraphError> {
        (0..self.order()).map(|v| transmission(&self.rows, v).ok_or(GraphError::Disconnected)).collect()
    }

    /// Sum of distances over unordered pairs.
    pub fn wiener_index(&self) -> Result<u64, GraphError> {
        let total: u64 = self.vertex_distances()?.iter().sum();
        debug_assert_eq!(total % 2, 0);
        Ok(total / 2)
    }

    /// Vertices whose distance `D(v)` is maximum.
    pub fn peripherian_vertices(&self) -> Result<VertexSet, GraphError> {
        let ds = self.vertex_distances()?;
        let max = *ds.iter().max().expect("order >= 1");
        Ok(ds.iter().enumerate().filter(|&(_, &d)| d == max).map(|(v, _)| v).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Closure of `start` under adjacency, restricted to `allowed`.
#[inline]
pub(crate) fn reach(rows: &[u64], start: u64, allowed: u64) -> u64 {
    let mut seen = start & allowed;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        frontier = next & allowed & !seen;
        seen |= frontier;
    }
    seen
}

/// Sum of BFS levels from `s`, or `None` if some vertex is unreachable.
#[inline]
pub(crate) fn transmission(rows: &[u64], s: usize) -> Option<u64> {
    let n = rows.len();
    let mut seen = 1u64 << s;
    let mut frontier = seen;
    let mut level = 0u64;
    let mut total = 0u64;
    let mut count = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= frontier;
        level += 1;
        total += level * frontier.count_ones() as u64;
        count += frontier.count_ones();
    }
    (count as usize == n).then_some(total)
}

/// Hop distances between all pairs, `UNREACHABLE` across components.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Minimum distance between a vertex of `a` and a vertex of `b`.
    pub fn set_distance(&self, a: VertexSet, b: VertexSet) -> Option<u16> {
        a.iter().flat_map(|u| b.iter().map(move |v| self.get(u, v))).min()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            let cells: Vec<String> =
                self.row(u).iter().map(|&x| if x == UNREACHABLE { "-".into() } else { x.to_string() }).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn path_distances() {
        let d = path(3).all_pairs_distances();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(2, 2), 0);
    }

    #[test]
    fn c4_has_one_antipode_per_vertex() {
        let d = cycle(4).all_pairs_distances();
        for u in 0..4 {
            let row = d.row(u);
            assert!(row.iter().enumerate().all(|(v, &x)| v == u || x == 1 || x == 2));
            assert_eq!(row.iter().filter(|&&x| x == 2).count(), 1);
        }
    }

    #[test]
    fn isolated_pair_is_unreachable() {
        let g = Graph::empty(2).unwrap();
        assert_eq!(g.all_pairs_distances().get(0, 1), UNREACHABLE);
        assert_eq!(g.vertex_distance(0), Err(GraphError::Disconnected));
        assert_eq!(g.wiener_index(), Err(GraphError::Disconnected));
        assert!(g.peripherian_vertices().is_err());
    }

    #[test]
    fn vertex_distance_examples() {
        assert_eq!(path(5).vertex_distance(0).unwrap(), 10);
        for v in 0..6 {
            assert_eq!(cycle(6).vertex_distance(v).unwrap(), 9);
        }
        assert_eq!(path(2).vertex_distance(1).unwrap(), 1);
    }

    #[test]
    fn wiener_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.wiener_index().unwrap(), 9);
        assert_eq!(cycle(8).wiener_index().unwrap(), 64);
        assert_eq!(path(4).wiener_index().unwrap(), 10);
        assert_eq!(Graph::empty(1).unwrap().wiener_index().unwrap(), 0);
    }

    #[test]
    fn peripherians() {
        assert_eq!(path(5).peripherian_vertices().unwrap(), [0, 4].into_iter().collect());
        assert_eq!(cycle(7).peripherian_vertices().unwrap(), VertexSet::full(7));
    }

    #[test]
    fn connectivity() {
        assert!(path(2).is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(cycle(5).delete_edge(0, 1).unwrap().is_connected());
        assert_eq!(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().components().len(), 2);
    }

    #[test]
    fn triangles() {
        assert!(cycle(3).has_triangle());
        assert!(!cycle(4).has_triangle());
        // triangle 0-1-2 with a pendant path 0-3-4-5-6
        let l73 = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert!(l73.has_triangle());
    }

    #[test]
    fn delete_edge_cases() {
        let c4 = cycle(4);
        let p = c4.delete_edge(3, 0).unwrap();
        assert_eq!(p, path(4));
        assert_eq!(c4.edge_count(), 4);
        let k2 = path(2).delete_edge(0, 1).unwrap();
        assert_eq!(k2.edge_count(), 0);
        assert!(!k2.is_connected());
        assert_eq!(c4.delete_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
        let c5 = cycle(5);
        assert_eq!(c5.wiener_index().unwrap(), 15);
        assert_eq!(c5.delete_edge(0, 1).unwrap().wiener_index().unwrap(), 20);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::empty(0), Err(GraphError::OrderOutOfRange(0)));
        assert_eq!(Graph::empty(65), Err(GraphError::OrderOutOfRange(65)));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, [(1, 3)]), Err(GraphError::VertexOutOfRange { .. })));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn order_64_is_supported() {
        let g = path(64);
        assert_eq!(g.vertex_distance(0).unwrap(), 64 * 63 / 2);
        assert_eq!(g.wiener_index().unwrap(), 65 * 64 * 63 / 6);
        assert_eq!(g.edges().count(), 63);
        assert_eq!(g.edges().last(), Some((62, 63)));
    }

    #[test]
    fn induced_and_glue() {
        let c4 = cycle(4);
        let (p3, old) = c4.induced([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(old, vec![0, 1, 2]);
        let g = cycle(3).glue(0, &path(3), 0).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 3) && g.has_edge(3, 4));
    }
}

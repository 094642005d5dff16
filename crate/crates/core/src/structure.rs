//! Block-cut decomposition and the pendant / s-pendant block taxonomy.
//!
//! A block is a maximal 2-connected subgraph or a bridge. A pendant block
//! contains exactly one cut vertex. When the graph has at least two cut
//! vertices, a pendant block whose cut vertex lies in exactly one
//! non-pendant block is s-pendant; an s-pendant block on two vertices is an
//! s-pendant edge and its degree-one end is an s-pendant vertex.

use thiserror::Error;

use crate::graph::{reach, Bits, DistanceMatrix, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("block index {index} out of range ({count} blocks)")]
    BlockOutOfRange { index: usize, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    NonPendant,
    Pendant,
    /// Pendant, and its cut vertex lies in exactly one non-pendant block.
    SPendant,
}

impl BlockKind {
    pub fn is_pendant(self) -> bool {
        !matches!(self, BlockKind::NonPendant)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    /// Cut vertices of the whole graph that lie in this block.
    pub cut_vertices: VertexSet,
    pub kind: BlockKind,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_bridge(&self) -> bool {
        self.order() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutDecomposition {
    order: usize,
    cut_vertices: VertexSet,
    blocks: Vec<Block>,
    s_pendant_vertices: VertexSet,
    s_pendant_edges: Vec<(usize, usize)>,
}

impl BlockCutDecomposition {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_vertices
    }

    pub fn cut_vertex_count(&self) -> usize {
        self.cut_vertices.len()
    }

    /// Blocks sorted by smallest vertex id.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> Result<&Block, StructureError> {
        self.blocks.get(index).ok_or(StructureError::BlockOutOfRange { index, count: self.blocks.len() })
    }

    pub fn s_pendant_vertices(&self) -> VertexSet {
        self.s_pendant_vertices
    }

    pub fn s_pendant_edges(&self) -> &[(usize, usize)] {
        &self.s_pendant_edges
    }

    pub fn pendant_blocks(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().enumerate().filter(|(_, b)| b.kind.is_pendant())
    }

    pub fn s_pendant_blocks(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().enumerate().filter(|(_, b)| b.kind == BlockKind::SPendant)
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().filter(move |(_, b)| b.vertices.contains(v)).map(|(i, _)| i)
    }

    /// Minimum distance between a vertex of block `a` and a vertex of block `b`.
    pub fn block_distance(&self, dist: &DistanceMatrix, a: usize, b: usize) -> Result<u16, StructureError> {
        let (a, b) = (self.block(a)?, self.block(b)?);
        Ok(dist.set_distance(a.vertices, b.vertices).expect("blocks are non-empty"))
    }
}

/// Computes blocks and cut vertices with one depth-first search using
/// low-point values.
pub fn decompose(g: &Graph) -> Result<BlockCutDecomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let n = g.order();
    let mut dfs = Dfs {
        rows: g.rows(),
        disc: vec![u32::MAX; n],
        low: vec![0; n],
        time: 0,
        edges: Vec::new(),
        cut: VertexSet::EMPTY,
        blocks: Vec::new(),
    };
    if n > 1 {
        dfs.visit(0, usize::MAX);
    }
    let cut = dfs.cut;
    let mut blocks: Vec<Block> = dfs
        .blocks
        .into_iter()
        .map(|vertices| Block { vertices, cut_vertices: vertices.intersection(cut), kind: BlockKind::NonPendant })
        .collect();
    blocks.sort_by_key(|b| b.vertices.first());

    for b in blocks.iter_mut() {
        if b.cut_vertices.len() == 1 {
            b.kind = BlockKind::Pendant;
        }
    }
    let mut s_pendant_vertices = VertexSet::EMPTY;
    let mut s_pendant_edges = Vec::new();
    if cut.len() >= 2 {
        let kinds: Vec<(VertexSet, BlockKind)> = blocks.iter().map(|b| (b.vertices, b.kind)).collect();
        for b in blocks.iter_mut().filter(|b| b.kind == BlockKind::Pendant) {
            let w = b.cut_vertices.first().expect("pendant block has a cut vertex");
            let non_pendant =
                kinds.iter().filter(|(vs, kind)| vs.contains(w) && *kind == BlockKind::NonPendant).count();
            if non_pendant == 1 {
                b.kind = BlockKind::SPendant;
                if b.is_bridge() {
                    let leaf = b.vertices.difference(b.cut_vertices).first().expect("bridge has two ends");
                    s_pendant_vertices.insert(leaf);
                    s_pendant_edges.push((w.min(leaf), w.max(leaf)));
                }
            }
        }
    }
    s_pendant_edges.sort_unstable();
    Ok(BlockCutDecomposition { order: n, cut_vertices: cut, blocks, s_pendant_vertices, s_pendant_edges })
}

struct Dfs<'a> {
    rows: &'a [u64],
    disc: Vec<u32>,
    low: Vec<u32>,
    time: u32,
    edges: Vec<(usize, usize)>,
    cut: VertexSet,
    blocks: Vec<VertexSet>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in Bits(self.rows[u]) {
            if self.disc[v] == u32::MAX {
                children += 1;
                self.edges.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.cut.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edges.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.edges.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Cut vertices of a connected graph given as adjacency rows.
pub(crate) fn cut_vertex_mask(rows: &[u64]) -> u64 {
    let n = rows.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cut = 0;
    for u in 0..n {
        if rows[u] == 0 || rows[u].count_ones() == 1 {
            continue;
        }
        let rest = all & !(1 << u);
        let start = rows[u] & rest;
        let seen = reach(rows, start & start.wrapping_neg(), rest);
        if seen != rest {
            cut |= 1 << u;
        }
    }
    cut
}

/// Number of cut vertices of a connected graph.
pub fn count_cut_vertices(g: &Graph) -> Result<usize, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    Ok(cut_vertex_mask(g.rows()).count_ones() as usize)
}

/// `d(B, B')` for two blocks of `g`, indexed as in [`decompose`].
pub fn block_distance(g: &Graph, a: usize, b: usize) -> Result<u16, StructureError> {
    let dec = decompose(g)?;
    dec.block_distance(&g.all_pairs_distances(), a, b)
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && cut_vertex_mask(g.rows()) == 0
}

/// 2-connected, and deleting any single edge leaves a graph that is not.
pub fn is_minimally_two_connected(g: &Graph) -> bool {
    is_two_connected(g) && g.edges().all(|(u, v)| !is_two_connected(&g.delete_edge(u, v).expect("edge exists")))
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

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    /// Cycle `0..g` with the path `0, g, g+1, ..., n-1` hanging off vertex 0.
    fn lollipop(n: usize, g: usize) -> Graph {
        let mut e: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
        let mut prev = 0;
        for v in g..n {
            e.push((prev, v));
            prev = v;
        }
        Graph::from_edges(n, e).unwrap()
    }

    /// The three-cut-vertex example with two 4-cycles, a 6-cycle, two
    /// pendant edges and a pendant path of length two.
    fn figure() -> (Graph, [usize; 3]) {
        // B1 = C4 {0,1,2,3} with cut vertex 2
        // B2 = C6 {2,4,5,6,7,8} with cut vertices 2 and 6
        // B3 = C4 {6,9,10,11}
        // e1 = 6-12, e2 = 6-13, e4 = 6-14, e3 = 14-15
        let e = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (2, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 2),
            (6, 9),
            (9, 10),
            (10, 11),
            (11, 6),
            (6, 12),
            (6, 13),
            (6, 14),
            (14, 15),
        ];
        (Graph::from_edges(16, e).unwrap(), [2, 6, 14])
    }

    #[test]
    fn path_blocks() {
        let d = decompose(&path(5)).unwrap();
        assert_eq!(d.cut_vertices(), [1, 2, 3].into_iter().collect());
        assert_eq!(d.blocks().len(), 4);
        assert!(d.blocks().iter().all(Block::is_bridge));
        let pendant: Vec<_> = d.pendant_blocks().map(|(i, _)| i).collect();
        assert_eq!(pendant, vec![0, 3]);
    }

    #[test]
    fn lollipop_cut_count() {
        let d = decompose(&lollipop(8, 6)).unwrap();
        assert_eq!(d.cut_vertex_count(), 2);
        assert_eq!(d.blocks().len(), 3);
    }

    #[test]
    fn figure_taxonomy() {
        let (g, cuts) = figure();
        let d = decompose(&g).unwrap();
        assert_eq!(d.cut_vertices(), cuts.into_iter().collect());
        let find = |vs: &[usize]| {
            let set: VertexSet = vs.iter().copied().collect();
            d.blocks().iter().find(|b| b.vertices == set).unwrap().kind
        };
        assert_eq!(find(&[0, 1, 2, 3]), BlockKind::SPendant);
        assert_eq!(find(&[2, 4, 5, 6, 7, 8]), BlockKind::NonPendant);
        assert_eq!(find(&[6, 9, 10, 11]), BlockKind::Pendant);
        assert_eq!(find(&[6, 14]), BlockKind::NonPendant);
        assert_eq!(find(&[14, 15]), BlockKind::SPendant);
        assert_eq!(find(&[6, 12]), BlockKind::Pendant);
        assert_eq!(find(&[6, 13]), BlockKind::Pendant);
        assert_eq!(d.s_pendant_vertices(), VertexSet::singleton(15));
        assert_eq!(d.s_pendant_edges(), &[(14, 15)]);
    }

    #[test]
    fn cut_vertex_counts() {
        assert_eq!(count_cut_vertices(&cycle(9)).unwrap(), 0);
        assert_eq!(count_cut_vertices(&star(6)).unwrap(), 1);
        // C4 and C4 joined by the edge 0-4
        let mut e: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        e.extend((0..4).map(|i| (4 + i, 4 + (i + 1) % 4)));
        e.push((0, 4));
        let dumbbell = Graph::from_edges(8, e).unwrap();
        assert_eq!(count_cut_vertices(&dumbbell).unwrap(), 2);
        assert_eq!(count_cut_vertices(&Graph::empty(2).unwrap()), Err(StructureError::Disconnected));
    }

    #[test]
    fn single_vertex_and_single_block() {
        let d = decompose(&Graph::empty(1).unwrap()).unwrap();
        assert!(d.blocks().is_empty());
        assert_eq!(d.cut_vertex_count(), 0);
        let d = decompose(&path(2)).unwrap();
        assert_eq!(d.blocks().len(), 1);
        assert_eq!(d.blocks()[0].kind, BlockKind::NonPendant);
        let d = decompose(&cycle(5)).unwrap();
        assert_eq!(d.blocks()[0].kind, BlockKind::NonPendant);
    }

    #[test]
    fn block_distances() {
        let d = decompose(&path(6)).unwrap();
        let dist = path(6).all_pairs_distances();
        assert_eq!(d.block_distance(&dist, 0, 4).unwrap(), 3);
        assert_eq!(d.block_distance(&dist, 0, 1).unwrap(), 0);
        assert_eq!(block_distance(&path(6), 0, 4).unwrap(), 3);
        assert!(matches!(block_distance(&path(6), 0, 5), Err(StructureError::BlockOutOfRange { .. })));

        // L(8,6): cycle block {0..5}, bridges 0-6 and 6-7
        let l = lollipop(8, 6);
        let d = decompose(&l).unwrap();
        let cyc = d.blocks().iter().position(|b| b.order() == 6).unwrap();
        let far = d.blocks().iter().position(|b| b.vertices == [6, 7].into_iter().collect()).unwrap();
        assert_eq!(d.block_distance(&l.all_pairs_distances(), cyc, far).unwrap(), 1);
    }

    #[test]
    fn minimal_two_connectivity() {
        for n in 4..=10 {
            assert!(is_minimally_two_connected(&cycle(n)));
        }
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_minimally_two_connected(&k4));
        assert!(!is_minimally_two_connected(&path(4)));
        assert!(!is_minimally_two_connected(&path(2)));
    }

    #[test]
    fn fast_mask_agrees_with_dfs() {
        let (g, _) = figure();
        assert_eq!(VertexSet(cut_vertex_mask(g.rows())), decompose(&g).unwrap().cut_vertices());
        assert_eq!(cut_vertex_mask(path(2).rows()), 0);
    }
}

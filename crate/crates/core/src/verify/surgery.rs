//! Replacing a pendant block by a cycle on the same vertices.

use crate::graph::{Bits, Graph};
use crate::structure::decompose;

use super::VerifyError;

/// Replaces pendant block `block` (indexed as in
/// [`decompose`](crate::structure::decompose)) by the cycle through its
/// vertices in increasing id order. The block's cut vertex stays on the
/// cycle, so the order and the number of cut vertices are unchanged. A block
/// that already is a cycle is returned as is.
pub fn surgery_pendant_block_to_cycle(g: &Graph, block: usize) -> Result<Graph, VerifyError> {
    let dec = decompose(g)?;
    let b = dec.block(block)?;
    if !b.kind.is_pendant() {
        return Err(VerifyError::NotPendant(block));
    }
    let m = b.order();
    if m < 4 {
        return Err(VerifyError::BlockTooSmall(m));
    }
    let mask = b.vertices.bits();
    let rows = g.rows();
    let inside: Vec<usize> = Bits(mask).collect();
    if inside.iter().all(|&v| (rows[v] & mask).count_ones() == 2) {
        // a 2-connected graph with all degrees 2 is a cycle
        return Ok(g.clone());
    }
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0).collect();
    edges.extend((0..m).map(|i| (inside[i], inside[(i + 1) % m])));
    Ok(Graph::from_edges(g.order(), edges).expect("vertices are unchanged"))
}

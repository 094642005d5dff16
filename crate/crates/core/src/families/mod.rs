//! Named graph families: paths, cycles, stars, lollipops and dumbbells.
//!
//! Vertex numbering in [`build`] is fixed so that witnesses printed in reports
//! are reproducible:
//!
//! * `Path(n)`: `0 - 1 - ... - n-1`.
//! * `Cycle(n)`: `0 - 1 - ... - n-1 - 0`.
//! * `Star(n)`: centre `0`, leaves `1..n`.
//! * `Lollipop(n, g)`: cycle on `0..g`, then the path `0 - g - g+1 - ... - n-1`;
//!   the pendant vertex is `n-1`.
//! * `Dumbbell(m1, m2, n)`: first cycle on `0..m1`. With `k = n + 2 - m1 - m2`
//!   cut vertices, for `k = 1` the second cycle is `0, m1, ..., m1+m2-2`; for
//!   `k >= 2` it is `m1..m1+m2` and the path `0, m1+m2, ..., n-1, m1` joins
//!   the two cycles.

pub mod formulas;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Constraint(&'static str),
    #[error("order {0} exceeds the 64-vertex graph limit")]
    TooLarge(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path {
        n: u64,
    },
    Cycle {
        n: u64,
    },
    /// `K_{1,n-1}`.
    Star {
        n: u64,
    },
    /// Cycle of length `g` with a path attached; `n` vertices in total.
    Lollipop {
        n: u64,
        g: u64,
    },
    /// Cycles of lengths `m1` and `m2` joined by a possibly trivial path.
    Dumbbell {
        m1: u64,
        m2: u64,
        n: u64,
    },
}

impl FamilySpec {
    pub fn order(&self) -> u64 {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::Lollipop { n, .. }
            | FamilySpec::Dumbbell { n, .. } => n,
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<(), FamilyError> {
        use FamilyError::Constraint;
        match *self {
            FamilySpec::Path { n } if n < 1 => Err(Constraint("path requires n >= 1")),
            FamilySpec::Cycle { n } if n < 3 => Err(Constraint("cycle requires n >= 3")),
            FamilySpec::Star { n } if n < 2 => Err(Constraint("star requires n >= 2")),
            FamilySpec::Lollipop { n, g } if g < 3 || g > n => Err(Constraint("lollipop requires 3 <= g <= n")),
            FamilySpec::Dumbbell { m1, m2, .. } if m1 < 3 || m2 < 3 => {
                Err(Constraint("dumbbell requires m1 >= 3 and m2 >= 3"))
            }
            FamilySpec::Dumbbell { m1, m2, n } if n + 1 < m1 + m2 => {
                Err(Constraint("dumbbell requires n >= m1 + m2 - 1"))
            }
            _ => Ok(()),
        }
    }

    /// Number of cut vertices of the built graph.
    pub fn cut_vertices(&self) -> u64 {
        match *self {
            FamilySpec::Path { n } => n.saturating_sub(2),
            FamilySpec::Cycle { .. } => 0,
            FamilySpec::Star { n } => u64::from(n >= 3),
            FamilySpec::Lollipop { n, g } => n - g,
            FamilySpec::Dumbbell { m1, m2, n } => n + 2 - m1 - m2,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Star { n } => write!(f, "K_{{1,{}}}", n - 1),
            FamilySpec::Lollipop { n, g } => write!(f, "L_{{{n},{g}}}"),
            FamilySpec::Dumbbell { m1, m2, n } => write!(f, "C^{n}_{{{m1},{m2}}}"),
        }
    }
}

fn cycle_edges(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..vs.len()).map(move |i| (vs[i], vs[(i + 1) % vs.len()]))
}

fn path_edges(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vs.windows(2).map(|w| (w[0], w[1]))
}

/// Builds the concrete graph for `spec` with the numbering described in the
/// module docs.
pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    if n > MAX_ORDER as u64 {
        return Err(FamilyError::TooLarge(n));
    }
    let n = n as usize;
    let mut edges = Vec::new();
    match *spec {
        FamilySpec::Path { .. } => edges.extend((1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { .. } => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Star { .. } => edges.extend((1..n).map(|i| (0, i))),
        FamilySpec::Lollipop { g, .. } => {
            let g = g as usize;
            let cyc: Vec<usize> = (0..g).collect();
            edges.extend(cycle_edges(&cyc));
            let tail: Vec<usize> = std::iter::once(0).chain(g..n).collect();
            edges.extend(path_edges(&tail));
        }
        FamilySpec::Dumbbell { m1, m2, .. } => {
            let (m1, m2) = (m1 as usize, m2 as usize);
            let first: Vec<usize> = (0..m1).collect();
            edges.extend(cycle_edges(&first));
            if n + 1 == m1 + m2 {
                let second: Vec<usize> = std::iter::once(0).chain(m1..m1 + m2 - 1).collect();
                edges.extend(cycle_edges(&second));
            } else {
                let second: Vec<usize> = (m1..m1 + m2).collect();
                edges.extend(cycle_edges(&second));
                let bridge: Vec<usize> = std::iter::once(0).chain(m1 + m2..n).chain(std::iter::once(m1)).collect();
                edges.extend(path_edges(&bridge));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("family edges are in range"))
}

/// Cycle `0..g` with a path of `stem` edges leaving vertex 0 and two pendant
/// edges at the far end of that path (at vertex 0 itself when `stem == 0`).
///
/// Several co-extremal graphs for two and three cut vertices have this shape;
/// so does the graph obtained from `L(n-2, n-4)` by hanging two pendant
/// edges on its pendant vertex.
pub fn forked_cycle(g: u64, stem: u64) -> Result<Graph, FamilyError> {
    if g < 3 {
        return Err(FamilyError::Constraint("forked cycle requires g >= 3"));
    }
    let n = g + stem + 2;
    if n > MAX_ORDER as u64 {
        return Err(FamilyError::TooLarge(n));
    }
    let (g, stem, n) = (g as usize, stem as usize, n as usize);
    let cyc: Vec<usize> = (0..g).collect();
    let mut edges: Vec<_> = cycle_edges(&cyc).collect();
    let tail: Vec<usize> = std::iter::once(0).chain(g..g + stem).collect();
    edges.extend(path_edges(&tail));
    let hub = *tail.last().expect("tail starts at 0");
    edges.push((hub, n - 2));
    edges.push((hub, n - 1));
    Ok(Graph::from_edges(n, edges).expect("edges are in range"))
}

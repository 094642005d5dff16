//! Known maximisers of the Wiener index for one, two and three cut vertices
//! at small orders.

use crate::families::{build, forked_cycle, formulas, FamilySpec};
use crate::graph::Graph;

/// A named member of a table row.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    /// Closed-form Wiener index, when the graph belongs to a family that has one.
    pub formula: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct TableRow {
    /// Number of cut vertices; also the table number on the command line.
    pub k: usize,
    pub n: usize,
    pub wiener: u64,
    /// The complete set of maximisers.
    pub witnesses: Vec<NamedGraph>,
    /// Rows beyond any enumeration, confirmed on the named graphs only.
    pub formula_only: bool,
}

fn family(spec: FamilySpec) -> NamedGraph {
    let formula = match spec {
        FamilySpec::Star { n } => Some((n - 1) * (n - 1)),
        FamilySpec::Lollipop { n, g } => formulas::lollipop_wiener(n, g).ok(),
        FamilySpec::Dumbbell { m1, m2, n } => formulas::dumbbell_wiener(m1, m2, n).ok(),
        _ => None,
    };
    NamedGraph { name: spec.to_string(), graph: build(&spec).expect("table families are valid"), formula }
}

fn forked(g: u64, stem: u64) -> NamedGraph {
    let graph = forked_cycle(g, stem).expect("valid forked cycle");
    let formula = if stem == 2 { formulas::forked_lollipop_wiener(g + 4).ok() } else { None };
    let name = if stem == 0 {
        format!("C_{g} with two pendant edges at one vertex")
    } else {
        format!("C_{g} with a {stem}-edge path ending in two pendant edges")
    };
    NamedGraph { name, graph, formula }
}

fn tree(name: &str, n: usize, edges: &[(usize, usize)]) -> NamedGraph {
    NamedGraph {
        name: name.to_string(),
        graph: Graph::from_edges(n, edges.iter().copied()).expect("tree edges in range"),
        formula: None,
    }
}

fn lollipop(n: u64, g: u64) -> NamedGraph {
    family(FamilySpec::Lollipop { n, g })
}

fn dumbbell(m1: u64, m2: u64, n: u64) -> NamedGraph {
    family(FamilySpec::Dumbbell { m1, m2, n })
}

fn row(k: usize, n: usize, wiener: u64, witnesses: Vec<NamedGraph>) -> TableRow {
    TableRow { k, n, wiener, witnesses, formula_only: n > 10 }
}

/// Rows for `k` cut vertices (1, 2 or 3); empty for other `k`.
pub fn table_rows(k: usize) -> Vec<TableRow> {
    match k {
        1 => vec![
            row(1, 4, 9, vec![family(FamilySpec::Star { n: 4 })]),
            row(1, 5, 16, vec![lollipop(5, 4), family(FamilySpec::Star { n: 5 })]),
            row(1, 6, 26, vec![lollipop(6, 5), forked(4, 0)]),
        ],
        2 => vec![
            row(2, 5, 18, vec![tree("P_3 with two pendant edges at one end", 5, &[(0, 1), (1, 2), (2, 3), (2, 4)])]),
            row(
                2,
                6,
                29,
                vec![
                    lollipop(6, 4),
                    tree("double star with two leaves per centre", 6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
                ],
            ),
            row(2, 7, 44, vec![forked(4, 1)]),
            row(2, 8, 64, vec![dumbbell(4, 4, 8), lollipop(8, 6)]),
            row(2, 9, 88, vec![lollipop(9, 7), forked(6, 1)]),
        ],
        3 => vec![
            row(
                3,
                6,
                32,
                vec![tree(
                    "P_5 with a pendant edge at its fourth vertex",
                    6,
                    &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)],
                )],
            ),
            row(
                3,
                7,
                48,
                vec![
                    lollipop(7, 4),
                    tree(
                        "P_3 with two pendant edges at each end",
                        7,
                        &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)],
                    ),
                ],
            ),
            row(3, 8, 69, vec![forked(4, 2)]),
            row(3, 9, 96, vec![dumbbell(4, 4, 9)]),
            row(3, 10, 126, vec![dumbbell(4, 5, 10), forked(6, 2)]),
            row(3, 11, 166, vec![dumbbell(4, 6, 11)]),
            row(3, 12, 209, vec![dumbbell(4, 7, 12), forked(8, 2)]),
            row(3, 13, 264, vec![dumbbell(6, 6, 13), lollipop(13, 10)]),
        ],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::count_cut_vertices;

    #[test]
    fn named_graphs_are_in_their_class() {
        for k in 1..=3 {
            for r in table_rows(k) {
                for w in &r.witnesses {
                    assert_eq!(w.graph.order(), r.n, "{}", w.name);
                    assert_eq!(count_cut_vertices(&w.graph).unwrap(), k, "{}", w.name);
                    assert_eq!(w.graph.wiener_index().unwrap(), r.wiener, "{}", w.name);
                    if let Some(f) = w.formula {
                        assert_eq!(f, r.wiener, "{}", w.name);
                    }
                }
            }
        }
    }
}

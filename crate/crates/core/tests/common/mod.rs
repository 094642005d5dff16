//! Test-side oracles, written independently of the library's own BFS.

#![allow(dead_code)]

use std::collections::VecDeque;

use wiener_cut::families::{build, forked_cycle, formulas, FamilySpec};
use wiener_cut::Graph;

/// Distance sums of every vertex by plain adjacency-list BFS.
pub fn naive_distance_sums(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            assert!(dist.iter().all(|&d| d != usize::MAX), "oracle needs a connected graph");
            dist.iter().map(|&d| d as u64).sum()
        })
        .collect()
}

pub fn naive_wiener(g: &Graph) -> u64 {
    naive_distance_sums(g).iter().sum::<u64>() / 2
}

#[derive(Debug, Clone)]
pub struct Case {
    pub label: String,
    pub formula: u64,
    pub oracle: u64,
}

fn case(label: String, formula: u64, oracle: u64) -> Case {
    Case { label, formula, oracle }
}

/// Every closed form against the oracle, for all valid parameters with
/// `n <= max_n`.
pub fn formula_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let p = build(&FamilySpec::Path { n }).unwrap();
        let d = naive_distance_sums(&p);
        out.push(case(format!("W(P_{n})"), formulas::path_wiener(n).unwrap(), naive_wiener(&p)));
        for i in 1..=n {
            out.push(case(format!("D_P{n}(v{i})"), formulas::path_vertex_distance(n, i).unwrap(), d[i as usize - 1]));
        }
    }
    for n in 3..=max_n {
        let c = build(&FamilySpec::Cycle { n }).unwrap();
        let d = naive_distance_sums(&c);
        out.push(case(format!("W(C_{n})"), formulas::cycle_wiener(n).unwrap(), naive_wiener(&c)));
        out.push(case(format!("D_C{n}"), formulas::cycle_vertex_distance(n).unwrap(), *d.iter().max().unwrap()));
        assert!(d.iter().all(|&x| x == d[0]));
        for g in 3..=n {
            let l = build(&FamilySpec::Lollipop { n, g }).unwrap();
            out.push(case(format!("W(L_{n},{g})"), formulas::lollipop_wiener(n, g).unwrap(), naive_wiener(&l)));
            if g < n {
                let d = naive_distance_sums(&l);
                out.push(case(
                    format!("D(pendant of L_{n},{g})"),
                    formulas::lollipop_pendant_distance(n, g).unwrap(),
                    d[n as usize - 1],
                ));
            }
        }
        for k in 1..=3 {
            if n >= k + 3 {
                let l = build(&FamilySpec::Lollipop { n, g: n - k }).unwrap();
                out.push(case(
                    format!("W(L_{n},{}) by cuts", n - k),
                    formulas::lollipop_wiener_by_cuts(n, k).unwrap(),
                    naive_wiener(&l),
                ));
            }
        }
        if n >= 7 {
            let g = forked_cycle(n - 4, 2).unwrap();
            out.push(case(
                format!("W(forked lollipop {n})"),
                formulas::forked_lollipop_wiener(n).unwrap(),
                naive_wiener(&g),
            ));
        }
    }
    out.extend(dumbbell_cases(max_n));
    out
}

/// `W(C^n_{m1,m2})` for every valid `(m1, m2, n)` with `n <= max_n`.
pub fn dumbbell_cases(max_n: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for m1 in 3..=max_n {
        for m2 in 3..=max_n + 1 - m1 {
            for n in m1 + m2 - 1..=max_n {
                let g = build(&FamilySpec::Dumbbell { m1, m2, n }).unwrap();
                out.push(case(
                    format!("W(C^{n}_{m1},{m2})"),
                    formulas::dumbbell_wiener(m1, m2, n).unwrap(),
                    naive_wiener(&g),
                ));
            }
        }
    }
    out
}

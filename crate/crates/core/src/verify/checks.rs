//! The consistency suite.
//!
//! Every check produces one or more [`CheckReport`]s. Exhaustive checks scan
//! all connected graphs up to a cap; family checks evaluate closed forms or
//! BFS on built family members; randomized checks draw seeded instances.
//! Counterexamples are chosen deterministically (smallest certificate), so
//! reports do not depend on the partition count.

use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{canonical_certificate, fold_graphs, CanonicalCertificate, EnumerationConfig, ProgressFn};
use crate::families::{build, forked_cycle, formulas, FamilySpec};
use crate::graph::{graph6, Graph, VertexSet};
use crate::structure::{decompose, is_minimally_two_connected, BlockCutDecomposition};

use super::random;
use super::search::{Objective, SearchOptions, SurveyCache};
use super::surgery::surgery_pendant_block_to_cycle;
use super::tables::{table_rows, TableRow};
use super::{CheckReport, CheckStatus, Evidence, VerifyError};

/// Which checks to run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Selection {
    #[default]
    All,
    /// Rows of the maximum-Wiener table for this many cut vertices.
    Table(usize),
    /// One check by id.
    Check(String),
}

#[derive(Clone)]
pub struct Scope {
    /// Largest order enumerated for extremal searches.
    pub max_n: usize,
    /// Largest order for the per-graph structural scans.
    pub structural_max_n: usize,
    /// Largest order for closed-form comparisons.
    pub formula_max_n: u64,
    pub partitions: usize,
    pub seed: u64,
    /// Number of random instances per randomized check.
    pub instances: u64,
    pub selection: Selection,
    pub progress: Option<ProgressFn>,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            max_n: 9,
            structural_max_n: 8,
            formula_max_n: 80,
            partitions: 1,
            seed: 0,
            instances: 1000,
            selection: Selection::All,
            progress: None,
        }
    }
}

impl std::fmt::Debug for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scope")
            .field("max_n", &self.max_n)
            .field("structural_max_n", &self.structural_max_n)
            .field("formula_max_n", &self.formula_max_n)
            .field("partitions", &self.partitions)
            .field("seed", &self.seed)
            .field("instances", &self.instances)
            .field("selection", &self.selection)
            .finish_non_exhaustive()
    }
}

impl Scope {
    fn search_options(&self) -> SearchOptions {
        SearchOptions { max_n: self.max_n, partitions: self.partitions, progress: self.progress.clone() }
    }
}

type CheckFn = fn(&Scope, &mut SurveyCache) -> Vec<CheckReport>;

struct Check {
    id: &'static str,
    run: CheckFn,
}

const CHECKS: &[Check] = &[
    Check { id: "edge-deletion", run: edge_deletion },
    Check { id: "cut-vertex-split", run: cut_vertex_split },
    Check { id: "min-2-connected-triangle-free", run: min_two_connected },
    Check { id: "cycle-beats-dumbbell", run: cycle_beats_dumbbell },
    Check { id: "farthest-blocks-pendant", run: farthest_blocks },
    Check { id: "s-pendant-blocks", run: s_pendant_blocks },
    Check { id: "cycle-max-distance", run: cycle_max_distance },
    Check { id: "lollipop-pendant-farthest", run: lollipop_pendant_farthest },
    Check { id: "pendant-block-to-cycle", run: pendant_block_to_cycle },
    Check { id: "distance-maximiser-shape", run: distance_maximiser_shape },
    Check { id: "cycle-beats-glued-blocks", run: cycle_beats_glued_blocks },
    Check { id: "lollipop-beats-dumbbell-distance", run: lollipop_beats_dumbbell_distance },
    Check { id: "farthest-vertex-location", run: farthest_vertex_location },
    Check { id: "max-distance-lollipop", run: max_distance_lollipop },
    Check { id: "cycle-max-wiener", run: cycle_max_wiener },
    Check { id: "wiener-pendant-blocks", run: wiener_pendant_blocks },
    Check { id: "lollipop-vs-dumbbell-k1", run: lollipop_vs_dumbbell_k1 },
    Check { id: "pendant-sharing", run: pendant_sharing },
    Check { id: "max-wiener-k1", run: max_wiener_k1 },
    Check { id: "dumbbell-vs-lollipop-k2", run: dumbbell_vs_lollipop_k2 },
    Check { id: "max-wiener-k2", run: max_wiener_k2 },
    Check { id: "dumbbell-vs-lollipop-k3", run: dumbbell_vs_lollipop_k3 },
    Check { id: "max-wiener-k3", run: max_wiener_k3 },
];

/// Ids accepted by [`Selection::Check`].
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Runs the selected checks. Failures are reported, not returned as errors.
pub fn check_suite(scope: &Scope, cache: &mut SurveyCache) -> Result<Vec<CheckReport>, VerifyError> {
    let mut out = Vec::new();
    match &scope.selection {
        Selection::All => {
            for c in CHECKS {
                out.extend(run_timed(c, scope, cache));
            }
            for k in 1..=3 {
                out.extend(table_checks(k, scope, cache));
            }
        }
        Selection::Table(k) => {
            if table_rows(*k).is_empty() {
                return Err(VerifyError::UnknownCheck(format!("table {k}")));
            }
            out.extend(table_checks(*k, scope, cache));
        }
        Selection::Check(id) => {
            let c = CHECKS.iter().find(|c| c.id == id).ok_or_else(|| VerifyError::UnknownCheck(id.clone()))?;
            out.extend(run_timed(c, scope, cache));
        }
    }
    Ok(out)
}

fn run_timed(c: &Check, scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let start = Instant::now();
    let mut reports = (c.run)(scope, cache);
    let per = start.elapsed() / reports.len().max(1) as u32;
    for r in &mut reports {
        if r.elapsed.is_zero() {
            r.elapsed = per;
        }
    }
    reports
}

fn fail_on_error(report: &mut CheckReport, e: VerifyError) {
    report.fail(None, format!("could not complete: {e}"));
}

// ---------------------------------------------------------------------------
// exhaustive scans

type Found = Option<(CanonicalCertificate, String)>;

fn keep_smallest(a: Found, b: Found) -> Found {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Applies `pred` to every connected graph with order in `ns`. Returns the
/// number of graphs examined and the violation with the smallest
/// certificate, if any.
fn scan<P>(scope: &Scope, ns: RangeInclusive<usize>, pred: P) -> Result<(u64, Found), VerifyError>
where
    P: Fn(&Graph) -> Result<(), String> + Sync,
{
    let mut total = 0;
    let mut found = None;
    for n in ns {
        let mut config = EnumerationConfig::new(n).with_partitions(scope.partitions);
        config.max_order = config.max_order.max(n);
        let (count, f) = fold_graphs(
            &config,
            || (0u64, None),
            |acc: &mut (u64, Found), g, cert| {
                acc.0 += 1;
                if let Err(detail) = pred(g) {
                    let candidate = Some((cert.clone(), detail));
                    acc.1 = keep_smallest(acc.1.take(), candidate);
                }
            },
            |a, b| (a.0 + b.0, keep_smallest(a.1, b.1)),
        )?;
        total += count;
        found = keep_smallest(found, f);
        if found.is_some() {
            break;
        }
    }
    Ok((total, found))
}

fn scan_report(
    scope: &Scope,
    id: &str,
    statement: &str,
    ns: RangeInclusive<usize>,
    pred: impl Fn(&Graph) -> Result<(), String> + Sync,
) -> Vec<CheckReport> {
    let range = format!("all connected graphs, {} <= n <= {}", ns.start(), ns.end());
    let mut r = CheckReport::new(id, statement, Evidence::Exhaustive, range);
    match scan(scope, ns, pred) {
        Ok((count, found)) => {
            r.witness_count = Some(count as usize);
            if let Some((cert, detail)) = found {
                r.fail(Some(cert.to_string()), detail);
            }
        }
        Err(e) => fail_on_error(&mut r, e),
    }
    vec![r]
}

fn structural_cap(scope: &Scope) -> usize {
    scope.structural_max_n.min(scope.max_n.max(scope.structural_max_n))
}

fn edge_deletion(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    scan_report(
        scope,
        "edge-deletion",
        "deleting a non-bridge edge strictly raises W and lowers no vertex distance",
        2..=structural_cap(scope),
        |g| {
            let w = g.wiener_index().expect("connected");
            let d = g.vertex_distances().expect("connected");
            for (u, v) in g.edges() {
                let h = g.delete_edge(u, v).expect("edge exists");
                if !h.is_connected() {
                    continue;
                }
                let (hw, hd) = (h.wiener_index().expect("connected"), h.vertex_distances().expect("connected"));
                if hw <= w {
                    return Err(format!("deleting {u}-{v}: W {w} -> {hw}"));
                }
                if let Some(x) = (0..g.order()).find(|&x| hd[x] < d[x]) {
                    return Err(format!("deleting {u}-{v}: D(v{x}) {} -> {}", d[x], hd[x]));
                }
            }
            Ok(())
        },
    )
}

/// Splits `g` at cut vertex `w` into the side containing `comp` and the
/// rest, both including `w`.
fn split_identities(g: &Graph, w: usize, comp: VertexSet) -> Result<(), String> {
    let v1 = comp.union(VertexSet::singleton(w));
    let v2 = g.vertices().difference(comp);
    let (g1, ids1) = g.induced(v1).expect("in range");
    let (g2, ids2) = g.induced(v2).expect("in range");
    let (n1, n2) = (g1.order() as u64, g2.order() as u64);
    let w1 = ids1.iter().position(|&x| x == w).expect("w kept");
    let w2 = ids2.iter().position(|&x| x == w).expect("w kept");
    let d = g.vertex_distances().expect("connected");
    let d1 = g1.vertex_distances().expect("sides are connected");
    let d2 = g2.vertex_distances().expect("sides are connected");
    let dist = g1.all_pairs_distances();
    for (i, &v) in ids1.iter().enumerate() {
        let rhs = d1[i] + (n2 - 1) * dist.get(i, w1) as u64 + d2[w2];
        if d[v] != rhs {
            return Err(format!("split at v{w}: D(v{v}) = {} but the identity gives {rhs}", d[v]));
        }
    }
    let w_all = g.wiener_index().expect("connected");
    let rhs = g1.wiener_index().expect("connected")
        + g2.wiener_index().expect("connected")
        + (n1 - 1) * d2[w2]
        + (n2 - 1) * d1[w1];
    if w_all != rhs {
        return Err(format!("split at v{w}: W = {w_all} but the identity gives {rhs}"));
    }
    Ok(())
}

fn cut_vertex_split(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    scan_report(
        scope,
        "cut-vertex-split",
        "D and W decompose additively across every cut vertex",
        3..=structural_cap(scope),
        |g| {
            let dec = decompose(g).expect("connected");
            for w in dec.cut_vertices().iter() {
                let rest = g.vertices().difference(VertexSet::singleton(w));
                let (h, ids) = g.induced(rest).expect("in range");
                for c in h.components() {
                    let comp: VertexSet = c.iter().map(|i| ids[i]).collect();
                    split_identities(g, w, comp)?;
                }
            }
            Ok(())
        },
    )
}

fn min_two_connected(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    scan_report(
        scope,
        "min-2-connected-triangle-free",
        "minimally 2-connected graphs on more than 3 vertices are triangle free",
        4..=structural_cap(scope),
        |g| {
            if is_minimally_two_connected(g) && g.has_triangle() {
                Err("minimally 2-connected with a triangle".to_string())
            } else {
                Ok(())
            }
        },
    )
}

fn s_pendant_blocks(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    scan_report(
        scope,
        "s-pendant-blocks",
        "a graph with at least two cut vertices has at least two s-pendant blocks",
        4..=structural_cap(scope),
        |g| {
            let dec = decompose(g).expect("connected");
            let s = dec.s_pendant_blocks().count();
            if dec.cut_vertex_count() >= 2 && s < 2 {
                Err(format!("{} cut vertices but {s} s-pendant blocks", dec.cut_vertex_count()))
            } else {
                Ok(())
            }
        },
    )
}

fn farthest_blocks(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    scan_report(
        scope,
        "farthest-blocks-pendant",
        "two blocks at maximum block distance are both pendant",
        2..=structural_cap(scope),
        |g| {
            let dec = decompose(g).expect("connected");
            let b = dec.blocks().len();
            if b < 2 {
                return Ok(());
            }
            let dist = g.all_pairs_distances();
            let mut best = 0;
            let mut pairs = Vec::new();
            for a in 0..b {
                for c in a + 1..b {
                    let d = dec.block_distance(&dist, a, c).expect("indices in range");
                    if d > best {
                        best = d;
                        pairs.clear();
                    }
                    if d == best {
                        pairs.push((a, c));
                    }
                }
            }
            for (a, c) in pairs {
                for x in [a, c] {
                    if !dec.blocks()[x].kind.is_pendant() {
                        return Err(format!(
                            "blocks {a} and {c} are at maximum distance {best}; block {x} is not pendant"
                        ));
                    }
                }
            }
            Ok(())
        },
    )
}

// ---------------------------------------------------------------------------
// survey-based checks

fn is_cycle_block(g: &Graph, vertices: VertexSet) -> bool {
    vertices.len() >= 4 && vertices.iter().all(|v| g.neighbors(v).intersection(vertices).len() == 2)
}

/// Every pendant block is `K_2` or a cycle on at least 4 vertices.
fn pendant_blocks_are_edges_or_cycles(g: &Graph, dec: &BlockCutDecomposition) -> Result<(), String> {
    for (i, b) in dec.pendant_blocks() {
        if !(b.is_bridge() || is_cycle_block(g, b.vertices)) {
            return Err(format!("pendant block {i} on {} vertices is neither K_2 nor a cycle", b.order()));
        }
    }
    Ok(())
}

/// Runs `per_class(n, k, record)` on every class in range, stopping at the
/// first violation.
fn survey_report<F>(
    scope: &Scope,
    cache: &mut SurveyCache,
    mut report: CheckReport,
    classes: Vec<(usize, usize)>,
    objective: Objective,
    mut per_class: F,
) -> CheckReport
where
    F: FnMut(usize, usize, &super::ExtremalRecord) -> Result<(), (Option<String>, String)>,
{
    let opts = scope.search_options();
    let mut examined = 0;
    for (n, k) in classes {
        let rec = match cache.get(n, &opts).and_then(|s| s.record(k, objective)) {
            Ok(r) => r,
            Err(e) => {
                fail_on_error(&mut report, e);
                return report;
            }
        };
        examined += rec.witnesses.len();
        if let Err((g6, detail)) = per_class(n, k, &rec) {
            report.n = Some(n);
            report.k = Some(k);
            report.optimum = Some(rec.optimum);
            report.witness_count = Some(rec.witnesses.len());
            report.fail(g6, format!("n={n} k={k}: {detail}"));
            return report;
        }
    }
    report.witness_count = Some(examined);
    report
}

fn classes(ns: RangeInclusive<usize>, ks: impl Fn(usize) -> RangeInclusive<usize>) -> Vec<(usize, usize)> {
    ns.flat_map(|n| ks(n).map(move |k| (n, k))).collect()
}

fn cert_of(g: &Graph) -> CanonicalCertificate {
    canonical_certificate(g).expect("family graphs are small")
}

fn cycle_max_distance(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "cycle-max-distance",
        "over 2-connected graphs the largest vertex distance is that of a cycle vertex",
        Evidence::Exhaustive,
        format!("k = 0, 3 <= n <= {}", scope.max_n),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(3..=scope.max_n, |_| 0..=0),
        Objective::MaxVertexDistance,
        |n, _, rec| {
            let want = formulas::cycle_vertex_distance(n as u64).expect("n >= 3");
            let cycle = cert_of(&build(&FamilySpec::Cycle { n: n as u64 }).expect("valid"));
            if rec.optimum != want {
                return Err((
                    rec.witnesses.first().map(|c| c.to_string()),
                    format!("max D {} but the cycle gives {want}", rec.optimum),
                ));
            }
            if !rec.witnesses.contains(&cycle) {
                return Err((Some(cycle.to_string()), "cycle is not among the maximisers".into()));
            }
            Ok(())
        },
    )]
}

fn distance_maximiser_shape(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "distance-maximiser-shape",
        "some distance maximiser is triangle free with every pendant block K_2 or a cycle",
        Evidence::Exhaustive,
        format!("4 <= n <= {}, 1 <= k <= n-2", scope.max_n),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(4..=scope.max_n, |n| 1..=n - 2),
        Objective::MaxVertexDistance,
        |_, _, rec| {
            let ok = rec.witness_graphs().iter().any(|g| {
                !g.has_triangle() && pendant_blocks_are_edges_or_cycles(g, &decompose(g).expect("connected")).is_ok()
            });
            if ok {
                Ok(())
            } else {
                Err((rec.witnesses.first().map(|c| c.to_string()), "no maximiser has the required shape".into()))
            }
        },
    )]
}

fn farthest_vertex_location(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "farthest-vertex-location",
        "a vertex of largest distance lies in a pendant block whose cut vertex meets exactly one other block (n >= 5)",
        Evidence::Exhaustive,
        format!("every maximiser and attaining vertex, 3 <= n <= {}, 1 <= k <= n-2", scope.max_n),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(3..=scope.max_n, |n| 1..=n - 2),
        Objective::MaxVertexDistance,
        |n, _, rec| {
            for (g, cert) in rec.witness_graphs().iter().zip(&rec.witnesses) {
                let dec = decompose(g).expect("connected");
                let d = g.vertex_distances().expect("connected");
                for v0 in (0..n).filter(|&v| d[v] == rec.optimum) {
                    let ok = dec.blocks_at(v0).any(|i| {
                        let b = &dec.blocks()[i];
                        let w = b.cut_vertices.first().expect("pendant blocks have a cut vertex");
                        b.kind.is_pendant() && (n < 5 || dec.blocks_at(w).count() == 2)
                    });
                    if !ok {
                        return Err((
                            Some(cert.to_string()),
                            format!("v{v0} attains D = {} outside any qualifying pendant block", rec.optimum),
                        ));
                    }
                }
            }
            Ok(())
        },
    )]
}

fn max_distance_lollipop(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.max_n.min(9);
    let report = CheckReport::new(
        "max-distance-lollipop",
        "the largest vertex distance over the class is that of the pendant vertex of L_{n,n-k}",
        Evidence::Exhaustive,
        format!("4 <= n <= {top}, 1 <= k <= n-3"),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(4..=top, |n| 1..=n - 3),
        Objective::MaxVertexDistance,
        |n, k, rec| {
            let want = formulas::lollipop_pendant_distance(n as u64, (n - k) as u64).expect("n - k >= 3");
            if rec.optimum == want {
                Ok(())
            } else {
                Err((
                    rec.witnesses.first().map(|c| c.to_string()),
                    format!("max D {} but the lollipop gives {want}", rec.optimum),
                ))
            }
        },
    )]
}

fn cycle_max_wiener(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "cycle-max-wiener",
        "the cycle is the unique 2-connected graph of largest Wiener index",
        Evidence::Exhaustive,
        format!("k = 0, 3 <= n <= {}", scope.max_n),
    );
    vec![survey_report(scope, cache, report, classes(3..=scope.max_n, |_| 0..=0), Objective::MaxWiener, |n, _, rec| {
        let want = formulas::cycle_wiener(n as u64).expect("n >= 3");
        let cycle = cert_of(&build(&FamilySpec::Cycle { n: n as u64 }).expect("valid"));
        if rec.optimum != want || rec.witnesses != [cycle] {
            let other = rec.witnesses.iter().find(|c| **c != cert_of(&c.to_graph())).or(rec.witnesses.first());
            return Err((
                other.map(|c| c.to_string()),
                format!(
                    "max W {} with {} maximisers, expected {want} from the cycle alone",
                    rec.optimum,
                    rec.witnesses.len()
                ),
            ));
        }
        Ok(())
    })]
}

fn wiener_pendant_blocks(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "wiener-pendant-blocks",
        "every pendant block of a Wiener maximiser is K_2 or a cycle on at least 4 vertices",
        Evidence::Exhaustive,
        format!("every maximiser, 3 <= n <= {}, 1 <= k <= n-2", scope.max_n),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(3..=scope.max_n, |n| 1..=n - 2),
        Objective::MaxWiener,
        |_, _, rec| {
            for (g, c) in rec.witness_graphs().iter().zip(&rec.witnesses) {
                if let Err(e) = pendant_blocks_are_edges_or_cycles(g, &decompose(g).expect("connected")) {
                    return Err((Some(c.to_string()), e));
                }
            }
            Ok(())
        },
    )]
}

fn pendant_sharing(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let report = CheckReport::new(
        "pendant-sharing",
        "in a Wiener maximiser a cut vertex lies in at most two pendant blocks, both K_2 when k >= 2",
        Evidence::Exhaustive,
        format!("every maximiser, 7 <= n <= {}, 1 <= k <= n-2", scope.max_n),
    );
    vec![survey_report(
        scope,
        cache,
        report,
        classes(7..=scope.max_n, |n| 1..=n - 2),
        Objective::MaxWiener,
        |_, k, rec| {
            for (g, c) in rec.witness_graphs().iter().zip(&rec.witnesses) {
                let dec = decompose(g).expect("connected");
                for w in dec.cut_vertices().iter() {
                    let pend: Vec<_> =
                        dec.blocks_at(w).map(|i| &dec.blocks()[i]).filter(|b| b.kind.is_pendant()).collect();
                    if pend.len() > 2 {
                        return Err((Some(c.to_string()), format!("v{w} lies in {} pendant blocks", pend.len())));
                    }
                    if k >= 2 && pend.len() == 2 && !pend.iter().all(|b| b.is_bridge()) {
                        return Err((
                            Some(c.to_string()),
                            format!("v{w} lies in two pendant blocks that are not both K_2"),
                        ));
                    }
                }
            }
            Ok(())
        },
    )]
}

/// Reports, one per `n`, that the unique Wiener maximiser is `L_{n,n-k}`.
fn unique_lollipop(
    scope: &Scope,
    cache: &mut SurveyCache,
    id: &str,
    k: usize,
    ns: RangeInclusive<usize>,
) -> Vec<CheckReport> {
    let statement =
        format!("L_{{n,n-{k}}} is the unique maximiser of W with {k} cut vertex{}", if k == 1 { "" } else { "es" });
    let opts = scope.search_options();
    let mut out = Vec::new();
    for n in ns {
        let mut r = CheckReport::new(
            id,
            statement.clone(),
            Evidence::Exhaustive,
            format!("all connected graphs with n = {n}, k = {k}"),
        );
        r.n = Some(n);
        r.k = Some(k);
        if n > scope.max_n {
            r.skip(format!("n = {n} is above the enumeration cap {} (raise --max-n)", scope.max_n));
            out.push(r);
            continue;
        }
        let start = Instant::now();
        match cache.get(n, &opts).and_then(|s| s.record(k, Objective::MaxWiener)) {
            Ok(rec) => {
                let lol = build(&FamilySpec::Lollipop { n: n as u64, g: (n - k) as u64 }).expect("valid");
                let want = formulas::lollipop_wiener(n as u64, (n - k) as u64).expect("valid");
                r.optimum = Some(rec.optimum);
                r.witness_count = Some(rec.witnesses.len());
                if rec.optimum != want || rec.witnesses != [cert_of(&lol)] {
                    let other = rec.witnesses.iter().find(|c| **c != cert_of(&lol)).or(rec.witnesses.first());
                    r.fail(
                        other.map(|c| c.to_string()),
                        format!("max W {} with {} maximisers; L gives {want}", rec.optimum, rec.witnesses.len()),
                    );
                }
            }
            Err(e) => fail_on_error(&mut r, e),
        }
        r.elapsed = start.elapsed();
        out.push(r);
    }
    out
}

fn max_wiener_k1(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let mut out = unique_lollipop(scope, cache, "max-wiener-k1", 1, 7..=scope.max_n.max(7));
    // the cubic specialisation agrees with the general lollipop form
    for r in &mut out {
        if let (Some(n), Some(opt)) = (r.n, r.optimum) {
            let spec = formulas::lollipop_wiener_by_cuts(n as u64, 1).expect("n >= 4");
            if r.status == CheckStatus::Pass && spec != opt {
                r.fail(None, format!("specialised form gives {spec}, search gives {opt}"));
            }
        }
    }
    out
}

fn max_wiener_k2(scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    let mut out = unique_lollipop(scope, cache, "max-wiener-k2", 2, 10..=10);
    out.push(family_k2(scope));
    out
}

fn max_wiener_k3(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let mut r = CheckReport::new(
        "max-wiener-k3",
        "L_{n,n-3} is the unique maximiser of W with 3 cut vertices, n >= 14",
        Evidence::Exhaustive,
        "",
    );
    r.skip("the statement starts at n = 14, beyond the enumeration limit of 10");
    vec![r, family_k3(scope)]
}

// ---------------------------------------------------------------------------
// family and formula checks

fn formula_report(
    id: &str,
    statement: &str,
    range: String,
    cases: impl Iterator<Item = Result<(), (Option<Graph>, String)>>,
) -> CheckReport {
    let mut r = CheckReport::new(id, statement, Evidence::Family, range);
    let mut count = 0;
    for c in cases {
        count += 1;
        if let Err((g, detail)) = c {
            r.fail(g.map(|g| graph6::encode(&g)), detail);
            break;
        }
    }
    r.witness_count = Some(count);
    r
}

fn dumbbell_graph(m1: u64, m2: u64, n: u64) -> Option<Graph> {
    build(&FamilySpec::Dumbbell { m1, m2, n }).ok()
}

/// Pairs `(m1, m2)` with `m1, m2 >= lo` and `m1 + m2 = sum`.
fn splits(sum: u64, lo: u64) -> impl Iterator<Item = (u64, u64)> {
    (lo..=sum.saturating_sub(lo)).map(move |m1| (m1, sum - m1))
}

fn cycle_beats_dumbbell(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.formula_max_n;
    let cases = (5..=top).flat_map(|n| splits(n + 1, 3).map(move |(a, b)| (a, b, n))).map(|(a, b, n)| {
        let (c, d) = (formulas::cycle_wiener(n).unwrap(), formulas::dumbbell_wiener(a, b, n).unwrap());
        if c > d {
            Ok(())
        } else {
            Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b}: W(C_{n}) = {c} <= {d}")))
        }
    });
    vec![formula_report(
        "cycle-beats-dumbbell",
        "W(C_n) > W(C^n_{m1,m2}) when n = m1 + m2 - 1",
        format!("m1, m2 >= 3, n <= {top}"),
        cases,
    )]
}

fn lollipop_vs_dumbbell_k1(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.formula_max_n;
    let cases = (7..=top).flat_map(|n| splits(n + 1, 4).map(move |(a, b)| (a, b, n))).map(|(a, b, n)| {
        let c = formulas::cycle_wiener(n).unwrap();
        let l = formulas::lollipop_wiener(n, n - 1).unwrap();
        let d = formulas::dumbbell_wiener(a, b, n).unwrap();
        if c >= l && l > d {
            Ok(())
        } else {
            Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b}: W(C_n)={c}, W(L)={l}, W(C^n)={d}")))
        }
    });
    vec![formula_report(
        "lollipop-vs-dumbbell-k1",
        "W(C_n) >= W(L_{n,n-1}) > W(C^n_{m1,m2}) when n = m1 + m2 - 1",
        format!("m1, m2 >= 4, n <= {top}"),
        cases,
    )]
}

fn dumbbell_vs_lollipop_k2(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.formula_max_n;
    let cases = (8..=top).flat_map(|n| splits(n, 4).map(move |(a, b)| (a, b, n))).map(|(a, b, n)| {
        let d = formulas::dumbbell_wiener(a, b, n).unwrap();
        let l = formulas::lollipop_wiener(n, n - 2).unwrap();
        let ok = if (a, b) == (4, 4) { d == l } else { d < l };
        if ok {
            Ok(())
        } else {
            Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b}: W(C^n)={d}, W(L_{{n,n-2}})={l}")))
        }
    });
    vec![formula_report(
        "dumbbell-vs-lollipop-k2",
        "W(C^n_{m1,m2}) <= W(L_{n,n-2}) when n = m1 + m2, with equality only at m1 = m2 = 4",
        format!("m1, m2 >= 4, n <= {top}"),
        cases,
    )]
}

fn dumbbell_vs_lollipop_k3(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.formula_max_n;
    vec![formula_report(
        "dumbbell-vs-lollipop-k3",
        "W(C^n_{m1,m2}) < W(L_{n,n-3}) when n = m1 + m2 + 1 >= 14",
        format!("m1, m2 >= 4, 14 <= n <= {top}"),
        k3_dumbbell_cases(14..=top),
    )]
}

fn k3_dumbbell_cases(ns: RangeInclusive<u64>) -> impl Iterator<Item = Result<(), (Option<Graph>, String)>> {
    ns.flat_map(|n| splits(n - 1, 4).map(move |(a, b)| (a, b, n))).map(|(a, b, n)| {
        let d = formulas::dumbbell_wiener(a, b, n).unwrap();
        let l = formulas::lollipop_wiener(n, n - 3).unwrap();
        if d < l {
            Ok(())
        } else {
            Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b}: W(C^n)={d} >= W(L_{{n,n-3}})={l}")))
        }
    })
}

/// `W` of two graphs glued at one vertex, from their own `W`, orders and the
/// distances of the glued vertex.
fn glued_wiener(w1: u64, n1: u64, d1: u64, w2: u64, n2: u64, d2: u64) -> u64 {
    w1 + w2 + (n1 - 1) * d2 + (n2 - 1) * d1
}

fn family_k2(scope: &Scope) -> CheckReport {
    let top = scope.formula_max_n;
    let dumbbells = (11..=top).flat_map(|n| splits(n, 4).map(move |(a, b)| (a, b, n))).map(|(a, b, n)| {
        let d = formulas::dumbbell_wiener(a, b, n).unwrap();
        let l = formulas::lollipop_wiener(n, n - 2).unwrap();
        if d < l {
            Ok(())
        } else {
            Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b}: W(C^n)={d} >= W(L)={l}")))
        }
    });
    // K_{1,3} glued by a leaf to C_{n-3}
    let claws = (11..=top).map(|n| {
        let g = n - 3;
        let w =
            glued_wiener(formulas::cycle_wiener(g).unwrap(), g, formulas::cycle_vertex_distance(g).unwrap(), 9, 4, 5);
        let built = forked_cycle(g, 1).ok();
        if let Some(b) = &built {
            let bfs = b.wiener_index().expect("connected");
            if bfs != w {
                return Err((built, format!("n={n}: glued form {w} disagrees with BFS {bfs}")));
            }
        }
        let l = formulas::lollipop_wiener(n, n - 2).unwrap();
        if w < l {
            Ok(())
        } else {
            Err((built, format!("n={n}: claw on a cycle has W={w} >= W(L)={l}")))
        }
    });
    let mut r = formula_report(
        "max-wiener-k2",
        "L_{n,n-2} beats both competing shapes left by the reduction (n >= 11)",
        format!("11 <= n <= {top}"),
        dumbbells.chain(claws),
    );
    r.evidence = Evidence::Family;
    r
}

fn family_k3(scope: &Scope) -> CheckReport {
    let top = scope.formula_max_n;
    let forks = (14..=top).map(|n| {
        let w = formulas::forked_lollipop_wiener(n).unwrap();
        let built = forked_cycle(n - 4, 2).ok();
        if let Some(b) = &built {
            let bfs = b.wiener_index().expect("connected");
            if bfs != w {
                return Err((built, format!("n={n}: closed form {w} disagrees with BFS {bfs}")));
            }
        }
        let l = formulas::lollipop_wiener(n, n - 3).unwrap();
        if w < l {
            Ok(())
        } else {
            Err((built, format!("n={n}: W={w} >= W(L_{{n,n-3}})={l}")))
        }
    });
    formula_report(
        "max-wiener-k3",
        "L_{n,n-3} beats both competing shapes left by the reduction (n >= 14)",
        format!("14 <= n <= {top}"),
        k3_dumbbell_cases(14..=top).chain(forks),
    )
}

/// Largest vertex distance in `C^n_{m1,m2}`, evaluated exactly by splitting
/// at the cut vertices: a cycle vertex at cycle distance `t` from its cut
/// vertex `w` has `D = D_C(w) + (n - m) t + D_R(w)`, where `R` is the rest of
/// the graph seen from `w`; path vertices are summed directly.
pub fn dumbbell_max_vertex_distance(m1: u64, m2: u64, n: u64) -> Result<u64, crate::families::FamilyError> {
    formulas::dumbbell_wiener(m1, m2, n)?;
    let k = n + 2 - m1 - m2;
    let dc = |m: u64| m * m / 4;
    let rest = |other: u64| k * (k - 1) / 2 + (other - 1) * (k - 1) + dc(other);
    let on_cycle = |m: u64, other: u64| dc(m) + (n - m) * (m / 2) + rest(other);
    let mut best = on_cycle(m1, m2).max(on_cycle(m2, m1));
    for i in 2..k {
        let d = formulas::path_vertex_distance(k, i)? + (m1 - 1) * (i - 1) + dc(m1) + (m2 - 1) * (k - i) + dc(m2);
        best = best.max(d);
    }
    Ok(best)
}

fn lollipop_beats_dumbbell_distance(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let top = scope.formula_max_n;
    let cases = (5..=top)
        .flat_map(|n| (1..=n - 4).flat_map(move |k| splits(n + 2 - k, 3).map(move |(a, b)| (a, b, k, n))))
        .map(|(a, b, k, n)| {
            let l = formulas::lollipop_pendant_distance(n, n - k).unwrap();
            let d = dumbbell_max_vertex_distance(a, b, n).unwrap();
            if l > d {
                Ok(())
            } else {
                Err((dumbbell_graph(a, b, n), format!("m1={a} m2={b} k={k}: D(pendant of L)={l} <= max D(C^n)={d}")))
            }
        });
    vec![formula_report(
        "lollipop-beats-dumbbell-distance",
        "the pendant vertex of L_{n,n-k} is farther than every vertex of C^n_{m1,m2}",
        format!("m1, m2 >= 3, k >= 1, n <= {top}"),
        cases,
    )]
}

fn lollipop_pendant_farthest(_: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let cases = (4..=40u64).flat_map(|n| (3..n).map(move |g| (n, g))).map(|(n, g)| {
        let lol = build(&FamilySpec::Lollipop { n, g }).unwrap();
        let d = lol.vertex_distances().expect("connected");
        let p = d[n as usize - 1];
        match (0..n as usize - 1).find(|&v| d[v] >= p) {
            None => Ok(()),
            Some(v) => Err((Some(lol), format!("L_{{{n},{g}}}: D(v{v}) = {} >= D(pendant) = {p}", d[v]))),
        }
    });
    vec![formula_report(
        "lollipop-pendant-farthest",
        "the pendant vertex of L_{n,n-k} is strictly farther than every other vertex",
        "3 <= g < n <= 40, by BFS".to_string(),
        cases,
    )]
}

// ---------------------------------------------------------------------------
// randomized checks

fn instance_rng(scope: &Scope, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(scope.seed.wrapping_add(i))
}

fn pendant_block_to_cycle(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let mut r = CheckReport::new(
        "pendant-block-to-cycle",
        "replacing a pendant block by a cycle keeps k and no vertex outside the block gets closer",
        Evidence::Randomized,
        format!("{} instances, 5 <= n <= 8, seed {}", scope.instances, scope.seed),
    );
    let mut nontrivial = 0;
    for i in 0..scope.instances {
        let mut rng = instance_rng(scope, i);
        let m = rng.gen_range(4..=6);
        let h = rng.gen_range(2..=8 - m);
        let host = random::connected(&mut rng, h, 0.4);
        let block = random::two_connected(&mut rng, m);
        let (at, block_at) = (rng.gen_range(0..h), rng.gen_range(0..m));
        let g = host.glue(at, &block, block_at).expect("small");
        let mut bv: VertexSet = (h..h + m - 1).collect();
        bv.insert(at);
        let dec = decompose(&g).expect("connected");
        let index = dec.blocks().iter().position(|b| b.vertices == bv).expect("glued block is a block");
        let after = surgery_pendant_block_to_cycle(&g, index).expect("pendant block of order >= 4");
        if after != g {
            nontrivial += 1;
        }
        let (d0, d1) = (g.vertex_distances().expect("connected"), after.vertex_distances().expect("connected"));
        let k0 = dec.cut_vertex_count();
        let k1 = decompose(&after).expect("connected").cut_vertex_count();
        let problem = if k0 != k1 {
            Some(format!("cut vertices {k0} -> {k1}"))
        } else if let Some(v) = (0..h).find(|&v| d1[v] < d0[v]) {
            Some(format!("D(v{v}) {} -> {}", d0[v], d1[v]))
        } else if d1.iter().max() < d0.iter().max() {
            Some("largest vertex distance decreased".to_string())
        } else {
            None
        };
        if let Some(p) = problem {
            r.fail(Some(graph6::encode(&g)), format!("instance {i}, block {index}: {p}"));
            break;
        }
    }
    r.witness_count = Some(nontrivial);
    vec![r]
}

fn cycle_beats_glued_blocks(scope: &Scope, _: &mut SurveyCache) -> Vec<CheckReport> {
    let mut r = CheckReport::new(
        "cycle-beats-glued-blocks",
        "gluing C_m at w puts every host vertex farther than gluing C^m_{m1,m2} or L_{m,m-1}",
        Evidence::Randomized,
        format!("{} instances, host order 1..=6, 3 <= m1, m2 <= 7, seed {}", scope.instances, scope.seed),
    );
    for i in 0..scope.instances {
        let mut rng = instance_rng(scope, i);
        let h = rng.gen_range(1..=6);
        let host = random::connected(&mut rng, h, 0.4);
        let w = rng.gen_range(0..h);
        let (m1, m2) = (rng.gen_range(3..=7u64), rng.gen_range(3..=7u64));
        let m = m1 + m2 - 1;
        let glue = |spec| host.glue(w, &build(&spec).expect("valid"), 0).expect("small");
        let g = glue(FamilySpec::Cycle { n: m });
        let g1 = glue(FamilySpec::Dumbbell { m1, m2, n: m });
        let g2 = glue(FamilySpec::Lollipop { n: m, g: m - 1 });
        let d = g.vertex_distances().expect("connected");
        let d1 = g1.vertex_distances().expect("connected");
        let d2 = g2.vertex_distances().expect("connected");
        if let Some(v) = (0..h).find(|&v| d[v] <= d1[v] || d[v] <= d2[v]) {
            r.fail(
                Some(graph6::encode(&g1)),
                format!(
                    "instance {i}, m1={m1} m2={m2}: D(v{v}) = {} with the cycle, {} and {} otherwise",
                    d[v], d1[v], d2[v]
                ),
            );
            break;
        }
    }
    r.witness_count = Some(scope.instances as usize);
    vec![r]
}

// ---------------------------------------------------------------------------
// tables

fn table_checks(k: usize, scope: &Scope, cache: &mut SurveyCache) -> Vec<CheckReport> {
    table_rows(k).iter().map(|row| table_check(row, scope, cache).0).collect()
}

/// One table row, checked exhaustively when in reach and on the named
/// graphs otherwise. Also returns the maximisers' certificates.
pub(crate) fn table_check(
    row: &TableRow,
    scope: &Scope,
    cache: &mut SurveyCache,
) -> (CheckReport, Vec<CanonicalCertificate>) {
    let start = Instant::now();
    let statement = format!("maximum Wiener index with {} cut vertices", row.k);
    let mut expected: Vec<CanonicalCertificate> = row.witnesses.iter().map(|w| cert_of(&w.graph)).collect();
    expected.sort();
    let mut r;
    let mut certs = expected.clone();
    if !row.formula_only && row.n <= scope.max_n {
        r = CheckReport::new(
            format!("table-k{}", row.k),
            statement,
            Evidence::Exhaustive,
            format!("all connected graphs with n = {}, k = {}", row.n, row.k),
        );
        match cache.get(row.n, &scope.search_options()).and_then(|s| s.record(row.k, Objective::MaxWiener)) {
            Ok(rec) => {
                r.optimum = Some(rec.optimum);
                r.witness_count = Some(rec.witnesses.len());
                if rec.optimum != row.wiener || rec.witnesses != expected {
                    let odd = rec
                        .witnesses
                        .iter()
                        .find(|c| !expected.contains(c))
                        .or_else(|| expected.iter().find(|c| !rec.witnesses.contains(c)));
                    r.fail(
                        odd.map(|c| c.to_string()),
                        format!(
                            "found W={} with {} maximisers, expected W={} with {}",
                            rec.optimum,
                            rec.witnesses.len(),
                            row.wiener,
                            expected.len()
                        ),
                    );
                }
                certs = rec.witnesses;
            }
            Err(e) => fail_on_error(&mut r, e),
        }
    } else {
        let why = if row.formula_only { "beyond enumeration" } else { "above --max-n" };
        r = CheckReport::new(
            format!("table-k{}", row.k),
            statement,
            Evidence::Formula,
            format!("named maximisers only ({why})"),
        );
        r.optimum = Some(row.wiener);
        r.witness_count = Some(row.witnesses.len());
        for w in &row.witnesses {
            let bfs = w.graph.wiener_index().expect("connected");
            let k = decompose(&w.graph).expect("connected").cut_vertex_count();
            let formula_ok = w.formula.is_none_or(|f| f == row.wiener);
            if bfs != row.wiener || !formula_ok || k != row.k || w.graph.order() != row.n {
                r.fail(Some(graph6::encode(&w.graph)), format!("{}: W={bfs}, formula {:?}, k={k}", w.name, w.formula));
                break;
            }
        }
    }
    r.n = Some(row.n);
    r.k = Some(row.k);
    r.elapsed = start.elapsed();
    (r, certs)
}

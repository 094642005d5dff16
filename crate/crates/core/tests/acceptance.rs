//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::io::Cursor;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wiener_cut::cli;
use wiener_cut::enumerate::{count, fold_graphs, CanonicalCertificate, EnumerationConfig};
use wiener_cut::families::formulas;
use wiener_cut::verify::{
    check_suite, CheckReport, CheckStatus, Evidence, Objective, Scope, SearchOptions, Selection, SurveyCache,
};

/// Largest allowed absolute difference in any integer comparison.
const TOLERANCE: u64 = 0;

const BUDGET_TABLES: Duration = Duration::from_secs(4 * 3600);
const BUDGET_DISTANCE: Duration = Duration::from_secs(20 * 60);
const BUDGET_ORACLE: Duration = Duration::from_secs(60);
const BUDGET_INEQUALITIES: Duration = Duration::from_secs(1);
const BUDGET_STRUCTURE: Duration = Duration::from_secs(10 * 60);
const BUDGET_ENUMERATION: Duration = Duration::from_secs(15 * 60);

const MIN_ORACLE_CASES: usize = 3000;
const ORACLE_MAX_N: u64 = 60;
const FORMULA_MAX_N: u64 = 80;

/// `(n, W, number of maximisers or 0 when not pinned, exhaustive)`.
const TABLE_1: &[(usize, u64, usize, bool)] = &[(4, 9, 1, true), (5, 16, 2, true), (6, 26, 2, true)];
const TABLE_2: &[(usize, u64, usize, bool)] =
    &[(5, 18, 0, true), (6, 29, 0, true), (7, 44, 0, true), (8, 64, 0, true), (9, 88, 0, true)];
const TABLE_3: &[(usize, u64, usize, bool)] = &[
    (6, 32, 0, true),
    (7, 48, 0, true),
    (8, 69, 0, true),
    (9, 96, 0, true),
    (10, 126, 0, true),
    (11, 166, 0, false),
    (12, 209, 0, false),
    (13, 264, 0, false),
];

const CONNECTED_COUNTS: &[(usize, u64)] = &[(4, 6), (5, 21), (6, 112), (7, 853), (8, 11117), (9, 261080)];

#[allow(clippy::absurd_extreme_comparisons)]
fn close(a: u64, b: u64) -> bool {
    a.abs_diff(b) <= TOLERANCE
}

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, cond: bool, note: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let e = start.elapsed();
        self.require(e <= limit, format!("took {e:?}, budget {limit:?}"));
    }

    fn reports(&mut self, reports: &[CheckReport]) {
        for r in reports {
            if r.status == CheckStatus::Fail {
                let c = r.counterexample.as_ref();
                self.require(
                    false,
                    format!(
                        "{} failed: {} {}",
                        r.id,
                        c.and_then(|c| c.graph6.clone()).unwrap_or_default(),
                        c.map(|c| c.detail.clone()).unwrap_or_default()
                    ),
                );
            }
        }
    }
}

fn scope(max_n: usize, selection: Selection) -> Scope {
    Scope { max_n, selection, formula_max_n: FORMULA_MAX_N, ..Scope::default() }
}

fn suite(max_n: usize, selection: Selection, cache: &mut SurveyCache) -> Vec<CheckReport> {
    check_suite(&scope(max_n, selection), cache).expect("known selection")
}

fn check(id: &str, max_n: usize, cache: &mut SurveyCache) -> Vec<CheckReport> {
    suite(max_n, Selection::Check(id.to_string()), cache)
}

fn tables(cache: &mut SurveyCache) -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    for (k, expected) in [(1, TABLE_1), (2, TABLE_2), (3, TABLE_3)] {
        let reports = suite(10, Selection::Table(k), cache);
        o.reports(&reports);
        o.require(reports.len() == expected.len(), format!("table {k}: {} rows", reports.len()));
        for (r, &(n, w, count, exhaustive)) in reports.iter().zip(expected) {
            o.require(r.status == CheckStatus::Pass, format!("table {k} n={n}: {}", r.status));
            o.require(r.n == Some(n), format!("table {k}: row order"));
            o.require(r.optimum.is_some_and(|x| close(x, w)), format!("table {k} n={n}: W {:?}, want {w}", r.optimum));
            let evidence = if exhaustive { Evidence::Exhaustive } else { Evidence::Formula };
            o.require(r.evidence == evidence, format!("table {k} n={n}: evidence {}", r.evidence));
            if count > 0 {
                o.require(r.witness_count == Some(count), format!("table {k} n={n}: {:?} maximisers", r.witness_count));
            }
        }
    }
    o.budget(start, BUDGET_TABLES);
    o
}

fn max_distance(cache: &mut SurveyCache) -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    o.reports(&check("max-distance-lollipop", 9, cache));
    let opts = SearchOptions { max_n: 9, ..Default::default() };
    let mut classes = 0;
    for n in 4..=9usize {
        let survey = cache.get(n, &opts).expect("within cap");
        for k in 1..=n - 3 {
            let rec = survey.record(k, Objective::MaxVertexDistance).expect("non-empty");
            let want = formulas::lollipop_pendant_distance(n as u64, (n - k) as u64).expect("valid");
            o.require(close(rec.optimum, want), format!("n={n} k={k}: max D {} vs {want}", rec.optimum));
            classes += 1;
        }
    }
    o.require(classes == 21, format!("{classes} classes"));
    o.budget(start, BUDGET_DISTANCE);
    o
}

fn uniqueness(cache: &mut SurveyCache) -> Outcome {
    let mut o = Outcome::new();
    let k1 = check("max-wiener-k1", 10, cache);
    o.reports(&k1);
    let ns: Vec<_> = k1
        .iter()
        .filter(|r| r.evidence == Evidence::Exhaustive && r.status == CheckStatus::Pass)
        .filter_map(|r| r.n)
        .collect();
    o.require(ns == [7, 8, 9, 10], format!("one cut vertex: passing orders {ns:?}"));
    o.require(k1.iter().all(|r| r.witness_count == Some(1)), "one cut vertex: witness sets are not singletons");
    let k2 = check("max-wiener-k2", 10, cache);
    o.reports(&k2);
    let ex: Vec<_> = k2.iter().filter(|r| r.evidence == Evidence::Exhaustive).collect();
    o.require(
        ex.len() == 1 && ex[0].n == Some(10) && ex[0].status == CheckStatus::Pass && ex[0].witness_count == Some(1),
        "two cut vertices: n = 10 not confirmed unique",
    );
    o
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let cases = common::formula_cases(ORACLE_MAX_N);
    o.require(cases.len() >= MIN_ORACLE_CASES, format!("{} cases", cases.len()));
    for c in cases.iter().filter(|c| !close(c.formula, c.oracle)).take(3) {
        o.require(false, format!("{}: formula {} oracle {}", c.label, c.formula, c.oracle));
    }
    o.notes.push(format!("{} parameter tuples", cases.len()));
    o.budget(start, BUDGET_ORACLE);
    o
}

fn inequalities(cache: &mut SurveyCache) -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    for id in [
        "cycle-beats-dumbbell",
        "lollipop-vs-dumbbell-k1",
        "dumbbell-vs-lollipop-k2",
        "dumbbell-vs-lollipop-k3",
        "lollipop-beats-dumbbell-distance",
    ] {
        let r = check(id, 9, cache);
        o.reports(&r);
        o.require(r.iter().all(|r| r.status == CheckStatus::Pass), format!("{id} not passed"));
    }
    let k3 = check("max-wiener-k3", 9, cache);
    o.reports(&k3);
    o.require(
        k3.iter().any(|r| r.evidence == Evidence::Family && r.status == CheckStatus::Pass),
        "three cut vertices: family comparison not passed",
    );
    o.budget(start, BUDGET_INEQUALITIES);
    o
}

fn structure(cache: &mut SurveyCache) -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    for id in [
        "edge-deletion",
        "cut-vertex-split",
        "s-pendant-blocks",
        "farthest-blocks-pendant",
        "min-2-connected-triangle-free",
    ] {
        let r = check(id, 9, cache);
        o.reports(&r);
        o.require(
            r.iter().all(|r| r.status == CheckStatus::Pass && r.range.ends_with("n <= 8")),
            format!("{id}: {:?}", r[0].range),
        );
    }
    o.budget(start, BUDGET_STRUCTURE);
    o
}

fn certificates(n: usize, p: usize) -> Vec<CanonicalCertificate> {
    let mut v = fold_graphs(
        &EnumerationConfig::new(n).with_partitions(p),
        Vec::new,
        |acc: &mut Vec<CanonicalCertificate>, _, c| acc.push(c.clone()),
        |mut a, b| {
            a.extend(b);
            a
        },
    )
    .expect("within cap");
    v.sort();
    v
}

fn enumeration() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    for &(n, want) in CONNECTED_COUNTS {
        let got = count(&EnumerationConfig::new(n)).expect("within cap");
        o.require(close(got, want), format!("n={n}: {got} connected graphs, want {want}"));
    }
    let base = certificates(8, 1);
    for p in [2, 8] {
        o.require(certificates(8, p) == base, format!("n=8: multiset differs with {p} partitions"));
    }
    o.budget(start, BUDGET_ENUMERATION);
    o
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut argv = vec!["wiener-cut"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut Cursor::new(Vec::new()), &mut out, &mut err);
    (code, out)
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    for format in ["plain", "csv", "markdown"] {
        let a = run_cli(&["verify", "--table", "2", "--workers", "1", "--format", format]);
        let b = run_cli(&["verify", "--table", "2", "--workers", "8", "--format", format]);
        o.require(a.0 == 0 && b.0 == 0, format!("{format}: exit {} and {}", a.0, b.0));
        o.require(!a.1.is_empty() && a.1 == b.1, format!("{format}: outputs differ"));
    }
    o
}

type Criterion = Box<dyn FnOnce(&mut SurveyCache) -> Outcome>;

fn main() -> ExitCode {
    let mut cache = SurveyCache::new();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("max-Wiener tables for one, two and three cut vertices", Box::new(tables)),
        ("largest vertex distance equals the lollipop pendant distance", Box::new(max_distance)),
        ("unique maximisers with one and two cut vertices", Box::new(uniqueness)),
        ("closed forms agree with BFS", Box::new(|_| oracle())),
        ("family inequalities up to n = 80", Box::new(inequalities)),
        ("structural properties over all connected graphs", Box::new(structure)),
        ("enumeration counts and partition invariance", Box::new(|_| enumeration())),
        ("output independent of worker count", Box::new(|_| determinism())),
    ];
    let mut all_ok = true;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let o = f(&mut cache);
        all_ok &= o.ok;
        let status = if o.ok { "PASS" } else { "FAIL" };
        let notes = if o.notes.is_empty() { String::new() } else { format!(" ({})", o.notes.join("; ")) };
        println!("{status} criterion {}: {name} [{:.1}s]{notes}", i + 1, start.elapsed().as_secs_f64());
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

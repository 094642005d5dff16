//! Rendering of check reports, the maximum-Wiener tables and exploratory
//! rows.

use std::fmt::Write as _;

use super::checks::{table_check, Scope};
use super::explore::ExploreRow;
use super::search::SurveyCache;
use super::tables::table_rows;
use super::{CheckReport, CheckStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Markdown,
    /// Only the graphs: counterexamples for checks, witnesses for explore.
    Graph6,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn summary(reports: &[CheckReport]) -> String {
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    format!(
        "{} passed, {} failed, {} skipped",
        count(CheckStatus::Pass),
        count(CheckStatus::Fail),
        count(CheckStatus::Skipped)
    )
}

/// Elapsed times are left out unless `timing` is set, so that output is
/// reproducible byte for byte.
pub fn render_checks(reports: &[CheckReport], format: Format, timing: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for r in reports {
                let _ = write!(out, "{:<7} {} [{}]", r.status.to_string(), r.id, r.evidence);
                if let Some(n) = r.n {
                    let _ = write!(out, " n={n}");
                }
                if let Some(k) = r.k {
                    let _ = write!(out, " k={k}");
                }
                if let Some(o) = r.optimum {
                    let _ = write!(out, " optimum={o}");
                }
                if let Some(w) = r.witness_count {
                    let _ = write!(out, " count={w}");
                }
                let _ = write!(out, " ({})", r.range);
                if timing {
                    let _ = write!(out, " {}ms", r.elapsed.as_millis());
                }
                out.push('\n');
                if let Some(c) = &r.counterexample {
                    let _ =
                        writeln!(out, "        counterexample {}: {}", c.graph6.as_deref().unwrap_or("-"), c.detail);
                }
            }
            let _ = writeln!(out, "{}", summary(reports));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check_id", "status", "n", "k", "optimum", "witness_count", "elapsed_ms"])
                .expect("in memory");
            for r in reports {
                let ms = if timing { r.elapsed.as_millis().to_string() } else { String::new() };
                w.write_record([
                    r.id.clone(),
                    r.status.to_string(),
                    opt(r.n),
                    opt(r.k),
                    opt(r.optimum),
                    opt(r.witness_count),
                    ms,
                ])
                .expect("in memory");
            }
            out = String::from_utf8(w.into_inner().expect("in memory")).expect("ascii");
        }
        Format::Markdown => {
            out.push_str("| check | status | evidence | n | k | optimum | count | range |");
            out.push_str(if timing { " ms |\n" } else { "\n" });
            out.push_str("|---|---|---|---|---|---|---|---|");
            out.push_str(if timing { "---|\n" } else { "\n" });
            for r in reports {
                let _ = write!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.id,
                    r.status,
                    r.evidence,
                    opt(r.n),
                    opt(r.k),
                    opt(r.optimum),
                    opt(r.witness_count),
                    r.range
                );
                if timing {
                    let _ = write!(out, " {} |", r.elapsed.as_millis());
                }
                out.push('\n');
            }
            let failures: Vec<_> = reports.iter().filter(|r| r.counterexample.is_some()).collect();
            if !failures.is_empty() {
                out.push_str("\nCounterexamples:\n\n");
                for r in failures {
                    let c = r.counterexample.as_ref().expect("filtered");
                    let _ = writeln!(out, "- `{}`: `{}` {}", r.id, c.graph6.as_deref().unwrap_or("-"), c.detail);
                }
            }
            let _ = writeln!(out, "\n{}", summary(reports));
        }
        Format::Graph6 => {
            for r in reports {
                if let Some(g) = r.counterexample.as_ref().and_then(|c| c.graph6.as_deref()) {
                    out.push_str(g);
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// The maximum-Wiener tables for one, two and three cut vertices as
/// Markdown. Rows within `scope.max_n` are recomputed; the others show the
/// named graphs.
pub fn render_tables(scope: &Scope, cache: &mut SurveyCache) -> String {
    let mut out = String::new();
    for k in 1..=3 {
        let plural = if k == 1 { "" } else { "es" };
        let _ = writeln!(out, "## Maximum Wiener index, {k} cut vertex{plural}\n");
        out.push_str("| n | max W | maximisers | graph6 | evidence | status |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for row in table_rows(k) {
            let (report, certs) = table_check(&row, scope, cache);
            let names: Vec<&str> = row.witnesses.iter().map(|w| w.name.as_str()).collect();
            let codes: Vec<String> = certs.iter().map(|c| format!("`{c}`")).collect();
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                row.n,
                report.optimum.unwrap_or(row.wiener),
                names.join("; "),
                codes.join(" "),
                report.evidence,
                report.status
            );
        }
        out.push('\n');
    }
    out
}

/// Exploratory rows; these have no pass or fail.
pub fn render_explore(rows: &[ExploreRow], format: Format) -> String {
    let mut out = String::new();
    let flag = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    };
    match format {
        Format::Graph6 => {
            for r in rows.iter().filter_map(|r| r.record.as_ref()) {
                for c in &r.witnesses {
                    let _ = writeln!(out, "{c}");
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "k", "max_w", "witness_count", "lollipop_w", "lollipop_extremal", "witnesses"])
                .expect("in memory");
            for r in rows {
                let (opt_w, count, wit) = match &r.record {
                    Some(rec) => (
                        rec.optimum.to_string(),
                        rec.witnesses.len().to_string(),
                        rec.witnesses.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
                    ),
                    None => (String::new(), String::new(), String::new()),
                };
                w.write_record([
                    r.n.to_string(),
                    r.k.to_string(),
                    opt_w,
                    count,
                    opt(r.lollipop_wiener),
                    flag(r.lollipop_extremal).into(),
                    wit,
                ])
                .expect("in memory");
            }
            out = String::from_utf8(w.into_inner().expect("in memory")).expect("ascii");
        }
        Format::Plain | Format::Markdown => {
            out.push_str("exploratory: no known answer for four or more cut vertices\n");
            for r in rows {
                match &r.record {
                    None => {
                        let _ = writeln!(out, "n={} k={}: skipped, empty class", r.n, r.k);
                    }
                    Some(rec) => {
                        let _ = writeln!(
                            out,
                            "n={} k={}: max W = {}, {} witness{}, L_{{n,n-k}} W = {} extremal = {}",
                            r.n,
                            r.k,
                            rec.optimum,
                            rec.witnesses.len(),
                            if rec.witnesses.len() == 1 { "" } else { "es" },
                            r.lollipop_wiener.map_or("n/a".to_string(), |w| w.to_string()),
                            flag(r.lollipop_extremal)
                        );
                        for c in &rec.witnesses {
                            let _ = writeln!(out, "  {c}");
                        }
                    }
                }
            }
        }
    }
    out
}

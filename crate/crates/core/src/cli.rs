//! The `wiener-cut` command line.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 for usage errors,
//! 3 for input and output errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{self, ingest_graph6, EnumerationConfig, GraphFilter, ProgressFn, DEFAULT_MAX_ORDER};
use crate::families::{build, forked_cycle, formulas, FamilyError, FamilySpec};
use crate::graph::{graph6, Graph, VertexSet};
use crate::structure::{decompose, BlockKind};
use crate::verify::{
    self, check_ids, check_suite, explore_conjecture, render_checks, render_explore, render_tables, Format, Objective,
    Scope, SearchOptions, Selection, Survey, SurveyCache,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const DEFAULT_CAP: usize = 9;

#[derive(Debug, Parser)]
#[command(
    name = "wiener-cut",
    version,
    about = "Extremal Wiener index and vertex distance over connected graphs with k cut vertices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// graph6 file; standard input when absent or `-`
    input: Option<PathBuf>,
    /// Stop at the first malformed line
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct EnumArgs {
    /// Largest order allowed to be enumerated
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u16).range(1..=DEFAULT_MAX_ORDER as i64).map(usize::from))]
    max_n: usize,
    /// Worker threads; results do not depend on this
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..=256).map(usize::from))]
    workers: usize,
    /// Print enumeration counts to standard error
    #[arg(long)]
    progress: bool,
}

impl EnumArgs {
    fn progress_fn(&self) -> Option<ProgressFn> {
        self.progress.then(|| Arc::new(|c: u64| eprintln!("enumerated {c} graphs")) as ProgressFn)
    }

    fn search_options(&self) -> SearchOptions {
        SearchOptions { max_n: self.max_n, partitions: self.workers, progress: self.progress_fn() }
    }

    fn scope(&self) -> Scope {
        Scope { max_n: self.max_n, partitions: self.workers, progress: self.progress_fn(), ..Scope::default() }
    }

    fn check_order(&self, n: usize) -> Result<(), Failure> {
        if n > self.max_n {
            let hint = if n <= DEFAULT_MAX_ORDER { format!("; pass --max-n {n} to allow it") } else { String::new() };
            return Err(Failure::usage(format!("n = {n} is above --max-n {}{hint}", self.max_n)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Markdown,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Csv => Format::Csv,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    /// Wiener index
    Wiener,
    /// Largest vertex distance
    Distance,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print W, the largest vertex distance and the vertices attaining it for each graph6 line
    Wiener(InputArgs),
    /// Print the block-cut structure of each graph6 line
    Analyze(InputArgs),
    /// Build a family member and print it as graph6
    Family {
        #[command(subcommand)]
        spec: FamilyCmd,
    },
    /// Evaluate a closed form
    Formula {
        #[command(subcommand)]
        formula: FormulaCmd,
    },
    /// Print all graphs of one order, up to isomorphism, as graph6
    Generate {
        #[arg(long)]
        n: usize,
        /// Only connected graphs with this many cut vertices
        #[arg(long)]
        k: Option<usize>,
        /// Include disconnected graphs
        #[arg(long, conflicts_with = "k")]
        all: bool,
        #[arg(long)]
        triangle_free: bool,
        /// Print only the number of graphs
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Find every maximiser over the connected graphs with n vertices and k cut vertices
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Wiener)]
        objective: ObjectiveArg,
        /// Search a graph6 file instead of enumerating
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Run the consistency checks
    Verify {
        /// Only the max-Wiener table for K cut vertices (1, 2 or 3)
        #[arg(long, value_name = "K", conflicts_with = "lemma")]
        table: Option<usize>,
        /// Only the check with this id (see --list)
        #[arg(long, value_name = "ID")]
        lemma: Option<String>,
        /// List check ids and exit
        #[arg(long)]
        list: bool,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per randomized check
        #[arg(long, default_value_t = 1000)]
        instances: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        /// Include elapsed times
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Print the max-Wiener tables for one, two and three cut vertices as Markdown
    Report {
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Exploratory maximum-Wiener scan for four or more cut vertices
    Explore {
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(4..).map(usize::from))]
        k_min: usize,
        /// Defaults to n_max - 2
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    Path {
        n: u64,
    },
    Cycle {
        n: u64,
    },
    Star {
        n: u64,
    },
    /// Cycle of length G with a pendant path, N vertices in total
    Lollipop {
        n: u64,
        g: u64,
    },
    /// Cycles of lengths M1 and M2 joined by a path, N vertices in total
    Dumbbell {
        m1: u64,
        m2: u64,
        n: u64,
    },
    /// Cycle of length G, then a path of STEM edges ending in two pendant edges
    Forked {
        g: u64,
        stem: u64,
    },
}

#[derive(Debug, Subcommand)]
enum FormulaCmd {
    PathWiener {
        n: u64,
    },
    /// D of the I-th vertex of P_N (1-based)
    PathDistance {
        n: u64,
        i: u64,
    },
    CycleWiener {
        n: u64,
    },
    CycleDistance {
        n: u64,
    },
    LollipopWiener {
        n: u64,
        g: u64,
    },
    /// D of the pendant vertex of the lollipop
    LollipopDistance {
        n: u64,
        g: u64,
    },
    DumbbellWiener {
        m1: u64,
        m2: u64,
        n: u64,
    },
    /// Largest vertex distance of the dumbbell
    DumbbellDistance {
        m1: u64,
        m2: u64,
        n: u64,
    },
    /// W of the lollipop with K = 1, 2 or 3 cut vertices, from the cubic forms
    LollipopByCuts {
        n: u64,
        k: u64,
    },
    /// W of the lollipop on N-2 vertices with two pendant edges at its end
    ForkedLollipopWiener {
        n: u64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_IO, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::io(format!("write failed: {e}"))
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<verify::VerifyError> for Failure {
    fn from(e: verify::VerifyError) -> Failure {
        match e {
            verify::VerifyError::Enumeration(_) => Failure::io(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<enumerate::EnumerationError> for Failure {
    fn from(e: enumerate::EnumerationError) -> Failure {
        match e {
            enumerate::EnumerationError::Canon(_) => Failure::io(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// Runs the command line with explicit streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Wiener(input) => per_graph(&input, stdin, out, err, wiener_line),
        Command::Analyze(input) => per_graph(&input, stdin, out, err, analyze_line),
        Command::Family { spec } => {
            writeln!(out, "{}", graph6::encode(&family(spec)?))?;
            Ok(EXIT_OK)
        }
        Command::Formula { formula } => {
            writeln!(out, "{}", evaluate(formula)?)?;
            Ok(EXIT_OK)
        }
        Command::Generate { n, k, all, triangle_free, count, enumeration } => {
            enumeration.check_order(n)?;
            let mut config = EnumerationConfig::new(n).with_partitions(enumeration.workers);
            config.connected_only = !all;
            config.cut_vertices = k;
            config.triangle_free_only = triangle_free;
            config.progress = enumeration.progress_fn();
            if count {
                writeln!(out, "{}", enumerate::count(&config)?)?;
            } else {
                for item in enumerate::generate(&config)? {
                    let (_, cert) = item?;
                    writeln!(out, "{cert}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Search { n, k, objective, input, format, enumeration } => {
            let objective = match objective {
                ObjectiveArg::Wiener => Objective::MaxWiener,
                ObjectiveArg::Distance => Objective::MaxVertexDistance,
            };
            let survey = match input {
                Some(path) => {
                    let reader = open(&path)?;
                    let filter = GraphFilter { order: Some(n), cut_vertices: Some(k), ..GraphFilter::default() };
                    let mut graphs = Vec::new();
                    for item in ingest_graph6(reader, filter, true) {
                        graphs.push(item.map_err(|e| Failure::io(e.to_string()))?);
                    }
                    Survey::from_graphs(n, graphs)?
                }
                None => {
                    enumeration.check_order(n)?;
                    Survey::compute(n, &enumeration.search_options())?
                }
            };
            let rec = survey.record(k, objective)?;
            if Format::from(format) != Format::Graph6 {
                let count = rec.witnesses.len();
                writeln!(
                    out,
                    "max {} = {}, {} witness{}",
                    objective.symbol(),
                    rec.optimum,
                    count,
                    if count == 1 { "" } else { "es" }
                )?;
            }
            for c in &rec.witnesses {
                writeln!(out, "{c}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { table, lemma, list, seed, instances, format, timing, enumeration } => {
            if list {
                for id in check_ids() {
                    writeln!(out, "{id}")?;
                }
                return Ok(EXIT_OK);
            }
            let selection = match (table, lemma) {
                (Some(k), _) => Selection::Table(k),
                (None, Some(id)) => Selection::Check(id),
                (None, None) => Selection::All,
            };
            let scope = Scope { seed, instances, selection, ..enumeration.scope() };
            let reports = check_suite(&scope, &mut SurveyCache::new()).map_err(|e| match e {
                verify::VerifyError::UnknownCheck(id) => {
                    Failure::usage(format!("unknown check {id}; valid ids: {}", check_ids().join(", ")))
                }
                e => e.into(),
            })?;
            out.write_all(render_checks(&reports, format.into(), timing).as_bytes())?;
            Ok(if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Report { enumeration } => {
            out.write_all(render_tables(&enumeration.scope(), &mut SurveyCache::new()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Explore { n_min, n_max, k_min, k_max, format, enumeration } => {
            enumeration.check_order(n_max)?;
            let k_max = k_max.unwrap_or(n_max.saturating_sub(2)).max(k_min);
            let rows = explore_conjecture(
                n_min..=n_max,
                k_min..=k_max,
                &enumeration.search_options(),
                &mut SurveyCache::new(),
            )?;
            out.write_all(render_explore(&rows, format.into()).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn open(path: &PathBuf) -> Result<Box<dyn BufRead>, Failure> {
    let f = File::open(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(f)))
}

/// Applies `line` to every graph of the input. Malformed lines are reported
/// on standard error and make the exit status 3.
fn per_graph(
    input: &InputArgs,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    line: fn(&Graph) -> String,
) -> Result<i32, Failure> {
    let reader: Box<dyn BufRead + '_> = match &input.input {
        Some(p) if p.as_os_str() != "-" => open(p)?,
        _ => Box::new(stdin),
    };
    let mut code = EXIT_OK;
    for item in ingest_graph6(reader, GraphFilter::default(), input.strict) {
        match item {
            Ok(g) => writeln!(out, "{}", line(&g))?,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                code = EXIT_IO;
            }
        }
    }
    Ok(code)
}

fn vertex_list(vs: VertexSet) -> String {
    vs.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join(",")
}

fn wiener_line(g: &Graph) -> String {
    match (g.wiener_index(), g.vertex_distances(), g.peripherian_vertices()) {
        (Ok(w), Ok(d), Ok(p)) => {
            format!("W={w} Dmax={} peripherian={}", d.iter().max().copied().unwrap_or(0), vertex_list(p))
        }
        _ => format!("disconnected n={}", g.order()),
    }
}

fn analyze_line(g: &Graph) -> String {
    let Ok(dec) = decompose(g) else {
        return format!("disconnected n={}", g.order());
    };
    let blocks: Vec<String> = dec
        .blocks()
        .iter()
        .map(|b| {
            let kind = match b.kind {
                BlockKind::NonPendant => "non-pendant",
                BlockKind::Pendant => "pendant",
                BlockKind::SPendant => "s-pendant",
            };
            let vs: Vec<String> = b.vertices.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}:{kind}", vs.join(","))
        })
        .collect();
    format!(
        "n={} k={} cut={} blocks={}",
        g.order(),
        dec.cut_vertex_count(),
        if dec.cut_vertices().is_empty() { "-".to_string() } else { vertex_list(dec.cut_vertices()) },
        blocks.join(" ")
    )
}

fn family(spec: FamilyCmd) -> Result<Graph, FamilyError> {
    let spec = match spec {
        FamilyCmd::Path { n } => FamilySpec::Path { n },
        FamilyCmd::Cycle { n } => FamilySpec::Cycle { n },
        FamilyCmd::Star { n } => FamilySpec::Star { n },
        FamilyCmd::Lollipop { n, g } => FamilySpec::Lollipop { n, g },
        FamilyCmd::Dumbbell { m1, m2, n } => FamilySpec::Dumbbell { m1, m2, n },
        FamilyCmd::Forked { g, stem } => return forked_cycle(g, stem),
    };
    build(&spec)
}

fn evaluate(f: FormulaCmd) -> Result<u64, FamilyError> {
    match f {
        FormulaCmd::PathWiener { n } => formulas::path_wiener(n),
        FormulaCmd::PathDistance { n, i } => formulas::path_vertex_distance(n, i),
        FormulaCmd::CycleWiener { n } => formulas::cycle_wiener(n),
        FormulaCmd::CycleDistance { n } => formulas::cycle_vertex_distance(n),
        FormulaCmd::LollipopWiener { n, g } => formulas::lollipop_wiener(n, g),
        FormulaCmd::LollipopDistance { n, g } => formulas::lollipop_pendant_distance(n, g),
        FormulaCmd::DumbbellWiener { m1, m2, n } => formulas::dumbbell_wiener(m1, m2, n),
        FormulaCmd::DumbbellDistance { m1, m2, n } => verify::dumbbell_max_vertex_distance(m1, m2, n),
        FormulaCmd::LollipopByCuts { n, k } => formulas::lollipop_wiener_by_cuts(n, k),
        FormulaCmd::ForkedLollipopWiener { n } => formulas::forked_lollipop_wiener(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = io::Cursor::new(input.as_bytes().to_vec());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["wiener-cut"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn family_into_wiener() {
        let (code, g6, _) = call(&["family", "lollipop", "8", "6"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["wiener"], &g6);
        assert_eq!(code, 0);
        assert_eq!(out, "W=64 Dmax=22 peripherian=v7\n");
    }

    #[test]
    fn usage_and_decode_errors() {
        assert_eq!(call(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(call(&["search", "--n", "10", "--k", "1"], "").0, EXIT_USAGE);
        assert_eq!(call(&["family", "cycle", "2"], "").0, EXIT_USAGE);
        let (code, out, err) = call(&["wiener"], "Bw\n!!\n");
        assert_eq!(code, EXIT_IO);
        assert_eq!(out.lines().count(), 1);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn formula_values() {
        assert_eq!(call(&["formula", "cycle-wiener", "7"], "").1, "42\n");
        assert_eq!(call(&["formula", "lollipop-wiener", "8", "6"], "").1, "64\n");
    }
}

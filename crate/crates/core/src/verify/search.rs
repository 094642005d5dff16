//! Extremal searches over the classes of connected graphs with a given number
//! of cut vertices.
//!
//! One enumeration pass over all connected graphs of order `n` fills a
//! [`Survey`] holding, for every `k` at once, the class size and the
//! maximisers of both objectives. Partial surveys merge by max-then-union, so
//! the partition count never changes the result.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::enumerate::{canonical_certificate, fold_graphs, CanonicalCertificate, EnumerationConfig, ProgressFn};
use crate::graph::{transmission, Graph};
use crate::structure::cut_vertex_mask;

use super::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    MaxWiener,
    MaxVertexDistance,
}

impl Objective {
    /// Value of the objective on a connected graph.
    pub fn score(self, g: &Graph) -> u64 {
        let (w, d) = scores(g.rows());
        match self {
            Objective::MaxWiener => w,
            Objective::MaxVertexDistance => d,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Objective::MaxWiener => "W",
            Objective::MaxVertexDistance => "D",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "max {}", self.symbol())
    }
}

/// `(W, max_v D(v))` of a connected graph.
fn scores(rows: &[u64]) -> (u64, u64) {
    let mut total = 0;
    let mut best = 0;
    for v in 0..rows.len() {
        let t = transmission(rows, v).expect("searched graphs are connected");
        total += t;
        best = best.max(t);
    }
    (total / 2, best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub n: usize,
    pub k: usize,
    pub objective: Objective,
    pub optimum: u64,
    /// Certificates of every extremal class, sorted.
    pub witnesses: Vec<CanonicalCertificate>,
    pub class_size: u64,
    pub elapsed: Duration,
}

impl ExtremalRecord {
    /// Re-scores every witness; true iff each one attains the optimum and
    /// lies in the class.
    pub fn is_consistent(&self) -> bool {
        !self.witnesses.is_empty()
            && self.witnesses.iter().all(|c| {
                let g = c.to_graph();
                g.order() == self.n
                    && g.is_connected()
                    && cut_vertex_mask(g.rows()).count_ones() as usize == self.k
                    && self.objective.score(&g) == self.optimum
            })
    }

    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses.iter().map(CanonicalCertificate::to_graph).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Best {
    value: u64,
    certs: Vec<CanonicalCertificate>,
}

impl Best {
    #[inline]
    fn offer(&mut self, value: u64, cert: &CanonicalCertificate) {
        if self.certs.is_empty() || value > self.value {
            self.value = value;
            self.certs.clear();
            self.certs.push(cert.clone());
        } else if value == self.value {
            self.certs.push(cert.clone());
        }
    }

    fn merge(mut self, other: Best) -> Best {
        if other.certs.is_empty() || (!self.certs.is_empty() && other.value < self.value) {
            return self;
        }
        if self.certs.is_empty() || other.value > self.value {
            return other;
        }
        self.certs.extend(other.certs);
        self
    }

    fn finish(&mut self) {
        self.certs.sort_unstable();
        self.certs.dedup();
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct ClassSummary {
    size: u64,
    wiener: Best,
    distance: Best,
}

impl ClassSummary {
    fn merge(self, other: ClassSummary) -> ClassSummary {
        ClassSummary {
            size: self.size + other.size,
            wiener: self.wiener.merge(other.wiener),
            distance: self.distance.merge(other.distance),
        }
    }
}

/// Class sizes and maximisers for every cut-vertex count at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survey {
    pub n: usize,
    classes: Vec<ClassSummary>,
    pub elapsed: Duration,
}

#[derive(Clone)]
pub struct SearchOptions {
    /// Largest order the search may enumerate.
    pub max_n: usize,
    pub partitions: usize,
    pub progress: Option<ProgressFn>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_n: 9, partitions: 1, progress: None }
    }
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("max_n", &self.max_n)
            .field("partitions", &self.partitions)
            .finish_non_exhaustive()
    }
}

fn slots(n: usize) -> usize {
    n.saturating_sub(1).max(1)
}

fn record_graph(classes: &mut [ClassSummary], g: &Graph, cert: &CanonicalCertificate) {
    let k = cut_vertex_mask(g.rows()).count_ones() as usize;
    let (w, d) = scores(g.rows());
    let c = &mut classes[k];
    c.size += 1;
    c.wiener.offer(w, cert);
    c.distance.offer(d, cert);
}

impl Survey {
    /// Enumerates every connected graph of order `n`.
    pub fn compute(n: usize, opts: &SearchOptions) -> Result<Survey, VerifyError> {
        if n > opts.max_n {
            return Err(VerifyError::BeyondCap { n, cap: opts.max_n });
        }
        let start = Instant::now();
        let mut config = EnumerationConfig::new(n).with_partitions(opts.partitions);
        config.max_order = opts.max_n;
        config.progress = opts.progress.clone();
        let classes = fold_graphs(
            &config,
            || vec![ClassSummary::default(); slots(n)],
            |acc, g, cert| record_graph(acc, g, cert),
            |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect(),
        )?;
        Ok(Survey::finish(n, classes, start))
    }

    /// Survey of an arbitrary stream of graphs of order `n`. Graphs of other
    /// orders and disconnected graphs are ignored. Isomorphic duplicates
    /// count towards class sizes but appear once among the witnesses.
    pub fn from_graphs<I: IntoIterator<Item = Graph>>(n: usize, graphs: I) -> Result<Survey, VerifyError> {
        let start = Instant::now();
        let mut classes = vec![ClassSummary::default(); slots(n)];
        for g in graphs {
            if g.order() != n || !g.is_connected() {
                continue;
            }
            let cert = canonical_certificate(&g).map_err(crate::enumerate::EnumerationError::from)?;
            record_graph(&mut classes, &g, &cert);
        }
        Ok(Survey::finish(n, classes, start))
    }

    fn finish(n: usize, mut classes: Vec<ClassSummary>, start: Instant) -> Survey {
        for c in &mut classes {
            c.wiener.finish();
            c.distance.finish();
        }
        Survey { n, classes, elapsed: start.elapsed() }
    }

    /// Number of isomorphism classes with `k` cut vertices.
    pub fn class_size(&self, k: usize) -> u64 {
        self.classes.get(k).map_or(0, |c| c.size)
    }

    pub fn total(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn record(&self, k: usize, objective: Objective) -> Result<ExtremalRecord, VerifyError> {
        let empty = VerifyError::EmptyClass { n: self.n, k };
        let class = self.classes.get(k).ok_or(empty.clone())?;
        if class.size == 0 {
            return Err(empty);
        }
        let best = match objective {
            Objective::MaxWiener => &class.wiener,
            Objective::MaxVertexDistance => &class.distance,
        };
        Ok(ExtremalRecord {
            n: self.n,
            k,
            objective,
            optimum: best.value,
            witnesses: best.certs.clone(),
            class_size: class.size,
            elapsed: self.elapsed,
        })
    }
}

/// Surveys computed so far, shared between checks.
#[derive(Debug, Default)]
pub struct SurveyCache {
    surveys: HashMap<usize, Arc<Survey>>,
}

impl SurveyCache {
    pub fn new() -> Self {
        SurveyCache::default()
    }

    pub fn get(&mut self, n: usize, opts: &SearchOptions) -> Result<Arc<Survey>, VerifyError> {
        if let Some(s) = self.surveys.get(&n) {
            return Ok(s.clone());
        }
        let s = Arc::new(Survey::compute(n, opts)?);
        self.surveys.insert(n, s.clone());
        Ok(s)
    }
}

fn class_record(n: usize, k: usize, objective: Objective, opts: &SearchOptions) -> Result<ExtremalRecord, VerifyError> {
    if n == 0 || k > n.saturating_sub(2) {
        return Err(VerifyError::EmptyClass { n, k });
    }
    Survey::compute(n, opts)?.record(k, objective)
}

/// Largest Wiener index over the class, with every maximising class.
pub fn search_max_wiener(n: usize, k: usize, opts: &SearchOptions) -> Result<ExtremalRecord, VerifyError> {
    class_record(n, k, Objective::MaxWiener, opts)
}

/// Largest vertex distance over the class; witnesses are the graphs having a
/// vertex that attains it.
pub fn search_max_vertex_distance(n: usize, k: usize, opts: &SearchOptions) -> Result<ExtremalRecord, VerifyError> {
    class_record(n, k, Objective::MaxVertexDistance, opts)
}

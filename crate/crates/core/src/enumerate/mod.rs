//! Enumeration of graphs up to isomorphism, and graph6 ingestion.
//!
//! Generation works level by level: the canonical graphs of order `n - 1`
//! are computed once and their children are streamed. Partitioned runs
//! assign parent `i` to partition `i mod p`; since every isomorphism class
//! has exactly one parent, the partitions are disjoint and their union is the
//! whole class regardless of `p`.

pub mod canon;
mod generate;
mod ingest;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::Graph;
use crate::structure::cut_vertex_mask;

pub use canon::{canonical_certificate, canonical_form, CanonError, CanonicalCertificate};
pub use ingest::{ingest_graph6, Ingest, IngestError, IngestErrorKind};

use canon::DEFAULT_NODE_BUDGET;
use generate::{children, level, Node};

/// Default upper bound on the order accepted by the generator.
pub const DEFAULT_MAX_ORDER: usize = 10;

/// Number of emitted graphs between two progress callbacks.
pub const PROGRESS_INTERVAL: u64 = 100_000;

pub type ProgressFn = Arc<dyn Fn(u64) + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} is outside 1..={max} (raise max_order to go further)")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("a graph on {n} vertices has at most {max} cut vertices, not {k}")]
    CutVerticesOutOfRange { n: usize, k: usize, max: usize },
    #[error("partition count must be at least 1")]
    NoPartitions,
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Predicate applied to generated or ingested graphs.
///
/// A cut-vertex constraint only admits connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphFilter {
    pub order: Option<usize>,
    pub cut_vertices: Option<usize>,
    pub triangle_free_only: bool,
    pub connected_only: bool,
}

impl GraphFilter {
    pub fn matches(&self, g: &Graph) -> bool {
        if self.order.is_some_and(|n| n != g.order()) {
            return false;
        }
        if (self.connected_only || self.cut_vertices.is_some()) && !g.is_connected() {
            return false;
        }
        if let Some(k) = self.cut_vertices {
            if cut_vertex_mask(g.rows()).count_ones() as usize != k {
                return false;
            }
        }
        !(self.triangle_free_only && g.has_triangle())
    }
}

#[derive(Clone)]
pub struct EnumerationConfig {
    pub n: usize,
    pub cut_vertices: Option<usize>,
    pub triangle_free_only: bool,
    pub connected_only: bool,
    pub partitions: usize,
    pub max_order: usize,
    pub progress: Option<ProgressFn>,
}

impl std::fmt::Debug for EnumerationConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnumerationConfig")
            .field("n", &self.n)
            .field("cut_vertices", &self.cut_vertices)
            .field("triangle_free_only", &self.triangle_free_only)
            .field("connected_only", &self.connected_only)
            .field("partitions", &self.partitions)
            .field("max_order", &self.max_order)
            .finish_non_exhaustive()
    }
}

impl EnumerationConfig {
    /// Connected graphs of order `n`, one partition.
    pub fn new(n: usize) -> Self {
        EnumerationConfig {
            n,
            cut_vertices: None,
            triangle_free_only: false,
            connected_only: true,
            partitions: 1,
            max_order: DEFAULT_MAX_ORDER,
            progress: None,
        }
    }

    pub fn with_cut_vertices(mut self, k: usize) -> Self {
        self.cut_vertices = Some(k);
        self
    }

    pub fn with_partitions(mut self, p: usize) -> Self {
        self.partitions = p;
        self
    }

    pub fn filter(&self) -> GraphFilter {
        GraphFilter {
            order: Some(self.n),
            cut_vertices: self.cut_vertices,
            triangle_free_only: self.triangle_free_only,
            connected_only: self.connected_only,
        }
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        let max = self.max_order.min(canon::MAX_CANON_ORDER);
        if self.n < 1 || self.n > max {
            return Err(EnumerationError::OrderOutOfRange { n: self.n, max });
        }
        if let Some(k) = self.cut_vertices {
            let max = self.n.saturating_sub(2);
            if k > max {
                return Err(EnumerationError::CutVerticesOutOfRange { n: self.n, k, max });
            }
        }
        if self.partitions == 0 {
            return Err(EnumerationError::NoPartitions);
        }
        Ok(())
    }

    /// Connected generation also suffices for a cut-vertex filter.
    fn connected_generation(&self) -> bool {
        self.connected_only || self.cut_vertices.is_some()
    }

    fn parents(&self) -> Result<Vec<Node>, EnumerationError> {
        self.validate()?;
        if self.n == 1 {
            return Ok(Vec::new());
        }
        Ok(level(self.n - 1, self.connected_generation(), DEFAULT_NODE_BUDGET)?)
    }
}

struct Progress {
    count: AtomicU64,
    callback: Option<ProgressFn>,
}

impl Progress {
    fn tick(&self) {
        if let Some(cb) = &self.callback {
            let c = self.count.fetch_add(1, Ordering::Relaxed) + 1;
            if c.is_multiple_of(PROGRESS_INTERVAL) {
                cb(c);
            }
        }
    }
}

/// Lazy stream of canonical graphs matching a configuration, in a fixed
/// deterministic order.
pub struct GraphStream {
    parents: std::vec::IntoIter<Node>,
    pending: std::vec::IntoIter<Node>,
    filter: GraphFilter,
    connected: bool,
    progress: Progress,
    failed: bool,
}

impl Iterator for GraphStream {
    type Item = Result<(Graph, CanonicalCertificate), EnumerationError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            for node in self.pending.by_ref() {
                if self.filter.matches(&node.graph) {
                    self.progress.tick();
                    return Some(Ok((node.graph, node.cert)));
                }
            }
            let parent = self.parents.next()?;
            match children(&parent, self.connected, DEFAULT_NODE_BUDGET) {
                Ok(c) => self.pending = c.into_iter(),
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e.into()));
                }
            }
        }
    }
}

/// Streams every graph described by `config`. Partitioning is ignored here;
/// see [`fold_graphs`].
pub fn generate(config: &EnumerationConfig) -> Result<GraphStream, EnumerationError> {
    let parents = config.parents()?;
    let pending = if config.n == 1 { vec![Node::root()] } else { Vec::new() };
    Ok(GraphStream {
        parents: parents.into_iter(),
        pending: pending.into_iter(),
        filter: config.filter(),
        connected: config.connected_generation(),
        progress: Progress { count: AtomicU64::new(0), callback: config.progress.clone() },
        failed: false,
    })
}

/// Streams the connected graphs of order `config.n`, whatever
/// `config.connected_only` says.
pub fn generate_connected(config: &EnumerationConfig) -> Result<GraphStream, EnumerationError> {
    let mut c = config.clone();
    c.connected_only = true;
    generate(&c)
}

/// Streams the class of connected graphs on `n` vertices with exactly `k`
/// cut vertices.
pub fn generate_class(n: usize, k: usize) -> Result<GraphStream, EnumerationError> {
    generate(&EnumerationConfig::new(n).with_cut_vertices(k))
}

/// Folds every matching graph into an accumulator. Partition `j` handles
/// parents `j, j + p, j + 2p, ...` on its own thread with its own
/// accumulator, and the results are combined with `merge` in partition order.
/// For results independent of `p`, `merge` must be associative and
/// commutative with `init()` as identity.
pub fn fold_graphs<A, I, F, M>(config: &EnumerationConfig, init: I, fold: F, merge: M) -> Result<A, EnumerationError>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Graph, &CanonicalCertificate) + Sync,
    M: Fn(A, A) -> A,
{
    let parents = config.parents()?;
    let filter = config.filter();
    let connected = config.connected_generation();
    let progress = Progress { count: AtomicU64::new(0), callback: config.progress.clone() };
    if config.n == 1 {
        let mut acc = init();
        let root = Node::root();
        if filter.matches(&root.graph) {
            progress.tick();
            fold(&mut acc, &root.graph, &root.cert);
        }
        return Ok(acc);
    }
    let p = config.partitions;
    let run = |j: usize| -> Result<A, EnumerationError> {
        let mut acc = init();
        for parent in parents.iter().skip(j).step_by(p) {
            for child in children(parent, connected, DEFAULT_NODE_BUDGET)? {
                if filter.matches(&child.graph) {
                    progress.tick();
                    fold(&mut acc, &child.graph, &child.cert);
                }
            }
        }
        Ok(acc)
    };
    let parts: Vec<Result<A, EnumerationError>> = if p == 1 {
        vec![run(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..p).map(|j| scope.spawn(move || run(j))).collect();
            handles.into_iter().map(|h| h.join().expect("partition worker panicked")).collect()
        })
    };
    let mut total = init();
    for part in parts {
        total = merge(total, part?);
    }
    Ok(total)
}

/// Number of graphs matching `config`.
pub fn count(config: &EnumerationConfig) -> Result<u64, EnumerationError> {
    fold_graphs(config, || 0u64, |c, _, _| *c += 1, |a, b| a + b)
}

//! Exhaustive extremal searches, block surgery, and the consistency checks
//! that tie the closed forms, the structure theory and the enumerations
//! together.

mod checks;
mod explore;
mod random;
mod report;
mod search;
mod surgery;
mod tables;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::enumerate::EnumerationError;
use crate::structure::StructureError;

pub use checks::{check_ids, check_suite, dumbbell_max_vertex_distance, Scope, Selection};
pub use explore::{explore_conjecture, ExploreRow};
pub use report::{render_checks, render_explore, render_tables, Format};
pub use search::{
    search_max_vertex_distance, search_max_wiener, ExtremalRecord, Objective, SearchOptions, Survey, SurveyCache,
};
pub use surgery::surgery_pendant_block_to_cycle;
pub use tables::{table_rows, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("the class of connected graphs with {n} vertices and {k} cut vertices is empty")]
    EmptyClass { n: usize, k: usize },
    #[error("order {n} is above the exhaustive search cap {cap}")]
    BeyondCap { n: usize, cap: usize },
    #[error("block {0} is not a pendant block")]
    NotPendant(usize),
    #[error("block has {0} vertices; the surgery needs at least 4")]
    BlockTooSmall(usize),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        })
    }
}

/// How a check obtained its evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Evidence {
    /// Every isomorphism class in range was examined.
    Exhaustive,
    /// Closed forms or BFS on explicitly built family members.
    Family,
    /// Closed-form values of named graphs only, without an optimality claim.
    Formula,
    /// Seeded random instances.
    Randomized,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evidence::Exhaustive => "exhaustive",
            Evidence::Family => "family",
            Evidence::Formula => "formula",
            Evidence::Randomized => "randomized",
        })
    }
}

/// A violating instance: the graph (when one exists) and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub evidence: Evidence,
    pub range: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub optimum: Option<u64>,
    pub witness_count: Option<usize>,
    pub elapsed: Duration,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub(crate) fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        evidence: Evidence,
        range: impl Into<String>,
    ) -> Self {
        CheckReport {
            id: id.into(),
            statement: statement.into(),
            status: CheckStatus::Pass,
            evidence,
            range: range.into(),
            n: None,
            k: None,
            optimum: None,
            witness_count: None,
            elapsed: Duration::ZERO,
            counterexample: None,
        }
    }

    /// Marks the check failed. A failure always carries its counterexample.
    pub(crate) fn fail(&mut self, graph6: Option<String>, detail: impl Into<String>) {
        self.status = CheckStatus::Fail;
        self.counterexample = Some(Counterexample { graph6, detail: detail.into() });
    }

    pub(crate) fn skip(&mut self, reason: impl Into<String>) {
        self.status = CheckStatus::Skipped;
        self.range = reason.into();
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

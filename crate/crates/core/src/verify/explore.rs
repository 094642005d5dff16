//! Exploratory runs for four or more cut vertices, where no closed answer
//! is known: is `L_{n,n-k}` still among the Wiener maximisers?

use std::ops::RangeInclusive;

use crate::enumerate::canonical_certificate;
use crate::families::{build, FamilySpec};

use super::search::{ExtremalRecord, Objective, SearchOptions, SurveyCache};
use super::VerifyError;

#[derive(Debug, Clone)]
pub struct ExploreRow {
    pub n: usize,
    pub k: usize,
    /// `None` when the class is empty.
    pub record: Option<ExtremalRecord>,
    /// `W(L_{n,n-k})`, when `n - k >= 3`.
    pub lollipop_wiener: Option<u64>,
    /// Whether `L_{n,n-k}` is among the maximisers; `None` when it does not exist.
    pub lollipop_extremal: Option<bool>,
}

impl ExploreRow {
    pub fn lollipop_unique(&self) -> Option<bool> {
        let rec = self.record.as_ref()?;
        self.lollipop_extremal.map(|e| e && rec.witnesses.len() == 1)
    }
}

/// One row per `(n, k)` with `k` in `ks`. Rows for empty classes carry no
/// record.
pub fn explore_conjecture(
    ns: RangeInclusive<usize>,
    ks: RangeInclusive<usize>,
    opts: &SearchOptions,
    cache: &mut SurveyCache,
) -> Result<Vec<ExploreRow>, VerifyError> {
    let mut rows = Vec::new();
    for n in ns {
        for k in ks.clone() {
            if n < 3 || k > n - 2 {
                rows.push(ExploreRow { n, k, record: None, lollipop_wiener: None, lollipop_extremal: None });
                continue;
            }
            let rec = cache.get(n, opts)?.record(k, Objective::MaxWiener)?;
            let (mut lw, mut le) = (None, None);
            if n - k >= 3 {
                let lol = build(&FamilySpec::Lollipop { n: n as u64, g: (n - k) as u64 }).expect("valid");
                lw = Some(lol.wiener_index().expect("connected"));
                let cert = canonical_certificate(&lol).expect("small");
                le = Some(rec.witnesses.contains(&cert));
            }
            rows.push(ExploreRow { n, k, record: Some(rec), lollipop_wiener: lw, lollipop_extremal: le });
        }
    }
    Ok(rows)
}

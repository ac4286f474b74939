//! Grid scans over `(m, n)` for non-real-rooted `W(P_{m,n})`.
//!
//! `W(P_{m,n}) = W(P_{n,m})` as polynomials, so each unordered pair is
//! analysed once. Cells run in parallel on the current rayon pool and are
//! reported in grid order (`m` ascending, then `n`).

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed::w_pmn;
use crate::realroots::{analyze, RootReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub m: u64,
    pub n: u64,
    pub degree: usize,
    /// Non-real roots with multiplicity; always even.
    pub nonreal_count: usize,
    pub report: RootReport,
}

impl SearchResult {
    pub fn is_counterexample(&self) -> bool {
        self.nonreal_count > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalOrder {
    /// Smallest `m + n`.
    BySum,
    /// Smallest `min(m, n)`, ties broken by `m + n`.
    ByDegree,
}

/// Certifies a single cell.
pub fn analyze_cell(m: u64, n: u64, want_approx: bool) -> Result<SearchResult> {
    let w = w_pmn(m, n);
    let report = analyze(&w, want_approx)?;
    Ok(SearchResult {
        m,
        n,
        degree: report.degree,
        nonreal_count: report.nonreal_with_multiplicity,
        report,
    })
}

fn check_range(name: &str, r: &RangeInclusive<u64>) -> Result<()> {
    if r.is_empty() || *r.start() == 0 {
        return Err(Error::InvalidArgument(format!(
            "{name} range must be non-empty with bounds >= 1, got {}..={}",
            r.start(),
            r.end()
        )));
    }
    Ok(())
}

/// Grid cells after mirror deduplication: `(m, n)` is kept when `m >= n`,
/// or when its mirror `(n, m)` lies outside the grid.
pub fn grid_cells(m_range: &RangeInclusive<u64>, n_range: &RangeInclusive<u64>) -> Vec<(u64, u64)> {
    let mut cells = Vec::new();
    for m in m_range.clone() {
        for n in n_range.clone() {
            if m >= n || !(m_range.contains(&n) && n_range.contains(&m)) {
                cells.push((m, n));
            }
        }
    }
    cells
}

/// Analyses every deduplicated cell of the grid.
pub fn scan(
    m_range: RangeInclusive<u64>,
    n_range: RangeInclusive<u64>,
    only_failures: bool,
    want_approx: bool,
) -> Result<Vec<SearchResult>> {
    check_range("m", &m_range)?;
    check_range("n", &n_range)?;
    let results = grid_cells(&m_range, &n_range)
        .into_par_iter()
        .map(|(m, n)| analyze_cell(m, n, want_approx))
        .collect::<Result<Vec<_>>>()?;
    Ok(results
        .into_iter()
        .filter(|r| !only_failures || r.is_counterexample())
        .collect())
}

/// All failing cells in `[1, limit_m] x [1, limit_n]` that are minimal under `order`.
pub fn minimal_counterexamples(
    limit_m: u64,
    limit_n: u64,
    order: MinimalOrder,
) -> Result<Vec<SearchResult>> {
    let failures = scan(1..=limit_m, 1..=limit_n, true, false)?;
    let key = |r: &SearchResult| match order {
        MinimalOrder::BySum => (r.m + r.n, 0),
        MinimalOrder::ByDegree => (r.m.min(r.n), r.m + r.n),
    };
    let Some(best) = failures.iter().map(key).min() else {
        return Ok(Vec::new());
    };
    Ok(failures.into_iter().filter(|r| key(r) == best).collect())
}

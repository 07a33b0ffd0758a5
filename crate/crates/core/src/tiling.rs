//! Periodic translation sets, exact coverage verification by rational
//! sweep-line, and the alternation structure of tilings by unequal intervals.
//!
//! All coverage arithmetic uses half-open intervals `[lo, hi)`, so shared
//! endpoints are neither gaps nor overlaps: the measure-zero slack in the
//! definition of a tiling becomes an exactly decidable predicate.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, serde_rational, serde_rational_vec, RatInterval, Rational};
use crate::region::{BiIntervalRegion, CaseSelector, Classification};

/// A periodic translation set `T = {residue + m·period : m ∈ ℤ}`.
///
/// Residues are stored reduced mod the period, sorted and deduplicated. A
/// tiling by a measure-one region forces one residue per unit of period
/// (density one); specs violating that are representable and simply fail
/// verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingSpec {
    #[serde(with = "serde_rational")]
    period: Rational,
    #[serde(with = "serde_rational_vec")]
    residues: Vec<Rational>,
}

impl TilingSpec {
    pub fn new(period: Rational, residues: Vec<Rational>) -> Result<Self> {
        if period <= Rational::zero() {
            return Err(Error::InvalidTiling(format!(
                "period {period} must be positive"
            )));
        }
        if residues.is_empty() {
            return Err(Error::InvalidTiling(
                "at least one residue is required".into(),
            ));
        }
        let mut reduced: Vec<Rational> = residues
            .into_iter()
            .map(|x| {
                let q = x / period;
                x - q.floor() * period
            })
            .collect();
        reduced.sort();
        reduced.dedup();
        Ok(TilingSpec {
            period,
            residues: reduced,
        })
    }

    pub fn period(&self) -> Rational {
        self.period
    }

    pub fn residues(&self) -> &[Rational] {
        &self.residues
    }

    /// Residues per unit of period; equals one for any genuine tiling by a
    /// measure-one region.
    pub fn density(&self) -> Rational {
        Rational::from_integer(self.residues.len() as i64) / self.period
    }

    /// All translates `t ∈ [lo, hi)`, sorted ascending.
    pub fn translates_in(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for residue in &self.residues {
            let m_lo = ((lo - residue) / self.period).ceil().to_integer();
            let m_hi = crate::rational::floor_strict(&((hi - residue) / self.period));
            for m in m_lo..=m_hi {
                out.push(residue + self.period * m);
            }
        }
        out.sort();
        out
    }
}

/// Exact coverage result of a proposed tiling over a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub exact_cover: bool,
    pub gaps: Vec<RatInterval>,
    pub overlaps: Vec<RatInterval>,
    pub window: RatInterval,
}

/// Case classification along the tiling route. Output contract identical to
/// `classify_region`; the agreement of the two is a theorem exercised by the
/// test suite, not shared code.
pub fn classify_tiles(region: &BiIntervalRegion) -> Classification {
    // the gap between the intervals must be filled by whole translates
    let gap = region.gap();
    let case_i = gap.numer() % gap.denom() == 0;
    let case_ii_n = if region.r() + region.r() == Rational::from_integer(1) {
        // every half-length slot must start on the half-integer grid
        let slots = region.a() + region.a();
        (*slots.denom() == 1).then(|| *slots.numer())
    } else {
        None
    };
    Classification { case_i, case_ii_n }
}

/// Constructs a periodic tiling for an admissible region.
///
/// Case (i) uses the integer lattice: the region is a fundamental domain of
/// ℤ. Case (ii) (`r = 1/2`, `a = n/2`) uses period `n` with residues
/// `{s/2 : 0 ≤ s < n}`: the translate at `s/2` covers half-slots `s` and
/// `s + n`, pairing the `2n` slots of each period-`2n` block exactly once.
pub fn build_tiling(region: &BiIntervalRegion, which: CaseSelector) -> Result<TilingSpec> {
    let class = classify_tiles(region);
    if !class.is_spectral() {
        return Err(Error::NotATile);
    }
    let use_case_ii = match which {
        CaseSelector::Auto => !class.case_i,
        CaseSelector::CaseI => {
            if !class.case_i {
                return Err(Error::CaseUnavailable);
            }
            false
        }
        CaseSelector::CaseII => {
            if class.case_ii_n.is_none() {
                return Err(Error::CaseUnavailable);
            }
            true
        }
    };
    if use_case_ii {
        let n = class.case_ii_n.expect("case (ii) admitted");
        let residues = (0..n).map(|s| rat(s, 2)).collect();
        TilingSpec::new(Rational::from_integer(n), residues)
    } else {
        TilingSpec::new(Rational::from_integer(1), vec![Rational::zero()])
    }
}

fn push_merged(intervals: &mut Vec<RatInterval>, lo: Rational, hi: Rational) {
    if let Some(last) = intervals.last_mut() {
        if last.hi == lo {
            last.hi = hi;
            return;
        }
    }
    intervals.push(RatInterval::new(lo, hi));
}

/// Exact sweep-line coverage check of a proposed tiling over `[lo, hi)`.
///
/// Every translate within reach of the window is included (those with
/// `t ∈ [lo − (a+1−r), hi)`), its two intervals are clipped to the window,
/// and the sweep reports maximal uncovered stretches as gaps and maximal
/// multiply-covered stretches as overlaps. An empty window is covered
/// vacuously.
pub fn verify_tiling(
    region: &BiIntervalRegion,
    tiling: &TilingSpec,
    window: &RatInterval,
) -> CoverageReport {
    if window.is_empty() {
        return CoverageReport {
            exact_cover: true,
            gaps: Vec::new(),
            overlaps: Vec::new(),
            window: *window,
        };
    }
    let reach_lo = window.lo - region.extent();
    let mut deltas: BTreeMap<Rational, i64> = BTreeMap::new();
    deltas.insert(window.lo, 0);
    deltas.insert(window.hi, 0);
    for t in tiling.translates_in(&reach_lo, &window.hi) {
        for (ilo, ihi) in translate_intervals(region, &t) {
            let lo = ilo.max(window.lo);
            let hi = ihi.min(window.hi);
            if lo < hi {
                *deltas.entry(lo).or_insert(0) += 1;
                *deltas.entry(hi).or_insert(0) -= 1;
            }
        }
    }
    let mut gaps = Vec::new();
    let mut overlaps = Vec::new();
    let mut count = 0i64;
    let mut prev: Option<Rational> = None;
    for (pos, delta) in deltas {
        if let Some(p) = prev {
            if p < pos {
                if count == 0 {
                    push_merged(&mut gaps, p, pos);
                } else if count >= 2 {
                    push_merged(&mut overlaps, p, pos);
                }
            }
        }
        count += delta;
        prev = Some(pos);
    }
    CoverageReport {
        exact_cover: gaps.is_empty() && overlaps.is_empty(),
        gaps,
        overlaps,
        window: *window,
    }
}

fn translate_intervals(region: &BiIntervalRegion, t: &Rational) -> [(Rational, Rational); 2] {
    let [c1, c2] = region.intervals();
    [(t + c1.0, t + c1.1), (t + c2.0, t + c2.1)]
}

/// A pair of consecutive translate intervals carrying the same label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternationViolation {
    /// `"i1"` for copies of the short interval, `"i2"` for the long one.
    pub label: String,
    pub first: RatInterval,
    pub second: RatInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternationReport {
    pub alternates: bool,
    pub violation: Option<AlternationViolation>,
}

/// Checks that copies of the short and long interval strictly alternate
/// across the window, which any tiling with `r < 1/2` must satisfy.
///
/// The tiling must first verify exactly on the window (`NotVerified`
/// otherwise). At `r = 1/2` the two intervals are indistinguishable in length
/// and the check is vacuously true.
pub fn alternation_check(
    region: &BiIntervalRegion,
    tiling: &TilingSpec,
    window: &RatInterval,
) -> Result<AlternationReport> {
    let coverage = verify_tiling(region, tiling, window);
    if !coverage.exact_cover {
        return Err(Error::NotVerified);
    }
    if region.r() == rat(1, 2) {
        return Ok(AlternationReport {
            alternates: true,
            violation: None,
        });
    }
    if window.is_empty() {
        return Ok(AlternationReport {
            alternates: true,
            violation: None,
        });
    }
    let reach_lo = window.lo - region.extent();
    let mut labeled: Vec<(Rational, Rational, bool)> = Vec::new(); // (lo, hi, is_first)
    for t in tiling.translates_in(&reach_lo, &window.hi) {
        let [i1, i2] = translate_intervals(region, &t);
        for (interval, is_first) in [(i1, true), (i2, false)] {
            if interval.0 < window.hi && interval.1 > window.lo {
                labeled.push((interval.0, interval.1, is_first));
            }
        }
    }
    labeled.sort();
    for pair in labeled.windows(2) {
        if pair[0].2 == pair[1].2 {
            let label = if pair[0].2 { "i1" } else { "i2" };
            return Ok(AlternationReport {
                alternates: false,
                violation: Some(AlternationViolation {
                    label: label.into(),
                    first: RatInterval::new(pair[0].0, pair[0].1),
                    second: RatInterval::new(pair[1].0, pair[1].1),
                }),
            });
        }
    }
    Ok(AlternationReport {
        alternates: true,
        violation: None,
    })
}

//! Report types for the JSON interface. The schema is versioned with a
//! top-level `"schema": "biinterval/1"` key; all rationals serialize as
//! reduced `p/q` strings, and key order is fixed by declaration order so a
//! parsed report re-serializes byte-identically.

use biinterval_core::rational::{serde_rational, serde_rational_opt};
use biinterval_core::{
    AffineMap, BiIntervalRegion, Classification, CoverageReport, ParsevalReport, RatInterval,
    Rational, SpectrumSpec, TilingSpec, ZeroScanReport,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "biinterval/1";

/// One decimal argument converted under `--rationalize`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalizedArg {
    pub argument: String,
    pub original: String,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub i1: RatInterval,
    pub i2: RatInterval,
    pub rationalized: Vec<RationalizedArg>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub gram_truncation: u64,
    pub gram_max_off_diagonal: f64,
    pub parseval: ParsevalReport,
    pub coverage_window: RatInterval,
    pub coverage_exact: bool,
}

/// Full analysis of one region. A spectrum is present exactly when a tiling
/// is present, exactly when the classification admits a case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: InputEcho,
    pub canonical: BiIntervalRegion,
    pub affine_map: AffineMap,
    pub classification: Classification,
    pub spectral: bool,
    pub spectrum: Option<SpectrumSpec>,
    pub tiling: Option<TilingSpec>,
    pub verification: Option<VerificationSummary>,
}

/// Envelope for the `verify` subcommands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport<T> {
    pub schema: String,
    pub check: String,
    pub pass: bool,
    pub detail: T,
}

impl<T> VerifyReport<T> {
    pub fn new(check: &str, pass: bool, detail: T) -> Self {
        VerifyReport {
            schema: SCHEMA.to_string(),
            check: check.to_string(),
            pass,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsevalCheck {
    pub spectrum: SpectrumSpec,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    pub parseval: ParsevalReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct STildeCheck {
    pub beta: f64,
    pub truncation_k: u64,
    pub partial: f64,
    pub tail_bound: f64,
    /// `|partial − 1|`
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingCheck {
    pub tiling: TilingSpec,
    #[serde(with = "serde_rational_opt")]
    pub density: Option<Rational>,
    pub coverage: CoverageReport,
}

pub type ZerosCheck = ZeroScanReport;

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

fn list(intervals: &[RatInterval]) -> String {
    intervals
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn analysis_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(
        &mut out,
        format!(
            "input: ({}, {}) u ({}, {})",
            report.input.i1.lo, report.input.i1.hi, report.input.i2.lo, report.input.i2.hi
        ),
    );
    for conv in &report.input.rationalized {
        push(
            &mut out,
            format!(
                "rationalized {}: {} -> {}",
                conv.argument, conv.original, conv.value
            ),
        );
    }
    push(
        &mut out,
        format!(
            "canonical: r = {}, a = {} (scale = {}, shift = {}, reflected = {})",
            report.canonical.r(),
            report.canonical.a(),
            report.affine_map.scale,
            report.affine_map.shift,
            report.affine_map.reflected
        ),
    );
    let case_i = if report.classification.case_i {
        format!("case (i) holds, gap a-r = {}", report.canonical.gap())
    } else {
        "case (i) not admitted".to_string()
    };
    let case_ii = match report.classification.case_ii_n {
        Some(n) => format!("case (ii) holds with n = {n}"),
        None => "case (ii) not admitted".to_string(),
    };
    push(&mut out, format!("classification: {case_i}; {case_ii}"));
    if report.spectral {
        push(&mut out, "spectral: yes; tiles: yes".to_string());
    } else {
        push(
            &mut out,
            "spectral: no; tiles: no (not spectral / does not tile)".to_string(),
        );
    }
    if let Some(spectrum) = &report.spectrum {
        push(&mut out, format!("spectrum: {spectrum}"));
    }
    if let Some(tiling) = &report.tiling {
        push(
            &mut out,
            format!(
                "tiling: period {}, residues [{}]",
                tiling.period(),
                tiling
                    .residues()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
    }
    if let Some(v) = &report.verification {
        push(
            &mut out,
            format!(
                "gram (K = {}): max off-diagonal {:.3e}",
                v.gram_truncation, v.gram_max_off_diagonal
            ),
        );
        push(
            &mut out,
            format!(
                "parseval (K = {}): partial {:.9}, target {}, defect {:.3e} (tail bound {:.3e})",
                v.parseval.truncation_k,
                v.parseval.partial_sum,
                v.parseval.target,
                v.parseval.defect,
                v.parseval.tail_bound
            ),
        );
        push(
            &mut out,
            format!(
                "coverage on {}: {}",
                v.coverage_window,
                if v.coverage_exact {
                    "exact"
                } else {
                    "NOT exact"
                }
            ),
        );
    }
    out
}

pub fn zeros_text(report: &VerifyReport<ZerosCheck>) -> String {
    let d = &report.detail;
    let mut out = format!(
        "zeros check on ({}, {}], step {}, threshold {:.1e}, denominator bound {}\n",
        d.window.lo, d.window.hi, d.step, d.threshold, d.denominator_bound
    );
    out.push_str(&format!(
        "matched {} zeros; {} unmatched candidates; {} unmatched predictions\n",
        d.matched.len(),
        d.unmatched_candidates.len(),
        d.unmatched_predictions.len()
    ));
    for c in &d.unmatched_candidates {
        out.push_str(&format!(
            "  unmatched candidate at {:.9} (modulus {:.3e})\n",
            c.location, c.min_modulus
        ));
    }
    for p in &d.unmatched_predictions {
        out.push_str(&format!("  unmatched predicted zero {p}\n"));
    }
    out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
    out
}

pub fn tiling_text(report: &VerifyReport<TilingCheck>) -> String {
    let d = &report.detail;
    let mut out = format!(
        "tiling check: period {}, {} residues, window {}\n",
        d.tiling.period(),
        d.tiling.residues().len(),
        d.coverage.window
    );
    if let Some(density) = &d.density {
        out.push_str(&format!("density: {density} residues per unit\n"));
    }
    if !d.coverage.gaps.is_empty() {
        out.push_str(&format!("gaps: {}\n", list(&d.coverage.gaps)));
    }
    if !d.coverage.overlaps.is_empty() {
        out.push_str(&format!("overlaps: {}\n", list(&d.coverage.overlaps)));
    }
    if d.coverage.exact_cover {
        out.push_str("coverage exact\n");
    }
    out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
    out
}

pub fn parseval_text(report: &VerifyReport<ParsevalCheck>) -> String {
    let d = &report.detail;
    let mut out = format!(
        "parseval check: spectrum {}, lambda = {}, K = {}\n",
        d.spectrum, d.lambda, d.parseval.truncation_k
    );
    out.push_str(&format!(
        "partial {:.9}, target {}, defect {:.3e}, tail bound {:.3e}\n",
        d.parseval.partial_sum, d.parseval.target, d.parseval.defect, d.parseval.tail_bound
    ));
    out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
    out
}

pub fn stilde_text(report: &VerifyReport<STildeCheck>) -> String {
    let d = &report.detail;
    let mut out = format!("stilde check: beta = {}, K = {}\n", d.beta, d.truncation_k);
    out.push_str(&format!(
        "partial {:.9}, |partial - 1| = {:.3e}, tail bound {:.3e}\n",
        d.partial, d.deviation, d.tail_bound
    ));
    out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
    out
}

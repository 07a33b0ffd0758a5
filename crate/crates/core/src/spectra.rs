//! Spectrum construction for admissible regions and the numerical
//! completeness machinery: Gram matrices, Parseval partial sums with analytic
//! tail bounds, the universal series `S̃`, and the α-partition of a frequency
//! family.
//!
//! The two admissible families are the integer lattice (case (i)) and, for
//! half-half regions with `a = n/2`, the union `2ℤ ∪ (p/n + 2ℤ)` for an odd
//! integer `p` (case (ii)). Completeness is checked through the test function
//! `χ_(0,r) e^{2πiλx}`: its coefficients against an orthonormal exponential
//! family satisfy `Σ |c_k|² = r`, with
//!
//! ```text
//! c_k = ∫_0^r e^{2πi(λ−λ_k)x} dx = (e^{2πi(λ−λ_k)r} − 1) / (2πi(λ−λ_k)),
//! ```
//!
//! so `|c_k|² = sin²(π(λ−λ_k)r) / (π(λ−λ_k))²` and `c_k = r` when `λ = λ_k`.
//! Partial sums over `|λ_k| ≤ K` approach `r` from below; the remainder is
//! bounded analytically from `|c_k|² ≤ 1/(π(λ−λ_k))²` and the fact that a
//! truncated family is contained in one or two arithmetic progressions.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::ft_indicator;
use crate::rational::{fract_mod_one, rat, serde_rational, to_f64, Rational};
use crate::region::{classify_region, BiIntervalRegion, CaseSelector};

/// Symbolic description of a constructed spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum SpectrumSpec {
    /// The integer lattice ℤ (case (i)).
    Lattice,
    /// `2ℤ ∪ (p/n + 2ℤ)` with `p` odd (case (ii)); the offset `p/n` is the
    /// distinguished frequency of the second residue class.
    HalfInteger { n: i64, p: i64 },
}

impl SpectrumSpec {
    /// Offset `p/n` of the second residue class, if any.
    pub fn offset(&self) -> Option<Rational> {
        match self {
            SpectrumSpec::Lattice => None,
            SpectrumSpec::HalfInteger { n, p } => Some(Ratio::new(*p, *n)),
        }
    }

    /// The arithmetic progressions `(offset, gap)` whose union is the
    /// spectrum.
    pub fn progressions(&self) -> Vec<(Rational, Rational)> {
        match self {
            SpectrumSpec::Lattice => vec![(Rational::zero(), rat(1, 1))],
            SpectrumSpec::HalfInteger { n, p } => {
                vec![
                    (Rational::zero(), rat(2, 1)),
                    (Ratio::new(*p, *n), rat(2, 1)),
                ]
            }
        }
    }
}

impl std::fmt::Display for SpectrumSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumSpec::Lattice => write!(f, "Z"),
            SpectrumSpec::HalfInteger { n, p } => write!(f, "2Z u ({}/{} + 2Z)", p, n),
        }
    }
}

/// Builds the spectrum promised for an admissible region.
///
/// `which` resolves the choice when both cases hold; `Auto` prefers case (i)
/// unless an explicit offset numerator `p` is supplied and case (ii) is
/// admitted. `p` defaults to 1 and must be odd.
pub fn build_spectrum(
    region: &BiIntervalRegion,
    which: CaseSelector,
    p: Option<i64>,
) -> Result<SpectrumSpec> {
    let class = classify_region(region);
    if !class.is_spectral() {
        return Err(Error::NotSpectral);
    }
    let use_case_ii = match which {
        CaseSelector::Auto => !class.case_i || (p.is_some() && class.case_ii_n.is_some()),
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
        let p = p.unwrap_or(1);
        if p % 2 == 0 {
            return Err(Error::EvenP(p));
        }
        Ok(SpectrumSpec::HalfInteger { n, p })
    } else {
        Ok(SpectrumSpec::Lattice)
    }
}

/// All spectrum members in `[−bound, bound]`, sorted ascending. The two
/// residue classes of a half-integer spectrum never meet (`p` is odd), so
/// duplicates cannot occur.
pub fn enumerate_frequencies(spec: &SpectrumSpec, bound: &Rational) -> Vec<Rational> {
    let mut per_class: Vec<Vec<Rational>> = Vec::new();
    for (offset, gap) in spec.progressions() {
        let lo = ((-bound - offset) / gap).ceil().to_integer();
        let hi = ((bound - offset) / gap).floor().to_integer();
        per_class.push((lo..=hi).map(|m| offset + gap * m).collect());
    }
    match per_class.len() {
        1 => per_class.pop().unwrap(),
        2 => {
            let b = per_class.pop().unwrap();
            let a = per_class.pop().unwrap();
            let mut merged = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                if a[i] < b[j] {
                    merged.push(a[i]);
                    i += 1;
                } else {
                    merged.push(b[j]);
                    j += 1;
                }
            }
            merged.extend_from_slice(&a[i..]);
            merged.extend_from_slice(&b[j..]);
            merged
        }
        _ => unreachable!("a spectrum has one or two progressions"),
    }
}

/// Inner product of the exponentials at `λ` and `μ` over the region, which
/// reduces to the indicator transform at the difference. Equal frequencies
/// give exactly 1.
pub fn inner_product(region: &BiIntervalRegion, lambda: f64, mu: f64) -> Complex64 {
    ft_indicator(region, lambda - mu)
}

/// Dense Hermitian Gram matrix of an exponential family.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn max_off_diagonal_modulus(&self) -> f64 {
        let mut max = 0.0f64;
        for j in 0..self.dim {
            for k in 0..self.dim {
                if j != k {
                    max = max.max(self.get(j, k).norm());
                }
            }
        }
        max
    }
}

/// Gram matrix with entry `(j, k) = inner_product(λ_j, λ_k)`. Hermitian by
/// construction; the diagonal is exactly 1.
pub fn gram_matrix(region: &BiIntervalRegion, freqs: &[Rational]) -> GramMatrix {
    let n = freqs.len();
    let as_f64: Vec<f64> = freqs.iter().map(to_f64).collect();
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for k in j..n {
            let v = inner_product(region, as_f64[j], as_f64[k]);
            data[j * n + k] = v;
            data[k * n + j] = v.conj();
        }
    }
    GramMatrix { dim: n, data }
}

/// Result of a truncated Parseval sum for the test function
/// `χ_(0,r) e^{2πiλx}` against a spectrum truncation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsevalReport {
    /// The exact value the full series attains: `r`.
    #[serde(with = "serde_rational")]
    pub target: Rational,
    pub partial_sum: f64,
    /// Whether some truncation member equals `λ` (that term contributes `r²`).
    pub exact_match_present: bool,
    /// Set when the match was detected through the floating-point window
    /// rather than exact rational comparison.
    pub match_is_approximate: bool,
    pub tail_bound: f64,
    /// `|target − partial_sum|`.
    pub defect: f64,
    pub truncation_k: u64,
}

enum TestFrequency<'a> {
    Exact(&'a Rational),
    Real(f64),
}

/// Upper bound on the discarded tail `Σ_{|λ_k| > K} |c_k|²`.
///
/// Each residue class of the spectrum is an arithmetic progression with gap
/// `g`; if `x₀` is its first member above `K` and `x₁` its first member below
/// `−K`, then by `|c_k|² ≤ 1/(π(λ−λ_k))²` and the integral test the class
/// contributes at most
///
/// ```text
/// (1/π²) · (1/(x₀−λ)² + 1/(g(x₀−λ)) + 1/(λ−x₁)² + 1/(g(λ−x₁))).
/// ```
///
/// The bound decreases monotonically in `K` and requires `|λ| ≤ K`
/// (otherwise the tail cannot be controlled and infinity is returned).
pub fn parseval_tail_bound(spec: &SpectrumSpec, lambda: f64, truncation_k: u64) -> f64 {
    let bound = Rational::from_integer(truncation_k as i64);
    let mut total = 0.0;
    for (offset, gap) in spec.progressions() {
        let first_above = offset + gap * (((bound - offset) / gap).floor().to_integer() + 1);
        let first_below = offset + gap * (((-bound - offset) / gap).ceil().to_integer() - 1);
        let x0 = to_f64(&first_above);
        let x1 = to_f64(&first_below);
        let g = to_f64(&gap);
        if x0 <= lambda || x1 >= lambda {
            return f64::INFINITY;
        }
        let up = x0 - lambda;
        let down = lambda - x1;
        total += 1.0 / (up * up) + 1.0 / (g * up) + 1.0 / (down * down) + 1.0 / (g * down);
    }
    total / (PI * PI)
}

fn parseval_impl(
    region: &BiIntervalRegion,
    spec: &SpectrumSpec,
    lambda: TestFrequency<'_>,
    truncation_k: u64,
) -> ParsevalReport {
    let bound = Rational::from_integer(truncation_k as i64);
    let freqs = enumerate_frequencies(spec, &bound);
    let r_f = to_f64(&region.r());
    let lambda_f = match lambda {
        TestFrequency::Exact(l) => to_f64(l),
        TestFrequency::Real(l) => l,
    };
    let mut partial = 0.0f64;
    let mut exact_match_present = false;
    let mut match_is_approximate = false;
    for fk in &freqs {
        let matched = match lambda {
            TestFrequency::Exact(l) => l == fk,
            TestFrequency::Real(l) => (l - to_f64(fk)).abs() < 1e-12,
        };
        if matched && !exact_match_present {
            exact_match_present = true;
            match_is_approximate = matches!(lambda, TestFrequency::Real(_));
            partial += r_f * r_f;
        } else {
            let delta = match lambda {
                TestFrequency::Exact(l) => to_f64(&(l - fk)),
                TestFrequency::Real(l) => l - to_f64(fk),
            };
            let s = (PI * delta * r_f).sin();
            partial += (s * s) / (PI * PI * delta * delta);
        }
    }
    let tail_bound = parseval_tail_bound(spec, lambda_f, truncation_k);
    ParsevalReport {
        target: region.r(),
        partial_sum: partial,
        exact_match_present,
        match_is_approximate,
        tail_bound,
        defect: (r_f - partial).abs(),
        truncation_k,
    }
}

/// Parseval partial sum at an exact rational test frequency; membership of
/// `λ` in the truncation is decided by exact comparison.
pub fn parseval_sum(
    region: &BiIntervalRegion,
    spec: &SpectrumSpec,
    lambda: &Rational,
    truncation_k: u64,
) -> ParsevalReport {
    parseval_impl(region, spec, TestFrequency::Exact(lambda), truncation_k)
}

/// Parseval partial sum at a floating-point test frequency; membership in the
/// truncation is detected through a `10⁻¹²` window and reported as
/// approximate.
pub fn parseval_sum_real(
    region: &BiIntervalRegion,
    spec: &SpectrumSpec,
    lambda: f64,
    truncation_k: u64,
) -> ParsevalReport {
    parseval_impl(region, spec, TestFrequency::Real(lambda), truncation_k)
}

/// Truncation of the universal series together with its tail bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct STildeReport {
    pub partial: f64,
    pub tail_bound: f64,
}

/// Partial sum `Σ_{|k| ≤ K} |e^{2πiβ}−1|² / (4π²(β+k)²)` of the universal
/// series, which equals 1 for every `β ∈ (0, 1)`.
///
/// The tail bound comes from the integral test on both sides: for `K ≥ 1` it
/// is `|e^{2πiβ}−1|²/(4π²) · (1/(K+β−1) + 1/(K−β))`; for `K = 0` the
/// one-sided integrals start at the first term instead, giving
/// `|e^{2πiβ}−1|²/(4π²) · (1/β + 1/(1−β)² + 1/(1−β))`. In both cases
/// `|partial − 1| ≤ tail_bound`.
pub fn s_tilde_partial(beta: f64, truncation_k: u64) -> Result<STildeReport> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::DomainError(beta));
    }
    let k = truncation_k as i64;
    let sin_half = (PI * beta).sin();
    let numer = 4.0 * sin_half * sin_half; // |e^{2πiβ} − 1|²
    let mut partial = 0.0f64;
    for j in -k..=k {
        let d = beta + j as f64;
        partial += numer / (4.0 * PI * PI * d * d);
    }
    let kf = truncation_k as f64;
    let tail_bound = if truncation_k >= 1 {
        numer / (4.0 * PI * PI) * (1.0 / (kf + beta - 1.0) + 1.0 / (kf - beta))
    } else {
        numer / (4.0 * PI * PI)
            * (1.0 / beta + 1.0 / ((1.0 - beta) * (1.0 - beta)) + 1.0 / (1.0 - beta))
    };
    Ok(STildeReport {
        partial,
        tail_bound,
    })
}

/// One equivalence class of the α-partition: all input frequencies whose
/// `λ·r mod 1` equals `beta`, recorded by input index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaClass {
    #[serde(with = "serde_rational")]
    pub beta: Rational,
    pub members: Vec<usize>,
}

/// Partition of a frequency family by `λ·r mod 1`. Two frequencies share a
/// class exactly when their difference times `r` is an integer; any spectrum
/// of the region needs at least `1/r` classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaPartition {
    pub classes: Vec<AlphaClass>,
    pub m: usize,
}

/// Groups frequencies by `λ·r mod 1`, exactly. Classes are sorted by their
/// representative `β ∈ [0, 1)`.
pub fn alpha_partition(freqs: &[Rational], r: &Rational) -> AlphaPartition {
    let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (index, lambda) in freqs.iter().enumerate() {
        let beta = fract_mod_one(&(lambda * r));
        map.entry(beta).or_default().push(index);
    }
    let classes: Vec<AlphaClass> = map
        .into_iter()
        .map(|(beta, members)| AlphaClass { beta, members })
        .collect();
    let m = classes.len();
    AlphaPartition { classes, m }
}

//! Closed-form evaluation of the indicator transform and exact classification
//! of its zero set.
//!
//! For a canonical region the transform of the indicator is
//!
//! ```text
//! (e^{2πiλr} − 1 + e^{2πiλ(a+1−r)} − e^{2πiλa}) / (2πiλ),     λ ≠ 0,
//! ```
//!
//! with value 1 (the measure of the region) at `λ = 0`. Writing the numerator
//! as a vanishing sum of four unimodular terms shows that the nonzero zeros
//! fall into exactly three arithmetic families, each decidable in exact
//! rational arithmetic:
//!
//! * `z1`: `λa ∈ ℤ + 1/2` and `λ(2r−1) ∈ ℤ`;
//! * `z2`: `λ ∈ ℤ` and `λr ∈ ℤ`;
//! * `z3`: `λ ∈ ℤ` and `λ(a−r) ∈ ℤ`.
//!
//! By convention `λ = 0` belongs to the zero set (so that orthogonality of a
//! frequency family is exactly "all pairwise differences lie in the zero
//! set") but carries no family flag.

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::rational::{is_half_integer, serde_rational_pair_opt, to_f64, Rational};
use crate::region::BiIntervalRegion;

/// Below this |λ| the closed form is evaluated by a series expansion around
/// the removable singularity at zero.
pub const SMALL_LAMBDA_THRESHOLD: f64 = 1e-8;

/// Transform of the region indicator at frequency `λ`, evaluated in floating
/// point from the closed form above.
pub fn ft_indicator(region: &BiIntervalRegion, lambda: f64) -> Complex64 {
    if lambda == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let r = to_f64(&region.r());
    let a = to_f64(&region.a());
    let b = a + 1.0 - r;
    if lambda.abs() < SMALL_LAMBDA_THRESHOLD {
        // second-order expansion in 2πiλ; the truncation error is O(λ³)
        let m1 = (r * r + b * b - a * a) / 2.0;
        let m2 = (r * r * r + b * b * b - a * a * a) / 3.0;
        let w = Complex64::new(0.0, TAU * lambda);
        return Complex64::new(1.0, 0.0) + w * m1 + w * w * m2 / 2.0;
    }
    let phase = |t: f64| Complex64::cis(TAU * lambda * t);
    let numer = phase(r) - 1.0 + phase(b) - phase(a);
    numer / Complex64::new(0.0, TAU * lambda)
}

/// Membership of a frequency in the three zero families.
///
/// `is_zero` is set for `λ = 0` (with no family flags) and for any nonzero
/// frequency carrying at least one flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroClass {
    pub in_z1: bool,
    pub in_z2: bool,
    pub in_z3: bool,
    pub is_zero: bool,
}

/// Decides membership of `λ` in each zero family by exact congruences.
pub fn classify_frequency(region: &BiIntervalRegion, lambda: &Rational) -> ZeroClass {
    if lambda.is_zero() {
        return ZeroClass {
            in_z1: false,
            in_z2: false,
            in_z3: false,
            is_zero: true,
        };
    }
    let integral = lambda.is_integer();
    let in_z2 = integral && (lambda * region.r()).is_integer();
    let in_z3 = integral && (lambda * region.gap()).is_integer();
    let in_z1 =
        is_half_integer(&(lambda * region.a())) && (lambda * (region.r() * 2 - 1)).is_integer();
    ZeroClass {
        in_z1,
        in_z2,
        in_z3,
        is_zero: in_z1 || in_z2 || in_z3,
    }
}

/// Outcome of checking that all pairwise differences of a frequency family
/// lie in the zero set. On failure, the first offending pair is reported as
/// `(later, earlier)` in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub pass: bool,
    #[serde(with = "serde_rational_pair_opt")]
    pub first_failure: Option<(Rational, Rational)>,
}

/// Checks `Λ − Λ ⊂ Z ∪ {0}` for a finite family of distinct frequencies.
///
/// The zero set is symmetric under negation, so each unordered pair is
/// checked once.
pub fn difference_set_in_zeros(
    region: &BiIntervalRegion,
    freqs: &[Rational],
) -> OrthogonalityReport {
    for j in 1..freqs.len() {
        for i in 0..j {
            let diff = freqs[j] - freqs[i];
            if !classify_frequency(region, &diff).is_zero {
                return OrthogonalityReport {
                    pass: false,
                    first_failure: Some((freqs[j], freqs[i])),
                };
            }
        }
    }
    OrthogonalityReport {
        pass: true,
        first_failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn region(r: (i64, i64), a: (i64, i64)) -> BiIntervalRegion {
        BiIntervalRegion::new(rat(r.0, r.1), rat(a.0, a.1)).unwrap()
    }

    #[test]
    fn transform_at_zero_is_the_measure() {
        for reg in [
            region((1, 3), (4, 3)),
            region((1, 2), (3, 2)),
            region((1, 3), (1, 2)),
        ] {
            assert_eq!(ft_indicator(&reg, 0.0), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn transform_vanishes_at_integer_for_integer_gap_region() {
        let reg = region((1, 3), (4, 3));
        assert!(ft_indicator(&reg, 1.0).norm() < 1e-12);
    }

    #[test]
    fn transform_modulus_at_non_zero_frequency() {
        // numerator e^{2πi/3} + e^{πi/3} = i√3, so the modulus is √3/(2π)
        let reg = region((1, 3), (1, 2));
        let expected = 3f64.sqrt() / TAU;
        assert!((ft_indicator(&reg, 1.0).norm() - expected).abs() < 1e-12);
        assert!((expected - 0.27566).abs() < 1e-5);
    }

    #[test]
    fn transform_is_continuous_at_the_origin() {
        let reg = region((1, 3), (4, 3));
        let near = ft_indicator(&reg, 1e-9);
        let at = ft_indicator(&reg, 0.0);
        assert!((near - at).norm() < 1e-7);
        // the series branch agrees with the closed form just above the cutoff
        let lo = ft_indicator(&reg, 9.9e-9);
        let hi = ft_indicator(&reg, 1.1e-8);
        assert!((lo - hi).norm() < 1e-7);
    }

    #[test]
    fn classify_half_half_offset_frequency() {
        let reg = region((1, 2), (3, 2));
        let class = classify_frequency(&reg, &rat(1, 3));
        assert!(class.in_z1 && !class.in_z2 && !class.in_z3);
        assert!(class.is_zero);
    }

    #[test]
    fn classify_integer_gap_frequency_in_both_lattice_families() {
        let reg = region((1, 3), (4, 3));
        let class = classify_frequency(&reg, &rat(3, 1));
        assert!(!class.in_z1 && class.in_z2 && class.in_z3);
    }

    #[test]
    fn classify_non_zero_frequency() {
        let reg = region((1, 3), (1, 2));
        let class = classify_frequency(&reg, &rat(1, 1));
        assert!(!class.is_zero);
        // cross-check against the numeric transform
        assert!(ft_indicator(&reg, 1.0).norm() > 0.27);
    }

    #[test]
    fn zero_frequency_is_flagless_by_convention() {
        let reg = region((1, 3), (4, 3));
        let class = classify_frequency(&reg, &rat(0, 1));
        assert_eq!(
            class,
            ZeroClass {
                in_z1: false,
                in_z2: false,
                in_z3: false,
                is_zero: true
            }
        );
    }

    #[test]
    fn difference_check_passes_for_integer_lattice() {
        let reg = region((1, 3), (4, 3));
        let freqs = [rat(0, 1), rat(1, 1), rat(2, 1), rat(5, 1)];
        assert!(difference_set_in_zeros(&reg, &freqs).pass);
    }

    #[test]
    fn difference_check_passes_for_half_half_family() {
        let reg = region((1, 2), (3, 2));
        let freqs = [rat(0, 1), rat(1, 3), rat(2, 1), rat(7, 3)];
        assert!(difference_set_in_zeros(&reg, &freqs).pass);
    }

    #[test]
    fn difference_check_reports_first_failing_pair() {
        let reg = region((1, 3), (1, 2));
        let report = difference_set_in_zeros(&reg, &[rat(0, 1), rat(1, 1)]);
        assert!(!report.pass);
        assert_eq!(report.first_failure, Some((rat(1, 1), rat(0, 1))));
    }
}

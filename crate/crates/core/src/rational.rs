//! Exact rational scalars and the `p/q` literal format shared by every
//! serialized interface. Output literals are always reduced with a positive
//! denominator; integers omit the `/q` part.

use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar. Region parameters, frequencies, and translation
/// residues are all of this type.
pub type Rational = Ratio<i64>;

/// Shorthand constructor. Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Ratio::new(numer, denom)
}

/// Parses a `p/q` literal. The denominator, when present, must be positive;
/// the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    match t.split_once('/') {
        None => t
            .parse::<i64>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((num, den)) => {
            let n: i64 = num.parse().map_err(|_| bad())?;
            let d: i64 = den.parse().map_err(|_| bad())?;
            if d <= 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
    }
}

/// Canonical literal for `x`: reduced, `q > 0`, and plain `p` when `q = 1`.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("i64 ratio is representable as f64")
}

/// Best rational approximation of `x` with denominator at most
/// `max_denominator`, by the continued-fraction expansion with the final
/// semiconvergent step. Returns `None` for non-finite or oversized input.
pub fn rationalize(x: f64, max_denominator: i64) -> Option<Rational> {
    if !x.is_finite() || max_denominator < 1 || x.abs() >= 1e15 {
        return None;
    }
    let negative = x < 0.0;
    let target = x.abs();
    let bound = max_denominator as i128;
    let mut rest = target;
    // convergents p/q of the continued fraction of |x|
    let (mut p_prev, mut q_prev): (i128, i128) = (0, 1);
    let (mut p_cur, mut q_cur): (i128, i128) = (1, 0);
    let mut semi: Option<(i128, i128)> = None;
    for _ in 0..64 {
        let a = rest.floor();
        if a >= 1e18 {
            break;
        }
        let ai = a as i128;
        let p_next = match ai.checked_mul(p_cur).and_then(|v| v.checked_add(p_prev)) {
            Some(v) => v,
            None => break,
        };
        let q_next = match ai.checked_mul(q_cur).and_then(|v| v.checked_add(q_prev)) {
            Some(v) => v,
            None => break,
        };
        if q_next > bound {
            // the largest semiconvergent still under the bound can beat the
            // last full convergent
            let t = (bound - q_prev) / q_cur;
            if t >= 1 {
                semi = Some((t * p_cur + p_prev, t * q_cur + q_prev));
            }
            break;
        }
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        let frac = rest - a;
        if frac <= f64::EPSILON * rest.max(1.0) {
            break;
        }
        rest = 1.0 / frac;
    }
    if q_cur == 0 || p_cur > i64::MAX as i128 {
        return None;
    }
    let mut best = Ratio::new(p_cur as i64, q_cur as i64);
    if let Some((ps, qs)) = semi {
        if ps <= i64::MAX as i128 {
            let candidate = Ratio::new(ps as i64, qs as i64);
            if (to_f64(&candidate) - target).abs() < (to_f64(&best) - target).abs() {
                best = candidate;
            }
        }
    }
    Some(if negative { -best } else { best })
}

/// Half-open rational interval `[lo, hi)`. Empty when `hi <= lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatInterval {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        RatInterval { lo, hi }
    }

    pub fn length(&self) -> Rational {
        if self.is_empty() {
            Rational::zero()
        } else {
            self.hi - self.lo
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x < self.hi
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub mod serde_rational_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod serde_rational_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(
        x: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub mod serde_rational_pair_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(
        x: &Option<(Rational, Rational)>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some((a, b)) => s.serialize_some(&[a.to_string(), b.to_string()]),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<(Rational, Rational)>, D::Error> {
        let pair = Option::<[String; 2]>::deserialize(d)?;
        pair.map(|[a, b]| {
            Ok((
                parse_rational(&a).map_err(serde::de::Error::custom)?,
                parse_rational(&b).map_err(serde::de::Error::custom)?,
            ))
        })
        .transpose()
    }
}

/// `x mod 1` lifted to `[0, 1)`.
pub fn fract_mod_one(x: &Rational) -> Rational {
    x - x.floor()
}

/// True exactly when `x` is an odd multiple of `1/2`.
pub fn is_half_integer(x: &Rational) -> bool {
    (x * 2).is_integer() && !x.is_integer()
}

/// Largest integer strictly below `x`.
pub fn floor_strict(x: &Rational) -> i64 {
    if x.is_integer() {
        x.to_integer() - 1
    } else {
        x.floor().to_integer()
    }
}

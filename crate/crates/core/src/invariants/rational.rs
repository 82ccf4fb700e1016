//! `num/den` text form for exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ExactRational = BigRational;

/// Always writes both parts, e.g. `3/1`.
pub fn format_rational(x: &ExactRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `num/den` or a bare integer; the result is canonical.
pub fn parse_rational(s: &str) -> Result<ExactRational, String> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn ratio(n: u64, d: u64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: u64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `x^e` for a nonzero base and any integer exponent.
pub fn pow_signed(x: &ExactRational, e: i64) -> ExactRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = ExactRational::one();
    let mut b = base;
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    acc
}

/// Lossy conversion for display and plotting only.
pub fn to_f64(x: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // scale huge numerators/denominators down before converting
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::MAX);
        let v = n / d;
        if x.is_negative() {
            -v
        } else {
            v
        }
    })
}

/// Serde adapter storing a rational as its `num/den` string.
pub mod serde_text {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

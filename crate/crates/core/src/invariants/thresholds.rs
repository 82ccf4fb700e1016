//! Threshold functions appearing in the p-local and p-closed criteria.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::rational::{integer, pow_signed, ratio, to_f64, ExactRational};

/// `β(h,p) = 1 + 1/p^(2h-1)`.
pub fn beta(h: u32, p: u64) -> ExactRational {
    ExactRational::one() + pow_signed(&integer(p), -(2 * h as i64 - 1))
}

/// `β(h,p)/(p+1)`, attained by `(C_2)^f ⋊ C_p` for Mersenne `p`.
pub fn gamma(h: u32, p: u64) -> ExactRational {
    beta(h, p) / integer(p + 1)
}

/// `1/p + 1/p^h + (p-1)/(p (p+1)^(h-1))`.
pub fn beta_tilde(h: u32, p: u64) -> ExactRational {
    let pr = integer(p);
    pr.recip()
        + pow_signed(&pr, -(h as i64))
        + ratio(p - 1, p) * pow_signed(&integer(p + 1), -(h as i64 - 1))
}

pub fn gamma_tilde(h: u32, p: u64) -> ExactRational {
    beta_tilde(h, p) / integer(p + 1)
}

/// A real number `a + b·√c` with rational `a`, `b` and integer `c ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: ExactRational,
    pub coeff: ExactRational,
    pub radicand: u64,
}

impl Surd {
    /// Exact comparison of a rational against this number.
    pub fn cmp_rational(&self, x: &ExactRational) -> Ordering {
        // sign(x - a - b√c)
        let lhs = x - &self.rational;
        let rhs_sign = if self.radicand == 0 || self.coeff.is_zero() {
            0
        } else if self.coeff.is_positive() {
            1
        } else {
            -1
        };
        let lhs_sign = if lhs.is_zero() {
            0
        } else if lhs.is_positive() {
            1
        } else {
            -1
        };
        if lhs_sign != rhs_sign || lhs_sign == 0 {
            return lhs_sign.cmp(&rhs_sign);
        }
        // same nonzero sign: compare squares, flipping for negatives
        let l2 = &lhs * &lhs;
        let r2 = &self.coeff * &self.coeff * integer(self.radicand);
        if lhs_sign > 0 {
            l2.cmp(&r2)
        } else {
            r2.cmp(&l2)
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.coeff) * (self.radicand as f64).sqrt()
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            super::rational::format_rational(&self.rational),
            super::rational::format_rational(&self.coeff),
            self.radicand
        )
    }
}

/// `α(h,p) = (2^(2h-2) + √(p-1)) / (2^(2h-2) √(p-1))
///         = 1/2^(2h-2) + √(p-1)/(p-1)`.
pub fn alpha(h: u32, p: u64) -> Surd {
    assert!(h >= 1 && p >= 2);
    Surd {
        rational: pow_signed(&integer(2), -(2 * h as i64 - 2)),
        coeff: ratio(1, p - 1),
        radicand: p - 1,
    }
}

/// `α(h,p)/(p-1)`, the p-local threshold.
pub fn alpha_threshold(h: u32, p: u64) -> Surd {
    let a = alpha(h, p);
    let s = integer(p - 1);
    Surd {
        rational: a.rational / &s,
        coeff: a.coeff / &s,
        radicand: a.radicand,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_values() {
        assert_eq!(gamma(1, 3), ratio(1, 3));
        for p in [2u64, 3, 5, 7, 31] {
            assert_eq!(gamma(1, p), ratio(1, p));
            // at genus 1 the dual threshold also collapses to 1/p
            assert_eq!(gamma_tilde(1, p), ratio(1, p));
        }
        assert_eq!(gamma_tilde(2, 3), ratio(11, 72));
        assert_eq!(beta(2, 3), ratio(28, 27));
    }

    #[test]
    fn alpha_comparisons_are_exact() {
        // α(1,5) = 1 + 2/4 = 3/2 (√4 = 2)
        assert_eq!(alpha(1, 5).cmp_rational(&ratio(3, 2)), Ordering::Equal);
        assert_eq!(alpha_threshold(1, 5).cmp_rational(&ratio(3, 8)), Ordering::Equal);
        assert_eq!(alpha_threshold(1, 5).cmp_rational(&ratio(1, 4)), Ordering::Less);
        // α(2,3) = 1/4 + √2/2 ≈ 0.9571
        let a = alpha(2, 3);
        assert_eq!(a.cmp_rational(&ratio(957, 1000)), Ordering::Less);
        assert_eq!(a.cmp_rational(&ratio(958, 1000)), Ordering::Greater);
        assert!((a.to_f64() - (0.25 + 2f64.sqrt() / 2.0)).abs() < 1e-12);
        // α < 1 for h > 1, p > 2
        for h in 2..6 {
            for p in [3u64, 5, 7, 11, 13] {
                assert_eq!(alpha(h, p).cmp_rational(&integer(1)), Ordering::Greater);
            }
        }
    }
}

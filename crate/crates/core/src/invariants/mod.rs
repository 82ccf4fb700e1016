//! Exact evaluation of the genus invariants.
//!
//! Genus enters only through an integer exponent: `e = 2h - 2` on the
//! character side and `e = h - 1` on the class side. The `*_exp` functions
//! take `e` directly and so also cover arbitrary integer exponents.

mod brauer;
mod rational;
mod thresholds;

pub use brauer::BrauerDegrees;
pub use rational::{
    format_rational, integer, parse_rational, pow_signed, ratio, serde_text, to_f64, ExactRational,
};
pub use thresholds::{alpha, alpha_threshold, beta, beta_tilde, gamma, gamma_tilde, Surd};

use num_traits::Zero;

use crate::catalog::is_prime;
use crate::chartab::DegreeMultiset;
use crate::error::InvariantError;

/// The class- and character-level data every invariant is computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: u64,
    pub class_sizes: Vec<u64>,
    /// Element order of each class representative, aligned with `class_sizes`.
    pub rep_orders: Vec<u64>,
    pub degrees: DegreeMultiset,
}

impl GroupProfile {
    pub fn class_count(&self) -> u64 {
        self.class_sizes.len() as u64
    }
}

/// `Σ_χ m_χ (|G|/χ(1))^e`.
pub fn big_q_exp(d: &DegreeMultiset, e: i64) -> ExactRational {
    let n = d.group_order();
    d.entries()
        .iter()
        .map(|&(deg, m)| integer(m) * pow_signed(&ratio(n, deg), e))
        .fold(ExactRational::zero(), |a, b| a + b)
}

/// `Q_h(G) = Σ_χ (|G|/χ(1))^(2h-2)`.
pub fn big_q(d: &DegreeMultiset, h: u32) -> ExactRational {
    big_q_exp(d, 2 * h as i64 - 2)
}

/// `(1/|G|) Σ_χ χ(1)^(-e)`.
pub fn q_exp(d: &DegreeMultiset, e: i64) -> ExactRational {
    let sum = d
        .entries()
        .iter()
        .map(|&(deg, m)| integer(m) * pow_signed(&integer(deg), -e))
        .fold(ExactRational::zero(), |a, b| a + b);
    sum / integer(d.group_order())
}

/// `q_h(G) = (1/|G|) Σ_χ χ(1)^-(2h-2)`.
pub fn q(d: &DegreeMultiset, h: u32) -> ExactRational {
    q_exp(d, 2 * h as i64 - 2)
}

/// `(1/|G|) Σ_C |C|^(-e)`.
pub fn q_tilde_exp(class_sizes: &[u64], e: i64) -> ExactRational {
    let order: u64 = class_sizes.iter().sum();
    let sum = class_sizes
        .iter()
        .map(|&s| pow_signed(&integer(s), -e))
        .fold(ExactRational::zero(), |a, b| a + b);
    sum / integer(order)
}

/// `q̃_h(G) = (1/|G|) Σ_C |C|^-(h-1)`.
pub fn q_tilde(class_sizes: &[u64], h: u32) -> ExactRational {
    q_tilde_exp(class_sizes, h as i64 - 1)
}

/// Commuting probability `d(G) = k(G)/|G|`.
pub fn commuting_probability(d: &DegreeMultiset) -> ExactRational {
    ratio(d.class_count(), d.group_order())
}

/// `lim_{h→∞} q_h(G) = [G:G']/|G| = 1/|G'|`.
pub fn limit_value(d: &DegreeMultiset) -> ExactRational {
    ratio(d.linear_count(), d.group_order())
}

/// The part of `n` prime to `p`.
pub fn p_prime_part(mut n: u64, p: u64) -> u64 {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n
}

fn check_prime(p: u64) -> Result<(), InvariantError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(InvariantError::NotPrime(p))
    }
}

/// `d_{p'}(G) = k_{p'}(G)/|G|_{p'}`.
pub fn d_p_prime(profile: &GroupProfile, p: u64) -> Result<ExactRational, InvariantError> {
    check_prime(p)?;
    let k = profile.rep_orders.iter().filter(|&&o| o % p != 0).count() as u64;
    Ok(ratio(k, p_prime_part(profile.order, p)))
}

/// `q_{h,p'}(G) = (1/|G|_{p'}) Σ_φ φ(1)^-(2h-2)`. Genus 1 needs only the
/// class data; higher genus needs supplied Brauer degrees.
pub fn q_p_prime(
    profile: &GroupProfile,
    p: u64,
    h: u32,
    brauer: Option<&BrauerDegrees>,
) -> Result<ExactRational, InvariantError> {
    check_prime(p)?;
    if !profile.order.is_multiple_of(p) {
        // every Brauer character is an ordinary one
        return Ok(q(&profile.degrees, h));
    }
    match (h, brauer) {
        (_, Some(b)) => {
            if b.prime != p {
                return Err(InvariantError::BrauerFormat(format!(
                    "data is for p = {}, requested p = {p}",
                    b.prime
                )));
            }
            let e = 2 * h as i64 - 2;
            let sum = b
                .entries
                .iter()
                .map(|&(deg, m)| integer(m) * pow_signed(&integer(deg), -e))
                .fold(ExactRational::zero(), |a, c| a + c);
            Ok(sum / integer(p_prime_part(profile.order, p)))
        }
        (1, None) => d_p_prime(profile, p),
        (h, None) => Err(InvariantError::MissingBrauerData(h)),
    }
}

/// `|G'| ≤ 3/(4 d(G) - 1)` whenever `d(G) > 1/4`. Returns `None` when the
/// hypothesis fails.
pub fn lescot_bound(d: &DegreeMultiset) -> Option<ExactRational> {
    let dg = commuting_probability(d);
    let denom = integer(4) * dg - integer(1);
    (denom > ExactRational::zero()).then(|| integer(3) / denom)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// `Q_h`
    SurfaceSum,
    /// `q_h`
    Scaled,
    /// `q̃_h`
    ClassDual,
    /// `d`
    CommutingProbability,
    /// `d_{p'}`
    PRegular,
    /// `q_{h,p'}`
    PLocal,
}

impl std::str::FromStr for InvariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "Q" => InvariantKind::SurfaceSum,
            "q" => InvariantKind::Scaled,
            "qtilde" => InvariantKind::ClassDual,
            "d" => InvariantKind::CommutingProbability,
            "dpprime" => InvariantKind::PRegular,
            "qhpprime" => InvariantKind::PLocal,
            _ => return Err(format!("unknown invariant kind {s:?}")),
        })
    }
}

/// One invariant evaluation, with genus given as an exponent.
#[derive(Clone, Debug)]
pub struct InvariantRequest {
    pub kind: InvariantKind,
    pub exponent: i64,
    pub prime: Option<u64>,
    pub brauer: Option<BrauerDegrees>,
}

impl InvariantRequest {
    /// Request for genus `h`, translating to the exponent for `kind`.
    pub fn at_genus(kind: InvariantKind, h: u32) -> Self {
        let exponent = match kind {
            InvariantKind::ClassDual => h as i64 - 1,
            _ => 2 * h as i64 - 2,
        };
        InvariantRequest {
            kind,
            exponent,
            prime: None,
            brauer: None,
        }
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.prime = Some(p);
        self
    }

    pub fn with_brauer(mut self, b: BrauerDegrees) -> Self {
        self.brauer = Some(b);
        self
    }

    pub fn evaluate(&self, profile: &GroupProfile) -> Result<ExactRational, InvariantError> {
        let prime = || self.prime.ok_or(InvariantError::MissingPrime("p"));
        match self.kind {
            InvariantKind::SurfaceSum => Ok(big_q_exp(&profile.degrees, self.exponent)),
            InvariantKind::Scaled => Ok(q_exp(&profile.degrees, self.exponent)),
            InvariantKind::ClassDual => Ok(q_tilde_exp(&profile.class_sizes, self.exponent)),
            InvariantKind::CommutingProbability => Ok(commuting_probability(&profile.degrees)),
            InvariantKind::PRegular => d_p_prime(profile, prime()?),
            InvariantKind::PLocal => {
                let p = prime()?;
                if self.exponent % 2 != 0 || self.exponent < -2 {
                    return Err(InvariantError::BrauerFormat(format!(
                        "exponent {} does not correspond to a genus",
                        self.exponent
                    )));
                }
                let h = (self.exponent / 2 + 1) as u32;
                q_p_prime(profile, p, h, self.brauer.as_ref())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(order: u64, degs: &[u64]) -> DegreeMultiset {
        DegreeMultiset::from_degrees(order, degs).unwrap()
    }

    #[test]
    fn genus_zero_and_one() {
        let a5 = ms(60, &[1, 3, 3, 4, 5]);
        assert_eq!(big_q(&a5, 0), ratio(1, 60));
        assert_eq!(big_q(&a5, 1), integer(5));
        assert_eq!(q(&a5, 0), integer(1));
        assert_eq!(q(&a5, 1), ratio(1, 12));
        assert_eq!(big_q(&ms(6, &[1, 1, 2]), 2), integer(81));
    }

    #[test]
    fn known_values() {
        assert_eq!(q(&ms(8, &[1, 1, 1, 1, 2]), 1), ratio(5, 8));
        assert_eq!(q(&ms(60, &[1, 3, 3, 4, 5]), 2), ratio(4769, 216000));
        assert_eq!(q(&ms(12, &[1, 1, 1, 3]), 2), ratio(7, 27));
        assert_eq!(q_tilde(&[1, 3, 4, 4], 2), ratio(11, 72));
        assert_eq!(q_tilde(&[1, 2, 3], 2), ratio(11, 36));
        assert_eq!(q_tilde(&[1, 2, 3], 0), integer(1));
        assert_eq!(limit_value(&ms(60, &[1, 3, 3, 4, 5])), ratio(1, 60));
    }

    #[test]
    fn p_local_values() {
        let a5 = GroupProfile {
            order: 60,
            class_sizes: vec![1, 15, 20, 12, 12],
            rep_orders: vec![1, 2, 3, 5, 5],
            degrees: ms(60, &[1, 3, 3, 4, 5]),
        };
        assert_eq!(d_p_prime(&a5, 5).unwrap(), ratio(1, 4));
        assert_eq!(d_p_prime(&a5, 7).unwrap(), ratio(1, 12));
        assert!(matches!(d_p_prime(&a5, 6), Err(InvariantError::NotPrime(6))));
        assert!(matches!(
            q_p_prime(&a5, 5, 2, None),
            Err(InvariantError::MissingBrauerData(2))
        ));
        let b = BrauerDegrees::new("A(5)", 5, &[(1, 1), (2, 2), (4, 1)]).unwrap();
        // (1/12)(1 + 2/2^e + 1/4^e) with e = 2h - 2
        assert_eq!(q_p_prime(&a5, 5, 2, Some(&b)).unwrap(), ratio(25, 192));
        assert_eq!(q_p_prime(&a5, 5, 3, Some(&b)).unwrap(), ratio(289, 3072));
        assert_eq!(q_p_prime(&a5, 5, 1, None).unwrap(), ratio(1, 4));

        let trivial = GroupProfile {
            order: 1,
            class_sizes: vec![1],
            rep_orders: vec![1],
            degrees: ms(1, &[1]),
        };
        for h in 0..4 {
            assert_eq!(q_p_prime(&trivial, 3, h, None).unwrap(), integer(1));
        }

        let req = InvariantRequest::at_genus(InvariantKind::PLocal, 3)
            .with_prime(5)
            .with_brauer(b);
        assert_eq!(req.evaluate(&a5).unwrap(), ratio(289, 3072));
        let req = InvariantRequest::at_genus(InvariantKind::PRegular, 1);
        assert!(matches!(req.evaluate(&a5), Err(InvariantError::MissingPrime(_))));
    }

    #[test]
    fn lescot_edge_at_d8() {
        let d8 = ms(8, &[1, 1, 1, 1, 2]);
        assert_eq!(lescot_bound(&d8), Some(integer(2)));
        assert_eq!(lescot_bound(&ms(60, &[1, 3, 3, 4, 5])), None);
    }
}

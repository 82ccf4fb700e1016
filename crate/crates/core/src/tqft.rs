//! The 2D TQFT attached to a finite group: its class algebra as a Frobenius
//! algebra, and evaluation of cobordisms glued from elementary pieces.
//!
//! In the basis of primitive central idempotents every piece is diagonal:
//!
//! | piece      | circles | action                                   |
//! |------------|---------|------------------------------------------|
//! | `cap`      | 0 → 1   | `1 ↦ Σ_χ e_χ`                            |
//! | `copants`  | 1 → 2   | `e_χ ↦ (|G|/χ(1))² e_χ ⊗ e_χ`            |
//! | `pants`    | 2 → 1   | `e_χ ⊗ e_ψ ↦ δ_χψ e_χ`                   |
//! | `cup`      | 1 → 0   | `e_χ ↦ (χ(1)/|G|)²`                      |
//! | `cylinder` | 1 → 1   | identity                                 |
//!
//! so the closed genus-`h` surface evaluates to `Σ_χ (|G|/χ(1))^(2h-2)`.
//! Pieces act on the last circles of the current boundary.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::chartab::modp::{add_mod, inv_mod, mul_mod};
use crate::chartab::{CentralCharactersModL, ClassMatrices, DegreeMultiset};
use crate::error::TqftError;
use crate::invariants::{integer, ratio, ExactRational};
use crate::perm::ClassTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    Cap,
    Cup,
    Pants,
    Copants,
    Cylinder,
}

impl Piece {
    pub fn name(self) -> &'static str {
        match self {
            Piece::Cap => "cap",
            Piece::Cup => "cup",
            Piece::Pants => "pants",
            Piece::Copants => "copants",
            Piece::Cylinder => "cylinder",
        }
    }

    /// `(inputs, outputs)` in boundary circles.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Piece::Cap => (0, 1),
            Piece::Cup => (1, 0),
            Piece::Pants => (2, 1),
            Piece::Copants => (1, 2),
            Piece::Cylinder => (1, 1),
        }
    }
}

impl FromStr for Piece {
    type Err = TqftError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "cap" => Piece::Cap,
            "cup" => Piece::Cup,
            "pants" => Piece::Pants,
            "copants" => Piece::Copants,
            "cylinder" => Piece::Cylinder,
            _ => return Err(TqftError::UnknownPiece(s.to_string())),
        })
    }
}

/// A sequence of pieces glued left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobordismWord(pub Vec<Piece>);

impl CobordismWord {
    /// Closed genus-`h` surface: `cap (copants pants)^h cup`.
    pub fn genus(h: u32) -> Self {
        let mut pieces = vec![Piece::Cap];
        for _ in 0..h {
            pieces.push(Piece::Copants);
            pieces.push(Piece::Pants);
        }
        pieces.push(Piece::Cup);
        CobordismWord(pieces)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that every piece finds enough circles; returns the final
    /// circle count.
    pub fn boundary(&self) -> Result<usize, TqftError> {
        let mut circles = 0usize;
        for (position, &piece) in self.0.iter().enumerate() {
            let (needed, out) = piece.arity();
            if circles < needed {
                return Err(TqftError::Arity {
                    piece: piece.name(),
                    position,
                    needed,
                    available: circles,
                });
            }
            circles = circles - needed + out;
        }
        Ok(circles)
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.boundary(), Ok(0))
    }
}

impl FromStr for CobordismWord {
    type Err = TqftError;

    /// Comma-separated piece names, e.g. `cap,copants,pants,cup`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Piece::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(CobordismWord)
    }
}

impl fmt::Display for CobordismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|p| p.name()).collect();
        f.write_str(&names.join(","))
    }
}

/// Value of a word with open boundary: coefficients of `e_χ1 ⊗ … ⊗ e_χn`
/// keyed by the character indices. Zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenValue {
    pub circles: usize,
    pub terms: BTreeMap<Vec<usize>, ExactRational>,
}

/// Evaluates any well-formed word exactly, from the degree list alone.
pub fn evaluate(word: &CobordismWord, degrees: &DegreeMultiset) -> Result<OpenValue, TqftError> {
    word.boundary()?;
    let chars = degrees.expanded();
    let n = degrees.group_order();
    // (|G|/χ(1))² and its inverse per character
    let handle: Vec<ExactRational> = chars
        .iter()
        .map(|&d| {
            let r = ratio(n, d);
            &r * &r
        })
        .collect();
    let counit: Vec<ExactRational> = handle.iter().map(|x| x.recip()).collect();

    let mut circles = 0usize;
    let mut terms: BTreeMap<Vec<usize>, ExactRational> = BTreeMap::new();
    terms.insert(Vec::new(), ExactRational::one());
    for &piece in word.pieces() {
        let mut next: BTreeMap<Vec<usize>, ExactRational> = BTreeMap::new();
        let mut add = |key: Vec<usize>, value: ExactRational| {
            let slot = next.entry(key).or_insert_with(ExactRational::zero);
            *slot += value;
        };
        for (key, coeff) in terms {
            match piece {
                Piece::Cylinder => add(key, coeff),
                Piece::Cap => {
                    for chi in 0..chars.len() {
                        let mut k = key.clone();
                        k.push(chi);
                        add(k, coeff.clone());
                    }
                }
                Piece::Copants => {
                    let chi = *key.last().unwrap();
                    let mut k = key;
                    k.push(chi);
                    add(k, coeff * &handle[chi]);
                }
                Piece::Pants => {
                    let mut k = key;
                    let b = k.pop().unwrap();
                    if *k.last().unwrap() == b {
                        add(k, coeff);
                    }
                }
                Piece::Cup => {
                    let mut k = key;
                    let chi = k.pop().unwrap();
                    add(k, coeff * &counit[chi]);
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        terms = next;
        let (i, o) = piece.arity();
        circles = circles - i + o;
    }
    Ok(OpenValue { circles, terms })
}

/// Value of a closed word as an exact rational.
pub fn evaluate_closed(
    word: &CobordismWord,
    degrees: &DegreeMultiset,
) -> Result<ExactRational, TqftError> {
    let circles = word.boundary()?;
    if circles != 0 {
        return Err(TqftError::NotClosed(circles));
    }
    let value = evaluate(word, degrees)?;
    Ok(value
        .terms
        .get(&Vec::new())
        .cloned()
        .unwrap_or_else(ExactRational::zero))
}

/// The class algebra over `F_ℓ` with its primitive central idempotents
/// written in the class-sum basis.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebraModL {
    pub ell: u64,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub central: CentralCharactersModL,
    pub matrices: ClassMatrices,
    /// Row `χ`: coefficient of `C_j` in `e_χ`, which is
    /// `χ(1) χ(g_j^-1) / |G| = χ(1)² ω_{j*} / (|G| |C_j|)`.
    pub idempotent_coeffs: Vec<Vec<u64>>,
}

impl FrobeniusAlgebraModL {
    pub fn new(
        classes: &ClassTable,
        matrices: ClassMatrices,
        central: CentralCharactersModL,
    ) -> Self {
        let ell = central.ell;
        let n_inv = inv_mod(classes.group_order % ell, ell);
        let idempotent_coeffs = central
            .omega
            .iter()
            .zip(&central.degrees)
            .map(|(w, &d)| {
                let d2 = mul_mod(d % ell, d % ell, ell);
                (0..w.len())
                    .map(|j| {
                        let size_inv = inv_mod(classes.sizes[j] % ell, ell);
                        let v = mul_mod(d2, w[classes.inverse_class[j]], ell);
                        mul_mod(mul_mod(v, n_inv, ell), size_inv, ell)
                    })
                    .collect()
            })
            .collect();
        FrobeniusAlgebraModL {
            ell,
            group_order: classes.group_order,
            class_sizes: classes.sizes.clone(),
            inverse_class: classes.inverse_class.clone(),
            central,
            matrices,
            idempotent_coeffs,
        }
    }

    /// Builds the algebra from a fresh character-degree computation.
    pub fn for_group(g: &crate::perm::PermGroup) -> Result<Self, TqftError> {
        let data = crate::chartab::character_data(g)?;
        Ok(Self::new(&data.classes, data.matrices, data.central))
    }

    pub fn k(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.central.degrees
    }

    /// Product in the class-sum basis.
    pub fn multiply(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let k = self.k();
        let m = self.ell;
        let mut out = vec![0u64; k];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = mul_mod(xi, yj, m);
                for (kk, o) in out.iter_mut().enumerate() {
                    let a = self.matrices.get(i, j, kk);
                    if a != 0 {
                        *o = add_mod(*o, mul_mod(c, a % m, m), m);
                    }
                }
            }
        }
        out
    }

    /// `ε(x) = x_1 / |G|`, the coefficient of the identity class over `|G|`.
    pub fn linear_form(&self, x: &[u64]) -> u64 {
        mul_mod(x[0], inv_mod(self.group_order % self.ell, self.ell), self.ell)
    }

    /// Checks idempotency, orthogonality, `Σ e_χ = 1` and
    /// `ε(e_χ e_ψ) = δ (χ(1)/|G|)²`, all mod `ℓ`.
    pub fn verify(&self) -> Result<(), TqftError> {
        let m = self.ell;
        let fail = |what: String| Err(TqftError::Relation { ell: m, what });
        let k = self.k();
        let e = &self.idempotent_coeffs;
        for a in 0..k {
            for b in a..k {
                let prod = self.multiply(&e[a], &e[b]);
                if a == b {
                    if prod != e[a] {
                        return fail(format!("e_{a}^2 != e_{a}"));
                    }
                    let d = self.central.degrees[a] % m;
                    let want = mul_mod(
                        mul_mod(d, d, m),
                        inv_mod(mul_mod(self.group_order % m, self.group_order % m, m), m),
                        m,
                    );
                    if self.linear_form(&prod) != want {
                        return fail(format!("<e_{a}, e_{a}> != (chi(1)/|G|)^2"));
                    }
                } else if prod.iter().any(|&v| v != 0) {
                    return fail(format!("e_{a} e_{b} != 0"));
                }
            }
        }
        let mut sum = vec![0u64; k];
        for row in e {
            for (s, &v) in sum.iter_mut().zip(row) {
                *s = add_mod(*s, v, m);
            }
        }
        let mut unit = vec![0u64; k];
        unit[0] = 1;
        if sum != unit {
            return fail("sum of idempotents is not the identity".into());
        }
        Ok(())
    }

    /// Closed-word value from the integer degrees carried by the algebra.
    pub fn evaluate_closed(&self, word: &CobordismWord) -> Result<ExactRational, TqftError> {
        let degrees = DegreeMultiset::from_degrees(self.group_order, &self.central.degrees)?;
        evaluate_closed(word, &degrees)
    }
}

/// `⟨e_χ, e_χ⟩ = (χ(1)/|G|)²` as an exact rational.
pub fn idempotent_norm(degree: u64, group_order: u64) -> ExactRational {
    let r = ratio(degree, group_order);
    &r * &r
}

/// `Q_0 = 1/|G|`, the sphere.
pub fn sphere_value(group_order: u64) -> ExactRational {
    integer(group_order).recip()
}

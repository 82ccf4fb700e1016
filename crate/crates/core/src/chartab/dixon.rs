//! Character degrees by the Dixon–Schneider method: simultaneous
//! diagonalisation of the class matrices over a prime field.

use super::degrees::DegreeMultiset;
use super::linalg::{char_poly, kernel, Subspace};
use super::modp::{choose_modulus, floor_sqrt, inv_mod, mul_mod, sqrt_mod, sub_mod};
use super::poly::distinct_roots;
use super::structure::ClassMatrices;
use crate::error::CharTableError;
use crate::perm::{ClassTable, PermGroup};

/// Central characters reduced mod `ell`: row `χ` holds
/// `ω_χ(C_j) = |C_j| χ(g_j) / χ(1)`. Rows are sorted by degree, then by
/// their residues, with the trivial character first.
#[derive(Clone, Debug)]
pub struct CentralCharactersModL {
    pub ell: u64,
    pub omega: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
}

/// Everything produced by one Dixon–Schneider run.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub classes: ClassTable,
    pub matrices: ClassMatrices,
    pub central: CentralCharactersModL,
    pub degrees: DegreeMultiset,
}

/// Computes the character degrees of `g` along with the intermediate data.
pub fn character_data(g: &PermGroup) -> Result<CharacterData, CharTableError> {
    let classes = ClassTable::compute(g)?;
    let matrices = ClassMatrices::compute(g, &classes)?;
    let (central, degrees) = split_class_algebra(&classes, &matrices)?;
    Ok(CharacterData {
        classes,
        matrices,
        central,
        degrees,
    })
}

/// Character degrees of `g`.
pub fn character_degrees(g: &PermGroup) -> Result<DegreeMultiset, CharTableError> {
    Ok(character_data(g)?.degrees)
}

/// Splits `F_ℓ^k` into common eigenlines of the class matrices and recovers
/// one degree per line.
pub fn split_class_algebra(
    t: &ClassTable,
    a: &ClassMatrices,
) -> Result<(CentralCharactersModL, DegreeMultiset), CharTableError> {
    let order = t.group_order;
    let k = t.len();
    let ell = choose_modulus(t.exponent(), order)?;

    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending = vec![Subspace::whole(k)];
    // class 0 is the identity, whose matrix is the identity
    for i in 1..k {
        if pending.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for space in pending {
            let restricted = space.restrict(|v| a.apply(i, v, ell));
            let roots = distinct_roots(&char_poly(restricted.clone(), ell), ell);
            if roots.len() == 1 {
                next.push(space);
                continue;
            }
            let mut total = 0;
            for lambda in roots {
                let mut shifted = restricted.clone();
                for (r, row) in shifted.iter_mut().enumerate() {
                    row[r] = sub_mod(row[r], lambda, ell);
                }
                let coords = kernel(&shifted, space.dim(), ell);
                total += coords.len();
                let vectors = coords.iter().map(|c| space.lift(c, ell)).collect();
                next.push(Subspace::spanned_by(vectors, ell));
            }
            if total != space.dim() {
                return Err(CharTableError::IncompleteSplit);
            }
        }
        pending = Vec::new();
        for space in next {
            if space.dim() == 1 {
                done.push(space.basis.into_iter().next().unwrap());
            } else {
                pending.push(space);
            }
        }
    }
    for space in pending {
        if space.dim() != 1 {
            return Err(CharTableError::IncompleteSplit);
        }
        done.push(space.basis.into_iter().next().unwrap());
    }

    let bound = floor_sqrt(order);
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for mut w in done {
        if w[0] == 0 {
            return Err(CharTableError::DegreeRecovery(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let s = inv_mod(w[0], ell);
        for x in w.iter_mut() {
            *x = mul_mod(*x, s, ell);
        }
        // Σ_j ω_j ω_j* / |C_j| = |G| / χ(1)^2
        let mut sum = 0u64;
        for j in 0..k {
            let term = mul_mod(
                mul_mod(w[j], w[t.inverse_class[j]], ell),
                inv_mod(t.sizes[j] % ell, ell),
                ell,
            );
            sum = (sum + term) % ell;
        }
        if sum == 0 {
            return Err(CharTableError::DegreeRecovery("zero norm".into()));
        }
        let d2 = mul_mod(order % ell, inv_mod(sum, ell), ell);
        let root = sqrt_mod(d2, ell).ok_or_else(|| {
            CharTableError::DegreeRecovery(format!("{d2} is not a square mod {ell}"))
        })?;
        let d = [root, ell - root]
            .into_iter()
            .find(|&r| (1..=bound).contains(&r))
            .ok_or_else(|| {
                CharTableError::DegreeRecovery(format!("no root of {d2} mod {ell} in range"))
            })?;
        rows.push((d, w));
    }
    rows.sort();
    // trivial character (ω_j = |C_j|) first
    if let Some(pos) = rows
        .iter()
        .position(|(_, w)| w.iter().zip(&t.sizes).all(|(&x, &s)| x == s % ell))
    {
        let triv = rows.remove(pos);
        rows.insert(0, triv);
    }

    let degree_list: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    let degrees = DegreeMultiset::from_degrees(order, &degree_list)?;
    if degrees.class_count() as usize != k {
        return Err(CharTableError::DegreeRecovery("character count differs from k".into()));
    }
    Ok((
        CentralCharactersModL {
            ell,
            omega: rows.into_iter().map(|(_, w)| w).collect(),
            degrees: degree_list,
        },
        degrees,
    ))
}

impl CentralCharactersModL {
    /// Checks `M_i ω = ω_i ω` for every row and every class matrix.
    pub fn is_eigenbasis_of(&self, a: &ClassMatrices) -> bool {
        self.omega.iter().all(|w| {
            (0..a.len()).all(|i| {
                let mw = a.apply(i, w, self.ell);
                mw.iter()
                    .zip(w)
                    .all(|(&x, &y)| x == mul_mod(w[i], y, self.ell))
            })
        })
    }
}

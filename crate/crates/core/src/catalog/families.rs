use super::field::{is_prime, SmallField};
use super::spec::{Family, GroupSpec};
use crate::error::GroupError;
use crate::perm::{PermGroup, Permutation};

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

fn perm_from_fn(degree: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images_unchecked((0..degree as u32).map(f).collect())
}

/// Builds the permutation group described by `spec`.
pub fn make(spec: &GroupSpec) -> Result<PermGroup, GroupError> {
    match spec {
        GroupSpec::Generators { degree, cycles } => {
            let gens = cycles
                .iter()
                .map(|c| Permutation::parse_cycles(*degree, c))
                .collect::<Result<Vec<_>, _>>()?;
            PermGroup::new(*degree, gens)
        }
        GroupSpec::Family(f) => make_family(f),
    }
}

fn make_family(f: &Family) -> Result<PermGroup, GroupError> {
    match *f {
        Family::Cyclic(n) => cyclic(n),
        Family::Dihedral(order) => dihedral(order),
        Family::Symmetric(n) => symmetric(n),
        Family::Alternating(n) => alternating(n),
        Family::SL2(q) => linear(q, LinearKind::Special),
        Family::PSL2(q) => linear(q, LinearKind::ProjectiveSpecial),
        Family::PGL2(q) => linear(q, LinearKind::ProjectiveGeneral),
        Family::PSL3Of2 => linear(7, LinearKind::ProjectiveSpecial),
        Family::ExtraspecialPlus(p) => extraspecial_plus(p),
        Family::FrobeniusMersenne(k) => frobenius_mersenne(k),
        Family::DirectProduct(ref a, ref b) => direct_product(&make(a)?, &make(b)?),
    }
}

pub fn cyclic(n: u32) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("C(n) needs n >= 1"));
    }
    let n = n as usize;
    let gens = if n > 1 {
        vec![perm_from_fn(n, |i| (i + 1) % n as u32)]
    } else {
        vec![]
    };
    PermGroup::new(n, gens)
}

/// Dihedral group of the given order `2n`, `n >= 2`.
pub fn dihedral(order: u32) -> Result<PermGroup, GroupError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(invalid(format!("D(m) needs an even order m >= 4, got {order}")));
    }
    let n = order / 2;
    if n == 2 {
        // Klein four-group: D_4 has no faithful action on two points
        let a = Permutation::parse_cycles(4, "(1 2)(3 4)")?;
        let b = Permutation::parse_cycles(4, "(1 3)(2 4)")?;
        return PermGroup::new(4, vec![a, b]);
    }
    let deg = n as usize;
    let rot = perm_from_fn(deg, |i| (i + 1) % n);
    let refl = perm_from_fn(deg, |i| (n - i) % n);
    PermGroup::new(deg, vec![rot, refl])
}

pub fn symmetric(n: u32) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("S(n) needs n >= 1"));
    }
    let deg = n as usize;
    let gens = match n {
        1 => vec![],
        2 => vec![perm_from_fn(2, |i| 1 - i)],
        _ => vec![
            perm_from_fn(deg, |i| (i + 1) % n),
            perm_from_fn(deg, |i| match i {
                0 => 1,
                1 => 0,
                x => x,
            }),
        ],
    };
    PermGroup::new(deg, gens)
}

pub fn alternating(n: u32) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("A(n) needs n >= 1"));
    }
    let deg = n as usize;
    let gens = (3..=n)
        .map(|k| Permutation::parse_cycles(deg, &format!("(1 2 {k})")))
        .collect::<Result<Vec<_>, _>>()?;
    PermGroup::new(deg, gens)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LinearKind {
    Special,
    ProjectiveSpecial,
    ProjectiveGeneral,
}

type Matrix2 = [[u32; 2]; 2];

fn linear(q: u32, kind: LinearKind) -> Result<PermGroup, GroupError> {
    if q > 61 || !(q == 9 || is_prime(q as u64)) {
        return Err(invalid(format!(
            "linear groups need a prime q <= 61 (or q = 9), got {q}"
        )));
    }
    let f = SmallField::new(q)?;
    let one = 1;
    let zero = 0;
    let minus_one = f.neg(1);
    let mut mats: Vec<Matrix2> = f
        .additive_basis()
        .into_iter()
        .map(|a| [[one, a], [zero, one]])
        .collect();
    mats.push([[zero, one], [minus_one, zero]]);
    if kind == LinearKind::ProjectiveGeneral {
        mats.push([[f.primitive_element(), zero], [zero, one]]);
    }

    // row vector times matrix
    let act = |x: u32, y: u32, m: &Matrix2| {
        (
            f.add(f.mul(x, m[0][0]), f.mul(y, m[1][0])),
            f.add(f.mul(x, m[0][1]), f.mul(y, m[1][1])),
        )
    };

    let gens: Vec<Permutation> = match kind {
        LinearKind::Special => {
            let deg = (q * q - 1) as usize;
            let index = |x: u32, y: u32| x * q + y - 1;
            mats.iter()
                .map(|m| {
                    perm_from_fn(deg, |i| {
                        let v = i + 1;
                        let (x, y) = act(v / q, v % q, m);
                        index(x, y)
                    })
                })
                .collect()
        }
        _ => {
            // projective points (1, t) -> t, (0, 1) -> q
            let deg = (q + 1) as usize;
            let normalize = |x: u32, y: u32| {
                if x == 0 {
                    q
                } else {
                    f.mul(y, f.inv(x).unwrap())
                }
            };
            mats.iter()
                .map(|m| {
                    perm_from_fn(deg, |i| {
                        let (x, y) = if i == q { (0, 1) } else { (1, i) };
                        let (x2, y2) = act(x, y, m);
                        normalize(x2, y2)
                    })
                })
                .collect()
        }
    };
    let deg = gens[0].degree();
    PermGroup::new(deg, gens)
}

/// Heisenberg group of order `p^3`: upper unitriangular 3×3 matrices over
/// `F_p` acting by right multiplication on the invariant plane of row vectors
/// `(1, y, z)`, which is faithful and has degree `p^2`.
pub fn extraspecial_plus(p: u32) -> Result<PermGroup, GroupError> {
    if p.is_multiple_of(2) || !is_prime(p as u64) || p > 61 {
        return Err(invalid(format!(
            "extraspecial+(p) needs an odd prime p <= 61, got {p}"
        )));
    }
    let deg = (p * p) as usize;
    // (1, y, z) * (I + E12) = (1, y + 1, z)
    let a = perm_from_fn(deg, |i| {
        let (y, z) = (i / p, i % p);
        ((y + 1) % p) * p + z
    });
    // (1, y, z) * (I + E23) = (1, y, z + y)
    let b = perm_from_fn(deg, |i| {
        let (y, z) = (i / p, i % p);
        y * p + (z + y) % p
    });
    PermGroup::new(deg, vec![a, b])
}

const MERSENNE_MODULI: [(u32, u32); 4] = [
    (2, 0b111),        // x^2 + x + 1
    (3, 0b1011),       // x^3 + x + 1
    (5, 0b100101),     // x^5 + x^2 + 1
    (7, 0b10000011),   // x^7 + x + 1
];

/// `(C_2)^f ⋊ C_p`, `p = 2^f - 1` prime: the additive group of `F_{2^f}`
/// permuted by translations and by multiplication by `x`.
pub fn frobenius_mersenne(f: u32) -> Result<PermGroup, GroupError> {
    let modulus = MERSENNE_MODULI
        .iter()
        .find(|(k, _)| *k == f)
        .map(|&(_, m)| m)
        .ok_or_else(|| {
            invalid(format!(
                "frobenius_mersenne(f) needs f in {{2,3,5,7}} (2^f - 1 prime), got {f}"
            ))
        })?;
    let deg = 1usize << f;
    let translate = perm_from_fn(deg, |v| v ^ 1);
    let times_x = perm_from_fn(deg, |v| {
        let w = v << 1;
        if w & (1 << f) != 0 {
            w ^ modulus
        } else {
            w
        }
    });
    PermGroup::new(deg, vec![translate, times_x])
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
    let (da, db) = (a.degree(), b.degree());
    let deg = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(perm_from_fn(deg, |i| {
            if (i as usize) < da {
                g.apply(i)
            } else {
                i
            }
        }));
    }
    for g in b.generators() {
        gens.push(perm_from_fn(deg, |i| {
            if (i as usize) < da {
                i
            } else {
                g.apply(i - da as u32) + da as u32
            }
        }));
    }
    PermGroup::new(deg, gens)
}

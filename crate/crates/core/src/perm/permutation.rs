use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::GroupError;

/// A permutation of `{0, .., degree-1}` stored as its image array.
///
/// Products follow the right-action convention: `a.mul(&b)` applies `a`
/// first and then `b`, so `x^(ab) = (x^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(GroupError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt as usize > degree {
                    return Err(GroupError::PointOutOfRange {
                        point: pt as usize,
                        degree,
                    });
                }
                let p = pt as usize - 1;
                if touched[p] {
                    return Err(GroupError::NotBijective);
                }
                touched[p] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                images[p] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` for the given degree.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, GroupError> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // x^(g^-1 s g): map g(i) -> g(s(i))
        let mut out = vec![0u32; self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[s as usize];
        }
        Permutation { images: out }
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .mul(&other.inverse())
            .mul(self)
            .mul(other)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur as u32);
                cur = self.images[cur] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses a string of 1-based cycles, e.g. `(1 2 3)(4 5)` or `()`.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>, GroupError> {
    let bad = || GroupError::Parse(format!("bad cycle notation: {text:?}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let inner = &body[..close];
        let points = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(u32::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        let e = Permutation::parse_cycles(4, "()").unwrap();
        assert!(e.is_identity());
        assert_eq!(e.to_string(), "()");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles(3, "(1 2 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn product_convention() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let a = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2 3)").unwrap();
        assert_eq!(a.mul(&b).apply(0), 2);
        let c = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let conj = c.conjugate_by(&a);
        assert_eq!(conj, a.inverse().mul(&c).mul(&a));
        assert!(c.mul(&c.inverse()).is_identity());
        assert_eq!(c.pow(3), Permutation::identity(3));
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::CharTableError;

/// The multiset of irreducible character degrees of a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeMultiset {
    entries: Vec<(u64, u64)>,
    group_order: u64,
}

impl DegreeMultiset {
    /// Builds and validates a multiset from `(degree, multiplicity)` pairs in
    /// any order; repeated degrees are merged.
    pub fn from_pairs(group_order: u64, pairs: &[(u64, u64)]) -> Result<Self, CharTableError> {
        let mut entries: Vec<(u64, u64)> = Vec::new();
        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        for (d, m) in sorted {
            if m == 0 {
                continue;
            }
            match entries.last_mut() {
                Some((ld, lm)) if *ld == d => *lm += m,
                _ => entries.push((d, m)),
            }
        }
        let ms = DegreeMultiset {
            entries,
            group_order,
        };
        ms.validate()?;
        Ok(ms)
    }

    pub fn from_degrees(group_order: u64, degrees: &[u64]) -> Result<Self, CharTableError> {
        let pairs: Vec<(u64, u64)> = degrees.iter().map(|&d| (d, 1)).collect();
        Self::from_pairs(group_order, &pairs)
    }

    fn validate(&self) -> Result<(), CharTableError> {
        let bad = |msg: String| Err(CharTableError::DegreeRecovery(msg));
        if self.group_order == 0 {
            return bad("group order must be positive".into());
        }
        let mut sum: u128 = 0;
        for &(d, m) in &self.entries {
            if d == 0 || !self.group_order.is_multiple_of(d) {
                return bad(format!("degree {d} does not divide {}", self.group_order));
            }
            sum += m as u128 * d as u128 * d as u128;
        }
        if sum != self.group_order as u128 {
            return bad(format!(
                "sum of squared degrees is {sum}, expected {}",
                self.group_order
            ));
        }
        if self.linear_count() == 0 {
            return bad("no linear character".into());
        }
        Ok(())
    }

    /// `(degree, multiplicity)` pairs sorted by degree.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Number of irreducible characters, `k(G)`.
    pub fn class_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Multiplicity of degree 1, i.e. `[G : G']`.
    pub fn linear_count(&self) -> u64 {
        match self.entries.first() {
            Some(&(1, m)) => m,
            _ => 0,
        }
    }

    /// Degrees listed with repetition, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize))
            .collect()
    }
}

/// Space-separated `degree:multiplicity` pairs.
impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}:{m}")?;
        }
        Ok(())
    }
}

/// Parses the pair list written by `Display`.
pub fn parse_pairs(line: &str) -> Result<Vec<(u64, u64)>, String> {
    line.split_whitespace()
        .map(|tok| {
            let (d, m) = tok
                .split_once(':')
                .ok_or_else(|| format!("expected degree:multiplicity, got {tok:?}"))?;
            let d = d.parse().map_err(|_| format!("bad degree in {tok:?}"))?;
            let m = m.parse().map_err(|_| format!("bad multiplicity in {tok:?}"))?;
            Ok((d, m))
        })
        .collect()
}

/// Parses a bare pair list; the group order is taken from the degree
/// equation.
impl FromStr for DegreeMultiset {
    type Err = CharTableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pairs = parse_pairs(s).map_err(CharTableError::DegreeRecovery)?;
        let order = pairs.iter().map(|&(d, m)| d * d * m).sum();
        Self::from_pairs(order, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_and_sorts() {
        let d = DegreeMultiset::from_degrees(60, &[5, 1, 3, 4, 3]).unwrap();
        assert_eq!(d.entries(), &[(1, 1), (3, 2), (4, 1), (5, 1)]);
        assert_eq!(d.class_count(), 5);
        assert_eq!(d.linear_count(), 1);
        assert_eq!(d.expanded(), vec![1, 3, 3, 4, 5]);
        assert_eq!(d.to_string(), "1:1 3:2 4:1 5:1");
        assert_eq!(d.to_string().parse::<DegreeMultiset>().unwrap(), d);
    }

    #[test]
    fn rejects_inconsistent_data() {
        assert!(DegreeMultiset::from_degrees(6, &[1, 1, 1]).is_err());
        assert!(DegreeMultiset::from_degrees(8, &[2, 2]).is_err());
        // squares sum to 15, but 2 does not divide 15
        assert!(DegreeMultiset::from_degrees(15, &[1, 1, 2, 3]).is_err());
        assert!("1:x".parse::<DegreeMultiset>().is_err());
    }
}

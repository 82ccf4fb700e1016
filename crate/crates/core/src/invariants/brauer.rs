//! User-supplied Brauer-degree data.
//!
//! ```text
//! GINVBRAUER 1
//! <group label>
//! <prime>
//! <degree:multiplicity ...>
//! ```

use std::path::Path;

use crate::chartab::parse_pairs;
use crate::error::InvariantError;

const HEADER: &str = "GINVBRAUER 1";

/// Degrees of the irreducible p-Brauer characters. Unlike ordinary degrees
/// these satisfy no degree equation, so only positivity is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerDegrees {
    pub label: String,
    pub prime: u64,
    pub entries: Vec<(u64, u64)>,
}

impl BrauerDegrees {
    pub fn new(label: &str, prime: u64, pairs: &[(u64, u64)]) -> Result<Self, InvariantError> {
        if pairs.iter().any(|&(d, m)| d == 0 || m == 0) {
            return Err(InvariantError::BrauerFormat(
                "degrees and multiplicities must be positive".into(),
            ));
        }
        let mut entries = pairs.to_vec();
        entries.sort_unstable();
        Ok(BrauerDegrees {
            label: label.to_string(),
            prime,
            entries,
        })
    }

    pub fn parse(text: &str) -> Result<Self, InvariantError> {
        let bad = |m: &str| InvariantError::BrauerFormat(m.to_string());
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some(HEADER) {
            return Err(bad("missing GINVBRAUER 1 header"));
        }
        let label = lines.next().ok_or_else(|| bad("missing label line"))?.trim();
        let prime: u64 = lines
            .next()
            .ok_or_else(|| bad("missing prime line"))?
            .trim()
            .parse()
            .map_err(|_| bad("prime is not an integer"))?;
        let pairs = parse_pairs(lines.next().ok_or_else(|| bad("missing degree line"))?)
            .map_err(InvariantError::BrauerFormat)?;
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(bad("trailing content"));
        }
        Self::new(label, prime, &pairs)
    }

    pub fn read(path: &Path) -> Result<Self, InvariantError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let pairs: Vec<String> = self.entries.iter().map(|(d, m)| format!("{d}:{m}")).collect();
        format!("{HEADER}\n{}\n{}\n{}\n", self.label, self.prime, pairs.join(" "))
    }

    pub fn count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_errors() {
        let text = "GINVBRAUER 1\nA(5)\n5\n1:1 2:2 4:1\n";
        let b = BrauerDegrees::parse(text).unwrap();
        assert_eq!(b.prime, 5);
        assert_eq!(b.count(), 4);
        assert_eq!(b.to_text(), text);
        assert!(BrauerDegrees::parse("GINVBRAUER 2\nA(5)\n5\n1:1\n").is_err());
        assert!(BrauerDegrees::parse("GINVBRAUER 1\nA(5)\nfive\n1:1\n").is_err());
        assert!(BrauerDegrees::parse("GINVBRAUER 1\nA(5)\n5\n0:1\n").is_err());
    }
}

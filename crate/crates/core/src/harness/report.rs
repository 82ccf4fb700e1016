use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::invariants::{format_rational, serde_text, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "EXTREMAL_EQUALITY")]
    ExtremalEquality,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::ExtremalEquality => "EXTREMAL_EQUALITY",
            Verdict::Violation => "VIOLATION",
        }
    }
}

/// One row of a report. Theorem rows test `lhs > rhs ⇒ conclusion`;
/// property rows (remarks, lemmas) carry `hypothesis = true` and the
/// relation that was checked between `lhs` and `rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem: String,
    pub group: String,
    pub h: u32,
    #[serde(with = "serde_text")]
    pub lhs: ExactRational,
    #[serde(with = "serde_text")]
    pub rhs: ExactRational,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
}

impl TheoremCheck {
    /// Row for an implication `lhs > rhs ⇒ conclusion`.
    pub fn implication(
        theorem: &str,
        group: &str,
        h: u32,
        prime: Option<u64>,
        lhs: ExactRational,
        rhs: ExactRational,
        conclusion: bool,
    ) -> Self {
        let hypothesis = lhs > rhs;
        let verdict = if hypothesis && !conclusion {
            Verdict::Violation
        } else if lhs == rhs {
            Verdict::ExtremalEquality
        } else {
            Verdict::Consistent
        };
        TheoremCheck {
            theorem: theorem.to_string(),
            group: group.to_string(),
            h,
            lhs,
            rhs,
            hypothesis,
            conclusion,
            verdict,
            prime,
            relation: None,
        }
    }

    /// Row for a claimed relation between two values.
    pub fn property(
        name: &str,
        group: &str,
        h: u32,
        lhs: ExactRational,
        relation: &str,
        rhs: ExactRational,
    ) -> Self {
        let holds = match relation {
            ">" => lhs > rhs,
            ">=" => lhs >= rhs,
            "<" => lhs < rhs,
            "<=" => lhs <= rhs,
            "=" => lhs == rhs,
            _ => panic!("unknown relation {relation}"),
        };
        TheoremCheck {
            theorem: name.to_string(),
            group: group.to_string(),
            h,
            lhs,
            rhs,
            hypothesis: true,
            conclusion: holds,
            verdict: if holds {
                Verdict::Consistent
            } else {
                Verdict::Violation
            },
            prime: None,
            relation: Some(relation.to_string()),
        }
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.prime = Some(p);
        self
    }

    fn sort_key(&self) -> (&str, &str, u32, Option<u64>) {
        (&self.theorem, &self.group, self.h, self.prime)
    }

    pub fn to_text(&self) -> String {
        let prime = self.prime.map(|p| format!(" p={p}")).unwrap_or_default();
        let rel = self.relation.as_deref().unwrap_or(">");
        format!(
            "{:<18} {:<22} h={}{prime}  {} {rel} {}  -> {}",
            self.theorem,
            self.group,
            self.h,
            format_rational(&self.lhs),
            format_rational(&self.rhs),
            self.verdict.as_str()
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub consistent: usize,
    pub extremal: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub timestamp: String,
    pub results: Vec<TheoremCheck>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts rows by `(theorem, group, h, prime)` and tallies verdicts.
    pub fn new(suite: &str, timestamp: &str, mut results: Vec<TheoremCheck>) -> Self {
        results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut summary = Summary::default();
        for r in &results {
            match r.verdict {
                Verdict::Consistent => summary.consistent += 1,
                Verdict::ExtremalEquality => summary.extremal += 1,
                Verdict::Violation => summary.violations += 1,
            }
        }
        VerificationReport {
            suite: suite.to_string(),
            version: super::tool_version(),
            timestamp: timestamp.to_string(),
            results,
            summary,
        }
    }

    pub fn has_violations(&self) -> bool {
        self.summary.violations > 0
    }

    pub fn violations(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.results.iter().filter(|r| r.verdict == Verdict::Violation)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let report: VerificationReport =
            serde_json::from_str(text).map_err(|e| HarnessError::Report(e.to_string()))?;
        if report.clone().recount().summary != report.summary {
            return Err(HarnessError::Report("summary does not match results".into()));
        }
        Ok(report)
    }

    fn recount(mut self) -> Self {
        let rebuilt = VerificationReport::new(&self.suite, &self.timestamp, self.results);
        self.results = rebuilt.results;
        self.summary = rebuilt.summary;
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} ({}) at {}\n",
            self.suite, self.version, self.timestamp
        );
        for r in &self.results {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} consistent, {} extremal, {} violations\n",
            self.summary.consistent, self.summary.extremal, self.summary.violations
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::ratio;

    #[test]
    fn verdict_rules() {
        let r = TheoremCheck::implication("1.1b", "S(3)", 2, None, ratio(3, 8), ratio(3, 8), false);
        assert_eq!(r.verdict, Verdict::ExtremalEquality);
        assert!(!r.hypothesis);
        let r = TheoremCheck::implication("1.1d", "C(5)", 3, None, ratio(1, 1), ratio(1, 60), true);
        assert_eq!(r.verdict, Verdict::Consistent);
        let r = TheoremCheck::implication("1.1a", "S(3)", 1, None, ratio(1, 2), ratio(1, 4), false);
        assert_eq!(r.verdict, Verdict::Violation);
        let r = TheoremCheck::property("lemma", "G", 1, ratio(1, 2), "<=", ratio(1, 2));
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let rows = vec![
            TheoremCheck::implication("1.2", "A(4)", 1, Some(3), ratio(1, 3), ratio(1, 3), false)
                .with_prime(3),
            TheoremCheck::implication("1.1a", "C(2)", 1, None, ratio(1, 1), ratio(5, 8), true),
            TheoremCheck::property("remark1.ii", "A(5) vs E", 4, ratio(1, 7), "<", ratio(1, 5)),
        ];
        let report = VerificationReport::new("theorems", "2026-01-01T00:00:00Z", rows);
        assert_eq!(report.results[0].theorem, "1.1a");
        assert_eq!(report.summary, Summary { consistent: 2, extremal: 1, violations: 0 });
        let text = report.to_json();
        let back = VerificationReport::from_json(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"lhs\": \"1/1\""));
        assert!(text.contains("\"verdict\": \"EXTREMAL_EQUALITY\""));
        assert!(VerificationReport::from_json(&text.replace("\"extremal\": 1", "\"extremal\": 2"))
            .is_err());
    }
}

//! Verification harness: the versioned default catalog, per-group data
//! loading, and the theorem / remark / lemma suites.

mod report;
mod suites;

pub use report::{TheoremCheck, Summary, Verdict, VerificationReport};
pub use suites::{
    explore_factorization, explore_spec, suite_lemmas, suite_remarks, suite_theorems, Exploration,
    ExplorationRow, Perturbation, ReferenceThresholds,
};

use std::sync::OnceLock;

use crate::catalog::{closed_form_for, make, Family, GroupSpec};
use crate::chartab::{character_data, fingerprint, DegreeCache};
use crate::classify::StructureReport;
use crate::error::HarnessError;
use crate::invariants::GroupProfile;
use crate::perm::{ClassTable, PermGroup};

/// Bumped whenever the default catalog changes.
pub const CATALOG_VERSION: u32 = 1;

/// Version string stamped into reports.
pub fn tool_version() -> String {
    format!("{}+catalog.{CATALOG_VERSION}", env!("CARGO_PKG_VERSION"))
}

/// The fixed default catalog, in a stable order.
pub fn default_catalog() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut push = |f: Family| out.push(GroupSpec::Family(f));
    for n in 1..=12 {
        push(Family::Cyclic(n));
    }
    for n in 2..=10 {
        push(Family::Dihedral(2 * n));
    }
    for n in 1..=6 {
        push(Family::Symmetric(n));
    }
    for n in 1..=6 {
        push(Family::Alternating(n));
    }
    for q in [5, 7, 9, 11, 13] {
        push(Family::SL2(q));
        push(Family::PSL2(q));
        push(Family::PGL2(q));
    }
    for p in [3, 5, 11, 59] {
        push(Family::ExtraspecialPlus(p));
    }
    for f in [2, 3, 5] {
        push(Family::FrobeniusMersenne(f));
    }
    push(Family::PSL3Of2);
    out
}

/// Parses a group-spec file: one spec per line, `#` starts a comment.
pub fn parse_spec_file(text: &str) -> Result<Vec<GroupSpec>, HarnessError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.parse().map_err(HarnessError::from))
        .collect()
}

/// Splits a comma-separated list, ignoring commas inside parentheses.
pub fn split_top_level(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in list.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur.trim().to_string());
    out.retain(|s| !s.is_empty());
    out
}

/// Keeps the specs whose label (or full spec text) is listed.
pub fn filter_by_label(specs: Vec<GroupSpec>, labels: &[String]) -> Vec<GroupSpec> {
    specs
        .into_iter()
        .filter(|s| {
            labels
                .iter()
                .any(|l| *l == s.label() || *l == s.to_string())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSource {
    Dixon,
    Cache,
    ClosedForm,
}

/// A catalog group with its invariant profile; the structure report is
/// computed on first use.
#[derive(Debug)]
pub struct GroupData {
    pub spec: GroupSpec,
    pub label: String,
    pub group: PermGroup,
    pub profile: GroupProfile,
    pub source: DegreeSource,
    structure: OnceLock<StructureReport>,
}

impl GroupData {
    pub fn load(spec: &GroupSpec, cache: Option<&DegreeCache>) -> Result<Self, HarnessError> {
        let group = make(spec)?;
        let (profile, source) = if let Some(cf) = closed_form_for(spec) {
            let profile = GroupProfile {
                order: cf.degrees.group_order(),
                class_sizes: cf.class_sizes,
                rep_orders: cf.rep_orders,
                degrees: cf.degrees,
            };
            (profile, DegreeSource::ClosedForm)
        } else {
            let fp = cache.map(|_| fingerprint(&group));
            let hit = cache.zip(fp.as_deref()).and_then(|(c, fp)| c.get(fp));
            match hit {
                Some(degrees) => {
                    let classes = ClassTable::compute(&group)?;
                    let profile = GroupProfile {
                        order: classes.group_order,
                        class_sizes: classes.sizes,
                        rep_orders: classes.rep_orders,
                        degrees,
                    };
                    (profile, DegreeSource::Cache)
                }
                None => {
                    let data = character_data(&group)?;
                    if let (Some(c), Some(fp)) = (cache, fp.as_deref()) {
                        // a failed cache write only costs a recomputation later
                        let _ = c.put(fp, &data.degrees);
                    }
                    let profile = GroupProfile {
                        order: data.classes.group_order,
                        class_sizes: data.classes.sizes,
                        rep_orders: data.classes.rep_orders,
                        degrees: data.degrees,
                    };
                    (profile, DegreeSource::Dixon)
                }
            }
        };
        Ok(GroupData {
            label: spec.label(),
            spec: spec.clone(),
            group,
            profile,
            source,
            structure: OnceLock::new(),
        })
    }

    /// Data for a group that is not described by a spec (subgroups,
    /// quotients).
    pub fn from_group(label: &str, group: PermGroup) -> Result<Self, HarnessError> {
        let data = character_data(&group)?;
        let profile = GroupProfile {
            order: data.classes.group_order,
            class_sizes: data.classes.sizes,
            rep_orders: data.classes.rep_orders,
            degrees: data.degrees,
        };
        Ok(GroupData {
            spec: GroupSpec::Generators {
                degree: group.degree(),
                cycles: group.generators().iter().map(|g| g.to_string()).collect(),
            },
            label: label.to_string(),
            group,
            profile,
            source: DegreeSource::Dixon,
            structure: OnceLock::new(),
        })
    }

    pub fn structure(&self) -> Result<&StructureReport, HarnessError> {
        if let Some(s) = self.structure.get() {
            return Ok(s);
        }
        let s = StructureReport::compute(&self.group)?;
        Ok(self.structure.get_or_init(|| s))
    }

    pub fn order(&self) -> u64 {
        self.profile.order
    }
}

/// Loads every spec, in parallel when the `parallel` feature is on.
pub fn load_all(
    specs: &[GroupSpec],
    cache: Option<&DegreeCache>,
) -> Result<Vec<GroupData>, HarnessError> {
    par_map(specs, |s| GroupData::load(s, cache))
        .into_iter()
        .collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

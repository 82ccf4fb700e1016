use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{load_all, par_map, GroupData, TheoremCheck};
use crate::catalog::{direct_product, make, GroupSpec};
use crate::chartab::{DegreeCache, DegreeMultiset};
use crate::classify::lower_central_series_terminates;
use crate::error::{GroupError, HarnessError};
use crate::invariants::{
    big_q, commuting_probability, d_p_prime, gamma, gamma_tilde, integer, lescot_bound,
    limit_value, pow_signed, q, q_tilde, ratio, serde_text, ExactRational,
};
use crate::perm::{ClassTable, PermGroup};

fn spec(text: &str) -> GroupSpec {
    text.parse().expect("built-in spec")
}

/// Degree data of the extremal groups named in the criteria.
#[derive(Clone, Debug)]
pub struct ReferenceThresholds {
    pub d8: (DegreeMultiset, Vec<u64>),
    pub s3: (DegreeMultiset, Vec<u64>),
    pub a4: (DegreeMultiset, Vec<u64>),
    pub a5: (DegreeMultiset, Vec<u64>),
}

impl ReferenceThresholds {
    pub fn compute(cache: Option<&DegreeCache>) -> Result<Self, HarnessError> {
        let load = |s: &str| -> Result<(DegreeMultiset, Vec<u64>), HarnessError> {
            let g = GroupData::load(&spec(s), cache)?;
            Ok((g.profile.degrees, g.profile.class_sizes))
        };
        Ok(ReferenceThresholds {
            d8: load("D(8)")?,
            s3: load("S(3)")?,
            a4: load("A(4)")?,
            a5: load("A(5)")?,
        })
    }
}

/// Test hook: scales the threshold of one theorem so that the sweep can be
/// shown to fail loudly.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub theorem: String,
    pub factor: ExactRational,
}

impl Perturbation {
    /// Halves the threshold of `theorem`.
    pub fn halve(theorem: &str) -> Self {
        Perturbation {
            theorem: theorem.to_string(),
            factor: ratio(1, 2),
        }
    }

    fn apply(this: Option<&Self>, theorem: &str, rhs: ExactRational) -> ExactRational {
        match this {
            Some(p) if p.theorem == theorem => rhs * &p.factor,
            _ => rhs,
        }
    }
}

/// Implication rows 1.1a–1.5 over `groups` and `h = 1..=max_genus`.
pub fn suite_theorems(
    groups: &[GroupData],
    refs: &ReferenceThresholds,
    max_genus: u32,
    perturb: Option<&Perturbation>,
) -> Result<Vec<TheoremCheck>, HarnessError> {
    let per_group = par_map(groups, |g| theorem_rows(g, refs, max_genus, perturb));
    let mut rows = Vec::new();
    for r in per_group {
        rows.extend(r?);
    }
    Ok(rows)
}

fn theorem_rows(
    g: &GroupData,
    refs: &ReferenceThresholds,
    max_genus: u32,
    perturb: Option<&Perturbation>,
) -> Result<Vec<TheoremCheck>, HarnessError> {
    let s = g.structure()?;
    let deg = &g.profile.degrees;
    let sizes = &g.profile.class_sizes;
    let label = g.label.as_str();
    let primes: Vec<u64> = s.p_closed.keys().copied().collect();
    let mut rows = Vec::new();
    let th = |id: &str, rhs: ExactRational| Perturbation::apply(perturb, id, rhs);

    for h in 1..=max_genus {
        let qh = q(deg, h);
        let qt = q_tilde(sizes, h);
        let character_side = [
            ("1.1a", &refs.d8, s.abelian),
            ("1.1b", &refs.s3, s.nilpotent),
            ("1.1c", &refs.a4, s.supersolvable),
            ("1.1d", &refs.a5, s.solvable),
        ];
        for (id, reference, holds) in character_side {
            let rhs = th(id, q(&reference.0, h));
            rows.push(TheoremCheck::implication(id, label, h, None, qh.clone(), rhs, holds));
        }
        let class_side = [
            ("1.4a", &refs.d8, s.abelian),
            ("1.4b", &refs.s3, s.nilpotent),
            ("1.4c", &refs.a4, s.supersolvable),
            ("1.4d", &refs.a5, s.solvable),
        ];
        for (id, reference, holds) in class_side {
            let rhs = th(id, q_tilde(&reference.1, h));
            rows.push(TheoremCheck::implication(id, label, h, None, qt.clone(), rhs, holds));
        }
        for &p in &primes {
            let closed = s.p_closed[&p];
            rows.push(TheoremCheck::implication(
                "1.2",
                label,
                h,
                Some(p),
                qh.clone(),
                th("1.2", gamma(h, p)),
                closed,
            ));
            rows.push(TheoremCheck::implication(
                "1.5",
                label,
                h,
                Some(p),
                qt.clone(),
                th("1.5", gamma_tilde(h, p)),
                closed,
            ));
        }
    }
    // genus one of the p-local criterion: d_{p'}(G) > 1/(p-1) ⇒ p-solvable
    for &p in primes.iter().filter(|&&p| p > 2) {
        let lhs = d_p_prime(&g.profile, p)?;
        rows.push(TheoremCheck::implication(
            "1.3-genus1",
            label,
            1,
            Some(p),
            lhs,
            th("1.3-genus1", ratio(1, p - 1)),
            s.p_solvable[&p],
        ));
    }
    Ok(rows)
}

/// The numerical comparisons of the first remark.
pub fn suite_remarks(cache: Option<&DegreeCache>) -> Result<Vec<TheoremCheck>, HarnessError> {
    let specs: Vec<GroupSpec> = ["S(6)", "PGL2(9)", "A(5)", "extraspecial+(59)", "extraspecial+(11)", "D(8)"]
        .into_iter()
        .map(spec)
        .collect();
    let data = load_all(&specs, cache)?;
    let [s6, pgl, a5, e59, e11, d8] = <[GroupData; 6]>::try_from(data).unwrap();
    let mut rows = Vec::new();
    let d = |g: &GroupData| commuting_probability(&g.profile.degrees);
    let qh = |g: &GroupData, h| q(&g.profile.degrees, h);
    let qt = |g: &GroupData, h| q_tilde(&g.profile.class_sizes, h);

    // (i) equal commuting probability, separated at higher genus
    let pair = format!("{} vs {}", s6.label, pgl.label);
    rows.push(TheoremCheck::property("remark1.i.d", &pair, 1, d(&s6), "=", d(&pgl)));
    for h in 2..=3 {
        rows.push(TheoremCheck::property("remark1.i.q", &pair, h, qh(&s6, h), ">", qh(&pgl, h)));
        rows.push(TheoremCheck::property("remark1.i.qtilde", &pair, h, qt(&s6, h), ">", qt(&pgl, h)));
    }

    // (ii) the crossing between A5 and the extraspecial group of order 59^3
    let pair = format!("{} vs {}", a5.label, e59.label);
    for h in 1..=6 {
        let rel = if h <= 3 { ">" } else { "<" };
        rows.push(TheoremCheck::property("remark1.ii", &pair, h, qh(&a5, h), rel, qh(&e59, h)));
    }
    rows.push(TheoremCheck::property("remark1.ii.d", &pair, 1, d(&a5), ">", d(&e59)));
    rows.push(TheoremCheck::property(
        "remark1.ii.limit",
        &pair,
        0,
        limit_value(&a5.profile.degrees),
        "<",
        limit_value(&e59.profile.degrees),
    ));

    // (iii) the dual invariant against the extraspecial group of order 11^3
    let pair = format!("{} vs {}", a5.label, e11.label);
    rows.push(TheoremCheck::property("remark1.iii.d", &pair, 1, d(&a5), "<", d(&e11)));
    for h in 2..=8 {
        rows.push(TheoremCheck::property("remark1.iii", &pair, h, qt(&a5, h), ">", qt(&e11, h)));
    }

    // (iv) q_h(G) approaches 1/|G'| strictly monotonically
    for g in [&a5, &d8] {
        let limit = limit_value(&g.profile.degrees);
        let dist = |h| {
            let x: ExactRational = qh(g, h) - &limit;
            if x < ExactRational::from_integer(0.into()) {
                -x
            } else {
                x
            }
        };
        for h in 1..=5 {
            rows.push(TheoremCheck::property("remark1.iv", &g.label, h, dist(h), ">", dist(h + 1)));
        }
    }
    Ok(rows)
}

fn flag(b: bool) -> ExactRational {
    integer(b as u64)
}

/// Property batteries: monotonicity under subgroups and quotients,
/// multiplicativity, the Lescot bound, the simple-group bound and the
/// consistency of the structure predicates.
pub fn suite_lemmas(groups: &[GroupData]) -> Result<Vec<TheoremCheck>, HarnessError> {
    let mut rows = Vec::new();
    let batches = par_map(groups, group_lemma_rows);
    for b in batches {
        rows.extend(b?);
    }

    // multiplicativity on fixed pairs
    let pairs = [
        ("S(3)", "A(4)"),
        ("D(8)", "C(3)"),
        ("S(3)", "S(3)"),
        ("A(4)", "D(8)"),
        ("C(4)", "A(5)"),
    ];
    for (a, b) in pairs {
        let ga = GroupData::load(&spec(a), None)?;
        let gb = GroupData::load(&spec(b), None)?;
        let prod = GroupData::from_group(&format!("{a}x{b}"), direct_product(&ga.group, &gb.group)?)?;
        for h in 1..=4 {
            let rhs = q(&ga.profile.degrees, h) * q(&gb.profile.degrees, h);
            rows.push(TheoremCheck::property(
                "lemma.multiplicative",
                &prod.label,
                h,
                q(&prod.profile.degrees, h),
                "=",
                rhs,
            ));
        }
    }

    // d(G) ≤ 1/(p+1) for nonabelian simple G and p | |G|
    for s in ["A(5)", "A(6)", "PSL2(7)", "PSL2(11)", "PSL2(13)"] {
        let g = GroupData::load(&spec(s), None)?;
        for p in crate::perm::prime_divisors(g.order()) {
            rows.push(
                TheoremCheck::property(
                    "lemma.simple_d",
                    &g.label,
                    1,
                    commuting_probability(&g.profile.degrees),
                    "<=",
                    ratio(1, p + 1),
                )
                .with_prime(p),
            );
        }
    }
    Ok(rows)
}

const SUBGROUP_SAMPLE_MAX_ORDER: u64 = 720;
const QUOTIENT_SAMPLE_MAX_ORDER: u64 = 200;
const LCS_SAMPLE_MAX_ORDER: u64 = 100;

fn group_lemma_rows(g: &GroupData) -> Result<Vec<TheoremCheck>, HarnessError> {
    let mut rows = Vec::new();
    let deg = &g.profile.degrees;
    let sizes = &g.profile.class_sizes;
    let label = g.label.as_str();
    let n = g.order();

    // monotone in h, and Q_h = |G|^(2h-1) q_h
    for h in 0..=5 {
        rows.push(TheoremCheck::property("lemma.monotone_q", label, h, q(deg, h), ">=", q(deg, h + 1)));
        rows.push(TheoremCheck::property(
            "lemma.monotone_qtilde",
            label,
            h,
            q_tilde(sizes, h),
            ">=",
            q_tilde(sizes, h + 1),
        ));
        rows.push(TheoremCheck::property(
            "identity.Q_q",
            label,
            h,
            big_q(deg, h),
            "=",
            q(deg, h) * pow_signed(&integer(n), 2 * h as i64 - 1),
        ));
    }

    // Lescot: d(G) > 1/4 ⇒ |G'| ≤ 3/(4d(G) - 1)
    if let Some(bound) = lescot_bound(deg) {
        let derived = ratio(n, deg.linear_count());
        rows.push(TheoremCheck::property("lemma.lescot", label, 1, derived, "<=", bound));
    }

    let s = g.structure()?;
    rows.push(TheoremCheck::property("classify.chain", label, 0, flag(s.implications_hold()), "=", integer(1)));

    if n <= LCS_SAMPLE_MAX_ORDER {
        let lcs = lower_central_series_terminates(&g.group)?;
        rows.push(TheoremCheck::property("classify.nilpotent_lcs", label, 0, flag(s.nilpotent), "=", flag(lcs)));
    }

    if n <= SUBGROUP_SAMPLE_MAX_ORDER && n > 1 {
        let mut subs: Vec<(String, PermGroup)> = Vec::new();
        for &p in s.p_closed.keys() {
            subs.push((format!("Syl{p}({label})"), g.group.sylow_subgroup(p)?.into_group()));
        }
        subs.push((format!("derived({label})"), g.group.derived_subgroup().into_group()));
        for (name, sub) in subs {
            let hd = GroupData::from_group(&name, sub)?;
            for h in 1..=4 {
                rows.push(TheoremCheck::property(
                    "lemma.subgroup",
                    &name,
                    h,
                    q(&hd.profile.degrees, h),
                    ">=",
                    q(deg, h),
                ));
            }
        }
    }

    if n <= QUOTIENT_SAMPLE_MAX_ORDER && n > 1 {
        let classes = ClassTable::compute(&g.group)?;
        let mut seen = HashSet::new();
        for x in classes.reps.iter().skip(1) {
            let normal = g.group.normal_closure(std::slice::from_ref(x))?.into_group();
            // a normal subgroup is the union of the classes it meets
            let mask: Vec<bool> = classes.reps.iter().map(|r| normal.contains(r)).collect();
            if !seen.insert(mask) {
                continue;
            }
            let quotient = g.group.quotient(&normal)?;
            let qsizes = ClassTable::compute(&quotient)?.sizes;
            let name = format!("{label}/<{x}>^G");
            for h in 1..=4 {
                rows.push(TheoremCheck::property(
                    "lemma.quotient",
                    &name,
                    h,
                    q_tilde(sizes, h),
                    "<=",
                    q_tilde(&qsizes, h),
                ));
            }
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationRow {
    pub h: u32,
    #[serde(with = "serde_text")]
    pub q_group: ExactRational,
    #[serde(with = "serde_text")]
    pub q_normal: ExactRational,
    #[serde(with = "serde_text")]
    pub q_quotient: ExactRational,
    /// `q_h(G) ≤ q_h(N) q_h(G/N)`; reported, never asserted.
    pub inequality_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exploration {
    pub group: String,
    pub group_order: u64,
    pub normal_order: u64,
    pub rows: Vec<ExplorationRow>,
}

/// Tabulates `q_h(G)`, `q_h(N)`, `q_h(G/N)` for `h = 1..=5`.
pub fn explore_factorization(
    label: &str,
    g: &PermGroup,
    normal: &PermGroup,
) -> Result<Exploration, HarnessError> {
    if !g.is_normal_subgroup(normal) {
        return Err(GroupError::NotNormal.into());
    }
    let gd = GroupData::from_group(label, g.clone())?;
    let nd = GroupData::from_group("N", normal.clone())?;
    let qd = GroupData::from_group("G/N", g.quotient(normal)?)?;
    let rows = (1..=5)
        .map(|h| {
            let (a, b, c) = (
                q(&gd.profile.degrees, h),
                q(&nd.profile.degrees, h),
                q(&qd.profile.degrees, h),
            );
            ExplorationRow {
                h,
                inequality_holds: a <= &b * &c,
                q_group: a,
                q_normal: b,
                q_quotient: c,
            }
        })
        .collect();
    Ok(Exploration {
        group: label.to_string(),
        group_order: gd.order(),
        normal_order: nd.order(),
        rows,
    })
}

/// Convenience for callers holding a spec.
pub fn explore_spec(spec: &GroupSpec, element: &str) -> Result<Exploration, HarnessError> {
    let g = make(spec)?;
    let x = crate::perm::Permutation::parse_cycles(g.degree(), element)?;
    let normal = g.normal_closure(&[x])?.into_group();
    explore_factorization(&spec.label(), &g, &normal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Verdict;

    #[test]
    fn s3_mod_a3_satisfies_the_inequality() {
        let e = explore_spec(&spec("S(3)"), "(1 2 3)").unwrap();
        assert_eq!(e.normal_order, 3);
        assert!(e.rows.iter().all(|r| r.inequality_holds));
        assert_eq!(e.rows[0].q_group, ratio(1, 2));
    }

    #[test]
    fn explore_rejects_non_normal_subgroups() {
        let g = make(&spec("S(3)")).unwrap();
        let h = g.subgroup(vec![crate::perm::Permutation::parse_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert!(explore_factorization("S(3)", &g, &h.group).is_err());
    }

    #[test]
    fn theorem_rows_for_small_groups() {
        let refs = ReferenceThresholds::compute(None).unwrap();
        let groups = load_all(&[spec("S(3)"), spec("C(5)"), spec("A(4)")], None).unwrap();
        let rows = suite_theorems(&groups, &refs, 2, None).unwrap();
        let find = |t: &str, g: &str, h: u32, p: Option<u64>| {
            rows.iter()
                .find(|r| r.theorem == t && r.group == g && r.h == h && r.prime == p)
                .unwrap()
        };
        let r = find("1.1b", "S(3)", 2, None);
        assert_eq!(r.lhs, ratio(3, 8));
        assert_eq!(r.verdict, Verdict::ExtremalEquality);
        assert_eq!(find("1.2", "A(4)", 2, Some(3)).verdict, Verdict::ExtremalEquality);
        assert!(rows.iter().all(|r| r.verdict != Verdict::Violation));

        let bad = suite_theorems(&groups, &refs, 2, Some(&Perturbation::halve("1.1a"))).unwrap();
        assert!(bad.iter().any(|r| r.verdict == Verdict::Violation && r.theorem == "1.1a"));
    }
}

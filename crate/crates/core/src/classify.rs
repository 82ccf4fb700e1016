//! Structure predicates: abelian, nilpotent, supersolvable, solvable,
//! p-closed and p-solvable.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::perm::{prime_divisors_big, split_prime_part, ClassTable, PermGroup};

fn prime_power_order(g: &PermGroup) -> bool {
    let primes = prime_divisors_big(g.order());
    primes.len() <= 1
}

pub fn is_abelian(g: &PermGroup) -> bool {
    g.is_abelian()
}

/// `G` has a normal Sylow `p`-subgroup.
pub fn is_p_closed(g: &PermGroup, p: u64) -> Result<bool, GroupError> {
    let sylow = g.sylow_subgroup(p)?;
    Ok(g.is_normal_subgroup(&sylow.group))
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &PermGroup) -> Result<bool, GroupError> {
    if prime_power_order(g) {
        return Ok(true);
    }
    for p in prime_divisors_big(g.order()) {
        if !is_p_closed(g, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent nilpotency test: the lower central series reaches 1.
pub fn lower_central_series_terminates(g: &PermGroup) -> Result<bool, GroupError> {
    let mut current = g.clone();
    loop {
        if current.is_trivial() {
            return Ok(true);
        }
        // [G, H] is the normal closure in G of [x, y] over generators
        let seeds: Vec<_> = g
            .generators()
            .iter()
            .flat_map(|x| current.generators().iter().map(move |y| x.commutator(y)))
            .filter(|c| !c.is_identity())
            .collect();
        let next = g.normal_closure(&seeds)?.into_group();
        if next.order() == current.order() {
            return Ok(false);
        }
        current = next;
    }
}

/// The derived series reaches the trivial group.
pub fn is_solvable(g: &PermGroup) -> bool {
    g.derived_series().last().is_some_and(PermGroup::is_trivial)
}

/// Repeatedly factors out a normal subgroup of prime order.
pub fn is_supersolvable(g: &PermGroup) -> Result<bool, GroupError> {
    if g.is_trivial() || is_nilpotent(g)? {
        return Ok(true);
    }
    if !is_solvable(g) {
        return Ok(false);
    }
    let classes = ClassTable::compute(g)?;
    for (x, &o) in classes.reps.iter().zip(&classes.rep_orders) {
        let prime_order = o > 1 && prime_divisors_big(&BigUint::from(o)) == [o];
        // <x> is normal only if its whole class fits inside it
        if !prime_order || classes.sizes[classes.class_of_element(g, x)] >= o {
            continue;
        }
        let cyclic = g.subgroup(vec![x.clone()])?.into_group();
        if g.is_normal_subgroup(&cyclic) {
            // any such quotient decides the question
            return is_supersolvable(&g.quotient(&cyclic)?);
        }
    }
    Ok(false)
}

/// Smallest nontrivial normal closure of a single element: a minimal normal
/// subgroup.
pub fn minimal_normal_subgroup(g: &PermGroup) -> Result<Option<PermGroup>, GroupError> {
    let classes = ClassTable::compute(g)?;
    let mut best: Option<PermGroup> = None;
    for x in classes.reps.iter().skip(1) {
        let n = g.normal_closure(std::slice::from_ref(x))?.into_group();
        if best.as_ref().is_none_or(|b| n.order() < b.order()) {
            best = Some(n);
        }
    }
    Ok(best)
}

/// Every composition factor is a `p`-group or a `p'`-group.
pub fn is_p_solvable(g: &PermGroup, p: u64) -> Result<bool, GroupError> {
    let (p_part, rest) = split_prime_part(g.order(), p);
    if p_part.is_one() || rest.is_one() || is_solvable(g) {
        return Ok(true);
    }
    let n = minimal_normal_subgroup(g)?.expect("nontrivial group");
    let (np, nrest) = split_prime_part(n.order(), p);
    if np.is_one() || nrest.is_one() {
        is_p_solvable(&g.quotient(&n)?, p)
    } else {
        Ok(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub solvable: bool,
    pub p_closed: BTreeMap<u64, bool>,
    pub p_solvable: BTreeMap<u64, bool>,
    pub witnesses: Vec<String>,
}

impl StructureReport {
    /// Flags over every prime dividing `|G|`.
    pub fn compute(g: &PermGroup) -> Result<Self, GroupError> {
        let primes = prime_divisors_big(g.order());
        let mut p_closed = BTreeMap::new();
        let mut p_solvable = BTreeMap::new();
        let mut witnesses = Vec::new();
        for &p in &primes {
            let closed = is_p_closed(g, p)?;
            if !closed {
                witnesses.push(format!("Sylow {p}-subgroup is not normal"));
            }
            p_closed.insert(p, closed);
            let ps = is_p_solvable(g, p)?;
            if !ps {
                witnesses.push(format!("has a nonabelian composition factor of order divisible by {p}"));
            }
            p_solvable.insert(p, ps);
        }
        let nilpotent = p_closed.values().all(|&b| b);
        let solvable = is_solvable(g);
        let derived = g.derived_subgroup().group;
        if !solvable {
            let perfect_core = g.derived_series().pop().unwrap();
            witnesses.push(format!("derived series stalls at order {}", perfect_core.order()));
        } else if !derived.is_trivial() {
            witnesses.push(format!("|G'| = {}", derived.order()));
        }
        Ok(StructureReport {
            abelian: is_abelian(g),
            nilpotent,
            supersolvable: is_supersolvable(g)?,
            solvable,
            p_closed,
            p_solvable,
            witnesses,
        })
    }

    /// `abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable`.
    pub fn implications_hold(&self) -> bool {
        (!self.abelian || self.nilpotent)
            && (!self.nilpotent || self.supersolvable)
            && (!self.supersolvable || self.solvable)
            && (!self.solvable || self.p_solvable.values().all(|&b| b))
    }
}

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{PermGroup, Permutation};
use crate::error::GroupError;

/// A subgroup together with the group it was taken from.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    pub parent: &'g PermGroup,
    pub group: PermGroup,
}

impl<'g> Subgroup<'g> {
    pub fn order(&self) -> &BigUint {
        self.group.order()
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    /// Index in the parent group.
    pub fn index(&self) -> BigUint {
        self.parent.order() / self.group.order()
    }
}

impl PermGroup {
    /// Subgroup generated by `gens` (all members of `self`).
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<Subgroup<'_>, GroupError> {
        if gens.iter().any(|g| !self.contains(g)) {
            return Err(GroupError::NotMember);
        }
        Ok(Subgroup {
            parent: self,
            group: PermGroup::with_cap(self.degree(), gens, self.cap())?,
        })
    }

    /// Subgroup generated by a list of elements, choosing a short generating
    /// set greedily.
    fn subgroup_from_elements<'a>(
        &self,
        elems: impl IntoIterator<Item = &'a Permutation>,
    ) -> Subgroup<'_> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::with_cap(self.degree(), Vec::new(), self.cap()).unwrap();
        for e in elems {
            if !current.contains(e) {
                gens.push(e.clone());
                current = PermGroup::with_cap(self.degree(), gens.clone(), self.cap()).unwrap();
            }
        }
        Subgroup {
            parent: self,
            group: current,
        }
    }

    /// `C_G(x)`.
    pub fn centralizer(&self, x: &Permutation) -> Result<Subgroup<'_>, GroupError> {
        if !self.contains(x) {
            return Err(GroupError::NotMember);
        }
        let elems = self.elements()?;
        let base = self.bsgs().base();
        let commuting = elems.iter().filter(|g| {
            base.iter()
                .all(|&b| x.apply(g.apply(b)) == g.apply(x.apply(b)))
        });
        Ok(self.subgroup_from_elements(commuting))
    }

    /// `Z(G)`.
    pub fn center(&self) -> Result<Subgroup<'_>, GroupError> {
        let elems = self.elements()?;
        let gens = self.generators();
        let central = elems
            .iter()
            .filter(|g| gens.iter().all(|s| g.mul(s) == s.mul(g)));
        Ok(self.subgroup_from_elements(central))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<Subgroup<'_>, GroupError> {
        if seeds.iter().any(|s| !self.contains(s)) {
            return Err(GroupError::NotMember);
        }
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut h = PermGroup::with_cap(self.degree(), gens.clone(), self.cap())?;
        loop {
            let mut added = false;
            'scan: for g in self.generators() {
                for x in h.generators().to_vec() {
                    let c = x.conjugate_by(g);
                    if !h.contains(&c) {
                        gens.push(c);
                        h = PermGroup::with_cap(self.degree(), gens.clone(), self.cap())?;
                        added = true;
                        break 'scan;
                    }
                }
            }
            if !added {
                break;
            }
        }
        Ok(Subgroup { parent: self, group: h })
    }

    /// `G'`, the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators lie in the group")
    }

    /// Derived series down to the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup().into_group();
            if next.order() == last.order() {
                break;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    /// Checks `H ⊴ G` on generators.
    pub fn is_normal_subgroup(&self, h: &PermGroup) -> bool {
        h.generators().iter().all(|x| self.contains(x))
            && self
                .generators()
                .iter()
                .all(|g| h.generators().iter().all(|x| h.contains(&x.conjugate_by(g))))
    }

    /// Ranks (in `self`) of every element of `h`.
    pub(crate) fn member_ranks(&self, h: &PermGroup) -> Result<Vec<usize>, GroupError> {
        let elems = h.elements()?;
        Ok(elems.iter().map(|e| self.rank(e)).collect())
    }

    fn member_mask(&self, h: &PermGroup) -> Result<Vec<bool>, GroupError> {
        let n = self.enumerable_order()?;
        let mut mask = vec![false; n];
        for r in self.member_ranks(h)? {
            mask[r] = true;
        }
        Ok(mask)
    }

    /// `G/N` as a permutation group on the right cosets of `N`, of degree
    /// `[G:N]`.
    pub fn quotient(&self, n: &PermGroup) -> Result<PermGroup, GroupError> {
        if !self.is_normal_subgroup(n) {
            return Err(GroupError::NotNormal);
        }
        let elems = self.elements()?;
        let n_elems = n.elements()?;
        const UNSET: u32 = u32::MAX;
        let mut coset_of = vec![UNSET; elems.len()];
        let mut index = 0u32;
        for r in 0..elems.len() {
            if coset_of[r] != UNSET {
                continue;
            }
            for x in n_elems {
                coset_of[self.rank_of_product(x, &elems[r])] = index;
            }
            index += 1;
        }
        let reps: Vec<usize> = {
            let mut reps = vec![usize::MAX; index as usize];
            for (r, &c) in coset_of.iter().enumerate() {
                if reps[c as usize] == usize::MAX {
                    reps[c as usize] = r;
                }
            }
            reps
        };
        let gens = self
            .generators()
            .iter()
            .map(|s| {
                let images = reps
                    .iter()
                    .map(|&r| coset_of[self.rank_of_product(&elems[r], s)])
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        PermGroup::with_cap(index as usize, gens, self.cap())
    }

    /// `N_G(H)` by scanning the element list.
    pub fn normalizer(&self, h: &PermGroup) -> Result<Subgroup<'_>, GroupError> {
        let elems = self.elements()?;
        let mask = self.member_mask(h)?;
        let inv = self.inverse_ranks()?;
        let hgens = h.generators();
        let norm = elems.iter().enumerate().filter(|(r, g)| {
            let g_inv = &elems[inv[*r] as usize];
            hgens
                .iter()
                .all(|x| mask[self.rank_of_conjugate(x, g, g_inv)])
        });
        Ok(self.subgroup_from_elements(norm.map(|(_, g)| g)))
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time inside
    /// successive normalizers.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup<'_>, GroupError> {
        let order = self.order().clone();
        let (p_part, _) = split_prime_part(&order, p);
        if p_part.is_one() {
            return Ok(Subgroup {
                parent: self,
                group: PermGroup::with_cap(self.degree(), Vec::new(), self.cap())?,
            });
        }
        if p_part == order {
            return Ok(Subgroup {
                parent: self,
                group: self.clone(),
            });
        }
        let elems = self.elements()?;
        let target = p_part.to_u64().expect("enumerable order");

        // start from a cyclic subgroup of maximal p-power order
        let mut best: Option<(u64, Permutation)> = None;
        for e in elems {
            let o = e.order();
            let (pp, rest) = split_prime_part(&BigUint::from(o), p);
            let pp = pp.to_u64().unwrap();
            if pp > 1 && best.as_ref().is_none_or(|(b, _)| pp > *b) {
                best = Some((pp, e.pow(rest.to_u64().unwrap())));
            }
        }
        let (_, x) = best.expect("p divides |G|");
        let mut gens = vec![x];
        let mut sub = PermGroup::with_cap(self.degree(), gens.clone(), self.cap())?;
        while sub.order_u64().unwrap() < target {
            let norm = self.normalizer(&sub)?.into_group();
            let n_elems = norm.elements()?;
            let y = n_elems
                .iter()
                .find(|y| !sub.contains(y) && sub.contains(&y.pow(p)))
                .cloned()
                .expect("a p-subgroup that is not Sylow grows inside its normalizer");
            gens.push(y);
            sub = PermGroup::with_cap(self.degree(), gens.clone(), self.cap())?;
        }
        Ok(Subgroup {
            parent: self,
            group: sub,
        })
    }
}

/// Splits `n` as `p^a * m` with `p ∤ m`, returning `(p^a, m)`.
pub fn split_prime_part(n: &BigUint, p: u64) -> (BigUint, BigUint) {
    let p = BigUint::from(p);
    let mut m = n.clone();
    let mut pp = BigUint::one();
    if m.is_zero() {
        return (pp, m);
    }
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        m = q;
        pp *= &p;
    }
    (pp, m)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Distinct prime divisors of a possibly large group order.
pub fn prime_divisors_big(n: &BigUint) -> Vec<u64> {
    match n.to_u64() {
        Some(v) => prime_divisors(v),
        None => {
            let mut out = Vec::new();
            let mut m = n.clone();
            let mut d = 2u64;
            while BigUint::from(d) * BigUint::from(d) <= m {
                let bd = BigUint::from(d);
                if (&m % &bd).is_zero() {
                    out.push(d);
                    while (&m % &bd).is_zero() {
                        m /= &bd;
                    }
                }
                d += 1;
            }
            if m > BigUint::one() {
                out.push(m.to_u64().expect("large prime factor"));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::ClassTable;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(n, s).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    fn ord(g: &PermGroup) -> u64 {
        g.order_u64().unwrap()
    }

    #[test]
    fn centralizers() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let c = s3.centralizer(&Permutation::parse_cycles(3, "(1 2 3)").unwrap()).unwrap();
        assert_eq!(ord(&c.group), 3);
        let c = s3.centralizer(&s3.identity()).unwrap();
        assert_eq!(ord(&c.group), 6);

        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        let z = Permutation::parse_cycles(4, "(1 3)(2 4)").unwrap();
        assert_eq!(ord(&d8.centralizer(&z).unwrap().group), 8);
        assert!(s3.centralizer(&Permutation::parse_cycles(3, "()").unwrap()).is_ok());
    }

    #[test]
    fn centralizer_rejects_non_members() {
        let a4 = group(4, &["(1 2 3)", "(2 3 4)"]);
        let t = Permutation::parse_cycles(4, "(1 2)").unwrap();
        assert!(matches!(a4.centralizer(&t), Err(GroupError::NotMember)));
    }

    #[test]
    fn derived_and_center() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        assert_eq!(ord(&a5.derived_subgroup().group), 60);
        let d8 = group(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(ord(&d8.derived_subgroup().group), 2);
        assert_eq!(ord(&d8.center().unwrap().group), 2);
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        assert!(c6.derived_subgroup().group.is_trivial());
        assert_eq!(ord(&c6.center().unwrap().group), 6);
    }

    #[test]
    fn quotients() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let a3 = s3.normal_closure(&[Permutation::parse_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        assert_eq!(ord(&a3.group), 3);
        let q = s3.quotient(&a3.group).unwrap();
        assert_eq!(ord(&q), 2);
        assert_eq!(q.degree(), 2);
        let q = s3.quotient(&s3).unwrap();
        assert!(q.is_trivial());
        let c2 = s3.subgroup(vec![Permutation::parse_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert!(matches!(s3.quotient(&c2.group), Err(GroupError::NotNormal)));
    }

    #[test]
    fn sylows() {
        let a4 = group(4, &["(1 2 3)", "(2 3 4)"]);
        let p2 = a4.sylow_subgroup(2).unwrap();
        assert_eq!(ord(&p2.group), 4);
        assert!(a4.is_normal_subgroup(&p2.group));
        let p3 = a4.sylow_subgroup(3).unwrap();
        assert_eq!(ord(&p3.group), 3);
        assert!(!a4.is_normal_subgroup(&p3.group));

        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let p5 = a5.sylow_subgroup(5).unwrap();
        assert_eq!(ord(&p5.group), 5);
        assert!(!a5.is_normal_subgroup(&p5.group));
        // brute force: the Sylow 5-subgroups are the 6 groups generated by 5-cycles
        let mut subgroups: Vec<Vec<usize>> = a5
            .elements()
            .unwrap()
            .iter()
            .filter(|e| e.order() == 5)
            .map(|e| {
                let mut r: Vec<usize> = (0..5).map(|k| a5.rank(&e.pow(k))).collect();
                r.sort();
                r
            })
            .collect();
        subgroups.sort();
        subgroups.dedup();
        assert_eq!(subgroups.len(), 6);
        assert_eq!(a5.index_of_normalizer(&p5.group), 6);

        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert_eq!(ord(&s4.sylow_subgroup(2).unwrap().group), 8);
        assert!(s4.sylow_subgroup(5).unwrap().group.is_trivial());
    }

    impl PermGroup {
        fn index_of_normalizer(&self, h: &PermGroup) -> u64 {
            ord(self) / ord(&self.normalizer(h).unwrap().group)
        }
    }

    #[test]
    fn class_equation_on_a5() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let t = ClassTable::compute(&a5).unwrap();
        for (rep, size) in t.reps.iter().zip(&t.sizes) {
            assert_eq!(ord(&a5.centralizer(rep).unwrap().group) * size, 60);
        }
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(prime_divisors(120), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        let (pp, m) = split_prime_part(&BigUint::from(360u32), 2);
        assert_eq!((pp, m), (BigUint::from(8u32), BigUint::from(45u32)));
    }
}

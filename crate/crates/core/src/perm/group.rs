use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::bsgs::Bsgs;
use super::Permutation;
use crate::error::GroupError;

/// Default bound on the order of groups whose elements may be listed.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 21;

/// A permutation group given by generators, backed by a BSGS.
///
/// The element list is filled in on first use and only for groups whose
/// order does not exceed the enumeration cap. Element `r` of that list is
/// the element of rank `r` under the BSGS mixed-radix indexing, so rank 0 is
/// the identity.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    order: BigUint,
    cap: u64,
    elements: OnceLock<Vec<Permutation>>,
    inverse_ranks: OnceLock<Vec<u32>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            bsgs: self.bsgs.clone(),
            order: self.order.clone(),
            cap: self.cap,
            elements: self.elements.clone(),
            inverse_ranks: self.inverse_ranks.clone(),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_cap(degree, generators, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: u64,
    ) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let bsgs = Bsgs::new(degree, &generators);
        let order = bsgs.order();
        Ok(PermGroup {
            degree,
            generators,
            bsgs,
            order,
            cap,
            elements: OnceLock::new(),
            inverse_ranks: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as a machine integer, for groups small enough to enumerate.
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == BigUint::from(1u32)
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.bsgs.contains(g)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Order as `usize` if the group can be enumerated.
    pub fn enumerable_order(&self) -> Result<usize, GroupError> {
        match self.order.to_u64() {
            Some(n) if n <= self.cap => Ok(n as usize),
            _ => Err(GroupError::CapExceeded {
                order: self.order.to_u128().unwrap_or(u128::MAX),
                cap: self.cap,
            }),
        }
    }

    /// All elements in rank order.
    pub fn elements(&self) -> Result<&[Permutation], GroupError> {
        self.enumerable_order()?;
        Ok(self.elements.get_or_init(|| self.bsgs.enumerate()))
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.get().is_some()
    }

    /// Rank of `g`, which must lie in the group.
    pub fn rank(&self, g: &Permutation) -> usize {
        let mut imgs: Vec<u32> = self.bsgs.levels.iter().map(|l| g.apply(l.base_point)).collect();
        self.bsgs.rank_from_base_images(&mut imgs)
    }

    /// Rank of the product `a * b` without forming it.
    pub fn rank_of_product(&self, a: &Permutation, b: &Permutation) -> usize {
        let mut imgs: Vec<u32> = self
            .bsgs
            .levels
            .iter()
            .map(|l| b.apply(a.apply(l.base_point)))
            .collect();
        self.bsgs.rank_from_base_images(&mut imgs)
    }

    /// Rank of `g^-1 x g`, given `g^-1`.
    pub fn rank_of_conjugate(&self, x: &Permutation, g: &Permutation, g_inv: &Permutation) -> usize {
        let mut imgs: Vec<u32> = self
            .bsgs
            .levels
            .iter()
            .map(|l| g.apply(x.apply(g_inv.apply(l.base_point))))
            .collect();
        self.bsgs.rank_from_base_images(&mut imgs)
    }

    /// Checked rank: `None` when `g` is not an element.
    pub fn try_rank(&self, g: &Permutation) -> Option<usize> {
        self.contains(g).then(|| self.rank(g))
    }

    /// Rank of the inverse of each element, indexed by rank.
    pub fn inverse_ranks(&self) -> Result<&[u32], GroupError> {
        let elems = self.elements()?;
        Ok(self.inverse_ranks.get_or_init(|| {
            let base = self.bsgs.base();
            let mut out = vec![0u32; elems.len()];
            for (r, e) in elems.iter().enumerate() {
                let mut imgs: Vec<u32> = base
                    .iter()
                    .map(|&b| e.images().iter().position(|&x| x == b).unwrap() as u32)
                    .collect();
                out[r] = self.bsgs.rank_from_base_images(&mut imgs) as u32;
            }
            out
        }))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Sorted generator images; used for fingerprinting.
    pub fn sorted_generator_images(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.generators.iter().map(|g| g.images().to_vec()).collect();
        v.sort();
        v
    }
}

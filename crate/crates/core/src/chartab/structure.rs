use crate::error::GroupError;
use crate::perm::{ClassTable, PermGroup};

/// Structure constants of the class algebra.
///
/// `get(i, j, k)` counts pairs `(x, y) ∈ C_i × C_j` with `x y = z_k` for the
/// fixed representative `z_k`, so that `C_i C_j = Σ_k a_ijk C_k` on class
/// sums. Each count is at most `|G|`, so machine integers suffice.
#[derive(Clone, Debug)]
pub struct ClassMatrices {
    k: usize,
    a: Vec<u64>,
}

impl ClassMatrices {
    pub fn compute(g: &PermGroup, t: &ClassTable) -> Result<Self, GroupError> {
        let elems = g.elements()?;
        let inv = g.inverse_ranks()?;
        let k = t.len();
        let mut a = vec![0u64; k * k * k];
        for (kk, z) in t.reps.iter().enumerate() {
            for (r, _) in elems.iter().enumerate() {
                // x y = z  <=>  y = x^-1 z
                let x_inv = &elems[inv[r] as usize];
                let y = g.rank_of_product(x_inv, z);
                let i = t.class_of[r] as usize;
                let j = t.class_of[y] as usize;
                a[(i * k + j) * k + kk] += 1;
            }
        }
        Ok(ClassMatrices { k, a })
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.a[(i * self.k + j) * self.k + k]
    }

    /// `(M_i)_{jk} = a_ijk`; central characters satisfy `M_i ω = ω_i ω`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u64>> {
        (0..self.k)
            .map(|j| (0..self.k).map(|kk| self.get(i, j, kk)).collect())
            .collect()
    }

    /// `M_i v` over `F_m`.
    pub fn apply(&self, i: usize, v: &[u64], m: u64) -> Vec<u64> {
        let k = self.k;
        let block = &self.a[i * k * k..(i + 1) * k * k];
        block
            .chunks_exact(k)
            .map(|row| {
                let s: u128 = row
                    .iter()
                    .zip(v)
                    .map(|(&a, &x)| a as u128 * x as u128)
                    .sum();
                (s % m as u128) as u64
            })
            .collect()
    }
}

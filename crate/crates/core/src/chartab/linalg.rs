//! Dense linear algebra over `F_ℓ`.

use super::modp::{add_mod, inv_mod, mul_mod, sub_mod};

pub type Matrix = Vec<Vec<u64>>;

/// Row-reduces `rows` in place to reduced echelon form, drops zero rows and
/// returns the pivot columns.
pub fn rref(rows: &mut Matrix, m: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], m);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, m);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(f, y, m), m);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for an `n × ncols` matrix `A`.
pub fn kernel(a: &Matrix, ncols: usize, m: u64) -> Matrix {
    let mut rows = a.clone();
    let pivots = rref(&mut rows, m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = sub_mod(0, row[free], m);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(xI - A)`, lowest degree first, by
/// reduction to upper Hessenberg form.
pub fn char_poly(mut h: Matrix, m: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], m);
        for i in j + 2..n {
            let u = mul_mod(h[i][j], inv, m);
            if u == 0 {
                continue;
            }
            // row_i -= u * row_{j+1}; col_{j+1} += u * col_i
            for c in 0..n {
                let t = mul_mod(u, h[j + 1][c], m);
                h[i][c] = sub_mod(h[i][c], t, m);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], m);
                row[j + 1] = add_mod(row[j + 1], t, m);
            }
        }
    }

    // p[t] is the char poly of the leading t×t block
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for t in 1..=n {
        let prev = &p[t - 1];
        let mut next = vec![0u64; t + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, m);
            next[d] = sub_mod(next[d], mul_mod(h[t - 1][t - 1], c, m), m);
        }
        let mut prod = 1u64;
        for i in 1..t {
            prod = mul_mod(prod, h[t - i][t - i - 1], m);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(prod, h[t - i - 1][t - 1], m);
            for (d, &c) in p[t - i - 1].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(coef, c, m), m);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// A subspace of `F_ℓ^n` held as a reduced echelon basis; the coordinates of
/// a member vector are its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn whole(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0u64; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            basis,
            pivots: (0..n).collect(),
        }
    }

    pub fn spanned_by(mut vectors: Matrix, m: u64) -> Self {
        let pivots = rref(&mut vectors, m);
        Subspace {
            basis: vectors,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of an operator on this (invariant) subspace: column `s` holds
    /// the coordinates of `op(basis[s])`.
    pub fn restrict(&self, op: impl Fn(&[u64]) -> Vec<u64>) -> Matrix {
        let r = self.dim();
        let mut out = vec![vec![0u64; r]; r];
        for (s, v) in self.basis.iter().enumerate() {
            let w = op(v);
            for (t, &p) in self.pivots.iter().enumerate() {
                out[t][s] = w[p];
            }
        }
        out
    }

    /// Vector with the given coordinates.
    pub fn lift(&self, coords: &[u64], m: u64) -> Vec<u64> {
        let n = self.basis.first().map_or(0, Vec::len);
        let mut v = vec![0u64; n];
        for (&c, b) in coords.iter().zip(&self.basis) {
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = add_mod(*x, mul_mod(c, y, m), m);
            }
        }
        v
    }
}

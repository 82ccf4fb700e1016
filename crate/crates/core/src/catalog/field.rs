//! Table-driven arithmetic in the small fields the matrix-group constructors
//! need: prime fields `F_p` and `F_9 = F_3[i]/(i^2 + 1)`.

use crate::error::GroupError;

#[derive(Clone, Debug)]
pub struct SmallField {
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl SmallField {
    pub fn new(q: u32) -> Result<Self, GroupError> {
        if q == 9 {
            return Ok(Self::f9());
        }
        if !is_prime(q as u64) {
            return Err(GroupError::InvalidParameter(format!(
                "field size {q} is not a prime (or 9)"
            )));
        }
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = (a + b) % q;
                mul[(a * q + b) as usize] = (a * b) % q;
            }
        }
        Ok(SmallField { q, add, mul })
    }

    /// Elements `a + b·i` encoded as `a + 3b`.
    fn f9() -> Self {
        let enc = |a: u32, b: u32| (a % 3) + 3 * (b % 3);
        let mut add = vec![0; 81];
        let mut mul = vec![0; 81];
        for x in 0..9u32 {
            for y in 0..9u32 {
                let (a, b) = (x % 3, x / 3);
                let (c, d) = (y % 3, y / 3);
                add[(x * 9 + y) as usize] = enc(a + c, b + d);
                // (a + bi)(c + di) = (ac - bd) + (ad + bc) i
                mul[(x * 9 + y) as usize] = enc(a * c + 2 * b * d, a * d + b * c);
            }
        }
        SmallField { q: 9, add, mul }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// Additive basis over the prime subfield.
    pub fn additive_basis(&self) -> Vec<u32> {
        if self.q == 9 {
            vec![1, 3]
        } else {
            vec![1]
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (2..self.q)
            .chain(std::iter::once(1))
            .find(|&g| self.multiplicative_order(g) == self.q - 1)
            .unwrap()
    }

    pub fn multiplicative_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

//! Deterministic Schreier–Sims: base, strong generators and explicit
//! transversals for each point stabilizer in the chain.

use num_bigint::BigUint;

use super::Permutation;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: u32,
    pub orbit: Vec<u32>,
    /// point -> index into `orbit`, `ABSENT` when the point is not in the orbit
    pos: Vec<u32>,
    pub transversal: Vec<Permutation>,
    pub inv_transversal: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base_point: u32) -> Self {
        let mut level = Level {
            base_point,
            orbit: Vec::new(),
            pos: vec![ABSENT; degree],
            transversal: Vec::new(),
            inv_transversal: Vec::new(),
        };
        level.reset(degree);
        level
    }

    fn reset(&mut self, degree: usize) {
        for &p in &self.orbit {
            self.pos[p as usize] = ABSENT;
        }
        self.orbit.clear();
        self.transversal.clear();
        self.inv_transversal.clear();
        self.orbit.push(self.base_point);
        self.pos[self.base_point as usize] = 0;
        self.transversal.push(Permutation::identity(degree));
        self.inv_transversal.push(Permutation::identity(degree));
    }

    /// Recomputes the orbit of the base point under `gens` by breadth-first
    /// search, storing coset representatives.
    fn recompute(&mut self, degree: usize, gens: &[&Permutation]) {
        self.reset(degree);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            for s in gens {
                let gamma = s.apply(beta);
                if self.pos[gamma as usize] == ABSENT {
                    let u = self.transversal[head].mul(s);
                    self.pos[gamma as usize] = self.orbit.len() as u32;
                    self.orbit.push(gamma);
                    self.inv_transversal.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub fn position(&self, point: u32) -> Option<usize> {
        match self.pos[point as usize] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.orbit.len()
    }
}

/// Base and strong generating set with transversal tables.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    pub(crate) levels: Vec<Level>,
    strong_gens: Vec<Permutation>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
            strong_gens: Vec::new(),
        };
        for g in generators {
            if g.is_identity() || bsgs.strong_gens.contains(g) {
                continue;
            }
            bsgs.strong_gens.push(g.clone());
            if bsgs
                .levels
                .iter()
                .all(|l| g.apply(l.base_point) == l.base_point)
            {
                let pt = g.first_moved().expect("non-identity");
                bsgs.levels.push(Level::new(degree, pt));
            }
        }
        for l in 0..bsgs.levels.len() {
            bsgs.recompute_level(l);
        }
        bsgs.complete();
        bsgs
    }

    fn level_gens(&self, level: usize) -> Vec<&Permutation> {
        let fixed: Vec<u32> = self.levels[..level].iter().map(|l| l.base_point).collect();
        self.strong_gens
            .iter()
            .filter(|s| fixed.iter().all(|&b| s.apply(b) == b))
            .collect()
    }

    fn recompute_level(&mut self, level: usize) {
        let gens: Vec<Permutation> = self.level_gens(level).into_iter().cloned().collect();
        let refs: Vec<&Permutation> = gens.iter().collect();
        let degree = self.degree;
        self.levels[level].recompute(degree, &refs);
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` when it went all the way down).
    pub(crate) fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base_point);
            match level.position(beta) {
                None => return (h, l),
                Some(k) => h = h.mul(&level.inv_transversal[k]),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_failing_schreier_generator(lvl) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let pt = h.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, pt));
                    }
                    self.strong_gens.push(h);
                    for l in lvl + 1..=j {
                        self.recompute_level(l);
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        let gens = self.level_gens(lvl);
        for (k, &beta) in level.orbit.iter().enumerate() {
            for s in &gens {
                let gamma = s.apply(beta);
                let idx = level.position(gamma).expect("orbit closed under generators");
                let sg = level.transversal[k].mul(s).mul(&level.inv_transversal[idx]);
                if sg.is_identity() {
                    continue;
                }
                let (h, j) = self.strip(&sg, lvl + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Mixed-radix index of a group element from the images of the base
    /// points under it. Level 0 is the most significant digit. The caller
    /// guarantees the element belongs to the group.
    pub(crate) fn rank_from_base_images(&self, images: &mut [u32]) -> usize {
        let mut rank = 0usize;
        for (l, level) in self.levels.iter().enumerate() {
            let k = level
                .position(images[l])
                .expect("element is not a member of the group");
            rank = rank * level.len() + k;
            if k != 0 {
                let inv = &level.inv_transversal[k];
                for img in images.iter_mut().skip(l + 1) {
                    *img = inv.apply(*img);
                }
            }
        }
        rank
    }

    /// Enumerates every element in rank order.
    pub(crate) fn enumerate(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.len());
            for u in &level.transversal {
                for e in &elements {
                    next.push(e.mul(u));
                }
            }
            elements = next;
        }
        elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let gens = vec![
                p(n, &format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "))),
                p(n, "(1 2)"),
            ];
            let b = Bsgs::new(n, &gens);
            let expected: u64 = (1..=n as u64).product();
            assert_eq!(b.order(), BigUint::from(expected));
        }
    }

    #[test]
    fn ranks_match_enumeration_order() {
        let gens = vec![p(5, "(1 2 3 4 5)"), p(5, "(3 4 5)")];
        let b = Bsgs::new(5, &gens);
        assert_eq!(b.order(), BigUint::from(60u32));
        let elems = b.enumerate();
        assert_eq!(elems.len(), 60);
        assert!(elems[0].is_identity());
        let base = b.base();
        for (r, e) in elems.iter().enumerate() {
            let mut imgs: Vec<u32> = base.iter().map(|&x| e.apply(x)).collect();
            assert_eq!(b.rank_from_base_images(&mut imgs), r);
            assert!(b.contains(e));
        }
        assert!(!b.contains(&p(5, "(1 2)")));
    }
}

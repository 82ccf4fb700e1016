use super::{PermGroup, Permutation};
use crate::error::GroupError;

/// Conjugacy classes of an enumerated group.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub reps: Vec<Permutation>,
    pub sizes: Vec<u64>,
    /// `inverse_class[j]` is the class containing the inverse of `reps[j]`.
    pub inverse_class: Vec<usize>,
    /// Class index of every element, indexed by element rank.
    pub class_of: Vec<u32>,
    /// Element order of each representative.
    pub rep_orders: Vec<u64>,
    pub group_order: u64,
}

impl ClassTable {
    /// Partitions the element list into orbits under conjugation by the
    /// generators. The identity (rank 0) forms the first class.
    pub fn compute(g: &PermGroup) -> Result<Self, GroupError> {
        let elems = g.elements()?;
        let n = elems.len();
        let gens: Vec<(Permutation, Permutation)> = g
            .generators()
            .iter()
            .map(|s| (s.clone(), s.inverse()))
            .collect();

        const UNSEEN: u32 = u32::MAX;
        let mut class_of = vec![UNSEEN; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if class_of[start] != UNSEEN {
                continue;
            }
            let cls = reps.len() as u32;
            class_of[start] = cls;
            queue.clear();
            queue.push(start);
            let mut head = 0;
            while head < queue.len() {
                let x = &elems[queue[head]];
                head += 1;
                for (s, s_inv) in &gens {
                    let y = g.rank_of_conjugate(x, s, s_inv);
                    if class_of[y] == UNSEEN {
                        class_of[y] = cls;
                        queue.push(y);
                    }
                }
            }
            reps.push(elems[start].clone());
            sizes.push(queue.len() as u64);
        }

        let inverse_class = reps
            .iter()
            .map(|r| class_of[g.rank(&r.inverse())] as usize)
            .collect();
        let rep_orders = reps.iter().map(Permutation::order).collect();
        Ok(ClassTable {
            reps,
            sizes,
            inverse_class,
            class_of,
            rep_orders,
            group_order: n as u64,
        })
    }

    /// Number of classes, `k(G)`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn class_of_element(&self, g: &PermGroup, x: &Permutation) -> usize {
        self.class_of[g.rank(x)] as usize
    }

    pub fn sorted_sizes(&self) -> Vec<u64> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }

    /// Least common multiple of the representative orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.rep_orders.iter().fold(1u64, |a, &b| a.lcm(&b))
    }
}

//! Character degrees and related class data.

mod cache;
mod degrees;
mod dixon;
mod linalg;
pub mod modp;
mod poly;
mod structure;

pub use cache::{fingerprint, CacheStats, DegreeCache};
pub use degrees::{parse_pairs, DegreeMultiset};
pub use dixon::{
    character_data, character_degrees, split_class_algebra, CentralCharactersModL, CharacterData,
};
pub use structure::ClassMatrices;

use crate::perm::ClassTable;

/// Number of classes whose elements have order prime to `p`, `k_{p'}(G)`.
pub fn p_regular_class_count(t: &ClassTable, p: u64) -> u64 {
    t.rep_orders.iter().filter(|&&o| o % p != 0).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, make};

    #[test]
    fn p_regular_counts() {
        let a5 = ClassTable::compute(&alternating(5).unwrap()).unwrap();
        assert_eq!(p_regular_class_count(&a5, 5), 3);
        assert_eq!(p_regular_class_count(&a5, 7), 5);
        let psl = make(&"family:PSL2(7)".parse().unwrap()).unwrap();
        let t = ClassTable::compute(&psl).unwrap();
        assert_eq!(p_regular_class_count(&t, 7), 4);
    }
}

//! Permutation groups: elements, BSGS, conjugacy classes and subgroup
//! constructions.

mod bsgs;
mod classes;
mod group;
mod permutation;
mod subgroup;

pub use bsgs::Bsgs;
pub use classes::ClassTable;
pub use group::{PermGroup, DEFAULT_ENUMERATION_CAP};
pub use permutation::{parse_cycle_list, Permutation};
pub use subgroup::{prime_divisors, prime_divisors_big, split_prime_part, Subgroup};

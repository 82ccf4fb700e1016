pub mod catalog;
pub mod chartab;
pub mod error;
pub mod perm;
pub mod invariants;
pub mod classify;
pub mod tqft;
pub mod harness;

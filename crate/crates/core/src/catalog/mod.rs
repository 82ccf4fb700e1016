//! Constructors for the named groups used throughout the harness.

mod families;
mod field;
mod spec;

pub use families::{
    alternating, cyclic, dihedral, direct_product, extraspecial_plus, frobenius_mersenne, make,
    symmetric,
};
pub use field::{is_prime, SmallField};
pub use spec::{Family, GroupSpec};

use crate::chartab::DegreeMultiset;

/// Class sizes, representative orders and character degrees known in closed
/// form, for groups whose class algebra is too large to split directly.
#[derive(Clone, Debug)]
pub struct ClosedFormData {
    pub class_sizes: Vec<u64>,
    pub rep_orders: Vec<u64>,
    pub degrees: DegreeMultiset,
}

/// Closed-form data for the Heisenberg group of order `p^3`: `p` central
/// classes, `p^2 - 1` classes of size `p`, degrees `1 × p^2` and `p × (p-1)`.
pub fn extraspecial_closed_form(p: u64) -> ClosedFormData {
    let order = p * p * p;
    let mut class_sizes = vec![1u64; p as usize];
    class_sizes.extend(std::iter::repeat_n(p, (p * p - 1) as usize));
    let mut rep_orders = vec![1u64];
    rep_orders.extend(std::iter::repeat_n(p, class_sizes.len() - 1));
    let degrees = DegreeMultiset::from_pairs(order, &[(1, p * p), (p, p - 1)])
        .expect("closed form satisfies the degree equation");
    ClosedFormData {
        class_sizes,
        rep_orders,
        degrees,
    }
}

/// Returns closed-form data when the harness should bypass the modular
/// character-degree computation for this spec.
pub fn closed_form_for(spec: &GroupSpec) -> Option<ClosedFormData> {
    match spec {
        GroupSpec::Family(Family::ExtraspecialPlus(p)) if *p > 5 => {
            Some(extraspecial_closed_form(*p as u64))
        }
        _ => None,
    }
}

use num_bigint::BigUint;

use ginv_core::catalog::make;
use ginv_core::harness::default_catalog;
use ginv_core::perm::{prime_divisors_big, split_prime_part, ClassTable};

#[test]
fn class_equation_over_the_catalog() {
    for spec in default_catalog() {
        let g = make(&spec).unwrap();
        // the order-59^3 group is covered by its closed form instead
        if g.order_u64().is_none_or(|n| n > 20_000) {
            continue;
        }
        let t = ClassTable::compute(&g).unwrap();
        assert_eq!(t.sizes.iter().sum::<u64>(), t.group_order, "{spec}");
        assert_eq!(t.sizes[0], 1, "{spec}");
        for (s, r) in t.sizes.iter().zip(&t.reps) {
            let c = g.centralizer(r).unwrap();
            assert_eq!(BigUint::from(*s) * c.order(), *g.order(), "{spec}");
        }
    }
}

#[test]
fn sylow_subgroups_have_full_prime_power_order() {
    for spec in default_catalog() {
        let g = make(&spec).unwrap();
        for p in prime_divisors_big(g.order()) {
            let s = g.sylow_subgroup(p).unwrap();
            assert_eq!(*s.order(), split_prime_part(g.order(), p).0, "{spec} p={p}");
        }
    }
}

#[test]
fn quotients_by_normal_closures_have_the_right_order() {
    for spec in default_catalog() {
        let g = make(&spec).unwrap();
        if *g.order() > BigUint::from(200u32) {
            continue;
        }
        let t = ClassTable::compute(&g).unwrap();
        for x in t.reps.iter().skip(1) {
            let n = g.normal_closure(std::slice::from_ref(x)).unwrap().into_group();
            assert!(g.is_normal_subgroup(&n));
            let quotient = g.quotient(&n).unwrap();
            assert_eq!(quotient.order() * n.order(), *g.order(), "{spec} / <{x}>");
        }
    }
}

use ginv_core::catalog::make;
use ginv_core::chartab::{character_data, character_degrees};
use ginv_core::perm::PermGroup;

fn group(spec: &str) -> PermGroup {
    make(&spec.parse().unwrap()).unwrap()
}

fn degrees(spec: &str) -> Vec<u64> {
    character_degrees(&group(spec)).unwrap().expanded()
}

#[test]
fn textbook_degree_lists() {
    assert_eq!(degrees("family:D(8)"), vec![1, 1, 1, 1, 2]);
    assert_eq!(degrees("family:S(3)"), vec![1, 1, 2]);
    assert_eq!(degrees("family:A(4)"), vec![1, 1, 1, 3]);
    assert_eq!(degrees("family:A(5)"), vec![1, 3, 3, 4, 5]);
    assert_eq!(degrees("family:SL2(5)"), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
}

#[test]
fn extraspecial_degrees_match_closed_form() {
    for p in [3u64, 5] {
        let d = character_degrees(&group(&format!("family:extraspecial+({p})"))).unwrap();
        assert_eq!(d.entries(), &[(1, p * p), (p, p - 1)]);
    }
}

#[test]
fn catalog_groups_satisfy_the_degree_equations() {
    for spec in [
        "family:S(5)",
        "family:S(6)",
        "family:A(6)",
        "family:PGL2(9)",
        "family:PSL2(11)",
        "family:SL2(13)",
        "family:frobenius_mersenne(5)",
        "family:extraspecial+(11)",
    ] {
        let g = group(spec);
        let data = character_data(&g).unwrap();
        let d = &data.degrees;
        assert_eq!(d.class_count() as usize, data.classes.len(), "{spec}");
        let derived = g.derived_subgroup().group.order_u64().unwrap();
        assert_eq!(d.linear_count() * derived, g.order_u64().unwrap(), "{spec}");
        assert!(data.central.is_eigenbasis_of(&data.matrices), "{spec}");
    }
}

#[test]
fn degrees_do_not_depend_on_generator_presentation() {
    let g = group("family:S(5)");
    let gens: Vec<_> = g
        .generators()
        .iter()
        .map(|x| x.conjugate_by(&g.generators()[0]))
        .rev()
        .collect();
    let h = PermGroup::new(5, gens).unwrap();
    assert_eq!(h.order(), g.order());
    assert_eq!(character_degrees(&g).unwrap(), character_degrees(&h).unwrap());
}

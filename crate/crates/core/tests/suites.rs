use std::time::Instant;

use ginv_core::harness::{
    default_catalog, load_all, suite_lemmas, suite_remarks, suite_theorems, Perturbation,
    ReferenceThresholds, Verdict,
};

#[test]
fn default_catalog_has_no_violations() {
    let t = Instant::now();
    let groups = load_all(&default_catalog(), None).unwrap();
    let refs = ReferenceThresholds::compute(None).unwrap();
    eprintln!("load {:?}", t.elapsed());
    let rows = suite_theorems(&groups, &refs, 6, None).unwrap();
    eprintln!("theorems {:?} rows {}", t.elapsed(), rows.len());
    for r in rows.iter().filter(|r| r.verdict == Verdict::Violation) {
        eprintln!("{}", r.to_text());
    }
    assert!(rows.iter().all(|r| r.verdict != Verdict::Violation));
    let remarks = suite_remarks(None).unwrap();
    eprintln!("remarks {:?}", t.elapsed());
    for r in remarks.iter().filter(|r| r.verdict == Verdict::Violation) {
        eprintln!("{}", r.to_text());
    }
    assert!(remarks.iter().all(|r| r.verdict != Verdict::Violation));
    let lemmas = suite_lemmas(&groups).unwrap();
    eprintln!("lemmas {:?} rows {}", t.elapsed(), lemmas.len());
    for r in lemmas.iter().filter(|r| r.verdict == Verdict::Violation) {
        eprintln!("{}", r.to_text());
    }
    assert!(lemmas.iter().all(|r| r.verdict != Verdict::Violation));
    let bad = suite_theorems(&groups, &refs, 3, Some(&Perturbation::halve("1.1d"))).unwrap();
    assert!(bad.iter().any(|r| r.verdict == Verdict::Violation));
}

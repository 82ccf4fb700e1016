//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.
//! Exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use ginv_core::catalog::{make, GroupSpec};
use ginv_core::harness::{
    default_catalog, load_all, suite_lemmas, suite_remarks, GroupData, VerificationReport,
};
use ginv_core::invariants::{
    big_q, commuting_probability, d_p_prime, gamma, integer, pow_signed, q, q_tilde, ratio,
    ExactRational,
};
use ginv_core::tqft::{evaluate_closed, CobordismWord, FrobeniusAlgebraModL};

type Check = Result<(), String>;

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn load(s: &str) -> GroupData {
    GroupData::load(&spec(s), None).unwrap()
}

fn ginv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ginv"))
        .arg("--no-cache")
        .args(args)
        .output()
        .expect("binary runs")
}

fn expect_eq(what: &str, got: ExactRational, want: ExactRational) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

/// 1/n^k as an exact rational.
fn inv_pow(n: u64, k: u32) -> ExactRational {
    pow_signed(&integer(n), -(k as i64))
}

fn c1_degrees() -> Check {
    let cases = [
        ("D(8)", "1 1 1 1 2"),
        ("S(3)", "1 1 2"),
        ("A(4)", "1 1 1 3"),
        ("A(5)", "1 3 3 4 5"),
        ("SL2(5)", "1 2 2 3 3 4 4 5 6"),
    ];
    for (g, want) in cases {
        let t = Instant::now();
        let out = ginv(&["degrees", g]);
        let took = t.elapsed();
        let got = String::from_utf8_lossy(&out.stdout);
        if !out.status.success() || got.trim() != want {
            return Err(format!("{g}: got {:?}", got.trim()));
        }
        if took >= Duration::from_secs(1) {
            return Err(format!("{g} took {took:?}"));
        }
    }
    Ok(())
}

fn c2_reference_values() -> Check {
    let (d8, a4, s3, a5) = (load("D(8)"), load("A(4)"), load("S(3)"), load("A(5)"));
    expect_eq("q_1(D8)", q(&d8.profile.degrees, 1), ratio(5, 8))?;
    expect_eq("q_2(A5)", q(&a5.profile.degrees, 2), ratio(4769, 216000))?;
    expect_eq("q~_2(A4)", q_tilde(&a4.profile.class_sizes, 2), ratio(11, 72))?;
    expect_eq("q~_2(S3)", q_tilde(&s3.profile.class_sizes, 2), ratio(11, 36))?;
    expect_eq("d(A5)", commuting_probability(&a5.profile.degrees), ratio(1, 12))?;
    expect_eq("d(A4)", commuting_probability(&a4.profile.degrees), ratio(1, 3))?;
    for p in [3u64, 5, 11, 59] {
        let e = load(&format!("extraspecial+({p})"));
        expect_eq(
            &format!("d(E({p}^3))"),
            commuting_probability(&e.profile.degrees),
            ratio(p * p + p - 1, p * p * p),
        )?;
    }
    Ok(())
}

fn c3_closed_forms() -> Check {
    let (d8, s3, a4) = (load("D(8)"), load("S(3)"), load("A(4)"));
    let one = || integer(1);
    for h in 1..=6u32 {
        expect_eq(
            &format!("q_{h}(D8)"),
            q(&d8.profile.degrees, h),
            ratio(1, 2) * (one() + inv_pow(2, 2 * h)),
        )?;
        expect_eq(
            &format!("q_{h}(S3)"),
            q(&s3.profile.degrees, h),
            ratio(1, 3) * (one() + inv_pow(2, 2 * h - 1)),
        )?;
        expect_eq(
            &format!("q_{h}(A4)"),
            q(&a4.profile.degrees, h),
            ratio(1, 4) * (one() + inv_pow(3, 2 * h - 1)),
        )?;
        expect_eq(
            &format!("q~_{h}(D8)"),
            q_tilde(&d8.profile.class_sizes, h),
            ratio(1, 4) * (one() + integer(3) * inv_pow(2, h)),
        )?;
        expect_eq(
            &format!("q~_{h}(S3)"),
            q_tilde(&s3.profile.class_sizes, h),
            ratio(1, 6) * (one() + inv_pow(2, h - 1) + inv_pow(3, h - 1)),
        )?;
        expect_eq(
            &format!("q~_{h}(A4)"),
            q_tilde(&a4.profile.class_sizes, h),
            ratio(1, 12) * (one() + inv_pow(3, h - 1) + integer(2) * inv_pow(4, h - 1)),
        )?;
    }
    Ok(())
}

fn c4_tightness() -> Check {
    for (f, p) in [(2, 3u64), (3, 7), (5, 31)] {
        let g = load(&format!("frobenius_mersenne({f})"));
        for h in 1..=4 {
            expect_eq(&format!("q_{h}(Γ({p},{f}))"), q(&g.profile.degrees, h), gamma(h, p))?;
        }
        if g.structure().map_err(|e| e.to_string())?.p_closed[&p] {
            return Err(format!("Γ({p},{f}) is {p}-closed"));
        }
    }
    Ok(())
}

fn c5_remarks() -> Check {
    let rows = suite_remarks(None).map_err(|e| e.to_string())?;
    let report = VerificationReport::new("remarks", "-", rows);
    let needed = ["remark1.i.d", "remark1.i.q", "remark1.i.qtilde", "remark1.ii", "remark1.iii", "remark1.iii.d"];
    for n in needed {
        if !report.results.iter().any(|r| r.theorem == n) {
            return Err(format!("no rows for {n}"));
        }
    }
    let first = report.violations().next().map(|v| v.to_text());
    first.map_or(Ok(()), Err)
}

fn c6_theorem_sweep() -> Check {
    let out = ginv(&["--format", "json", "verify", "--suite", "theorems", "--max-genus", "4"]);
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}", out.status.code()));
    }
    let report = VerificationReport::from_json(&String::from_utf8_lossy(&out.stdout))
        .map_err(|e| e.to_string())?;
    if report.summary.violations != 0 || report.results.is_empty() {
        return Err(format!("{:?}", report.summary));
    }
    // the sweep must notice a weakened threshold
    for theorem in ["1.1a", "1.1d", "1.2", "1.4c", "1.5"] {
        let out = ginv(&[
            "verify", "--suite", "theorems", "--max-genus", "4", "--perturb-threshold", theorem,
        ]);
        if out.status.code() != Some(1) {
            return Err(format!("perturbing {theorem} gave exit {:?}", out.status.code()));
        }
    }
    Ok(())
}

fn c7_tqft() -> Check {
    let groups = load_all(&default_catalog(), None).map_err(|e| e.to_string())?;
    for g in groups.iter().filter(|g| g.order() <= 720) {
        for h in 0..=4 {
            let v = evaluate_closed(&CobordismWord::genus(h), &g.profile.degrees)
                .map_err(|e| e.to_string())?;
            expect_eq(&format!("{} h={h}", g.label), v, big_q(&g.profile.degrees, h))?;
        }
    }
    for s in default_catalog() {
        let g = make(&s).map_err(|e| e.to_string())?;
        if g.order_u64().is_some_and(|n| n <= 1000) {
            FrobeniusAlgebraModL::for_group(&g)
                .and_then(|a| a.verify())
                .map_err(|e| format!("{s}: {e}"))?;
        }
    }
    Ok(())
}

fn c8_modular_genus1() -> Check {
    for p in [5u64, 7, 11, 13] {
        let g = load(&format!("PSL2({p})"));
        let d = d_p_prime(&g.profile, p).map_err(|e| e.to_string())?;
        expect_eq(&format!("d_{p}'(PSL2({p}))"), d, ratio(1, p - 1))?;
    }
    Ok(())
}

fn c9_lemmas() -> Check {
    let groups = load_all(&default_catalog(), None).map_err(|e| e.to_string())?;
    let rows = suite_lemmas(&groups).map_err(|e| e.to_string())?;
    for family in ["lemma.subgroup", "lemma.quotient", "lemma.multiplicative", "lemma.lescot", "lemma.simple_d"] {
        if !rows.iter().any(|r| r.theorem == family) {
            return Err(format!("no rows for {family}"));
        }
    }
    let report = VerificationReport::new("lemmas", "-", rows);
    let first = report.violations().next().map(|v| v.to_text());
    first.map_or(Ok(()), Err)
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Check); 9] = [
        (1, "character degrees of D8, S3, A4, A5, SL2(5) (< 1 s each)", 5, c1_degrees),
        (2, "exact reference values", 5, c2_reference_values),
        (3, "closed forms for h = 1..6", 5, c3_closed_forms),
        (4, "q_h(Γ(p,f)) = β(h,p)/(p+1), not p-closed", 10, c4_tightness),
        (5, "d / q_h / q̃_h crossings and separations", 60, c5_remarks),
        (6, "theorem sweep to genus 4, perturbations detected", 300, c6_theorem_sweep),
        (7, "closed TQFT words = Q_h; idempotents mod ℓ", 120, c7_tqft),
        (8, "d_p'(PSL2(p)) = 1/(p-1)", 5, c8_modular_genus1),
        (9, "lemma batteries", 120, c9_lemmas),
    ];
    let mut failed = 0;
    for (n, name, limit, check) in criteria {
        let t = Instant::now();
        let result = check();
        let took = t.elapsed();
        let result = result.and_then(|()| {
            if took > Duration::from_secs(limit) {
                Err(format!("exceeded {limit} s"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("criterion {n}: PASS  {name}  [{:.2} s, limit {limit} s]", took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {n}: FAIL  {name}  [{:.2} s, limit {limit} s]  {e}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

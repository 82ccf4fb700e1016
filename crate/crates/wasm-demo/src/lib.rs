//! Three browser entry points over `ginv-core`. Each takes plain strings
//! and returns a JSON document; errors come back as a message string.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ginv_core::catalog::GroupSpec;
use ginv_core::harness::GroupData;
use ginv_core::invariants::{big_q, format_rational, limit_value, q, q_tilde, to_f64};
use ginv_core::tqft::{evaluate_closed, CobordismWord};

/// Keeps a stray `S(9)` from freezing the tab.
const MAX_ORDER: u64 = 50_000;

fn load(spec: &str) -> Result<GroupData, String> {
    let spec: GroupSpec = spec.parse().map_err(|e| format!("{e}"))?;
    let g = GroupData::load(&spec, None).map_err(|e| format!("{e}"))?;
    Ok(g)
}

fn check_size(spec: &str) -> Result<(), String> {
    let spec: GroupSpec = spec.parse().map_err(|e| format!("{e}"))?;
    let g = ginv_core::catalog::make(&spec).map_err(|e| format!("{e}"))?;
    let too_big = g.order_u64().is_none_or(|n| n > MAX_ORDER);
    // closed-form families are cheap regardless of size
    if too_big && ginv_core::catalog::closed_form_for(&spec).is_none() {
        return Err(format!("{spec}: order {} is too large for the demo", g.order()));
    }
    Ok(())
}

fn row(g: &GroupData, h: u32) -> Value {
    let qh = q(&g.profile.degrees, h);
    let qt = q_tilde(&g.profile.class_sizes, h);
    json!({
        "h": h,
        "q": format_rational(&qh),
        "qtilde": format_rational(&qt),
        "q_f64": to_f64(&qh),
        "qtilde_f64": to_f64(&qt),
    })
}

/// `q_h` and `q̃_h` for `h = 1..=max_genus`, with the limit `1/|G'|`.
pub fn genus_profile_json(spec: &str, max_genus: u32) -> Result<String, String> {
    check_size(spec)?;
    let g = load(spec)?;
    let limit = limit_value(&g.profile.degrees);
    let out = json!({
        "group": g.label,
        "order": g.order(),
        "degrees": g.profile.degrees.to_string(),
        "limit": format_rational(&limit),
        "limit_f64": to_f64(&limit),
        "rows": (1..=max_genus).map(|h| row(&g, h)).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Side-by-side profiles of two groups and the sign of each comparison.
pub fn compare_groups_json(a: &str, b: &str, max_genus: u32) -> Result<String, String> {
    check_size(a)?;
    check_size(b)?;
    let (ga, gb) = (load(a)?, load(b)?);
    let sign = |x: std::cmp::Ordering| match x {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    let rows: Vec<Value> = (1..=max_genus)
        .map(|h| {
            let (qa, qb) = (q(&ga.profile.degrees, h), q(&gb.profile.degrees, h));
            let (ta, tb) = (q_tilde(&ga.profile.class_sizes, h), q_tilde(&gb.profile.class_sizes, h));
            json!({
                "h": h,
                "a": row(&ga, h),
                "b": row(&gb, h),
                "q_relation": sign(qa.cmp(&qb)),
                "qtilde_relation": sign(ta.cmp(&tb)),
            })
        })
        .collect();
    Ok(json!({ "a": ga.label, "b": gb.label, "rows": rows }).to_string())
}

/// Value of a closed cobordism word; also reports the genus-h surface sum
/// when the word has the standard shape.
pub fn evaluate_word_json(spec: &str, word: &str) -> Result<String, String> {
    check_size(spec)?;
    let g = load(spec)?;
    let w: CobordismWord = word.parse().map_err(|e| format!("{e}"))?;
    let value = evaluate_closed(&w, &g.profile.degrees).map_err(|e| format!("{e}"))?;
    let handles = w
        .pieces()
        .iter()
        .filter(|p| p.name() == "copants")
        .count() as u32;
    let surface = big_q(&g.profile.degrees, handles);
    Ok(json!({
        "group": g.label,
        "word": w.to_string(),
        "value": format_rational(&value),
        "handles": handles,
        "surface_sum": format_rational(&surface),
        "matches_surface_sum": value == surface,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn genus_profile(spec: &str, max_genus: u32) -> Result<String, JsValue> {
    js(genus_profile_json(spec, max_genus))
}

#[wasm_bindgen]
pub fn compare_groups(a: &str, b: &str, max_genus: u32) -> Result<String, JsValue> {
    js(compare_groups_json(a, b, max_genus))
}

#[wasm_bindgen]
pub fn evaluate_word(spec: &str, word: &str) -> Result<String, JsValue> {
    js(evaluate_word_json(spec, word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn profile_of_s3() {
        let v = parse(&genus_profile_json("S(3)", 3).unwrap());
        assert_eq!(v["order"], 6);
        assert_eq!(v["limit"], "1/3");
        assert_eq!(v["rows"][1]["q"], "3/8");
        assert_eq!(v["rows"][1]["qtilde"], "11/36");
    }

    #[test]
    fn crossing_between_a5_and_e59() {
        let v = parse(&compare_groups_json("A(5)", "extraspecial+(59)", 6).unwrap());
        let rel: Vec<&str> = v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["q_relation"].as_str().unwrap())
            .collect();
        assert_eq!(rel, [">", ">", ">", "<", "<", "<"]);
    }

    #[test]
    fn words_and_errors() {
        let v = parse(&evaluate_word_json("S(3)", "cap,copants,pants,copants,pants,cup").unwrap());
        assert_eq!(v["value"], "81/1");
        assert_eq!(v["matches_surface_sum"], true);
        assert!(evaluate_word_json("S(3)", "cap").is_err());
        assert!(genus_profile_json("S(9)", 2).unwrap_err().contains("too large"));
        assert!(genus_profile_json("nope", 2).is_err());
    }
}

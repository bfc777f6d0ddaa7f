//! Browser bindings for the demo page in `www/`.
//!
//! Every exported function returns a JSON string; the `*_json` functions hold
//! the logic so they can be tested natively.

use baxterlab::combinatorics::{row_json, stirling_first, stirling_second};
use baxterlab::free_baxter::p1x_power;
use baxterlab::identities::verify_range;
use baxterlab::{Algebra, BaxterElement, IdentityId, Ring};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest power or triangle size the page will compute.
pub const MAX_N: u32 = 12;

fn element_json(e: &BaxterElement, ascii: bool) -> Value {
    json!({ "text": e.render(ascii), "terms": e.len(), "element": e.to_json() })
}

fn check_n(n: u32) -> Result<(), String> {
    if n > MAX_N {
        return Err(format!("n = {n} is above the demo limit of {MAX_N}"));
    }
    Ok(())
}

fn parse_ring(weight: &str) -> Result<Ring, String> {
    let weight = weight.trim();
    if weight.is_empty() || weight == "λ" || weight == "lambda" {
        return Ok(Ring::lambda_int());
    }
    let w: i64 = weight
        .parse()
        .map_err(|_| format!("weight {weight:?} is neither λ nor an integer"))?;
    Ring::pinned(baxterlab::Base::Int, w).map_err(|e| e.to_string())
}

pub fn expand_p1x_json(n: u32, weight: &str, ascii: bool) -> Result<String, String> {
    check_n(n)?;
    let alg = Algebra::polynomial(parse_ring(weight)?);
    Ok(element_json(&p1x_power(&alg, n), ascii).to_string())
}

pub fn stirling_triangle_json(kind: &str, n: u32) -> Result<String, String> {
    check_n(n)?;
    let value = match kind {
        "first" => stirling_first,
        "second" => stirling_second,
        _ => {
            return Err(format!(
                "kind must be \"first\" or \"second\", not {kind:?}"
            ))
        }
    };
    let rows: Vec<Value> = (0..=n as usize)
        .map(|i| row_json(&(0..=i).map(|k| value(i, k)).collect::<Vec<_>>()))
        .collect();
    Ok(Value::Array(rows).to_string())
}

pub fn multiply_json(lhs: &str, rhs: &str, ascii: bool) -> Result<String, String> {
    let parse = |s: &str| -> Result<BaxterElement, String> {
        let v: Value = serde_json::from_str(s).map_err(|e| e.to_string())?;
        BaxterElement::from_json(&v, &Ring::lambda_int()).map_err(|e| e.to_string())
    };
    let (a, b) = (parse(lhs)?, parse(rhs)?);
    if a.max_word_len() + b.max_word_len() > MAX_N as usize + 1 {
        return Err(format!(
            "words longer than {MAX_N} factors are not computed here"
        ));
    }
    let prod = a.product(&b).map_err(|e| e.to_string())?;
    Ok(element_json(&prod, ascii).to_string())
}

pub fn verify_json(identity: &str, n_max: u32) -> Result<String, String> {
    let id: IdentityId = identity
        .parse()
        .map_err(|e: baxterlab::Error| e.to_string())?;
    let reports = verify_range(id, n_max).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = reports.iter().map(|r| r.summary_json()).collect();
    Ok(Value::Array(rows).to_string())
}

/// `{"text", "terms", "element"}` for `(1⊗x)^n`; `weight` is `"λ"` or an
/// integer.
#[wasm_bindgen]
pub fn expand_p1x(n: u32, weight: &str, ascii: bool) -> Result<String, JsError> {
    expand_p1x_json(n, weight, ascii).map_err(|e| JsError::new(&e))
}

/// Rows `0..=n` of the Stirling triangle as arrays of decimal strings.
#[wasm_bindgen]
pub fn stirling_triangle(kind: &str, n: u32) -> Result<String, JsError> {
    stirling_triangle_json(kind, n).map_err(|e| JsError::new(&e))
}

/// Product of two elements in the JSON encoding.
#[wasm_bindgen]
pub fn multiply(lhs: &str, rhs: &str, ascii: bool) -> Result<String, JsError> {
    multiply_json(lhs, rhs, ascii).map_err(|e| JsError::new(&e))
}

/// Summary reports for one identity over `1..=n_max`.
#[wasm_bindgen]
pub fn verify(identity: &str, n_max: u32) -> Result<String, JsError> {
    verify_json(identity, n_max).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion() {
        let v: Value = serde_json::from_str(&expand_p1x_json(2, "λ", false).unwrap()).unwrap();
        assert_eq!(v["text"], "2 (1⊗x⊗x) + λ (1⊗x^2)");
        assert_eq!(v["terms"], 2);
        let v: Value = serde_json::from_str(&expand_p1x_json(2, "-1", true).unwrap()).unwrap();
        assert_eq!(v["text"], "2 (1(x)x(x)x) - (1(x)x^2)");
        assert!(expand_p1x_json(13, "λ", false).is_err());
        assert!(expand_p1x_json(2, "mu", false).is_err());
    }

    #[test]
    fn triangles() {
        let t = stirling_triangle_json("second", 4).unwrap();
        let v: Value = serde_json::from_str(&t).unwrap();
        assert_eq!(v[4], json!(["0", "1", "7", "6", "1"]));
        let v: Value = serde_json::from_str(&stirling_triangle_json("first", 3).unwrap()).unwrap();
        assert_eq!(v[3], json!(["0", "2", "-3", "1"]));
        assert!(stirling_triangle_json("third", 3).is_err());
    }

    #[test]
    fn products() {
        let x = r#"{"terms":[{"coeff":"1","word":[0,1]}]}"#;
        let v: Value = serde_json::from_str(&multiply_json(x, x, false).unwrap()).unwrap();
        assert_eq!(v["text"], "2 (1⊗x⊗x) + λ (1⊗x^2)");
        assert!(multiply_json(x, "{", false).is_err());
    }

    #[test]
    fn verification() {
        let v: Value = serde_json::from_str(&verify_json("conn2", 5).unwrap()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
        assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
        assert!(verify_json("sni", 3).is_err());
    }
}

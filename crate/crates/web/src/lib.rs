//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Each export returns a JSON string; the page does all the drawing.

use serde_json::{json, Value};
use walkavoid::counting::TransferAutomaton;
use walkavoid::{Bijections, FamilyId, MapId, Word};
use wasm_bindgen::prelude::*;

/// Largest n the pair browser will enumerate.
pub const MAX_BROWSE_N: usize = 8;
/// Largest n for the count table.
pub const MAX_TABLE_N: usize = 300;

fn parse_map(id: &str) -> Result<MapId, String> {
    id.parse().map_err(|e: walkavoid::Error| e.to_string())
}

/// Applies a bijection (forward or inverse) and describes both words.
pub fn transform(bijection: &str, word: &str, inverse: bool) -> Result<String, String> {
    let map = parse_map(bijection)?;
    let input: Word = word.parse().map_err(|e: walkavoid::Error| e.to_string())?;
    let b = Bijections::default();
    let (domain, image, n) = if inverse {
        let pre = b.invert(map, &input).map_err(|e| e.to_string())?;
        let n = input.len();
        (pre, input, n)
    } else {
        let n = map
            .domain()
            .n_for_length(input.len())
            .ok_or_else(|| format!("{input} has the wrong length for {map}"))?;
        let img = b.apply(map, n, &input).map_err(|e| e.to_string())?;
        (input, img, n)
    };
    Ok(json!({
        "bijection": map.name(),
        "n": n,
        "domain": domain.to_digits(),
        "image": image.to_digits(),
        "walk": map.domain().spec().walk,
    })
    .to_string())
}

/// Every (domain word, image) pair of a bijection at `n`, in domain order.
pub fn pairs(bijection: &str, n: usize) -> Result<String, String> {
    let map = parse_map(bijection)?;
    if n > MAX_BROWSE_N {
        return Err(format!("n is capped at {MAX_BROWSE_N} in the browser"));
    }
    let b = Bijections::default();
    let words = map.domain().enumerate(n).map_err(|e| e.to_string())?;
    let rows = words
        .iter()
        .map(|x| {
            b.apply(map, n, x)
                .map(|u| json!([x.to_digits(), u.to_digits()]))
                .map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<Value>, String>>()?;
    Ok(Value::from(rows).to_string())
}

/// Counts of both sides of a correspondence for n = 1..=max_n.
pub fn counts(problem: &str, max_n: usize) -> Result<String, String> {
    let (a, b) = match problem {
        "p1" => (FamilyId::P1A, FamilyId::P1B),
        "p2" => (FamilyId::P2A, FamilyId::P2B),
        _ => return Err(format!("unknown problem {problem:?}")),
    };
    if !(1..=MAX_TABLE_N).contains(&max_n) {
        return Err(format!("max n must be between 1 and {MAX_TABLE_N}"));
    }
    let ca = TransferAutomaton::for_family(a).counts_up_to(max_n);
    let cb = TransferAutomaton::for_family(b).counts_up_to(max_n);
    let rows: Vec<Value> = ca
        .iter()
        .filter(|e| e.0 >= 1)
        .zip(cb.iter().filter(|e| e.0 >= 1))
        .map(|((n, x), (_, y))| json!({"n": n, "a": x.to_string(), "b": y.to_string(), "equal": x == y}))
        .collect();
    Ok(Value::from(rows).to_string())
}

#[wasm_bindgen(js_name = mapWord)]
pub fn map_word(bijection: &str, word: &str) -> Result<String, JsError> {
    transform(bijection, word, false).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = invertWord)]
pub fn invert_word(bijection: &str, word: &str) -> Result<String, JsError> {
    transform(bijection, word, true).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = listPairs)]
pub fn list_pairs(bijection: &str, n: usize) -> Result<String, JsError> {
    pairs(bijection, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = countTable)]
pub fn count_table(problem: &str, max_n: usize) -> Result<String, JsError> {
    counts(problem, max_n).map_err(|e| JsError::new(&e))
}

//! Browser bindings for the `ppmat` demo page.
//!
//! Every export takes and returns JSON strings. The `*_impl` functions hold
//! the logic and are plain Rust, so they are tested natively.

use std::collections::BTreeMap;

use ppmat::bijection::{greene_shape, lis_tail, phi, phi_inverse, word_to_strict_tableau};
use ppmat::enumerate::gen_pp_box;
use ppmat::{NMatrix, PlanePartition, Word};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_SIDE: u32 = 5;
const MAX_WORD: usize = 10;

fn stats(pp: &PlanePartition) -> Value {
    json!({
        "volume": pp.volume(),
        "trace": pp.trace(),
        "des": pp.des(),
        "up_hook_volume": pp.up_hook_volume(),
        "corner_volume": pp.corner_volume(),
        "shape": pp.shape(),
    })
}

/// `{"matrix": .., "stats": ..}` for a plane partition given as rows.
/// `n` and `m` of 0 mean "as small as possible".
pub fn phi_impl(pp_json: &str, n: u32, m: u32) -> Result<String, String> {
    let pp: PlanePartition = serde_json::from_str(pp_json).map_err(|e| e.to_string())?;
    let n = if n == 0 { pp.num_rows() } else { n as usize };
    let m = if m == 0 { pp.max_entry() } else { m };
    let d = phi(&pp, n, m).map_err(|e| e.to_string())?;
    Ok(json!({ "matrix": d, "stats": stats(&pp) }).to_string())
}

/// `{"pp": .., "stats": ..}` for a matrix `{"rows", "cols", "data"}`.
pub fn phi_inverse_impl(matrix_json: &str) -> Result<String, String> {
    let d: NMatrix = serde_json::from_str(matrix_json).map_err(|e| e.to_string())?;
    if d.total() > 60 {
        return Err("entry sum is capped at 60 in the demo".into());
    }
    let pp = phi_inverse(&d);
    Ok(json!({ "pp": pp, "stats": stats(&pp) }).to_string())
}

/// Strict tableau of a word with its increasing-subsequence profile.
pub fn word_impl(word: &str, m: u32) -> Result<String, String> {
    let w = Word::parse(word, m).map_err(|e| e.to_string())?;
    if w.len() > MAX_WORD {
        return Err(format!("words are capped at {MAX_WORD} letters"));
    }
    let profile: Vec<usize> = (1..=m).rev().map(|i| lis_tail(&w, i)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let tableau = word_to_strict_tableau(&w);
    Ok(json!({
        "tableau": tableau,
        "shape": tableau.shape(),
        "greene": greene_shape(&w),
        "profile": profile,
    })
    .to_string())
}

/// Coefficients of `Σ q^{stat(π)}` over `PP(k, n, m)` as `[[exponent, count], ..]`,
/// for stat in volume, uh, corner, trace, des.
pub fn gf_impl(k: u32, n: u32, m: u32, stat: &str) -> Result<String, String> {
    if k > MAX_SIDE || n > MAX_SIDE || m > MAX_SIDE {
        return Err(format!("box sides are capped at {MAX_SIDE}"));
    }
    let f: fn(&PlanePartition) -> u64 = match stat {
        "volume" => PlanePartition::volume,
        "uh" => PlanePartition::up_hook_volume,
        "corner" => PlanePartition::corner_volume,
        "trace" => PlanePartition::trace,
        "des" => PlanePartition::des,
        other => return Err(format!("unknown statistic `{other}`")),
    };
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut total = 0u64;
    for pp in gen_pp_box(k as usize, n as usize, m) {
        *counts.entry(f(&pp)).or_default() += 1;
        total += 1;
    }
    let coeffs: Vec<[u64; 2]> = counts.into_iter().map(|(e, c)| [e, c]).collect();
    Ok(json!({ "coefficients": coeffs, "count": total }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn pp_to_matrix(pp_json: &str, n: u32, m: u32) -> Result<String, JsValue> {
    js(phi_impl(pp_json, n, m))
}

#[wasm_bindgen]
pub fn matrix_to_pp(matrix_json: &str) -> Result<String, JsValue> {
    js(phi_inverse_impl(matrix_json))
}

#[wasm_bindgen]
pub fn word_to_tableau(word: &str, m: u32) -> Result<String, JsValue> {
    js(word_impl(word, m))
}

#[wasm_bindgen]
pub fn box_series(k: u32, n: u32, m: u32, stat: &str) -> Result<String, JsValue> {
    js(gf_impl(k, n, m, stat))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn phi_example() {
        let out = parse(&phi_impl("[[4,4,2],[4,2,1],[2,2]]", 3, 4).unwrap());
        assert_eq!(out["matrix"]["data"], json!([[0, 1, 0, 1], [1, 0, 0, 1], [0, 2, 0, 0]]));
        assert_eq!(out["stats"]["corner_volume"], 15);
        let auto = parse(&phi_impl("[[4,4,2],[4,2,1],[2,2]]", 0, 0).unwrap());
        assert_eq!(auto["matrix"], out["matrix"]);
        assert!(phi_impl("[[1,2]]", 0, 0).is_err());
    }

    #[test]
    fn inverse_example() {
        let out = parse(&phi_inverse_impl(r#"{"rows":3,"cols":4,"data":[[0,1,0,1],[1,0,0,1],[0,2,0,0]]}"#).unwrap());
        assert_eq!(out["pp"], json!([[4, 4, 2], [4, 2, 1], [2, 2]]));
        assert_eq!(out["stats"]["volume"], 21);
        let zero = parse(&phi_inverse_impl(r#"{"rows":2,"cols":2,"data":[[0,0],[0,0]]}"#).unwrap());
        assert_eq!(zero["pp"], json!([]));
    }

    #[test]
    fn word_example() {
        let out = parse(&word_impl("132434", 4).unwrap());
        assert_eq!(out["greene"], json!([4, 3, 3, 2]));
        assert_eq!(out["shape"], out["greene"]);
        assert_eq!(out["profile"], json!([4, 3, 3, 2]));
        assert!(word_impl("15", 4).is_err());
        assert!(word_impl("12341234123", 4).is_err());
    }

    #[test]
    fn box_series_matches_macmahon() {
        let out = parse(&gf_impl(2, 2, 2, "volume").unwrap());
        assert_eq!(out["count"], 20);
        let one = parse(&gf_impl(1, 1, 1, "volume").unwrap());
        assert_eq!(one["coefficients"], json!([[0, 1], [1, 1]]));
        assert!(gf_impl(6, 1, 1, "volume").is_err());
        assert!(gf_impl(1, 1, 1, "height").is_err());
    }
}

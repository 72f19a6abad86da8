//! wasm-bindgen surface for `www/index.html`. Each call returns display text or
//! throws a string describing the parse or math error.

use kpeterson::algebra::{Partition, Permutation, PolyZQ};
use kpeterson::grothendieck::dual_groth;
use kpeterson::peterson::phi_apply;
use kpeterson::schubert::{g_tilde, k_conjugate, lambda_map};
use wasm_bindgen::prelude::*;

fn js(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// `g_λ` for a comma separated partition, written in `h_k`.
#[wasm_bindgen]
pub fn dual_grothendieck(lambda: &str) -> Result<String, JsValue> {
    let lam: Partition = lambda.trim().parse().map_err(js)?;
    if lam.weight() > 12 {
        return Err(js("keep |λ| ≤ 12 in the browser"));
    }
    Ok(dual_groth(&lam).to_string())
}

/// `Φ_n(p)` as `num / den`.
#[wasm_bindgen]
pub fn peterson_image(n: usize, poly: &str) -> Result<String, JsValue> {
    if !(2..=4).contains(&n) {
        return Err(js("n must be 2, 3 or 4 here"));
    }
    let p = PolyZQ::parse(poly).map_err(js)?;
    Ok(phi_apply(&p, n).map_err(js)?.to_string())
}

/// λ-map image, its k-conjugate and `g̃_w`, one per line.
#[wasm_bindgen]
pub fn permutation_summary(w: &str) -> Result<String, JsValue> {
    let w: Permutation = w.trim().parse().map_err(js)?;
    if w.n() > 5 {
        return Err(js("permutations of at most 5 letters"));
    }
    let lam = lambda_map(&w);
    let conj = k_conjugate(&lam);
    let g = g_tilde(&w).map_err(js)?;
    Ok(format!(
        "lambda = {}\nk-conjugate = {}\ng~ = {}",
        show(&lam.partition),
        show(&conj.partition),
        g
    ))
}

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        p.to_string()
    }
}

//! wasm-bindgen bindings for `www/index.html`. Every entry point takes and
//! returns JSON text; errors come back as strings.

use std::sync::Arc;

use isoformal::{
    classify, generate_weyl, Family, InputDoc, PoincareReport, RootSystem, SimpleType,
};
use wasm_bindgen::prelude::*;

/// Keeps the page responsive: `W(E6)` and `W(D7)` fit, `W(E7)` does not.
pub const WEB_BUDGET: u64 = 400_000;

pub fn classify_doc(input: &str) -> Result<String, String> {
    let (spec, c) = InputDoc::parse(input)
        .map_err(|e| format!("parse error: {e}"))?
        .into_pair()
        .map_err(|e| e.to_string())?;
    let report = classify(&spec, &c).map_err(|e| e.to_string())?;
    Ok(report.to_json())
}

pub fn poincare_doc(input: &str) -> Result<String, String> {
    let (spec, c) = InputDoc::parse(input)
        .map_err(|e| format!("parse error: {e}"))?
        .into_pair()
        .map_err(|e| e.to_string())?;
    Ok(PoincareReport::new(&spec, &c)
        .map_err(|e| e.to_string())?
        .to_json())
}

pub fn weyl_doc(family: &str, rank: usize) -> Result<String, String> {
    let f: Family = family
        .parse()
        .map_err(|e: isoformal::Error| e.to_string())?;
    let ty = SimpleType::new(f, rank).map_err(|e| e.to_string())?;
    let w = generate_weyl(Arc::new(RootSystem::new(ty)), WEB_BUDGET).map_err(|e| e.to_string())?;
    Ok(w.summary().to_json())
}

#[wasm_bindgen(js_name = classify)]
pub fn classify_js(input: &str) -> Result<String, JsValue> {
    classify_doc(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = poincare)]
pub fn poincare_js(input: &str) -> Result<String, JsValue> {
    poincare_doc(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = weylSummary)]
pub fn weyl_js(family: &str, rank: usize) -> Result<String, JsValue> {
    weyl_doc(family, rank).map_err(|e| JsValue::from_str(&e))
}

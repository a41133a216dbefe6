//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes and returns JSON strings. The logic lives in
//! [`demo`], which is plain Rust and testable natively; the
//! `#[wasm_bindgen]` wrappers only convert errors to `JsError`.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js<T>(r: treeweights_core::Result<T>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&format!("{}: {}", e.code(), e)))
}

/// JSON text of a bundled example graph (`"triangle"` or `"kite"`).
#[wasm_bindgen]
pub fn example_graph(name: &str) -> Result<String, JsError> {
    js(demo::example_graph(name))
}

/// Partition tree weights with per-ordering breakdown.
#[wasm_bindgen]
pub fn partition_weights(graph_json: &str, partition: &str) -> Result<String, JsError> {
    js(demo::partition_weights(graph_json, partition))
}

/// Sector census next to the all-singletons partition route.
#[wasm_bindgen]
pub fn symmetric_weights(graph_json: &str, guard: usize) -> Result<String, JsError> {
    js(demo::symmetric_weights(graph_json, guard))
}

/// Contact matrix of one ordered tree at the point `u`.
#[wasm_bindgen]
pub fn contact_matrix(
    graph_json: &str,
    partition: &str,
    order: &str,
    u: Vec<f64>,
) -> Result<String, JsError> {
    js(demo::contact_matrix(graph_json, partition, order, &u))
}

//! JSON shapes shared by the subcommands.

use serde_json::{json, Value};

use fockcrystal::{ChargedMultipartition, TripleCoordinates};

/// The library's `{"components", "charge"}` form plus `"mp"`, the
/// multipartition in the input notation.
pub fn charged(x: &ChargedMultipartition) -> Value {
    let mut v = serde_json::to_value(x).expect("multipartitions always serialize");
    v["mp"] = Value::String(x.mp().to_string());
    v
}

pub fn coordinates(c: &TripleCoordinates) -> Value {
    json!({
        "e_side": charged(&c.e_side),
        "sigma": c.sigma.to_string(),
        "l_side": charged(&c.l_side),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

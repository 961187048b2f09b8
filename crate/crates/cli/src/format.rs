//! Fixed-point number formatting shared by all commands.

/// `x` with `precision` decimals, ties rounded to even on the exact binary
/// value.
pub fn fixed(x: f64, precision: usize) -> String {
    format!("{x:.precision$}")
}

/// Short scientific notation for deviations.
pub fn scientific(x: f64) -> String {
    format!("{x:.3e}")
}

/// Re-reads a formatted decimal as a JSON number so JSON and text outputs
/// carry the same rounded value.
pub fn json_number(formatted: &str) -> serde_json::Value {
    formatted
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

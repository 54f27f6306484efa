use std::io::IsTerminal;

use fppkit_core::rational::{fmt_q, json as qjson};
use fppkit_core::Q;
use serde_json::Value;

/// What a subcommand hands back for rendering.
pub struct Rendered {
    pub json: Value,
    pub text: String,
    /// False when a check or validation failed.
    pub ok: bool,
}

impl Rendered {
    pub fn ok(json: Value, text: impl Into<String>) -> Self {
        Rendered { json, text: text.into(), ok: true }
    }
}

pub fn q(x: &Q) -> Value {
    qjson::serialize(x, serde_json::value::Serializer).expect("rationals always serialize")
}

pub fn qs(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q).collect())
}

pub fn qt(xs: &[Q]) -> String {
    xs.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}

pub fn color_enabled() -> bool {
    std::env::var("FPPKIT_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

pub fn paint(text: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

//! Text and JSON rendering of reports.

use gsym_core::homotopy::MethodReport;
use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `{"agreement"?, "method", "notes", "ranks", "space", "version"}` with
/// keys in sorted order.
pub fn report_json(r: &MethodReport) -> Value {
    let mut m = Map::new();
    m.insert("space".into(), json!(r.space.label()));
    m.insert("method".into(), json!(r.method.as_str()));
    let ranks: Vec<Value> = r.ranks.iter().map(|(q, d)| json!({"q": q, "dim": d})).collect();
    m.insert("ranks".into(), Value::Array(ranks));
    if let Some(a) = r.agreement {
        m.insert("agreement".into(), json!(a));
    }
    m.insert("notes".into(), json!(r.notes));
    m.insert("version".into(), json!(VERSION));
    Value::Object(m)
}

/// `q=5 (dim 1), q=9 (dim 1)`, or `trivial` for an empty table.
pub fn ranks_line(r: &MethodReport) -> String {
    if r.ranks.is_empty() {
        return "trivial".into();
    }
    r.ranks
        .iter()
        .map(|(q, d)| format!("q={q} (dim {d})"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn report_text(r: &MethodReport, with_notes: bool) -> String {
    let mut s = format!("{}: {}", r.space.label(), ranks_line(r));
    match r.agreement {
        Some(true) => s.push_str("  [theorem = cartan]"),
        Some(false) => s.push_str(&format!("  [DISAGREEMENT at q={}]", r.first_difference.unwrap_or(0))),
        None => s.push_str(&format!("  [{}]", r.method)),
    }
    if with_notes {
        for n in &r.notes {
            s.push_str("\n  ");
            s.push_str(n);
        }
    }
    s
}

pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialise")
}

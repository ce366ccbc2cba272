//! Text rendering of command payloads.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("n/a".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Arrays of scalars print comma-separated; `(none)` for the empty set.
fn flat(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    let items = v.as_array()?;
    if items.is_empty() {
        return Some("(none)".into());
    }
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| p.join(","))
}

fn lines(prefix: &str, v: &Value, out: &mut Vec<String>) {
    if let Some(s) = flat(v) {
        out.push(format!("{prefix}: {s}"));
        return;
    }
    match v {
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                lines(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                lines(&format!("{prefix}.{k}"), x, out);
            }
        }
        _ => unreachable!("scalars handled by flat"),
    }
}

/// One `key: value` line per leaf; a lone flat answer prints bare.
pub fn text(answer: &[(&'static str, Value)]) -> String {
    if let [(_, v)] = answer {
        if let Some(s) = flat(v) {
            return s + "\n";
        }
    }
    let mut out = Vec::new();
    for (k, v) in answer {
        lines(k, v, &mut out);
    }
    let mut s = out.join("\n");
    s.push('\n');
    s
}

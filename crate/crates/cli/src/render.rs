//! TSV rendering of JSON reports.
//!
//! Objects become `key<TAB>value` lines with nested keys joined by `.`;
//! arrays of strings repeat the key once per element; arrays of other
//! scalars are joined by commas; arrays of objects are indexed.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, out);
            }
        }
        Value::Array(items) if items.iter().all(Value::is_string) && !items.is_empty() => {
            for item in items {
                out.push_str(&format!("{prefix}\t{}\n", scalar(item)));
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), item, out);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}\t{}\n", joined.join(",")));
        }
        other => out.push_str(&format!("{prefix}\t{}\n", scalar(other))),
    }
}

pub fn tsv(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

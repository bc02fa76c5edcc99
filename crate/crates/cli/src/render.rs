//! Plain-text rendering of report values. Text mode shows exactly the data
//! of the JSON report, laid out as indented `key: value` lines.

use serde_json::Value;

/// Renders rationals as `n/d` (with the approximation in parentheses when
/// present) and everything else structurally.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn rational_text(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    let (num, den) = (obj.get("num")?, obj.get("den")?);
    let extra = obj.keys().filter(|k| *k != "num" && *k != "den").count();
    let approx = obj.get("approx").and_then(Value::as_str);
    if extra > usize::from(approx.is_some()) {
        return None;
    }
    let base = if den.as_u64() == Some(1) { num.to_string() } else { format!("{num}/{den}") };
    Some(match approx {
        Some(a) => format!("{base} (~{a})"),
        None => base,
    })
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| scalar_text(i).is_some() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar_text).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Object(_) => rational_text(v),
        Value::Array(_) => None,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) if rational_text(v).is_none() => {
            for (k, val) in map {
                match scalar_text(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, val, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) if scalar_text(v).is_none() => {
            for (i, item) in items.iter().enumerate() {
                match scalar_text(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        write_value(out, item, indent + 1);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(v).unwrap_or_default())),
    }
}

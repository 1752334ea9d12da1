use serde_json::{Map, Number, Value};

/// Significant digits kept for every float in the output.
pub const SIG_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Round every float to [`SIG_DIGITS`] significant digits. Object keys are
/// kept in sorted order by `serde_json`'s map.
pub fn canonical(v: &Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64"));
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.iter().map(canonical).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, v)| (k.clone(), canonical(v))).collect::<Map<_, _>>()),
        other => other.clone(),
    }
}

/// Pretty JSON, newline terminated.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(&canonical(v)).expect("values serialize");
    s.push('\n');
    s
}

/// Plain-text rendering: scalar fields as `key: value`, arrays of objects as
/// aligned tables.
pub fn to_table(v: &Value) -> String {
    let v = canonical(v);
    let mut out = String::new();
    match &v {
        Value::Object(o) => {
            for (k, x) in o {
                match x {
                    Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                        out.push_str(&format!("{k}:\n"));
                        out.push_str(&table(rows));
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{k}:\n"));
                        for line in to_table(x).lines() {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{k}: {}\n", cell(x))),
                }
            }
        }
        other => out.push_str(&format!("{}\n", cell(other))),
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("object rows").keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| r.get(c).map_or("-".into(), cell)).collect()).collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |xs: &[String]| {
        let parts: Vec<String> = xs.iter().zip(&widths).map(|(x, w)| format!("{x:>w$}")).collect();
        format!("  {}\n", parts.join("  "))
    };
    let mut out = line(&cols);
    for r in &cells {
        out.push_str(&line(r));
    }
    out
}

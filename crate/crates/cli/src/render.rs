//! Plain-text rendering of the JSON reports, so both formats carry the same
//! numbers.

use serde_json::Value;

pub fn human(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, None, value, 0);
    out
}

fn cyclo(value: &Value) -> Option<String> {
    let obj = value.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    let level = obj.get("level")?.as_u64()?;
    let coeffs = obj.get("coeffs")?.as_array()?;
    let mut text = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        let c = c.as_str()?;
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c),
        };
        let term = match (j, mag) {
            (0, _) => mag.to_string(),
            (_, "1") => format!("z{level}^{j}"),
            _ => format!("{mag}*z{level}^{j}"),
        };
        text.push_str(match (text.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        text.push_str(&term);
    }
    Some(if text.is_empty() { "0".into() } else { text })
}

fn scalar(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => cyclo(value),
    }
}

fn write_value(out: &mut String, key: Option<&str>, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    if let Some(s) = scalar(value) {
        out.push_str(&format!("{pad}{label}{s}\n"));
        return;
    }
    match value {
        Value::Array(items) => {
            if let Some(flat) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push_str(&format!("{pad}{label}[{}]\n", flat.join(", ")));
                return;
            }
            out.push_str(&format!("{pad}{}\n", key.unwrap_or("-")));
            for item in items {
                write_value(out, Some("-"), item, depth + 1);
            }
        }
        Value::Object(map) => {
            if key.is_some() {
                out.push_str(&format!("{pad}{}\n", key.unwrap_or_default()));
            }
            let depth = if key.is_some() { depth + 1 } else { depth };
            for (k, v) in map {
                write_value(out, Some(k), v, depth);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_report() {
        let v = json!({
            "result": "finite",
            "T": 6,
            "block_orders": [2, 3, null],
            "x": {"level": 6, "coeffs": ["1", "-2"]},
        });
        let text = human(&v);
        assert!(text.contains("result: finite"));
        assert!(text.contains("T: 6"));
        assert!(text.contains("block_orders: [2, 3, -]"));
        assert!(text.contains("x: 1 - 2*z6^1"));
        assert_eq!(
            cyclo(&json!({"level": 4, "coeffs": ["0", "-1"]})).unwrap(),
            "-z4^1"
        );
    }
}

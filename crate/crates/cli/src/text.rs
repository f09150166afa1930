use std::fmt::Write;

use leibniz_core::poly::ParamAlgebra;
use leibniz_core::AlgebraSpec;
use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        Value::Object(m) if m.is_empty() => Some("0".into()),
        Value::Object(m) if m.values().all(|x| x.is_string()) => Some(
            m.iter()
                .map(|(k, x)| format!("{k}: {}", x.as_str().unwrap_or_default()))
                .collect::<Vec<_>>()
                .join("  "),
        ),
        _ => None,
    }
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

fn combination(terms: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, (b, c)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) if !m.contains(['+', '-']) => (true, m),
            _ => (false, c.as_str()),
        };
        let sep = match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        if mag == "1" {
            out.push_str(b);
        } else {
            let _ = write!(out, "({mag}){b}");
        }
    }
    out
}

pub fn algebra_table(spec: &AlgebraSpec) -> String {
    let names = spec.names();
    let mut out = format!("{} {} [{}]\n", spec.dim(), serde_json::to_value(spec.kind()).unwrap().as_str().unwrap_or(""), names.join(", "));
    for (i, j, v) in spec.nonzero_brackets() {
        let terms: Vec<(String, String)> = v.into_iter().map(|(k, c)| (names[k].clone(), c.to_string())).collect();
        let _ = writeln!(out, "[{},{}] = {}", names[i], names[j], combination(&terms));
    }
    out
}

pub fn family_table(pa: &ParamAlgebra) -> String {
    let doc = pa.to_document();
    let mut out = format!("{} {} [{}] params [{}]\n",
        doc.dim,
        serde_json::to_value(doc.kind).unwrap().as_str().unwrap_or(""),
        doc.basis.join(", "),
        doc.params.join(", "));
    for b in &doc.brackets {
        let terms: Vec<(String, String)> = b.value.iter().map(|t| (t.basis.clone(), t.coeff.clone())).collect();
        let _ = writeln!(out, "[{},{}] = {}", b.left, b.right, combination(&terms));
    }
    out
}

//! Report emission: JSON with floats at 17 significant digits, and CSV
//! with nested fields flattened to dotted column names.

use std::fmt::Write as _;

use serde_json::{Map, Value};

/// A command's result, ready to emit.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// What the report computes, in words.
    pub quantity: String,
    pub body: Map<String, Value>,
    /// Array field emitted one element per CSV row.
    pub table: Option<String>,
}

impl Report {
    pub fn new(command: &str, quantity: &str, body: impl serde::Serialize) -> Self {
        let body = match serde_json::to_value(body).expect("report bodies serialize") {
            Value::Object(m) => m,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Report { command: command.into(), quantity: quantity.into(), body, table: None }
    }

    pub fn with_table(mut self, field: &str) -> Self {
        self.table = Some(field.into());
        self
    }

    pub fn insert(&mut self, key: &str, v: impl serde::Serialize) {
        self.body.insert(key.into(), serde_json::to_value(v).expect("report fields serialize"));
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("quantity".into(), Value::String(self.quantity.clone()));
        for (k, v) in &self.body {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = to_json(&self.to_value());
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let header = [("command", &self.command), ("quantity", &self.quantity)];
        let mut rows: Vec<Vec<(String, String)>> = Vec::new();
        let base: Vec<(String, String)> = header.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        match self.table.as_ref().and_then(|t| self.body.get(t)) {
            Some(Value::Array(items)) => {
                for item in items {
                    let mut row = base.clone();
                    flatten("", item, &mut row);
                    rows.push(row);
                }
            }
            _ => {
                let mut row = base;
                for (k, v) in &self.body {
                    flatten(k, v, &mut row);
                }
                rows.push(row);
            }
        }
        let mut columns: Vec<String> = Vec::new();
        for row in &rows {
            for (k, _) in row {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&columns).expect("in-memory write");
        for row in &rows {
            let rec = columns.iter().map(|c| row.iter().find(|(k, _)| k == c).map_or("", |(_, v)| v.as_str()));
            w.write_record(rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let cells: Vec<String> = xs.iter().map(scalar).collect();
            out.push((prefix.to_string(), cells.join(";")));
        }
        Value::Array(_) => out.push((prefix.to_string(), to_json_compact(v))),
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => number(n),
        other => to_json_compact(other),
    }
}

/// `x` with 17 significant digits, trailing zeros trimmed, always marked
/// as a float (`2.0`, `1e300`).
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0" } else { "0.0" }.into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    if !(-5..17).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        return if tail.is_empty() { format!("{sign}{head}e{exp}") } else { format!("{sign}{head}.{tail}e{exp}") };
    }
    let (int, frac) = if exp < 0 {
        ("0".to_string(), format!("{}{digits}", "0".repeat((-exp - 1) as usize)))
    } else {
        let point = exp as usize + 1;
        if digits.len() <= point {
            (format!("{digits}{}", "0".repeat(point - digits.len())), String::new())
        } else {
            (digits[..point].to_string(), digits[point..].to_string())
        }
    };
    let frac = if frac.is_empty() { "0".to_string() } else { frac };
    format!("{sign}{int}.{frac}")
}

fn number(n: &serde_json::Number) -> String {
    if n.is_f64() {
        format_float(n.as_f64().expect("f64 number"))
    } else {
        n.to_string()
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Pretty JSON with two-space indentation and stable field order.
pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0, true);
    out
}

pub fn to_json_compact(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0, false);
    out
}

fn write_value(out: &mut String, v: &Value, depth: usize, pretty: bool) {
    let pad = |out: &mut String, d: usize| {
        if pretty {
            out.push('\n');
            out.push_str(&"  ".repeat(d));
        }
    };
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => out.push_str(&number(n)),
        Value::String(s) => out.push_str(&string(s)),
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Array(xs) => {
            // arrays of scalars stay on one line
            let flat = !pretty || xs.iter().all(|x| !x.is_object() && !x.is_array());
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                    if flat && pretty {
                        out.push(' ');
                    }
                }
                if !flat {
                    pad(out, depth + 1);
                }
                write_value(out, x, depth + 1, pretty);
            }
            if !flat {
                pad(out, depth);
            }
            out.push(']');
        }
        Value::Object(m) => {
            out.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                pad(out, depth + 1);
                let _ = write!(out, "{}:{}", string(k), if pretty { " " } else { "" });
                write_value(out, x, depth + 1, pretty);
            }
            pad(out, depth);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use serde_json::json;

    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(1.875), "1.875");
        assert_eq!(format_float(2.0), "2.0");
        assert_eq!(format_float(0.1), "0.10000000000000001");
        assert_eq!(format_float(-3.5e-7), "-3.4999999999999998e-7");
        assert_eq!(format_float(1e300), "1.0000000000000001e300");
        assert_eq!(format_float(1024.0), "1024.0");
        assert_eq!(format_float(0.00012), "0.00012");
        assert_eq!(format_float(-0.0), "-0.0");
    }

    #[test]
    fn json_round_trips() {
        let v = json!({"t": 1.875, "n": 3, "nested": {"xs": [1.5, 2.0], "s": "a\"b"}, "none": null, "rows": [{"a": 1}]});
        let r = Report::new("x", "y", &v);
        let parsed: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed, r.to_value());
        assert_eq!(r.to_json(), r.clone().to_json());
    }

    #[test]
    fn csv_flattening() {
        let r = Report::new("tae ashby", "q", json!({"p": 0.5, "sim": {"mean": 2.0, "se": null}}));
        assert_eq!(r.to_csv(), "command,quantity,p,sim.mean,sim.se\ntae ashby,q,0.5,2.0,\n");
        let r = Report::new("enum list", "q", json!({"entries": [{"i": 0}, {"i": 1, "x": "a,b"}]})).with_table("entries");
        assert_eq!(r.to_csv(), "command,quantity,i,x\nenum list,q,0,\nenum list,q,1,\"a,b\"\n");
    }

    proptest! {
        #[test]
        fn floats_round_trip(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
            let s = format_float(x);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
            let v: Value = serde_json::from_str(&s).unwrap();
            prop_assert!(v.is_f64());
        }
    }
}

use std::fmt::Write;

use cayley_walks::Rat;
use serde_json::{Map, Value};

use crate::args::Format;

/// A computed sequence: `(n, A(i, n))` pairs in increasing `n`.
pub struct Terms {
    pub meta: Map<String, Value>,
    pub points: Vec<(usize, Rat)>,
}

/// b-file lines `INDEX VALUE` with consecutive indices from `start`.
pub fn bfile(values: impl IntoIterator<Item = Rat>, start: u64) -> String {
    let mut out = String::new();
    for (k, v) in values.into_iter().enumerate() {
        writeln!(out, "{} {v}", start + k as u64).expect("write to string");
    }
    out
}

pub fn render(terms: Terms, format: Format) -> String {
    match format {
        Format::Plain => {
            let line: Vec<String> = terms.points.iter().map(|(_, v)| v.to_string()).collect();
            format!("{}\n", line.join(" "))
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in &terms.points {
                writeln!(out, "{n},{v}").expect("write to string");
            }
            out
        }
        Format::Bfile => bfile(terms.points.into_iter().map(|(_, v)| v), 0),
        Format::Json => {
            let mut obj = terms.meta;
            obj.insert(
                "n".into(),
                terms
                    .points
                    .iter()
                    .map(|(n, _)| Value::String(n.to_string()))
                    .collect(),
            );
            obj.insert(
                "values".into(),
                terms
                    .points
                    .iter()
                    .map(|(_, v)| Value::String(v.to_string()))
                    .collect(),
            );
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
            s.push('\n');
            s
        }
    }
}

//! Output encodings for command documents.

use std::fmt::Write;

use serde_json::{Map, Value};

/// Run-length form of a sorted set, e.g. `181-191,200-210,219`.
pub fn intervals(values: &[u64]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < values.len() {
        let start = values[i];
        let mut end = start;
        while i + 1 < values.len() && values[i + 1] == end + 1 {
            end += 1;
            i += 1;
        }
        if !out.is_empty() {
            out.push(',');
        }
        if start == end {
            let _ = write!(out, "{start}");
        } else {
            let _ = write!(out, "{start}-{end}");
        }
        i += 1;
    }
    out
}

/// Sorted-key JSON with a trailing newline.
pub fn json(doc: &Value) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("serializable");
    out.push('\n');
    out
}

fn scalar(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn row_table(rows: &[Value]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut columns: Vec<String> = Vec::new();
    let flat: Vec<Map<String, Value>> = rows
        .iter()
        .map(|row| {
            let mut pairs = Vec::new();
            flatten("", row, &mut pairs);
            pairs
                .into_iter()
                .map(|(k, v)| (k, Value::String(v)))
                .collect()
        })
        .collect();
    for row in &flat {
        for key in row.keys() {
            if !columns.contains(key) {
                columns.push(key.clone());
            }
        }
    }
    // p first, the rest in sorted order
    columns.sort_by(|a, b| (a != "p", a).cmp(&(b != "p", b)));
    let cells = flat
        .iter()
        .map(|row| {
            columns
                .iter()
                .map(|c| row.get(c).map(scalar).unwrap_or_default())
                .collect()
        })
        .collect();
    (columns, cells)
}

fn rows_of(doc: &Value) -> Option<&Vec<Value>> {
    doc.get("rows").and_then(Value::as_array)
}

/// Row documents become a header plus one line per row; anything else
/// becomes `key<TAB>value` lines with dotted keys.
pub fn tsv(doc: &Value) -> String {
    let mut out = String::new();
    if let Some(rows) = rows_of(doc) {
        let (columns, cells) = row_table(rows);
        let _ = writeln!(out, "{}", columns.join("\t"));
        for row in cells {
            let _ = writeln!(out, "{}", row.join("\t"));
        }
    } else {
        let mut pairs = Vec::new();
        flatten("", doc, &mut pairs);
        for (k, v) in pairs {
            let _ = writeln!(out, "{k}\t{v}");
        }
    }
    out
}

/// Aligned columns for row documents, aligned `key  value` lines otherwise.
pub fn pretty(doc: &Value) -> String {
    let mut out = String::new();
    let Some(rows) = rows_of(doc) else {
        let mut pairs = Vec::new();
        flatten("", doc, &mut pairs);
        let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in pairs {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        return out;
    };
    if let Some(map) = doc.as_object() {
        for (k, v) in map.iter().filter(|(k, _)| k.as_str() != "rows") {
            let _ = writeln!(out, "{k}: {}", scalar(v));
        }
    }
    let (columns, cells) = row_table(rows);
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cols: &[String]| {
        cols.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let _ = writeln!(out, "{}", line(&columns));
    for row in &cells {
        let _ = writeln!(out, "{}", line(row));
    }
    out
}

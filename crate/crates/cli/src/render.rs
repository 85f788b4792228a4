use std::fmt::Write as _;

use chromatic_core::BigInt;

pub fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `n,k,value` lines for each labeled row, `k` ascending.
pub fn csv_triples<'a>(rows: impl IntoIterator<Item = (usize, &'a [BigInt])>) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in rows {
        for (k, v) in row.iter().enumerate() {
            writeln!(out, "{n},{k},{v}").expect("writing to a String");
        }
    }
    out
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn json(value: &serde_json::Value) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Zero-extends `v` to `len` entries.
pub fn padded(v: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut v = v.to_vec();
    if v.len() < len {
        v.resize(len, BigInt::from(0));
    }
    v
}

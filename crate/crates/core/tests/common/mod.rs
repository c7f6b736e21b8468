//! Shared helpers for the integration tests.
#![allow(dead_code)]

use latin_terwilliger::cli;
use latin_terwilliger::quasigroup::LatinSquare;
use regex::Regex;
use serde_json::Value;

/// Cayley table as a plain grid, for the oracles below.
pub fn grid(square: &LatinSquare) -> Vec<Vec<usize>> {
    square.rows().map(<[usize]>::to_vec).collect()
}

/// π from its definition, on the raw grid: from column `c`, the cell in
/// the base row; the cell in the base column with that entry; the cell in
/// that row holding the base entry. Returns images indexed by column,
/// with 0 at the base column.
pub fn pi_oracle(g: &[Vec<usize>], r: usize, c: usize) -> Vec<usize> {
    let n = g.len();
    let e = g[r - 1][c - 1];
    let mut images = vec![0; n + 1];
    for col in (1..=n).filter(|&x| x != c) {
        let x_entry = g[r - 1][col - 1];
        let y_row = (1..=n).find(|&row| g[row - 1][c - 1] == x_entry).unwrap();
        let z_col = (1..=n).find(|&k| g[y_row - 1][k - 1] == e).unwrap();
        images[col] = z_col;
    }
    images
}

/// Sorted cycle lengths of a permutation given as an image table.
pub fn cycle_lengths(images: &[usize], skip: usize) -> Vec<usize> {
    let n = images.len() - 1;
    let mut seen = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in (1..=n).filter(|&x| x != skip) {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// Right Bol by brute force: ((c a) b) a = c ((a b) a).
pub fn right_bol_oracle(g: &[Vec<usize>]) -> bool {
    let n = g.len();
    let m = |a: usize, b: usize| g[a - 1][b - 1];
    (1..=n).all(|a| (1..=n).all(|b| (1..=n).all(|c| m(m(m(c, a), b), a) == m(c, m(m(a, b), a)))))
}

pub fn left_bol_oracle(g: &[Vec<usize>]) -> bool {
    let n = g.len();
    let m = |a: usize, b: usize| g[a - 1][b - 1];
    (1..=n).all(|a| (1..=n).all(|b| (1..=n).all(|c| m(a, m(b, m(a, c))) == m(m(a, m(b, a)), c))))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line in-process.
pub fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["latin-tw"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Validates `value` against the subset of JSON Schema (draft 2020-12)
/// that the published report schema uses: `type`, `const`, `enum`,
/// `properties`, `required`, `items`, `minItems`, `maxItems`, `minimum`,
/// `pattern`, `anyOf` and local `$ref`s into `$defs`. Unknown keywords are
/// rejected so the schema cannot silently outgrow this checker.
pub fn validate(schema_root: &Value, value: &Value) -> Result<(), String> {
    check(schema_root, schema_root, value, "$")
}

const KNOWN: &[&str] = &[
    "$schema", "$id", "$defs", "title", "type", "const", "enum", "properties", "required",
    "items", "minItems", "maxItems", "minimum", "pattern", "anyOf", "$ref",
];

fn type_matches(name: &str, v: &Value) -> bool {
    match name {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        other => panic!("unknown type {other}"),
    }
}

fn check(root: &Value, schema: &Value, v: &Value, path: &str) -> Result<(), String> {
    let s = schema.as_object().ok_or_else(|| format!("{path}: schema is not an object"))?;
    for key in s.keys() {
        if !KNOWN.contains(&key.as_str()) {
            return Err(format!("{path}: unsupported keyword {key}"));
        }
    }
    if let Some(r) = s.get("$ref") {
        let name = r
            .as_str()
            .and_then(|r| r.strip_prefix("#/$defs/"))
            .ok_or_else(|| format!("{path}: unsupported $ref {r}"))?;
        let target = root["$defs"].get(name).ok_or_else(|| format!("{path}: missing $def {name}"))?;
        check(root, target, v, path)?;
    }
    if let Some(t) = s.get("type") {
        let ok = match t {
            Value::String(name) => type_matches(name, v),
            Value::Array(names) => names.iter().any(|n| type_matches(n.as_str().unwrap(), v)),
            _ => return Err(format!("{path}: bad type keyword")),
        };
        if !ok {
            return Err(format!("{path}: expected type {t}, got {v}"));
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            return Err(format!("{path}: expected const {c}, got {v}"));
        }
    }
    if let Some(Value::Array(options)) = s.get("enum") {
        if !options.contains(v) {
            return Err(format!("{path}: {v} not in enum"));
        }
    }
    if let Some(Value::Array(branches)) = s.get("anyOf") {
        if !branches.iter().any(|b| check(root, b, v, path).is_ok()) {
            return Err(format!("{path}: no anyOf branch matches {v}"));
        }
    }
    if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_f64), v.as_f64()) {
        if x < min {
            return Err(format!("{path}: {x} < minimum {min}"));
        }
    }
    if let (Some(Value::String(p)), Some(text)) = (s.get("pattern"), v.as_str()) {
        if !Regex::new(p).unwrap().is_match(text) {
            return Err(format!("{path}: {text:?} does not match {p}"));
        }
    }
    if let Some(obj) = v.as_object() {
        if let Some(Value::Array(required)) = s.get("required") {
            for r in required {
                let r = r.as_str().unwrap();
                if !obj.contains_key(r) {
                    return Err(format!("{path}: missing required {r}"));
                }
            }
        }
        if let Some(Value::Object(props)) = s.get("properties") {
            for (k, sub) in props {
                if let Some(child) = obj.get(k) {
                    check(root, sub, child, &format!("{path}.{k}"))?;
                }
            }
        }
    }
    if let Some(arr) = v.as_array() {
        if let Some(n) = s.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < n {
                return Err(format!("{path}: fewer than {n} items"));
            }
        }
        if let Some(n) = s.get("maxItems").and_then(Value::as_u64) {
            if (arr.len() as u64) > n {
                return Err(format!("{path}: more than {n} items"));
            }
        }
        if let Some(items) = s.get("items") {
            for (i, x) in arr.iter().enumerate() {
                check(root, items, x, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

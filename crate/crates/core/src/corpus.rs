//! Named squares shipped with the crate.
//!
//! `fig1`, `fig2` and `fig3` are small reference squares (a 3×3 cyclic square,
//! a right Bol loop of order 8 that is not Moufang, and a loop of order 7 that
//! lacks the right inverse property). `z4`..`z8` are the cyclic groups
//! and `z2^3` is the elementary abelian group of order 8.

use crate::error::{Error, Result};
use crate::quasigroup::LatinSquare;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Canonical text form, one row per line.
    pub text: String,
    /// Cells `(row, column)` singled out for special attention, if any.
    pub boxed: Vec<(usize, usize)>,
}

const FIG1: &str = include_str!("../assets/fig1.txt");
const FIG2: &str = include_str!("../assets/fig2.txt");
const FIG3: &str = include_str!("../assets/fig3.txt");

/// In `fig3`, the base points whose permutation has no fixed point.
const FIG3_BOXED: [(usize, usize); 7] = [(1, 5), (2, 7), (3, 1), (4, 6), (5, 3), (6, 4), (7, 2)];

const NAMES: [&str; 9] = ["fig1", "fig2", "fig3", "z4", "z5", "z6", "z7", "z8", "z2^3"];

pub fn names() -> &'static [&'static str] {
    &NAMES
}

fn table(n: usize, op: impl Fn(usize, usize) -> usize) -> String {
    let mut out = String::new();
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| (op(r, c) + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn get(name: &str) -> Result<CorpusEntry> {
    let (name, description, text, boxed) = match name {
        "fig1" => ("fig1", "3x3 cyclic square", FIG1.to_string(), vec![]),
        "fig2" => ("fig2", "right Bol loop of order 8, not Moufang", FIG2.to_string(), vec![]),
        "fig3" => ("fig3", "loop of order 7 without right inverse property", FIG3.to_string(), FIG3_BOXED.to_vec()),
        "z4" => ("z4", "cyclic group of order 4", table(4, |r, c| (r + c) % 4), vec![]),
        "z5" => ("z5", "cyclic group of order 5", table(5, |r, c| (r + c) % 5), vec![]),
        "z6" => ("z6", "cyclic group of order 6", table(6, |r, c| (r + c) % 6), vec![]),
        "z7" => ("z7", "cyclic group of order 7", table(7, |r, c| (r + c) % 7), vec![]),
        "z8" => ("z8", "cyclic group of order 8", table(8, |r, c| (r + c) % 8), vec![]),
        "z2^3" => ("z2^3", "elementary abelian group of order 8", table(8, |r, c| r ^ c), vec![]),
        other => return Err(Error::UnknownCorpusName(other.to_string())),
    };
    let text = LatinSquare::parse(&text)
        .expect("corpus squares are valid")
        .to_text();
    Ok(CorpusEntry { name, description, text, boxed })
}

pub fn square(name: &str) -> Result<LatinSquare> {
    LatinSquare::parse(&get(name)?.text)
}

/// Every corpus square, in listing order.
pub fn squares() -> Vec<(&'static str, LatinSquare)> {
    NAMES
        .iter()
        .map(|&name| (name, square(name).expect("corpus squares are valid")))
        .collect()
}

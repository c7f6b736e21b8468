//! Latin squares read as quasigroup Cayley tables.
//!
//! Symbols are always `1..=n`, and element `a` owns row `a` and column `a`,
//! so the entry at `(a, b)` is the product `a·b`. Squares written with
//! non-numeric tokens are renumbered in order of first appearance; the
//! original tokens are kept for display only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symbol of a Latin square, in `1..=n`.
pub type Symbol = usize;

/// Which operand is unknown in a division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Solve `a·c = b` for `c`.
    Left,
    /// Solve `d·a = b` for `d`.
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<Symbol>,
    // left_div[a][b] = c with a·c = b, right_div[a][b] = d with d·a = b
    left_div: Vec<Symbol>,
    right_div: Vec<Symbol>,
    labels: Option<Vec<String>>,
}

impl LatinSquare {
    /// Builds a square from rows of symbols in `1..=n`.
    pub fn from_rows<R: AsRef<[Symbol]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyInput);
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::RaggedGrid {
                    row: i + 1,
                    expected: order,
                    found: row.len(),
                });
            }
            for &s in row {
                if s == 0 || s > order {
                    return Err(Error::SymbolOutOfRange {
                        symbol: s.to_string(),
                        order,
                    });
                }
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(order, cells, None)
    }

    fn from_cells(order: usize, cells: Vec<Symbol>, labels: Option<Vec<String>>) -> Result<Self> {
        let mut seen = vec![0usize; order + 1];
        for r in 0..order {
            for c in 0..order {
                let s = cells[r * order + c];
                if seen[s] == r + 1 {
                    return Err(Error::RowRepeat { row: r + 1, symbol: s });
                }
                seen[s] = r + 1;
            }
        }
        seen.iter_mut().for_each(|v| *v = 0);
        for c in 0..order {
            for r in 0..order {
                let s = cells[r * order + c];
                if seen[s] == c + 1 {
                    return Err(Error::ColumnRepeat { column: c + 1, symbol: s });
                }
                seen[s] = c + 1;
            }
        }

        let mut left_div = vec![0; order * order];
        let mut right_div = vec![0; order * order];
        for a in 1..=order {
            for b in 1..=order {
                let ab = cells[(a - 1) * order + (b - 1)];
                left_div[(a - 1) * order + (ab - 1)] = b;
                right_div[(b - 1) * order + (ab - 1)] = a;
            }
        }
        Ok(LatinSquare {
            order,
            cells,
            left_div,
            right_div,
            labels,
        })
    }

    /// Parses the plain-text table format: optional `#` comment lines, then
    /// `n` rows of `n` whitespace-separated tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'))
            .map(|line| line.split_whitespace().collect())
            .collect();
        let Some(first) = rows.first() else {
            return Err(Error::EmptyInput);
        };
        let order = first.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::RaggedGrid {
                    row: i + 1,
                    expected: order,
                    found: row.len(),
                });
            }
        }
        if rows.len() != order {
            return Err(Error::NotSquare {
                rows: rows.len(),
                columns: order,
            });
        }

        let numeric = rows
            .iter()
            .flatten()
            .all(|tok| tok.parse::<u64>().is_ok());
        let mut cells = Vec::with_capacity(order * order);
        let mut labels = None;
        if numeric {
            for tok in rows.iter().flatten() {
                let value: u64 = tok.parse().expect("checked numeric");
                if value == 0 || value > order as u64 {
                    return Err(Error::SymbolOutOfRange {
                        symbol: tok.to_string(),
                        order,
                    });
                }
                cells.push(value as Symbol);
            }
        } else {
            let mut names: Vec<String> = Vec::new();
            for tok in rows.iter().flatten() {
                let idx = match names.iter().position(|n| n == tok) {
                    Some(i) => i,
                    None => {
                        if names.len() == order {
                            return Err(Error::SymbolOutOfRange {
                                symbol: tok.to_string(),
                                order,
                            });
                        }
                        names.push(tok.to_string());
                        names.len() - 1
                    }
                };
                cells.push(idx + 1);
            }
            labels = Some(names);
        }
        Self::from_cells(order, cells, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a symbol: its original token, or the number itself.
    pub fn label(&self, s: Symbol) -> String {
        match &self.labels {
            Some(names) => names[s - 1].clone(),
            None => s.to_string(),
        }
    }

    pub fn contains_symbol(&self, s: Symbol) -> bool {
        (1..=self.order).contains(&s)
    }

    fn check(&self, s: Symbol) -> Result<()> {
        if self.contains_symbol(s) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange {
                symbol: s.to_string(),
                order: self.order,
            })
        }
    }

    /// The entry in row `a`, column `b`. Panics if either is out of range.
    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.cells[(a - 1) * self.order + (b - 1)]
    }

    /// The unique `c` with `a·c = b`. Panics if out of range.
    #[inline]
    pub fn left_div(&self, a: Symbol, b: Symbol) -> Symbol {
        self.left_div[(a - 1) * self.order + (b - 1)]
    }

    /// The unique `d` with `d·a = b`. Panics if out of range.
    #[inline]
    pub fn right_div(&self, a: Symbol, b: Symbol) -> Symbol {
        self.right_div[(a - 1) * self.order + (b - 1)]
    }

    pub fn product(&self, a: Symbol, b: Symbol) -> Result<Symbol> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn divide(&self, side: Side, a: Symbol, b: Symbol) -> Result<Symbol> {
        self.check(a)?;
        self.check(b)?;
        Ok(match side {
            Side::Left => self.left_div(a, b),
            Side::Right => self.right_div(a, b),
        })
    }

    pub fn row(&self, a: Symbol) -> &[Symbol] {
        &self.cells[(a - 1) * self.order..a * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Symbol]> + '_ {
        self.cells.chunks(self.order)
    }

    pub fn symbols(&self) -> std::ops::RangeInclusive<Symbol> {
        1..=self.order
    }

    /// Canonical text rendering: one row per line, single spaces, trailing
    /// newline. Parsing the result gives back an equal square.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|&s| self.label(s)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Identity element, if row `e` and column `e` are both the identity map.
    pub fn identity(&self) -> Option<Symbol> {
        self.symbols().find(|&e| {
            self.symbols()
                .all(|a| self.mul(e, a) == a && self.mul(a, e) == a)
        })
    }
}

impl FromStr for LatinSquare {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare(n={}, ", self.order)?;
        let rows: Vec<String> = self
            .rows()
            .map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}])", rows.join(" / "))
    }
}

/// Identity, one-sided inverses and two-sided inverses of a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopStructure {
    identity: Symbol,
    left_inverse: Vec<Symbol>,
    right_inverse: Vec<Symbol>,
}

impl LoopStructure {
    pub fn identity(&self) -> Symbol {
        self.identity
    }

    /// `c^λ`, the element with `c^λ·c = ι`.
    pub fn left_inverse(&self, c: Symbol) -> Symbol {
        self.left_inverse[c - 1]
    }

    /// `c^ρ`, the element with `c·c^ρ = ι`.
    pub fn right_inverse(&self, c: Symbol) -> Symbol {
        self.right_inverse[c - 1]
    }

    /// `c⁻¹` when the left and right inverses agree.
    pub fn inverse(&self, c: Symbol) -> Option<Symbol> {
        let l = self.left_inverse(c);
        (l == self.right_inverse(c)).then_some(l)
    }

    pub fn order(&self) -> usize {
        self.left_inverse.len()
    }

    pub fn all_two_sided(&self) -> bool {
        (1..=self.order()).all(|c| self.inverse(c).is_some())
    }

    /// First element lacking a two-sided inverse.
    pub fn first_one_sided(&self) -> Option<Symbol> {
        (1..=self.order()).find(|&c| self.inverse(c).is_none())
    }

    /// `s`: elements equal to their own two-sided inverse, identity included.
    pub fn self_inverse_count(&self) -> usize {
        (1..=self.order())
            .filter(|&c| self.inverse(c) == Some(c))
            .count()
    }

    /// The full two-sided inverse map, or `None` if some element lacks one.
    pub fn inverses(&self) -> Option<Vec<Symbol>> {
        (1..=self.order()).map(|c| self.inverse(c)).collect()
    }
}

pub fn loop_structure(square: &LatinSquare) -> Option<LoopStructure> {
    let identity = square.identity()?;
    let left_inverse = square
        .symbols()
        .map(|c| square.right_div(c, identity))
        .collect();
    let right_inverse = square
        .symbols()
        .map(|c| square.left_div(c, identity))
        .collect();
    Some(LoopStructure {
        identity,
        left_inverse,
        right_inverse,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Loop,
    Group,
    RightBol,
    LeftBol,
    Moufang,
    Rip,
    Lip,
    Aaip,
    Commutative,
}

/// Why a property flag came out false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    NoIdentity,
    NoTwoSidedInverse { element: Symbol },
    /// The identity fails at these elements, named as in the identity.
    Counterexample { elements: Vec<Symbol> },
    /// A component property is false.
    Requires { property: Property },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub property: Property,
    pub reason: Reason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub is_quasigroup: bool,
    pub is_loop: bool,
    pub is_group: bool,
    pub is_right_bol: bool,
    pub is_left_bol: bool,
    pub is_moufang: bool,
    pub has_rip: bool,
    pub has_lip: bool,
    pub has_aaip: bool,
    pub is_commutative: bool,
    pub failures: Vec<Failure>,
}

impl PropertyRecord {
    pub fn reason(&self, property: Property) -> Option<&Reason> {
        self.failures
            .iter()
            .find(|f| f.property == property)
            .map(|f| &f.reason)
    }
}

fn find_pair(n: usize, mut bad: impl FnMut(Symbol, Symbol) -> bool) -> Option<Vec<Symbol>> {
    for a in 1..=n {
        for b in 1..=n {
            if bad(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn find_triple(
    n: usize,
    mut bad: impl FnMut(Symbol, Symbol, Symbol) -> bool,
) -> Option<Vec<Symbol>> {
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// `(a, b, c)` violating the right Bol identity `((ca)b)a = c((ab)a)`.
pub fn right_bol_counterexample(square: &LatinSquare) -> Option<Vec<Symbol>> {
    let m = |x, y| square.mul(x, y);
    find_triple(square.order(), |a, b, c| {
        m(m(m(c, a), b), a) != m(c, m(m(a, b), a))
    })
}

/// `(a, b, c)` violating the left Bol identity `a(b(ac)) = (a(ba))c`.
pub fn left_bol_counterexample(square: &LatinSquare) -> Option<Vec<Symbol>> {
    let m = |x, y| square.mul(x, y);
    find_triple(square.order(), |a, b, c| {
        m(a, m(b, m(a, c))) != m(m(a, m(b, a)), c)
    })
}

/// `(a, b, c)` violating `a(bc) = (ab)c`.
pub fn associativity_counterexample(square: &LatinSquare) -> Option<Vec<Symbol>> {
    let m = |x, y| square.mul(x, y);
    find_triple(square.order(), |a, b, c| m(a, m(b, c)) != m(m(a, b), c))
}

/// Decides every loop-theoretic flag by exhaustive search over all pairs or
/// triples. Flags that need an identity or two-sided inverses are reported
/// false with a reason rather than as an error.
pub fn loop_properties(square: &LatinSquare) -> PropertyRecord {
    let n = square.order();
    let m = |x, y| square.mul(x, y);
    let mut failures = Vec::new();
    let mut fail = |property, reason| failures.push(Failure { property, reason });

    let is_commutative = match find_pair(n, |a, b| m(a, b) != m(b, a)) {
        None => true,
        Some(elements) => {
            fail(Property::Commutative, Reason::Counterexample { elements });
            false
        }
    };

    let structure = loop_structure(square);
    let Some(lp) = structure else {
        for property in [
            Property::Loop,
            Property::Group,
            Property::RightBol,
            Property::LeftBol,
            Property::Moufang,
            Property::Rip,
            Property::Lip,
            Property::Aaip,
        ] {
            fail(property, Reason::NoIdentity);
        }
        return PropertyRecord {
            is_quasigroup: true,
            is_loop: false,
            is_group: false,
            is_right_bol: false,
            is_left_bol: false,
            is_moufang: false,
            has_rip: false,
            has_lip: false,
            has_aaip: false,
            is_commutative,
            failures,
        };
    };

    let verdict = |property, found: Option<Vec<Symbol>>, fail: &mut dyn FnMut(Property, Reason)| {
        match found {
            None => true,
            Some(elements) => {
                fail(property, Reason::Counterexample { elements });
                false
            }
        }
    };

    let is_right_bol = verdict(Property::RightBol, right_bol_counterexample(square), &mut fail);
    let is_left_bol = verdict(Property::LeftBol, left_bol_counterexample(square), &mut fail);
    let is_group = verdict(Property::Group, associativity_counterexample(square), &mut fail);
    let is_moufang = is_right_bol && is_left_bol;
    if !is_moufang {
        let missing = if is_right_bol {
            Property::LeftBol
        } else {
            Property::RightBol
        };
        fail(Property::Moufang, Reason::Requires { property: missing });
    }

    let (has_rip, has_lip, has_aaip) = match lp.inverses() {
        Some(inv) => {
            let inv = |x: Symbol| inv[x - 1];
            let rip = verdict(
                Property::Rip,
                find_pair(n, |a, b| m(m(a, b), inv(b)) != a),
                &mut fail,
            );
            let lip = verdict(
                Property::Lip,
                find_pair(n, |a, b| m(inv(b), m(b, a)) != a),
                &mut fail,
            );
            let aaip = verdict(
                Property::Aaip,
                find_pair(n, |a, b| inv(m(a, b)) != m(inv(b), inv(a))),
                &mut fail,
            );
            (rip, lip, aaip)
        }
        None => {
            let element = lp.first_one_sided().expect("some inverse is one-sided");
            for property in [Property::Rip, Property::Lip, Property::Aaip] {
                fail(property, Reason::NoTwoSidedInverse { element });
            }
            (false, false, false)
        }
    };

    PropertyRecord {
        is_quasigroup: true,
        is_loop: true,
        is_group,
        is_right_bol,
        is_left_bol,
        is_moufang,
        has_rip,
        has_lip,
        has_aaip,
        is_commutative,
        failures,
    }
}

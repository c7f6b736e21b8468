use std::fmt;

use crate::error::{Error, Result};
use crate::quasigroup::{LatinSquare, Symbol};
use crate::scheme::{orthogonal_array, Point};

use super::CycleStructure;

/// A permutation of `{1..n} − {c_p}`, the columns other than the base
/// point's column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubPermutation {
    excluded: Symbol,
    // images[c - 1]; the excluded slot maps to itself and is never exposed
    images: Vec<Symbol>,
}

impl SubPermutation {
    /// Builds from an image function over the domain. Panics if `f` is not
    /// a bijection of the domain.
    pub fn from_fn(order: usize, excluded: Symbol, f: impl Fn(Symbol) -> Symbol) -> Self {
        let mut images = vec![0; order];
        let mut hit = vec![false; order + 1];
        for c in (1..=order).filter(|&c| c != excluded) {
            let img = f(c);
            assert!(
                img != excluded && (1..=order).contains(&img) && !hit[img],
                "not a bijection of the domain at {c} -> {img}"
            );
            hit[img] = true;
            images[c - 1] = img;
        }
        if (1..=order).contains(&excluded) {
            images[excluded - 1] = excluded;
        }
        SubPermutation { excluded, images }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn excluded(&self) -> Symbol {
        self.excluded
    }

    pub fn domain(&self) -> impl Iterator<Item = Symbol> + '_ {
        (1..=self.order()).filter(move |&c| c != self.excluded)
    }

    /// `π(c)`, or `None` off the domain.
    pub fn apply(&self, c: Symbol) -> Option<Symbol> {
        (c != self.excluded && (1..=self.order()).contains(&c)).then(|| self.images[c - 1])
    }

    #[inline]
    fn at(&self, c: Symbol) -> Symbol {
        self.images[c - 1]
    }

    /// Disjoint cycles including 1-cycles, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<Symbol>> {
        let mut seen = vec![false; self.order() + 1];
        let mut cycles = Vec::new();
        for start in self.domain() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut c = self.at(start);
            while c != start {
                seen[c] = true;
                cycle.push(c);
                c = self.at(c);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        cycle_structure(self)
    }

    pub fn fixed_points(&self) -> Vec<Symbol> {
        self.domain().filter(|&c| self.at(c) == c).collect()
    }

    pub fn is_involution(&self) -> bool {
        self.domain().all(|c| self.at(self.at(c)) == c)
    }

    pub fn is_identity(&self) -> bool {
        self.domain().all(|c| self.at(c) == c)
    }

    /// `π^k` on the same domain.
    pub fn power(&self, k: usize) -> SubPermutation {
        SubPermutation::from_fn(self.order(), self.excluded, |c| {
            (0..k).fold(c, |x, _| self.at(x))
        })
    }
}

impl fmt::Display for SubPermutation {
    /// Cycle notation without 1-cycles; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let words: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", words.join(" "))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubPermutation[{self} on 1..={} minus {}]", self.order(), self.excluded)
    }
}

pub fn cycle_structure(perm: &SubPermutation) -> CycleStructure {
    CycleStructure::from_lengths(perm.cycles().iter().map(Vec::len))
}

/// `π_{L,p}` by the auxiliary-point walk over the orthogonal array: from
/// column `c`, take `x` in the base row, `y` in the base column sharing
/// `x`'s entry, and `z` in `y`'s row carrying the base entry; `π(c)` is the
/// column of `z`. Points are located by scanning `X(L)`, not by division.
pub fn pi_of(square: &LatinSquare, base: &Point) -> Result<SubPermutation> {
    square.require_point(base)?;
    let points = orthogonal_array(square);
    let find = |pred: &dyn Fn(&Point) -> bool| -> Point {
        *points.iter().find(|q| pred(q)).expect("orthogonal array is complete")
    };
    Ok(SubPermutation::from_fn(square.order(), base.column, |c| {
        let x = find(&|q| q.row == base.row && q.column == c);
        let y = find(&|q| q.column == base.column && q.entry == x.entry);
        let z = find(&|q| q.row == y.row && q.entry == base.entry);
        z.column
    }))
}

/// `π_{L,p}` by quasigroup division: `r` solves `r·c_p = r_p·c`, then
/// `π(c)` solves `r·π(c) = r_p·c_p`.
pub fn pi_via_division(square: &LatinSquare, base: &Point) -> Result<SubPermutation> {
    square.require_point(base)?;
    Ok(SubPermutation::from_fn(square.order(), base.column, |c| {
        let r = square.right_div(base.column, square.mul(base.row, c));
        square.left_div(r, base.entry)
    }))
}

/// Checks `c` is a non-base column of the square.
pub(crate) fn require_domain(square: &LatinSquare, base: &Point, c: Symbol) -> Result<()> {
    if !square.contains_symbol(c) {
        return Err(Error::SymbolOutOfRange {
            symbol: c.to_string(),
            order: square.order(),
        });
    }
    if c == base.column {
        return Err(Error::BaseColumn(c));
    }
    Ok(())
}

//! The four-class association scheme carried by a Latin square.
//!
//! Vertices are the `n²` points `(row, column, entry)` of the orthogonal
//! array. Two points are in relation 1, 2 or 3 when they agree only in the
//! row, only in the column or only in the entry, and in relation 4 when
//! they agree nowhere. Relation matrices are never materialised here; see
//! [`crate::oracle`] for the dense versions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasigroup::{LatinSquare, Symbol};

/// A point of the orthogonal array `X(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub row: Symbol,
    pub column: Symbol,
    pub entry: Symbol,
}

impl Point {
    pub const fn new(row: Symbol, column: Symbol, entry: Symbol) -> Self {
        Point { row, column, entry }
    }

    pub fn coords(&self) -> [Symbol; 3] {
        [self.row, self.column, self.entry]
    }

    pub fn from_coords([row, column, entry]: [Symbol; 3]) -> Self {
        Point { row, column, entry }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.column, self.entry)
    }
}

impl LatinSquare {
    /// The point in row `r`, column `c`.
    pub fn point(&self, r: Symbol, c: Symbol) -> Result<Point> {
        let entry = self.product(r, c)?;
        Ok(Point::new(r, c, entry))
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.contains_symbol(p.row)
            && self.contains_symbol(p.column)
            && self.mul(p.row, p.column) == p.entry
    }

    pub(crate) fn require_point(&self, p: &Point) -> Result<()> {
        if self.contains_point(p) {
            Ok(())
        } else {
            Err(Error::PointNotInArray(*p))
        }
    }

    /// Position of a point in row-major orthogonal-array order.
    #[inline]
    pub fn point_index(&self, p: &Point) -> usize {
        (p.row - 1) * self.order() + (p.column - 1)
    }
}

/// Class index of a pair of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal = 0,
    Row = 1,
    Column = 2,
    Entry = 3,
    Disjoint = 4,
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::Equal,
        Relation::Row,
        Relation::Column,
        Relation::Entry,
        Relation::Disjoint,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    /// Valency `k_i` of this class in a scheme of order `n`.
    pub fn valency(self, n: usize) -> usize {
        match self {
            Relation::Equal => 1,
            Relation::Row | Relation::Column | Relation::Entry => n.saturating_sub(1),
            Relation::Disjoint => n.saturating_sub(1) * n.saturating_sub(2),
        }
    }
}

/// All `n²` points in row-major order.
pub fn orthogonal_array(square: &LatinSquare) -> Vec<Point> {
    let n = square.order();
    let mut points = Vec::with_capacity(n * n);
    for r in 1..=n {
        for c in 1..=n {
            points.push(Point::new(r, c, square.mul(r, c)));
        }
    }
    points
}

/// Classifies a pair of points. Agreement in exactly two components cannot
/// happen in a valid orthogonal array and is reported as an error.
pub fn relation_of(x: &Point, y: &Point) -> Result<Relation> {
    let agree = [x.row == y.row, x.column == y.column, x.entry == y.entry];
    match agree {
        [true, true, true] => Ok(Relation::Equal),
        [true, false, false] => Ok(Relation::Row),
        [false, true, false] => Ok(Relation::Column),
        [false, false, true] => Ok(Relation::Entry),
        [false, false, false] => Ok(Relation::Disjoint),
        _ => Err(Error::TwoComponentAgreement(*x, *y)),
    }
}

/// Row-major `n² × n²` table of relation indices.
pub(crate) fn relation_table(square: &LatinSquare) -> Result<Vec<u8>> {
    let points = orthogonal_array(square);
    let mut table = Vec::with_capacity(points.len() * points.len());
    for x in &points {
        for y in &points {
            table.push(relation_of(x, y)? as u8);
        }
    }
    Ok(table)
}

/// Intersection numbers `p[h][i][j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTensor {
    order: usize,
    p: [[[usize; 5]; 5]; 5],
}

impl IntersectionTensor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> usize {
        self.p[h][i][j]
    }

    pub fn as_array(&self) -> &[[[usize; 5]; 5]; 5] {
        &self.p
    }

    /// Classes with no pairs at this order (class 4 when `n = 2`).
    pub fn is_class_empty(&self, h: usize) -> bool {
        Relation::from_index(h).is_none_or(|r| r.valency(self.order) == 0)
    }
}

/// Computes `p^h_{ij}` from one representative pair per class and then
/// checks that every other pair of the same class gives the same counts.
pub fn intersection_numbers(square: &LatinSquare) -> Result<IntersectionTensor> {
    let n = square.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, minimum: 2 });
    }
    let size = n * n;
    let rel = relation_table(square)?;
    let at = |x: usize, y: usize| rel[x * size + y] as usize;

    let counts = |x: usize, y: usize| {
        let mut c = [[0usize; 5]; 5];
        for z in 0..size {
            c[at(x, z)][at(z, y)] += 1;
        }
        c
    };

    let mut p = [[[0usize; 5]; 5]; 5];
    let mut have = [false; 5];
    for x in 0..size {
        for y in 0..size {
            let h = at(x, y);
            if !have[h] {
                p[h] = counts(x, y);
                have[h] = true;
            }
        }
    }

    for x in 0..size {
        for y in 0..size {
            let h = at(x, y);
            let c = counts(x, y);
            if c != p[h] {
                let (i, j) = (0..5)
                    .flat_map(|i| (0..5).map(move |j| (i, j)))
                    .find(|&(i, j)| c[i][j] != p[h][i][j])
                    .expect("tables differ somewhere");
                return Err(Error::NotWellDefined { h, i, j });
            }
        }
    }
    Ok(IntersectionTensor { order: n, p })
}

/// Checks that squares of equal order share one intersection tensor.
/// Returns the first pair of indices (into `squares`) that disagree.
pub fn order_invariance_violation(squares: &[&LatinSquare]) -> Result<Option<(usize, usize)>> {
    let tensors = squares
        .iter()
        .map(|sq| intersection_numbers(sq))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..tensors.len() {
        for j in i + 1..tensors.len() {
            if tensors[i].order == tensors[j].order && tensors[i] != tensors[j] {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// The five subconstituents of `X(L)` with respect to base point `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: [Vec<Point>; 5],
}

impl Partition {
    pub fn cell(&self, relation: Relation) -> &[Point] {
        &self.cells[relation.index()]
    }

    pub fn sizes(&self) -> [usize; 5] {
        [0, 1, 2, 3, 4].map(|i| self.cells[i].len())
    }
}

pub fn subconstituent_partition(square: &LatinSquare, base: &Point) -> Result<Partition> {
    square.require_point(base)?;
    let mut cells: [Vec<Point>; 5] = Default::default();
    for x in orthogonal_array(square) {
        cells[relation_of(base, &x)?.index()].push(x);
    }
    Ok(Partition { cells })
}

//! Isotopies and conjugacies, the two moves that generate main-class
//! equivalence of Latin squares.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quasigroup::LatinSquare;
use crate::scheme::{orthogonal_array, Point};

/// Independent permutations of rows, columns and entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopy {
    pub rows: Permutation,
    pub columns: Permutation,
    pub entries: Permutation,
}

impl Isotopy {
    pub fn new(rows: Permutation, columns: Permutation, entries: Permutation) -> Result<Self> {
        let n = rows.degree();
        if columns.degree() != n || entries.degree() != n {
            return Err(Error::InvalidPermutation(
                "isotopy components have different degrees".into(),
            ));
        }
        Ok(Isotopy {
            rows,
            columns,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        Isotopy {
            rows: Permutation::identity(n),
            columns: Permutation::identity(n),
            entries: Permutation::identity(n),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Isotopy {
            rows: Permutation::random(n, rng),
            columns: Permutation::random(n, rng),
            entries: Permutation::random(n, rng),
        }
    }

    pub fn degree(&self) -> usize {
        self.rows.degree()
    }

    /// Three lines, each a one-line image list (rows, columns, entries).
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if lines.len() != 3 {
            return Err(Error::InvalidPermutation(format!(
                "isotopy needs 3 lines, found {}",
                lines.len()
            )));
        }
        Self::new(
            Permutation::parse(lines[0])?,
            Permutation::parse(lines[1])?,
            Permutation::parse(lines[2])?,
        )
    }

    /// `self ∘ other`, componentwise: apply `other` first.
    pub fn compose(&self, other: &Isotopy) -> Isotopy {
        Isotopy {
            rows: self.rows.compose(&other.rows),
            columns: self.columns.compose(&other.columns),
            entries: self.entries.compose(&other.entries),
        }
    }

    pub fn map_point(&self, p: &Point) -> Point {
        Point::new(
            self.rows.apply(p.row),
            self.columns.apply(p.column),
            self.entries.apply(p.entry),
        )
    }
}

impl fmt::Display for Isotopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rows)?;
        writeln!(f, "{}", self.columns)?;
        writeln!(f, "{}", self.entries)
    }
}

/// A coordinate of an orthogonal-array point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coord {
    Row = 0,
    Column = 1,
    Entry = 2,
}

impl Coord {
    fn letter(self) -> char {
        match self {
            Coord::Row => 'r',
            Coord::Column => 'c',
            Coord::Entry => 'e',
        }
    }
}

/// A permutation of the three coordinates. Written as a word over
/// `{r, c, e}`: `cre` puts the old column first, the old row second and
/// keeps the entry third, which is transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conjugacy {
    source: [Coord; 3],
}

impl Conjugacy {
    pub const IDENTITY: Conjugacy = Conjugacy {
        source: [Coord::Row, Coord::Column, Coord::Entry],
    };

    pub const TRANSPOSE: Conjugacy = Conjugacy {
        source: [Coord::Column, Coord::Row, Coord::Entry],
    };

    pub fn all() -> [Conjugacy; 6] {
        ["rce", "rec", "cre", "cer", "erc", "ecr"].map(|w| w.parse().expect("valid word"))
    }

    pub fn word(&self) -> String {
        self.source.iter().map(|c| c.letter()).collect()
    }

    /// Which old coordinate lands in position `i` (0-based).
    pub fn source(&self, i: usize) -> Coord {
        self.source[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Conjugacy) -> Conjugacy {
        Conjugacy {
            source: self.source.map(|c| other.source[c as usize]),
        }
    }

    pub fn map_point(&self, p: &Point) -> Point {
        let old = p.coords();
        Point::from_coords(self.source.map(|c| old[c as usize]))
    }
}

impl FromStr for Conjugacy {
    type Err = Error;

    /// Accepts a full word (`cre`) or, as shorthand, the two swapped
    /// letters of a transposition (`rc` swaps rows and columns).
    fn from_str(word: &str) -> Result<Self> {
        let bad = || Error::InvalidConjugacy(word.to_string());
        let coord = |ch: char| match ch {
            'r' => Ok(Coord::Row),
            'c' => Ok(Coord::Column),
            'e' => Ok(Coord::Entry),
            _ => Err(bad()),
        };
        let letters: Vec<Coord> = word.chars().map(coord).collect::<Result<_>>()?;
        match *letters.as_slice() {
            [a, b, c] if a != b && b != c && a != c => Ok(Conjugacy { source: [a, b, c] }),
            [a, b] if a != b => {
                let mut source = [Coord::Row, Coord::Column, Coord::Entry];
                source.swap(a as usize, b as usize);
                Ok(Conjugacy { source })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Conjugacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// Either kind of main-class move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    Isotopy(Isotopy),
    Conjugacy(Conjugacy),
}

impl Transform {
    pub fn apply(&self, square: &LatinSquare) -> Result<LatinSquare> {
        match self {
            Transform::Isotopy(iso) => apply_isotopy(square, iso),
            Transform::Conjugacy(conj) => Ok(apply_conjugacy(square, conj)),
        }
    }

    pub fn map_base_point(&self, square: &LatinSquare, p: &Point) -> Result<Point> {
        match self {
            Transform::Isotopy(iso) => map_base_point_isotopy(square, p, iso),
            Transform::Conjugacy(conj) => map_base_point_conjugacy(square, p, conj),
        }
    }
}

fn from_points(n: usize, points: impl Iterator<Item = Point>) -> LatinSquare {
    let mut rows = vec![vec![0; n]; n];
    for p in points {
        rows[p.row - 1][p.column - 1] = p.entry;
    }
    LatinSquare::from_rows(&rows).expect("image of a Latin square is Latin")
}

/// `L'(σ_r(r), σ_c(c)) = σ_e(L(r, c))`.
pub fn apply_isotopy(square: &LatinSquare, iso: &Isotopy) -> Result<LatinSquare> {
    let n = square.order();
    if iso.degree() != n {
        return Err(Error::InvalidPermutation(format!(
            "isotopy of degree {} applied to order {n}",
            iso.degree()
        )));
    }
    Ok(from_points(
        n,
        orthogonal_array(square).iter().map(|p| iso.map_point(p)),
    ))
}

/// The square whose orthogonal array is the coordinate-permuted array of `L`.
pub fn apply_conjugacy(square: &LatinSquare, conj: &Conjugacy) -> LatinSquare {
    from_points(
        square.order(),
        orthogonal_array(square).iter().map(|p| conj.map_point(p)),
    )
}

pub fn map_base_point_isotopy(square: &LatinSquare, p: &Point, iso: &Isotopy) -> Result<Point> {
    square.require_point(p)?;
    Ok(iso.map_point(p))
}

pub fn map_base_point_conjugacy(
    square: &LatinSquare,
    p: &Point,
    conj: &Conjugacy,
) -> Result<Point> {
    square.require_point(p)?;
    Ok(conj.map_point(p))
}

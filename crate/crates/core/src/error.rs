use thiserror::Error;

use crate::quasigroup::Symbol;
use crate::scheme::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input contains no rows")]
    EmptyInput,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedGrid {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("grid has {rows} rows but {columns} columns")]
    NotSquare { rows: usize, columns: usize },

    #[error("symbol {symbol:?} out of range 1..={order}")]
    SymbolOutOfRange { symbol: String, order: usize },

    #[error("row {row} repeats symbol {symbol}")]
    RowRepeat { row: usize, symbol: Symbol },

    #[error("column {column} repeats symbol {symbol}")]
    ColumnRepeat { column: usize, symbol: Symbol },

    #[error("point {0} is not in the orthogonal array")]
    PointNotInArray(Point),

    #[error("points {0} and {1} agree in exactly two components")]
    TwoComponentAgreement(Point, Point),

    #[error("intersection number p^{h}_{{{i}{j}}} depends on the chosen pair")]
    NotWellDefined { h: usize, i: usize, j: usize },

    #[error("order {order} is too small (need at least {minimum})")]
    OrderTooSmall { order: usize, minimum: usize },

    #[error("cycle lengths sum to {found}, expected {expected}")]
    CycleMismatch { expected: usize, found: usize },

    #[error("table is not a loop")]
    NotALoop,

    #[error("table is not a right Bol loop")]
    NotRightBol,

    #[error("table is not a Moufang loop")]
    NotMoufang,

    #[error("loop does not have the right inverse property")]
    NoRip,

    #[error("column {0} is the base-point column")]
    BaseColumn(Symbol),

    #[error("matrix sizes differ: {expected} vs {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("generator list is empty")]
    NoGenerators,

    #[error("span is not closed under multiplication")]
    NotClosed,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid conjugacy word {0:?}")]
    InvalidConjugacy(String),

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),

    #[error("unknown corpus entry {0:?}")]
    UnknownCorpusName(String),

    #[error("cannot read {0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),
}

//! Independent check of the module-table predictions.
//!
//! Builds the relation matrices `A_0..A_4` and the dual idempotents
//! `E*_0..E*_4` of a base point as explicit `n² × n²` integer matrices,
//! closes them under multiplication in exact arithmetic, and compares the
//! dimension (and optionally the centre) of the result with
//! `25 + 36N + 1`. All generators are integer matrices, so the dimension
//! over the rationals equals the dimension over the complex numbers.

mod exact;
mod matrix;
mod span;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use matrix::ExactMatrix;
pub use span::{center_dimension, rank, span_closure_dimension, Arithmetic, MatrixSpan};

use crate::error::{Error, Result};
use crate::quasigroup::LatinSquare;
use crate::scheme::{intersection_numbers, orthogonal_array, relation_of, Point, Relation};
use crate::subconstituent::{module_table, pi_of, CycleStructure, WedderburnSignature};

/// `A_i[x][y] = 1` iff `x` and `y` are in relation `i`, indexed in
/// orthogonal-array order.
pub fn relation_matrices(square: &LatinSquare) -> Result<[ExactMatrix; 5]> {
    let points = orthogonal_array(square);
    let size = points.len();
    let mut rel = vec![0u8; size * size];
    for (a, x) in points.iter().enumerate() {
        for (b, y) in points.iter().enumerate() {
            rel[a * size + b] = relation_of(x, y)? as u8;
        }
    }
    Ok([0u8, 1, 2, 3, 4].map(|i| ExactMatrix::from_fn(size, |a, b| i64::from(rel[a * size + b] == i))))
}

/// Diagonal `E*_i` with `E*_i[x][x] = A_i[p][x]`.
pub fn dual_idempotent_matrices(square: &LatinSquare, base: &Point) -> Result<[ExactMatrix; 5]> {
    square.require_point(base)?;
    let points = orthogonal_array(square);
    let classes = points
        .iter()
        .map(|x| relation_of(base, x).map(Relation::index))
        .collect::<Result<Vec<_>>>()?;
    Ok([0usize, 1, 2, 3, 4].map(|i| {
        ExactMatrix::from_fn(points.len(), |a, b| i64::from(a == b && classes[a] == i))
    }))
}

/// Checks `A_i A_j = Σ_h p^h_{ij} A_h` entrywise for all 25 pairs.
pub fn verify_intersection_identity(square: &LatinSquare) -> Result<bool> {
    let tensor = intersection_numbers(square)?;
    let a = relation_matrices(square)?;
    let size = a[0].size();
    for i in 0..5 {
        for j in 0..5 {
            let product = a[i].mul(&a[j])?;
            let mut expected = ExactMatrix::zeros(size);
            for (h, ah) in a.iter().enumerate() {
                let coeff = tensor.get(h, i, j);
                if coeff != 0 {
                    expected = expected.add(&ah.scale(&BigInt::from(coeff)))?;
                }
            }
            if product != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{A_i} ∪ {E*_i}` for a base point.
pub fn terwilliger_generators(square: &LatinSquare, base: &Point) -> Result<Vec<ExactMatrix>> {
    let mut gens: Vec<ExactMatrix> = relation_matrices(square)?.into();
    gens.extend(dual_idempotent_matrices(square, base)?);
    Ok(gens)
}

/// The Terwilliger algebra at `base`, built by exact closure.
pub fn terwilliger_algebra(square: &LatinSquare, base: &Point) -> Result<MatrixSpan> {
    MatrixSpan::closure(&terwilliger_generators(square, base)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub cycles: CycleStructure,
    pub signature: WedderburnSignature,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnCheck {
    pub base: Point,
    pub prediction: Option<Prediction>,
    /// Why no prediction was made, if none was.
    pub prediction_error: Option<String>,
    pub oracle_dimension: usize,
    pub dimension_match: Option<bool>,
    pub center_dimension: Option<usize>,
    pub center_match: Option<bool>,
}

impl WedderburnCheck {
    /// False only on a definite mismatch.
    pub fn consistent(&self) -> bool {
        self.dimension_match != Some(false) && self.center_match != Some(false)
    }
}

/// Compares the predicted algebra dimension with the oracle's. The oracle
/// side runs for any `n ≥ 2`; the prediction needs `n ≥ 5`.
pub fn verify_wedderburn(square: &LatinSquare, base: &Point, with_center: bool) -> Result<WedderburnCheck> {
    let n = square.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, minimum: 2 });
    }
    square.require_point(base)?;
    let cycles = pi_of(square, base)?.cycle_structure();
    let (prediction, prediction_error) = match module_table(n, &cycles) {
        Ok(table) => {
            let signature = table.signature();
            (
                Some(Prediction {
                    cycles,
                    signature,
                    dimension: signature.algebra_dimension(),
                }),
                None,
            )
        }
        Err(e) => (None, Some(e.to_string())),
    };

    let algebra = terwilliger_algebra(square, base)?;
    let oracle_dimension = algebra.dimension();
    let center_dimension = if with_center {
        Some(algebra.center_dimension()?)
    } else {
        None
    };
    let dimension_match = prediction.as_ref().map(|p| p.dimension == oracle_dimension);
    let center_match = match (&prediction, center_dimension) {
        (Some(p), Some(c)) => Some(p.signature.center_dimension() == c),
        _ => None,
    };
    Ok(WedderburnCheck {
        base: *base,
        prediction,
        prediction_error,
        oracle_dimension,
        dimension_match,
        center_dimension,
        center_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn order_one_matrices() {
        let sq = LatinSquare::parse("1").unwrap();
        let a = relation_matrices(&sq).unwrap();
        assert_eq!(a[0], ExactMatrix::identity(1));
        assert!(a[1..].iter().all(ExactMatrix::is_zero));
    }

    #[test]
    fn valencies() {
        let sq = corpus::square("fig1").unwrap();
        let a = relation_matrices(&sq).unwrap();
        assert!(a[3].row_sums().iter().all(|s| *s == BigInt::from(2)));
        let sq = corpus::square("z4").unwrap();
        let a = relation_matrices(&sq).unwrap();
        assert!(a[4].row_sums().iter().all(|s| *s == BigInt::from(6)));
        let mut sum = ExactMatrix::zeros(16);
        for m in &a {
            sum = sum.add(m).unwrap();
        }
        assert_eq!(sum, ExactMatrix::all_ones(16));
        assert_eq!(a[0], ExactMatrix::identity(16));
    }

    #[test]
    fn dual_idempotents() {
        let sq = corpus::square("fig2").unwrap();
        for p in [Point::new(1, 1, 1), Point::new(5, 3, 1)] {
            let e = dual_idempotent_matrices(&sq, &p).unwrap();
            let traces: Vec<BigInt> = e.iter().map(ExactMatrix::trace).collect();
            assert_eq!(traces, [1, 7, 7, 7, 42].map(BigInt::from));
            let idx = sq.point_index(&p);
            assert_eq!(e[0].get(idx, idx), &BigInt::from(1));
            let mut sum = ExactMatrix::zeros(64);
            for (i, ei) in e.iter().enumerate() {
                assert!(ei.is_diagonal());
                sum = sum.add(ei).unwrap();
                for (j, ej) in e.iter().enumerate() {
                    let prod = ei.mul(ej).unwrap();
                    if i == j {
                        assert_eq!(&prod, ei);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
            assert_eq!(sum, ExactMatrix::identity(64));
        }
        assert!(dual_idempotent_matrices(&sq, &Point::new(1, 1, 2)).is_err());
    }

    #[test]
    fn intersection_identity_small() {
        assert_eq!(verify_intersection_identity(&corpus::square("fig1").unwrap()), Ok(true));
        assert_eq!(verify_intersection_identity(&corpus::square("z4").unwrap()), Ok(true));
    }

    #[test]
    fn bose_mesner_algebra() {
        let sq = corpus::square("z4").unwrap();
        let a = relation_matrices(&sq).unwrap();
        let span = MatrixSpan::closure(&a).unwrap();
        assert_eq!(span.dimension(), 5);
        assert_eq!(span.center_dimension(), Ok(5));
        let a = relation_matrices(&corpus::square("fig1").unwrap()).unwrap();
        assert_eq!(span_closure_dimension(&a), Ok(5));
    }

    #[test]
    fn closure_is_order_and_basis_invariant() {
        let sq = corpus::square("fig1").unwrap();
        let gens = terwilliger_generators(&sq, &Point::new(1, 1, 1)).unwrap();
        let forward = span_closure_dimension(&gens).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        assert_eq!(span_closure_dimension(&reversed), Ok(forward));
        // swap A_1 for A_1 + 2 A_2 and A_0 for A_0 − A_3: same linear span
        let mut mixed = gens.clone();
        mixed[1] = gens[1].add(&gens[2].scale(&BigInt::from(2))).unwrap();
        mixed[0] = gens[0].add(&gens[3].scale(&BigInt::from(-1))).unwrap();
        assert_eq!(span_closure_dimension(&mixed), Ok(forward));
    }

    #[test]
    fn bigint_path_agrees() {
        let sq = corpus::square("z5").unwrap();
        let gens = terwilliger_generators(&sq, &Point::new(1, 1, 1)).unwrap();
        let auto = MatrixSpan::closure_using(&gens, Arithmetic::Auto).unwrap();
        let big = MatrixSpan::closure_using(&gens, Arithmetic::BigInt).unwrap();
        assert_eq!(auto.dimension(), 98);
        assert_eq!(big.dimension(), 98);
    }

    #[test]
    fn small_orders_report_without_prediction() {
        let sq = corpus::square("z4").unwrap();
        let check = verify_wedderburn(&sq, &Point::new(1, 1, 1), true).unwrap();
        assert!(check.prediction.is_none());
        assert!(check.prediction_error.is_some());
        assert_eq!(check.oracle_dimension, 86);
        assert_eq!(check.center_dimension, Some(3));
        assert!(check.consistent());
        assert!(verify_wedderburn(&LatinSquare::parse("1").unwrap(), &Point::new(1, 1, 1), false).is_err());
    }

    #[test]
    fn cyclic_five_matches_prediction() {
        let sq = corpus::square("z5").unwrap();
        let check = verify_wedderburn(&sq, &Point::new(2, 4, 5), true).unwrap();
        let pred = check.prediction.clone().unwrap();
        assert_eq!(pred.dimension, 98);
        assert_eq!(check.oracle_dimension, 98);
        assert_eq!(check.center_dimension, Some(4));
        assert_eq!(check.dimension_match, Some(true));
        assert_eq!(check.center_match, Some(true));
    }
}

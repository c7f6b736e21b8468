//! Multiplicative closure of a set of integer matrices, and the dimension
//! of the centre of the resulting algebra.
//!
//! The closure is a worklist: every basis element is multiplied on the
//! right by every generator and the product is kept if it is independent
//! of the current span. A span that contains the generators and is stable
//! under right multiplication by them contains every word in them, so the
//! fixed point is the generated algebra.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::exact::{Echelon, Exact, ExactInt, Overflow};
use super::ExactMatrix;

/// Which integer arithmetic the elimination uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arithmetic {
    /// 64-bit with overflow checks, retried in arbitrary precision on
    /// overflow.
    #[default]
    Auto,
    /// Arbitrary precision throughout.
    BigInt,
}

/// Nonzero entries of a generator, both row- and column-major.
struct Sparse<T> {
    // (row, col, value)
    entries: Vec<(usize, usize, T)>,
}

impl<T: ExactInt> Sparse<T> {
    fn from_matrix(m: &ExactMatrix) -> Exact<Self> {
        let n = m.size();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let x = m.get(i, j);
                if !num_traits::Zero::is_zero(x) {
                    entries.push((i, j, T::from_big(x)?));
                }
            }
        }
        Ok(Sparse { entries })
    }

    /// `b · self` for dense row-major `b`.
    fn right_mul(&self, b: &[T], n: usize) -> Exact<Vec<T>> {
        let mut out = vec![T::zero(); n * n];
        for (k, j, g) in &self.entries {
            for i in 0..n {
                let x = &b[i * n + k];
                if !x.is_zero() {
                    out[i * n + j] = out[i * n + j].add_mul(x, g)?;
                }
            }
        }
        Ok(out)
    }

    /// `self · b` for dense row-major `b`.
    fn left_mul(&self, b: &[T], n: usize) -> Exact<Vec<T>> {
        let mut out = vec![T::zero(); n * n];
        for (i, k, g) in &self.entries {
            for j in 0..n {
                let x = &b[k * n + j];
                if !x.is_zero() {
                    out[i * n + j] = out[i * n + j].add_mul(g, x)?;
                }
            }
        }
        Ok(out)
    }
}

fn dense<T: ExactInt>(m: &ExactMatrix) -> Exact<Vec<T>> {
    m.entries().iter().map(T::from_big).collect()
}

fn to_matrix<T: ExactInt>(n: usize, v: &[T]) -> ExactMatrix {
    ExactMatrix::from_entries(n, v.iter().map(T::to_big).collect())
}

fn closure_with<T: ExactInt>(generators: &[ExactMatrix]) -> Exact<Vec<ExactMatrix>> {
    let n = generators[0].size();
    let sparse = generators
        .iter()
        .map(Sparse::<T>::from_matrix)
        .collect::<Exact<Vec<_>>>()?;
    let mut echelon = Echelon::<T>::new(n * n);
    let mut elements: Vec<Vec<T>> = Vec::new();
    for g in generators {
        if let Some(row) = echelon.insert(dense(g)?)? {
            elements.push(row.to_vec());
        }
    }
    let mut next = 0;
    while next < elements.len() {
        for g in &sparse {
            let product = g.right_mul(&elements[next], n)?;
            if let Some(row) = echelon.insert(product)? {
                elements.push(row.to_vec());
            }
        }
        next += 1;
    }
    Ok(elements.iter().map(|v| to_matrix(n, v)).collect())
}

fn rank_with<T: ExactInt>(vectors: &[ExactMatrix]) -> Exact<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let mut echelon = Echelon::<T>::new(first.entries().len());
    for v in vectors {
        echelon.insert(dense(v)?)?;
    }
    Ok(echelon.rank())
}

fn center_with<T: ExactInt>(basis: &[ExactMatrix], generators: &[ExactMatrix]) -> Exact<usize> {
    let n = basis[0].size();
    let sparse = generators
        .iter()
        .map(Sparse::<T>::from_matrix)
        .collect::<Exact<Vec<_>>>()?;
    // B = Σ x_j b_j is central iff Σ x_j [b_j, g] = 0 for every generator g,
    // so the centre's dimension is the nullity of the commutator map.
    let mut echelon = Echelon::<T>::new(sparse.len() * n * n);
    for b in basis {
        let b = dense::<T>(b)?;
        let mut commutators = Vec::with_capacity(sparse.len() * n * n);
        for g in &sparse {
            let bg = g.right_mul(&b, n)?;
            let gb = g.left_mul(&b, n)?;
            for (x, y) in bg.iter().zip(&gb) {
                commutators.push(T::mul_sub(&T::one(), x, &T::one(), y)?);
            }
        }
        echelon.insert(commutators)?;
    }
    Ok(basis.len() - echelon.rank())
}

fn run<R>(
    arithmetic: Arithmetic,
    small: impl FnOnce() -> Exact<R>,
    big: impl FnOnce() -> Exact<R>,
) -> R {
    let big_result = || big().expect("arbitrary precision cannot overflow");
    match arithmetic {
        Arithmetic::BigInt => big_result(),
        Arithmetic::Auto => match small() {
            Ok(r) => r,
            Err(Overflow) => big_result(),
        },
    }
}

fn check_sizes(matrices: &[ExactMatrix]) -> Result<usize> {
    let first = matrices.first().ok_or(Error::NoGenerators)?;
    let n = first.size();
    for m in matrices {
        if m.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: m.size(),
            });
        }
    }
    Ok(n)
}

/// A rational span of integer matrices, stored as a row-reduced basis of
/// the row-major vectorisations.
#[derive(Debug, Clone)]
pub struct MatrixSpan {
    size: usize,
    generators: Vec<ExactMatrix>,
    basis: Vec<ExactMatrix>,
    closed: bool,
}

impl MatrixSpan {
    /// The algebra generated by `generators`: the smallest span containing
    /// them that is closed under multiplication.
    pub fn closure(generators: &[ExactMatrix]) -> Result<Self> {
        Self::closure_using(generators, Arithmetic::Auto)
    }

    pub fn closure_using(generators: &[ExactMatrix], arithmetic: Arithmetic) -> Result<Self> {
        let size = check_sizes(generators)?;
        let basis = run(
            arithmetic,
            || closure_with::<i64>(generators),
            || closure_with::<BigInt>(generators),
        );
        Ok(MatrixSpan {
            size,
            generators: generators.to_vec(),
            basis,
            closed: true,
        })
    }

    /// The plain linear span, with no closure.
    pub fn linear(matrices: &[ExactMatrix]) -> Result<Self> {
        let size = check_sizes(matrices)?;
        let mut echelon_basis = Vec::new();
        let mut echelon = Echelon::<BigInt>::new(size * size);
        for m in matrices {
            if let Some(row) = echelon
                .insert(m.entries().to_vec())
                .expect("arbitrary precision cannot overflow")
            {
                echelon_basis.push(ExactMatrix::from_entries(size, row.to_vec()));
            }
        }
        Ok(MatrixSpan {
            size,
            generators: echelon_basis.clone(),
            basis: echelon_basis,
            closed: false,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool> {
        if m.size() != self.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: m.size(),
            });
        }
        let mut all = self.basis.clone();
        all.push(m.clone());
        Ok(rank(&all) == self.dimension())
    }

    /// Whether the span is closed under multiplication. Spans built by
    /// [`MatrixSpan::closure`] are closed by construction.
    pub fn is_closed(&self) -> bool {
        if self.closed {
            return true;
        }
        let mut products = self.basis.clone();
        for a in &self.basis {
            for b in &self.basis {
                products.push(a.mul(b).expect("equal sizes"));
            }
        }
        rank(&products) == self.dimension()
    }

    /// Dimension of the centre `{B : BG = GB for all G}` of a closed span.
    pub fn center_dimension(&self) -> Result<usize> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        if self.basis.is_empty() {
            return Ok(0);
        }
        Ok(run(
            Arithmetic::Auto,
            || center_with::<i64>(&self.basis, &self.generators),
            || center_with::<BigInt>(&self.basis, &self.generators),
        ))
    }
}

/// Rank over the rationals of a list of equal-sized matrices.
pub fn rank(matrices: &[ExactMatrix]) -> usize {
    run(
        Arithmetic::Auto,
        || rank_with::<i64>(matrices),
        || rank_with::<BigInt>(matrices),
    )
}

/// Dimension of the algebra generated by `generators`.
pub fn span_closure_dimension(generators: &[ExactMatrix]) -> Result<usize> {
    Ok(MatrixSpan::closure(generators)?.dimension())
}

pub fn center_dimension(span: &MatrixSpan) -> Result<usize> {
    span.center_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: usize, rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_fn(n, |i, j| rows[i][j])
    }

    #[test]
    fn identity_spans_one_dimension() {
        let span = MatrixSpan::closure(&[ExactMatrix::identity(4)]).unwrap();
        assert_eq!(span.dimension(), 1);
        assert_eq!(span.center_dimension(), Ok(1));
    }

    #[test]
    fn nilpotent_generator() {
        // N = E_12 generates span{N}, since N² = 0
        let n = int(2, &[&[0, 1], &[0, 0]]);
        assert_eq!(span_closure_dimension(std::slice::from_ref(&n)), Ok(1));
        // N and its transpose generate all of M_2
        let t = int(2, &[&[0, 0], &[1, 0]]);
        let span = MatrixSpan::closure(&[n, t]).unwrap();
        assert_eq!(span.dimension(), 4);
        assert_eq!(span.center_dimension(), Ok(1));
    }

    #[test]
    fn cyclic_shift_generates_group_algebra() {
        let shift = ExactMatrix::from_fn(5, |i, j| i64::from((i + 1) % 5 == j));
        let span = MatrixSpan::closure(&[shift]).unwrap();
        assert_eq!(span.dimension(), 5);
        assert_eq!(span.center_dimension(), Ok(5));
    }

    #[test]
    fn errors() {
        assert_eq!(span_closure_dimension(&[]), Err(Error::NoGenerators));
        assert_eq!(
            span_closure_dimension(&[ExactMatrix::identity(2), ExactMatrix::identity(3)]),
            Err(Error::SizeMismatch { expected: 2, found: 3 })
        );
        let n = int(2, &[&[0, 1], &[0, 0]]);
        let t = int(2, &[&[0, 0], &[1, 0]]);
        let span = MatrixSpan::linear(&[n, t]).unwrap();
        assert!(!span.is_closed());
        assert_eq!(span.center_dimension(), Err(Error::NotClosed));
    }

    #[test]
    fn linear_span_and_membership() {
        let a = int(2, &[&[1, 2], &[3, 4]]);
        let b = int(2, &[&[2, 4], &[6, 8]]);
        let span = MatrixSpan::linear(&[a.clone(), b]).unwrap();
        assert_eq!(span.dimension(), 1);
        assert_eq!(span.contains(&a.scale(&BigInt::from(-7))), Ok(true));
        assert_eq!(span.contains(&ExactMatrix::identity(2)), Ok(false));
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let huge = BigInt::from(i64::MAX) * 4;
        let m = ExactMatrix::identity(2).scale(&huge);
        let span = MatrixSpan::closure(&[m]).unwrap();
        assert_eq!(span.dimension(), 1);
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense square matrix with arbitrary-precision integer entries.
///
/// Every matrix the oracle builds (relation matrices, dual idempotents and
/// their products) is integer-valued, so integer entries are exact over the
/// rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(size: usize) -> Self {
        ExactMatrix {
            size,
            entries: vec![BigInt::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| if i == j { 1 } else { 0 })
    }

    pub fn from_fn<T: Into<BigInt>>(size: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j).into());
            }
        }
        ExactMatrix { size, entries }
    }

    /// Builds from row-major entries. Panics unless `entries.len() == size²`.
    pub fn from_entries(size: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), size * size, "entry count must be size²");
        ExactMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    /// Row-major vectorisation.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    fn same_size(&self, other: &ExactMatrix) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: self.size,
                found: other.size,
            })
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_size(other)?;
        let n = self.size;
        let mut out = ExactMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_size(other)?;
        Ok(ExactMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &BigInt) -> ExactMatrix {
        ExactMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.size).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.entries
            .chunks(self.size.max(1))
            .map(|row| row.iter().sum())
            .collect()
    }

    pub fn all_ones(size: usize) -> Self {
        ExactMatrix {
            size,
            entries: vec![BigInt::one(); size * size],
        }
    }

    pub fn commutes_with(&self, other: &ExactMatrix) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({}x{})", self.size, self.size)?;
        if self.size <= 12 {
            for row in self.entries.chunks(self.size.max(1)) {
                let words: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                writeln!(f, "  {}", words.join(" "))?;
            }
        }
        Ok(())
    }
}

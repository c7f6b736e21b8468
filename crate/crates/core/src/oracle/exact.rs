//! Fraction-free integer row reduction.
//!
//! Vectors are eliminated against an echelon basis by cross-multiplication
//! (`v ← β/g · v − α/g · b` with `g = gcd(α, β)`) and then divided by their
//! content, so every stored row is a primitive integer vector. Since only
//! integers appear, the rank is the rank over the rationals.
//!
//! The arithmetic is generic: `i64` with overflow detection runs first and
//! the caller retries with `BigInt` if it overflows.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Raised when fixed-width arithmetic would overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) type Exact<T> = std::result::Result<T, Overflow>;

pub(crate) trait ExactInt: Clone + Debug + PartialEq + Send + Sync + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn from_big(b: &BigInt) -> Exact<Self>;
    fn to_big(&self) -> BigInt;
    /// `a·x − b·y`
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Exact<Self>;
    /// `self + x·y`
    fn add_mul(&self, x: &Self, y: &Self) -> Exact<Self>;
    /// `self − x·y`
    fn sub_mul(&self, x: &Self, y: &Self) -> Exact<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl ExactInt for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn from_big(b: &BigInt) -> Exact<Self> {
        b.to_i64().ok_or(Overflow)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    #[inline]
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Exact<Self> {
        let ax = a.checked_mul(*x).ok_or(Overflow)?;
        let by = b.checked_mul(*y).ok_or(Overflow)?;
        ax.checked_sub(by).ok_or(Overflow)
    }
    #[inline]
    fn add_mul(&self, x: &Self, y: &Self) -> Exact<Self> {
        let xy = x.checked_mul(*y).ok_or(Overflow)?;
        self.checked_add(xy).ok_or(Overflow)
    }
    #[inline]
    fn sub_mul(&self, x: &Self, y: &Self) -> Exact<Self> {
        let xy = x.checked_mul(*y).ok_or(Overflow)?;
        self.checked_sub(xy).ok_or(Overflow)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u8)
    }
    fn from_big(b: &BigInt) -> Exact<Self> {
        Ok(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Exact<Self> {
        Ok(a * x - b * y)
    }
    fn add_mul(&self, x: &Self, y: &Self) -> Exact<Self> {
        Ok(self + x * y)
    }
    fn sub_mul(&self, x: &Self, y: &Self) -> Exact<Self> {
        Ok(self - x * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Divides out the gcd of the entries and makes the leading entry positive.
pub(crate) fn make_primitive<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_unit() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if lead_negative { g.neg() } else { g };
    if g == T::one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// An echelon basis of primitive integer rows with distinct pivots.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<T> {
    len: usize,
    // sorted by pivot column
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: ExactInt> Echelon<T> {
    pub(crate) fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place against the basis. Afterwards `v` is zero iff it
    /// was in the span.
    pub(crate) fn reduce(&self, v: &mut [T]) -> Exact<()> {
        debug_assert_eq!(v.len(), self.len);
        for (pivot, row) in &self.rows {
            let alpha = v[*pivot].clone();
            if alpha.is_zero() {
                continue;
            }
            let beta = &row[*pivot];
            let g = alpha.gcd(beta);
            let a = beta.div_exact(&g);
            let b = alpha.div_exact(&g);
            if a == T::one() {
                for (x, y) in v[*pivot..].iter_mut().zip(&row[*pivot..]) {
                    if !y.is_zero() {
                        *x = x.sub_mul(&b, y)?;
                    }
                }
            } else {
                // v ← a·v − b·row; the row is zero before its pivot
                for x in v[..*pivot].iter_mut() {
                    if !x.is_zero() {
                        *x = T::mul_sub(&a, x, &T::zero(), &T::zero())?;
                    }
                }
                for (x, y) in v[*pivot..].iter_mut().zip(&row[*pivot..]) {
                    if !(x.is_zero() && y.is_zero()) {
                        *x = T::mul_sub(&a, x, &b, y)?;
                    }
                }
                make_primitive(v);
            }
        }
        Ok(())
    }

    /// Adds `v` if it is independent of the basis; returns the reduced row
    /// that was stored.
    pub(crate) fn insert(&mut self, mut v: Vec<T>) -> Exact<Option<&[T]>> {
        self.reduce(&mut v)?;
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(None);
        };
        make_primitive(&mut v);
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        Ok(Some(&self.rows[at].1))
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasigroup::{loop_structure, right_bol_counterexample, LatinSquare, Symbol};
use crate::scheme::{orthogonal_array, Point};

use super::pi::require_domain;
use super::pi_of;

/// Both sides of the square-root test for a loop with the right inverse
/// property: whether `((r_p c) c_p⁻¹) π(c) = ((r_p π(c)) c_p⁻¹) c`, and,
/// computed separately, whether `π²(c) = c`. The two always agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareCriterion {
    pub identity_holds: bool,
    pub pi_squared_fixes: bool,
}

impl SquareCriterion {
    pub fn agrees(&self) -> bool {
        self.identity_holds == self.pi_squared_fixes
    }
}

fn rip_inverses(square: &LatinSquare) -> Result<Vec<Symbol>> {
    let lp = loop_structure(square).ok_or(Error::NotALoop)?;
    let inv = lp.inverses().ok_or(Error::NoRip)?;
    for a in square.symbols() {
        for b in square.symbols() {
            if square.mul(square.mul(a, b), inv[b - 1]) != a {
                return Err(Error::NoRip);
            }
        }
    }
    Ok(inv)
}

pub fn pi_square_criterion(square: &LatinSquare, base: &Point, c: Symbol) -> Result<SquareCriterion> {
    let inv = rip_inverses(square)?;
    square.require_point(base)?;
    require_domain(square, base, c)?;
    Ok(criterion_with(square, base, c, &inv, &pi_of(square, base)?))
}

/// Criterion at every non-base column of one base point.
pub fn pi_square_criteria(square: &LatinSquare, base: &Point) -> Result<Vec<(Symbol, SquareCriterion)>> {
    let inv = rip_inverses(square)?;
    square.require_point(base)?;
    let pi = pi_of(square, base)?;
    Ok(pi
        .domain()
        .map(|c| (c, criterion_with(square, base, c, &inv, &pi)))
        .collect())
}

fn criterion_with(
    square: &LatinSquare,
    base: &Point,
    c: Symbol,
    inv: &[Symbol],
    pi: &super::SubPermutation,
) -> SquareCriterion {
    let m = |x, y| square.mul(x, y);
    let cp_inv = inv[base.column - 1];
    let pc = pi.apply(c).expect("c is in the domain");
    let lhs = m(m(m(base.row, c), cp_inv), pc);
    let rhs = m(m(m(base.row, pc), cp_inv), c);
    SquareCriterion {
        identity_holds: lhs == rhs,
        pi_squared_fixes: pi.apply(pc) == Some(c),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HypothesisFailure {
    NotALoop,
    NoRip,
    PiNotInvolution { base: Point, column: Symbol },
    FormulaMismatch {
        base: Point,
        column: Symbol,
        expected: Symbol,
        found: Symbol,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Certificate {
    CertifiedRightBol,
    HypothesisFailed { reason: HypothesisFailure },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::CertifiedRightBol)
    }
}

/// Decides right-Bolness through `π`: a loop with the right inverse
/// property in which every `π` is an involution given by
/// `π(c) = (c_p c⁻¹) c_p` is right Bol. The verdict is cross-checked
/// against the exhaustive Bol identity.
pub fn right_bol_certificate(square: &LatinSquare) -> Certificate {
    let failed = |reason| Certificate::HypothesisFailed { reason };
    let inv = match rip_inverses(square) {
        Ok(inv) => inv,
        Err(Error::NotALoop) => return failed(HypothesisFailure::NotALoop),
        Err(_) => return failed(HypothesisFailure::NoRip),
    };
    for base in orthogonal_array(square) {
        let pi = pi_of(square, &base).expect("base point is in the array");
        let cp = base.column;
        for c in pi.domain() {
            let image = pi.apply(c).expect("in domain");
            if pi.apply(image) != Some(c) {
                return failed(HypothesisFailure::PiNotInvolution { base, column: c });
            }
            let expected = square.mul(square.mul(cp, inv[c - 1]), cp);
            if image != expected {
                return failed(HypothesisFailure::FormulaMismatch {
                    base,
                    column: c,
                    expected,
                    found: image,
                });
            }
        }
    }
    assert!(
        right_bol_counterexample(square).is_none(),
        "certified square fails the right Bol identity"
    );
    Certificate::CertifiedRightBol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn fig2_criterion() {
        let sq = corpus::square("fig2").unwrap();
        let got = pi_square_criterion(&sq, &Point::new(1, 2, 2), 3).unwrap();
        assert_eq!(
            got,
            SquareCriterion {
                identity_holds: true,
                pi_squared_fixes: true
            }
        );
        for p in orthogonal_array(&sq) {
            for (_, crit) in pi_square_criteria(&sq, &p).unwrap() {
                assert!(crit.identity_holds && crit.pi_squared_fixes);
            }
        }
    }

    #[test]
    fn criterion_errors() {
        let sq = corpus::square("fig2").unwrap();
        assert_eq!(
            pi_square_criterion(&sq, &Point::new(1, 2, 2), 2),
            Err(Error::BaseColumn(2))
        );
        let fig3 = corpus::square("fig3").unwrap();
        assert_eq!(
            pi_square_criterion(&fig3, &Point::new(1, 1, 1), 2),
            Err(Error::NoRip)
        );
        let no_loop = LatinSquare::parse("1 3 2\n3 2 1\n2 1 3").unwrap();
        assert_eq!(
            pi_square_criterion(&no_loop, &Point::new(1, 1, 1), 2),
            Err(Error::NotALoop)
        );
    }

    #[test]
    fn certificates() {
        assert!(right_bol_certificate(&corpus::square("fig2").unwrap()).is_certified());
        assert!(right_bol_certificate(&corpus::square("z5").unwrap()).is_certified());
        assert_eq!(
            right_bol_certificate(&corpus::square("fig3").unwrap()),
            Certificate::HypothesisFailed {
                reason: HypothesisFailure::NoRip
            }
        );
        assert_eq!(
            right_bol_certificate(&LatinSquare::parse("1 3 2\n3 2 1\n2 1 3").unwrap()),
            Certificate::HypothesisFailed {
                reason: HypothesisFailure::NotALoop
            }
        );
    }

    #[test]
    fn left_bol_is_not_certified() {
        use crate::transforms::{apply_conjugacy, Conjugacy};
        let left = apply_conjugacy(&corpus::square("fig2").unwrap(), &Conjugacy::TRANSPOSE);
        assert!(!right_bol_certificate(&left).is_certified());
    }
}

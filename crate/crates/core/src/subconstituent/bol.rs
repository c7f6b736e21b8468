use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasigroup::{loop_properties, loop_structure, right_bol_counterexample, LatinSquare, Symbol};
use crate::scheme::Point;

use super::{for_each_base_point, pi_of, CycleStructure, SubPermutation};

/// `π(c) = (c_p c⁻¹) c_p`, the closed form of `π` for a right Bol loop.
pub fn bol_pi_formula(square: &LatinSquare, base: &Point) -> Result<SubPermutation> {
    square.require_point(base)?;
    let lp = loop_structure(square).ok_or(Error::NotRightBol)?;
    if right_bol_counterexample(square).is_some() {
        return Err(Error::NotRightBol);
    }
    let inv = lp.inverses().ok_or(Error::NotRightBol)?;
    let cp = base.column;
    Ok(SubPermutation::from_fn(square.order(), cp, |c| {
        square.mul(square.mul(cp, inv[c - 1]), cp)
    }))
}

/// Fixed-point counts and cycle structures of `π` at every base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub order: usize,
    /// Row-major, `order × order`.
    pub structures: Vec<CycleStructure>,
}

impl Profile {
    pub fn structure(&self, row: Symbol, column: Symbol) -> &CycleStructure {
        &self.structures[(row - 1) * self.order + (column - 1)]
    }

    pub fn fixed_count(&self, row: Symbol, column: Symbol) -> usize {
        self.structure(row, column).fixed_count()
    }

    /// Row-major grid of fixed-point counts.
    pub fn fixed_counts(&self) -> Vec<Vec<usize>> {
        (1..=self.order)
            .map(|r| (1..=self.order).map(|c| self.fixed_count(r, c)).collect())
            .collect()
    }

    /// The column's cycle structure, when every row agrees on it.
    pub fn column_structure(&self, column: Symbol) -> Option<&CycleStructure> {
        let first = self.structure(1, column);
        (2..=self.order)
            .all(|r| self.structure(r, column) == first)
            .then_some(first)
    }

    /// Whether the fixed-point count is constant down every column.
    pub fn row_constant(&self) -> bool {
        (1..=self.order).all(|c| {
            let first = self.fixed_count(1, c);
            (2..=self.order).all(|r| self.fixed_count(r, c) == first)
        })
    }
}

/// Sweeps every base point. `threads = None` uses all available cores;
/// the result is row-major regardless of scheduling.
pub fn fixed_point_profile(square: &LatinSquare, threads: Option<usize>) -> Result<Profile> {
    let n = square.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, minimum: 2 });
    }
    let structures = for_each_base_point(square, threads, |p| {
        pi_of(square, &p).map(|pi| pi.cycle_structure())
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(Profile {
        order: n,
        structures,
    })
}

/// `s − 1` for a Moufang loop: the number of points every `π` fixes.
pub fn moufang_fixed_prediction(square: &LatinSquare) -> Result<usize> {
    if !loop_properties(square).is_moufang {
        return Err(Error::NotMoufang);
    }
    let lp = loop_structure(square).expect("Moufang loops are loops");
    Ok(lp.self_inverse_count() - 1)
}

/// How one element behaves under `π` at the identity base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCycle {
    pub element: Symbol,
    /// Length of the cycle of `π` through the element.
    pub cycle_length: usize,
    /// Least `k ≥ 1` with `ρ^{k−1}(c) = c^λ`, where `ρ` takes right inverses.
    pub rho_chain_length: usize,
    pub two_sided: bool,
    pub pi_squared_fixes: bool,
    pub image: Symbol,
}

/// Per-element cycle data for `p = (ι, ι, ι)` in a loop.
pub fn identity_base_cycles(square: &LatinSquare) -> Result<Vec<IdentityCycle>> {
    let lp = loop_structure(square).ok_or(Error::NotALoop)?;
    let e = lp.identity();
    let pi = pi_of(square, &Point::new(e, e, e))?;
    let n = square.order();
    let mut length = vec![0; n + 1];
    for cycle in pi.cycles() {
        for &c in &cycle {
            length[c] = cycle.len();
        }
    }
    Ok(pi
        .domain()
        .map(|c| {
            let target = lp.left_inverse(c);
            let mut x = c;
            let mut k = 1;
            while x != target {
                x = lp.right_inverse(x);
                k += 1;
                assert!(k <= n, "right-inverse chain from {c} never reaches {target}");
            }
            let image = pi.apply(c).expect("c is in the domain");
            IdentityCycle {
                element: c,
                cycle_length: length[c],
                rho_chain_length: k,
                two_sided: lp.inverse(c).is_some(),
                pi_squared_fixes: pi.apply(image) == Some(c),
                image,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scheme::orthogonal_array;

    #[test]
    fn formula_in_column_one_is_inversion() {
        let sq = corpus::square("fig2").unwrap();
        for r in 1..=8 {
            let p = sq.point(r, 1).unwrap();
            let pi = bol_pi_formula(&sq, &p).unwrap();
            assert_eq!(pi.to_string(), "(2 4)(3 5)(6 7)");
            assert_eq!(pi.fixed_points(), vec![8]);
        }
    }

    #[test]
    fn formula_annotations() {
        let sq = corpus::square("fig2").unwrap();
        let pi = bol_pi_formula(&sq, &sq.point(1, 8).unwrap()).unwrap();
        assert_eq!(pi.fixed_points(), vec![1]);
        assert_eq!(pi.to_string(), "(2 4)(3 5)(6 7)");
        let pi = bol_pi_formula(&sq, &sq.point(1, 2).unwrap()).unwrap();
        assert_eq!(pi.fixed_points(), vec![4, 6, 7]);
        assert_eq!(pi.to_string(), "(1 8)(3 5)");
        assert_eq!(pi.cycle_structure().to_string(), "1^3 2^2");
    }

    #[test]
    fn formula_needs_right_bol() {
        let sq = corpus::square("fig3").unwrap();
        assert_eq!(
            bol_pi_formula(&sq, &Point::new(1, 1, 1)),
            Err(Error::NotRightBol)
        );
    }

    #[test]
    fn fig2_profile() {
        let sq = corpus::square("fig2").unwrap();
        let prof = fixed_point_profile(&sq, Some(2)).unwrap();
        for r in 1..=8 {
            let row: Vec<usize> = (1..=8).map(|c| prof.fixed_count(r, c)).collect();
            assert_eq!(row, vec![1, 3, 3, 3, 3, 5, 5, 1]);
        }
        assert!(prof.row_constant());
        assert_eq!(prof, fixed_point_profile(&sq, Some(1)).unwrap());
    }

    #[test]
    fn fig3_profile() {
        let sq = corpus::square("fig3").unwrap();
        let boxed = corpus::get("fig3").unwrap().boxed;
        let prof = fixed_point_profile(&sq, None).unwrap();
        for r in 1..=7 {
            for c in 1..=7 {
                let expected = if boxed.contains(&(r, c)) { 0 } else { 4 };
                assert_eq!(prof.fixed_count(r, c), expected, "({r},{c})");
            }
        }
        assert!(!prof.row_constant());
        assert_eq!(prof.column_structure(1), None);
    }

    #[test]
    fn groups_fix_s_minus_one() {
        for (name, expected) in [("z5", 0), ("z2^3", 7), ("z4", 1)] {
            let sq = corpus::square(name).unwrap();
            assert_eq!(moufang_fixed_prediction(&sq), Ok(expected), "{name}");
            let prof = fixed_point_profile(&sq, None).unwrap();
            assert!(prof.fixed_counts().iter().flatten().all(|&f| f == expected));
        }
        assert_eq!(
            moufang_fixed_prediction(&corpus::square("fig2").unwrap()),
            Err(Error::NotMoufang)
        );
    }

    #[test]
    fn identity_cycles_fig2() {
        let sq = corpus::square("fig2").unwrap();
        let lp = loop_structure(&sq).unwrap();
        for entry in identity_base_cycles(&sq).unwrap() {
            assert!(entry.two_sided && entry.pi_squared_fixes);
            assert!(entry.cycle_length <= 2);
            assert_eq!(entry.cycle_length, entry.rho_chain_length);
            assert_eq!(Some(entry.image), lp.inverse(entry.element));
        }
    }

    #[test]
    fn identity_cycles_fig3() {
        let sq = corpus::square("fig3").unwrap();
        let report = identity_base_cycles(&sq).unwrap();
        let fixed: Vec<Symbol> = report
            .iter()
            .filter(|e| e.cycle_length == 1)
            .map(|e| e.element)
            .collect();
        assert_eq!(fixed, vec![2, 4, 6, 7]);
        let moved: Vec<(Symbol, Symbol)> = report
            .iter()
            .filter(|e| e.cycle_length == 2)
            .map(|e| (e.element, e.image))
            .collect();
        assert_eq!(moved, vec![(3, 5), (5, 3)]);
        assert!(report.iter().all(|e| e.cycle_length == e.rho_chain_length));
    }

    #[test]
    fn identity_cycles_detect_one_sided_inverses() {
        // order-5 loop where 2 has different left and right inverses
        let sq = LatinSquare::parse("1 2 3 4 5\n2 3 1 5 4\n3 4 5 1 2\n4 5 2 3 1\n5 1 4 2 3").unwrap();
        let report = identity_base_cycles(&sq).unwrap();
        for e in &report {
            assert_eq!(e.cycle_length, e.rho_chain_length);
            assert_eq!(e.pi_squared_fixes, e.two_sided, "{e:?}");
        }
        assert!(report.iter().any(|e| !e.two_sided));
        let no_identity = LatinSquare::parse("1 3 2\n3 2 1\n2 1 3").unwrap();
        assert_eq!(identity_base_cycles(&no_identity), Err(Error::NotALoop));
    }

    #[test]
    fn groups_invert_at_identity() {
        for name in ["z5", "z6", "z7", "z8", "z2^3"] {
            let sq = corpus::square(name).unwrap();
            let lp = loop_structure(&sq).unwrap();
            for e in identity_base_cycles(&sq).unwrap() {
                assert_eq!(Some(e.image), lp.inverse(e.element));
            }
            let _ = orthogonal_array(&sq);
        }
    }
}

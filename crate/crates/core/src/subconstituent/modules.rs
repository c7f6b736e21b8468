//! Irreducible-module table and Wedderburn shape predicted from the cycle
//! structure of `π`.
//!
//! For `π = C_1 ⋯ C_k` (1-cycles included), `u_i` is the set of
//! `|C_i|`-th roots of unity and `U = ∪ u_i`. The modules are:
//!
//! * one of dimension 5, multiplicity 1 (the primary module);
//! * one of dimension 1, multiplicity `n² − 6n + 7`;
//! * for each `ε ∈ U − {1}`, one of dimension 6 with multiplicity
//!   `|{i : ε ∈ u_i}|`;
//! * if `k > 1`, one more of dimension 6 with multiplicity `k − 1`.
//!
//! The algebra is then `M_5 ⊕ M_6^N ⊕ M_1` with `N = |U| − 1` when
//! `k = 1` and `N = |U|` otherwise.
//!
//! Roots of unity are kept as reduced fractions of a full turn so that `U`
//! is computed exactly.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::CycleStructure;

/// `exp(2πi · num/den)` with `0 ≤ num < den` and `gcd(num, den) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };

    /// `exp(2πi · num/den)`, reduced. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let num = num % den;
        let g = num.gcd(&den);
        RootOfUnity {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    /// Multiplicative order: the least `m` with `ε^m = 1`.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Whether `ε^m = 1`.
    pub fn is_root_of(&self, m: u64) -> bool {
        m.is_multiple_of(self.den)
    }

    /// All `m`-th roots of unity.
    pub fn all_of_order_dividing(m: u64) -> impl Iterator<Item = RootOfUnity> {
        (0..m).map(move |j| RootOfUnity::new(j, m))
    }
}

impl Ord for RootOfUnity {
    /// Ordered by angle.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, 1) => f.write_str("1"),
            (1, 2) => f.write_str("-1"),
            (j, m) => write!(f, "exp(2pi i {j}/{m})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleLabel {
    Primary,
    OneDim,
    Eigenvalue { root: RootOfUnity },
    /// The extra 6-dimensional class present when `π` has several cycles.
    ClassIv,
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Primary => f.write_str("primary"),
            ModuleLabel::OneDim => f.write_str("one-dim"),
            ModuleLabel::Eigenvalue { root } => write!(f, "eigenvalue {root}"),
            ModuleLabel::ClassIv => f.write_str("class-(iv)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub dimension: usize,
    pub multiplicity: usize,
    pub label: ModuleLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTable {
    pub order: usize,
    pub cycles: CycleStructure,
    /// `U`, sorted by angle; always contains 1.
    pub roots: Vec<RootOfUnity>,
    pub entries: Vec<ModuleEntry>,
}

impl ModuleTable {
    /// `k`, the number of cycles of `π`.
    pub fn cycle_count(&self) -> usize {
        self.cycles.cycle_count()
    }

    /// `Σ dimension · multiplicity`; always `n²`.
    pub fn balance(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.dimension * e.multiplicity)
            .sum()
    }

    pub fn eigenvalue_multiplicity(&self, root: RootOfUnity) -> usize {
        self.entries
            .iter()
            .find(|e| e.label == ModuleLabel::Eigenvalue { root })
            .map_or(0, |e| e.multiplicity)
    }

    pub fn signature(&self) -> WedderburnSignature {
        wedderburn_signature(self.cycle_count(), self.roots.len())
    }
}

/// Module table for a square of order `n ≥ 5` whose `π` has the given
/// cycle structure. Orders up to 4 are refused: at `n = 4` the one-dim
/// multiplicity `n² − 6n + 7` would be `−1`.
pub fn module_table(n: usize, cycles: &CycleStructure) -> Result<ModuleTable> {
    if n < 5 {
        return Err(Error::OrderTooSmall { order: n, minimum: 5 });
    }
    if cycles.degree() != n - 1 {
        return Err(Error::CycleMismatch {
            expected: n - 1,
            found: cycles.degree(),
        });
    }
    let lengths: Vec<u64> = cycles.lengths().map(|l| l as u64).collect();
    let k = lengths.len();

    let roots: BTreeSet<RootOfUnity> = cycles
        .iter()
        .flat_map(|(len, _)| RootOfUnity::all_of_order_dividing(len as u64))
        .collect();

    let mut entries = vec![
        ModuleEntry {
            dimension: 5,
            multiplicity: 1,
            label: ModuleLabel::Primary,
        },
        ModuleEntry {
            dimension: 1,
            multiplicity: n * n + 7 - 6 * n,
            label: ModuleLabel::OneDim,
        },
    ];
    for &root in roots.iter().filter(|r| !r.is_one()) {
        let multiplicity = lengths.iter().filter(|&&l| root.is_root_of(l)).count();
        entries.push(ModuleEntry {
            dimension: 6,
            multiplicity,
            label: ModuleLabel::Eigenvalue { root },
        });
    }
    if k > 1 {
        entries.push(ModuleEntry {
            dimension: 6,
            multiplicity: k - 1,
            label: ModuleLabel::ClassIv,
        });
    }
    Ok(ModuleTable {
        order: n,
        cycles: cycles.clone(),
        roots: roots.into_iter().collect(),
        entries,
    })
}

/// `M_5 ⊕ M_6^N ⊕ M_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedderburnSignature {
    /// `N`, the number of 6-dimensional summands.
    pub sixes: usize,
}

impl WedderburnSignature {
    /// Summand sizes in canonical order `5, 6, …, 6, 1`.
    pub fn summands(&self) -> Vec<usize> {
        let mut s = vec![5];
        s.extend(std::iter::repeat_n(6, self.sixes));
        s.push(1);
        s
    }

    /// `25 + 36N + 1`.
    pub fn algebra_dimension(&self) -> usize {
        self.summands().iter().map(|d| d * d).sum()
    }

    /// Number of summands, which is the dimension of the centre.
    pub fn center_dimension(&self) -> usize {
        self.sixes + 2
    }
}

impl fmt::Display for WedderburnSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands().iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `N = |U| − 1` if `k = 1`, else `N = |U|`.
pub fn wedderburn_signature(cycle_count: usize, roots: usize) -> WedderburnSignature {
    let sixes = if cycle_count == 1 { roots - 1 } else { roots };
    WedderburnSignature { sixes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, cs: &str) -> ModuleTable {
        module_table(n, &cs.parse().unwrap()).unwrap()
    }

    fn entry(dimension: usize, multiplicity: usize, label: ModuleLabel) -> ModuleEntry {
        ModuleEntry {
            dimension,
            multiplicity,
            label,
        }
    }

    const MINUS: ModuleLabel = ModuleLabel::Eigenvalue {
        root: RootOfUnity::MINUS_ONE,
    };

    #[test]
    fn order_eight_one_two_cubed() {
        let t = table(8, "1 2^3");
        assert_eq!(
            t.entries,
            vec![
                entry(5, 1, ModuleLabel::Primary),
                entry(1, 23, ModuleLabel::OneDim),
                entry(6, 3, MINUS),
                entry(6, 3, ModuleLabel::ClassIv),
            ]
        );
        assert_eq!(t.balance(), 64);
        assert_eq!(t.roots, vec![RootOfUnity::ONE, RootOfUnity::MINUS_ONE]);
        let sig = t.signature();
        assert_eq!(sig.sixes, 2);
        assert_eq!(sig.summands(), vec![5, 6, 6, 1]);
        assert_eq!(sig.algebra_dimension(), 98);
    }

    #[test]
    fn order_seven_tables() {
        let t = table(7, "2^3");
        assert_eq!(
            t.entries,
            vec![
                entry(5, 1, ModuleLabel::Primary),
                entry(1, 14, ModuleLabel::OneDim),
                entry(6, 3, MINUS),
                entry(6, 2, ModuleLabel::ClassIv),
            ]
        );
        assert_eq!(t.balance(), 49);

        let t = table(7, "1^4 2");
        assert_eq!(
            t.entries,
            vec![
                entry(5, 1, ModuleLabel::Primary),
                entry(1, 14, ModuleLabel::OneDim),
                entry(6, 1, MINUS),
                entry(6, 4, ModuleLabel::ClassIv),
            ]
        );
        assert_eq!(t.balance(), 49);
    }

    #[test]
    fn single_six_cycle() {
        let t = table(7, "6");
        assert_eq!(t.cycle_count(), 1);
        assert_eq!(t.roots.len(), 6);
        assert!(t.entries.iter().all(|e| e.label != ModuleLabel::ClassIv));
        let sig = t.signature();
        assert_eq!(sig.sixes, 5);
        assert_eq!(sig.algebra_dimension(), 206);
        assert_eq!(t.balance(), 49);
    }

    #[test]
    fn identity_permutation() {
        for n in 5..10 {
            let t = module_table(n, &CycleStructure::from_lengths(vec![1; n - 1])).unwrap();
            let sig = t.signature();
            assert_eq!(sig.sixes, 1);
            assert_eq!(sig.algebra_dimension(), 62);
        }
    }

    #[test]
    fn refuses_small_orders_and_bad_cycles() {
        assert_eq!(
            module_table(4, &"1 2".parse().unwrap()),
            Err(Error::OrderTooSmall { order: 4, minimum: 5 })
        );
        assert!(matches!(
            module_table(8, &"1^3 2".parse().unwrap()),
            Err(Error::CycleMismatch { expected: 7, found: 5 })
        ));
    }

    #[test]
    fn roots_are_exact() {
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::new(6, 6), RootOfUnity::ONE);
        let u: BTreeSet<_> = [4u64, 6]
            .iter()
            .flat_map(|&m| RootOfUnity::all_of_order_dividing(m))
            .collect();
        // 4th and 6th roots share only ±1
        assert_eq!(u.len(), 8);
        assert!(RootOfUnity::new(1, 3) < RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::new(1, 3).to_string(), "exp(2pi i 1/3)");
    }

    #[test]
    fn mixed_lengths() {
        // n = 10, lengths 3 + 6: U = 6th roots, k = 2, N = 6
        let t = table(10, "3 6");
        assert_eq!(t.roots.len(), 6);
        assert_eq!(t.eigenvalue_multiplicity(RootOfUnity::new(1, 3)), 2);
        assert_eq!(t.eigenvalue_multiplicity(RootOfUnity::MINUS_ONE), 1);
        assert_eq!(t.signature().sixes, 6);
        assert_eq!(t.balance(), 100);
    }
}

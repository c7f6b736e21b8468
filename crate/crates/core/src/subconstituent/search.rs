//! Randomized search for small loops with the right inverse property, used
//! to exercise the square-root criterion on loops that are not right Bol.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::quasigroup::{right_bol_counterexample, LatinSquare, Symbol};
use crate::scheme::{orthogonal_array, Point};

use super::converse::pi_square_criteria;

/// Backtracking state for filling a loop table with identity 1 and a
/// fixed inverse involution `J`, keeping `(ab)J(b) = a` as an invariant.
struct Filler {
    n: usize,
    inv: Vec<Symbol>,
    cells: Vec<Symbol>,
    row_has: Vec<bool>,
    col_has: Vec<bool>,
    trail: Vec<(usize, usize, Symbol)>,
}

impl Filler {
    fn new(n: usize, inv: Vec<Symbol>) -> Self {
        Filler {
            n,
            inv,
            cells: vec![0; n * n],
            row_has: vec![false; n * (n + 1)],
            col_has: vec![false; n * (n + 1)],
            trail: Vec::new(),
        }
    }

    fn get(&self, a: usize, b: usize) -> Symbol {
        self.cells[(a - 1) * self.n + (b - 1)]
    }

    /// Sets `a·b = x` and everything the inverse property forces.
    fn assign(&mut self, a: usize, b: usize, x: Symbol) -> bool {
        let mut stack = vec![(a, b, x)];
        while let Some((a, b, x)) = stack.pop() {
            let cur = self.get(a, b);
            if cur == x {
                continue;
            }
            if cur != 0
                || self.row_has[(a - 1) * (self.n + 1) + x]
                || self.col_has[(b - 1) * (self.n + 1) + x]
            {
                return false;
            }
            self.cells[(a - 1) * self.n + (b - 1)] = x;
            self.row_has[(a - 1) * (self.n + 1) + x] = true;
            self.col_has[(b - 1) * (self.n + 1) + x] = true;
            self.trail.push((a, b, x));
            stack.push((x, self.inv[b - 1], a));
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (a, b, x) = self.trail.pop().expect("nonempty");
            self.cells[(a - 1) * self.n + (b - 1)] = 0;
            self.row_has[(a - 1) * (self.n + 1) + x] = false;
            self.col_has[(b - 1) * (self.n + 1) + x] = false;
        }
    }

    fn candidates(&self, a: usize, b: usize) -> Vec<Symbol> {
        (1..=self.n)
            .filter(|&x| {
                !self.row_has[(a - 1) * (self.n + 1) + x] && !self.col_has[(b - 1) * (self.n + 1) + x]
            })
            .collect()
    }

    fn solve<R: Rng>(&mut self, rng: &mut R, budget: &mut usize) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        // most constrained empty cell
        let mut best: Option<(usize, usize, Vec<Symbol>)> = None;
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.get(a, b) != 0 {
                    continue;
                }
                let cand = self.candidates(a, b);
                if best.as_ref().is_none_or(|(_, _, c)| cand.len() < c.len()) {
                    best = Some((a, b, cand));
                }
            }
        }
        let Some((a, b, mut cand)) = best else {
            return true;
        };
        cand.shuffle(rng);
        for x in cand {
            let mark = self.trail.len();
            if self.assign(a, b, x) && self.solve(rng, budget) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

fn random_involution<R: Rng>(n: usize, rng: &mut R) -> Vec<Symbol> {
    let mut inv: Vec<Symbol> = (1..=n).collect();
    let mut rest: Vec<Symbol> = (2..=n).collect();
    rest.shuffle(rng);
    let mut i = 0;
    while i < rest.len() {
        if i + 1 < rest.len() && rng.gen_bool(0.5) {
            inv[rest[i] - 1] = rest[i + 1];
            inv[rest[i + 1] - 1] = rest[i];
            i += 2;
        } else {
            i += 1;
        }
    }
    inv
}

/// A random loop of order `n` with identity 1 and the right inverse
/// property, or `None` if the search ran out of nodes.
pub fn random_rip_loop<R: Rng>(n: usize, rng: &mut R, node_budget: usize) -> Option<LatinSquare> {
    let inv = random_involution(n, rng);
    let mut filler = Filler::new(n, inv);
    for b in 1..=n {
        if !filler.assign(1, b, b) || !filler.assign(b, 1, b) {
            return None;
        }
    }
    let mut budget = node_budget;
    if !filler.solve(rng, &mut budget) {
        return None;
    }
    let rows: Vec<Vec<Symbol>> = filler.cells.chunks(n).map(<[Symbol]>::to_vec).collect();
    LatinSquare::from_rows(&rows).ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub loops: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            loops: 40,
            min_order: 5,
            max_order: 8,
            seed: 0x5eed,
        }
    }
}

/// A base point and column where `π²(c) ≠ c` in a loop with the right
/// inverse property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub square: String,
    pub base: Point,
    pub column: Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub loops_found: usize,
    pub non_bol_loops: usize,
    pub criteria_checked: usize,
    pub disagreements: usize,
    /// First violation found, if any.
    pub violation: Option<Violation>,
}

/// Draws random RIP loops and evaluates the square-root criterion at every
/// base point and column, counting any disagreement between its two sides.
pub fn search_rip_loops(config: &SearchConfig) -> SearchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = SearchReport {
        config: config.clone(),
        loops_found: 0,
        non_bol_loops: 0,
        criteria_checked: 0,
        disagreements: 0,
        violation: None,
    };
    for _ in 0..config.loops {
        let n = rng.gen_range(config.min_order..=config.max_order);
        let Some(square) = random_rip_loop(n, &mut rng, 20_000) else {
            continue;
        };
        report.loops_found += 1;
        if right_bol_counterexample(&square).is_some() {
            report.non_bol_loops += 1;
        }
        for base in orthogonal_array(&square) {
            let criteria = pi_square_criteria(&square, &base).expect("generated loop has RIP");
            for (c, crit) in criteria {
                report.criteria_checked += 1;
                if !crit.agrees() {
                    report.disagreements += 1;
                }
                if !crit.pi_squared_fixes && report.violation.is_none() {
                    report.violation = Some(Violation {
                        square: square.to_text(),
                        base,
                        column: c,
                    });
                }
            }
        }
    }
    report
}

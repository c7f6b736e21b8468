//! The base-point permutation `π_{L,p}` and everything derived from it.

mod bol;
mod converse;
mod cycles;
mod modules;
mod pi;
pub mod search;

use rayon::prelude::*;

pub use bol::{
    bol_pi_formula, fixed_point_profile, identity_base_cycles, moufang_fixed_prediction,
    IdentityCycle, Profile,
};
pub use converse::{
    pi_square_criteria, pi_square_criterion, right_bol_certificate, Certificate,
    HypothesisFailure, SquareCriterion,
};
pub use cycles::CycleStructure;
pub use modules::{
    module_table, wedderburn_signature, ModuleEntry, ModuleLabel, ModuleTable, RootOfUnity,
    WedderburnSignature,
};
pub use pi::{cycle_structure, pi_of, pi_via_division, SubPermutation};

use crate::error::{Error, Result};
use crate::quasigroup::LatinSquare;
use crate::scheme::{orthogonal_array, Point};

/// Evaluates `f` at every base point, in row-major order. `threads = None`
/// uses rayon's default pool sizing.
pub fn for_each_base_point<T, F>(square: &LatinSquare, threads: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Point) -> T + Sync + Send,
{
    let points = orthogonal_array(square);
    let run = || points.par_iter().map(|&p| f(p)).collect::<Vec<T>>();
    match threads {
        None => Ok(run()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?;
            Ok(pool.install(run))
        }
    }
}

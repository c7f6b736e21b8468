//! Latin squares as quasigroups, their four-class association schemes, and
//! the Terwilliger algebra of the scheme at a base point.
//!
//! The central object is the permutation `π_{L,p}` a base point `p` induces
//! on the `n − 1` columns other than its own. Its cycle structure fixes the
//! Wedderburn decomposition of the Terwilliger algebra `T_p` for `n ≥ 5`;
//! [`oracle`] checks that prediction by building `T_p` explicitly.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod quasigroup;
pub mod report;
pub mod scheme;
pub mod subconstituent;
pub mod transforms;

pub use error::{Error, Result};
pub use quasigroup::{LatinSquare, Symbol};
pub use scheme::Point;

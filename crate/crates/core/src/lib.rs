//! Radii of starlikeness of the Bloch class.
//!
//! For nine target regions in the right half-plane, this crate computes the
//! largest `R` such that `z f'(z)/f(z)` stays in the region for every Bloch
//! function `f` and `|z| < R`. Each radius is obtained three ways and
//! cross-checked:
//!
//! - roots of the quadratic that closes the disc-bound argument
//!   ([`solver::solve_closed_form`]),
//! - root solving `ρ(r) = r_c(C(r))` with the inscribed-disc formulas
//!   ([`solver::solve_branch`]),
//! - a purely numerical disc-inclusion oracle ([`solver::solve_oracle`]).

pub mod bonk;
pub mod certify;
pub mod cli;
pub mod error;
pub mod output;
pub mod regions;
pub mod roots;
pub mod solver;

pub use bonk::{BonkDisc, ExtremalFunction};
pub use error::{Error, Result};
pub use regions::{BoundaryCurve, Membership, RegionId, RegionSpec};
pub use solver::{Method, RadiusResult};

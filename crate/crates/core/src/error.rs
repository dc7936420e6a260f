use num_complex::Complex64;
use thiserror::Error;

use crate::regions::RegionId;

/// Errors raised by the disc geometry, region catalog, and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {value} is outside the domain [{lo}, {hi})")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("denominator vanishes at z = {z}")]
    SingularDenominator { z: Complex64 },

    #[error("point {w} lies within {tol:e} of a curve sample")]
    OnCurve { w: Complex64, tol: f64 },

    #[error("center {c} is outside the valid interval ({lo}, {hi}) for region {region}")]
    CenterOutsideInterval {
        region: RegionId,
        c: f64,
        lo: f64,
        hi: f64,
    },

    #[error("point {c} is not interior to region {region}")]
    NotInterior { region: RegionId, c: f64 },

    #[error("{op} is not supported for region {region}")]
    Unsupported { region: RegionId, op: &'static str },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("no sign change of {what} found on the scanned interval")]
    NoBracket { what: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

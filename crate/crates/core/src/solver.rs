//! Three independent routes to the Bloch starlikeness radius of a region.
//!
//! The disc `|w − C(r)| ≤ ρ(r)` must fit inside the region. Since `C`
//! increases from 1 and the inscribed radius `r_c` shrinks on the active
//! branch, the radius is the first `r` where `ρ(r) = r_c(C(r))`.

use std::f64::consts::{E, PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bonk::{self, SQRT_3, STARLIKE_RADIUS};
use crate::error::{Error, Result};
use crate::regions::{Membership, RegionId};
use crate::roots::{bisect, scan_sign_change, Quadratic};

pub const SCAN_STEP: f64 = 1e-3;
pub const MAX_BISECTION_STEPS: usize = 200;
pub const DEFAULT_BRANCH_TOL: f64 = 1e-12;
pub const DEFAULT_ORACLE_TOL: f64 = 1e-6;
pub const DEFAULT_RAYS: usize = 2048;
pub const MIN_RAYS: usize = 256;
/// Every region fits in `|w − c| < 4` for the centers that occur.
pub const RAY_CAP: f64 = 4.0;
/// Per-ray exit tolerance of the oracle.
pub const RAY_TOL: f64 = 1e-10;
const RAY_MARCH: f64 = 1.0 / 64.0;
/// The oracle cannot resolve `r` below its ray tolerance; 40 halvings of
/// `[0, 1/√3]` is already below `1e-12`.
pub const ORACLE_MAX_STEPS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Branch,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ClosedForm, Method::Branch, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Branch => "branch",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub region: RegionId,
    pub method: Method,
    pub value: f64,
    /// Absolute value of the defining equation at `value`.
    pub residual: f64,
    pub iterations: usize,
}

/// The quadratic whose smallest positive root is the radius, for the four
/// regions where the inclusion argument closes in a polynomial.
pub fn closed_form_polynomial(id: RegionId) -> Option<Quadratic> {
    let q = match id {
        RegionId::Exp => Quadratic::new(2.0, 3.0 * SQRT_3 * (E - 1.0), 3.0 * (1.0 - E)),
        RegionId::Cardioid => Quadratic::new(1.0, 3.0 * SQRT_3, -3.0),
        RegionId::Lune => Quadratic::new(
            2.0 - 2.0 * SQRT_2,
            SQRT_3 * (3.0 * SQRT_2 - 6.0),
            3.0 * (2.0 - SQRT_2),
        ),
        RegionId::Rational => Quadratic::new(
            4.0 * (1.0 - SQRT_2),
            3.0 * SQRT_3 * (2.0 * SQRT_2 - 3.0),
            3.0 * (3.0 - 2.0 * SQRT_2),
        ),
        _ => return None,
    };
    Some(q)
}

pub fn solve_closed_form(id: RegionId) -> Result<RadiusResult> {
    if id == RegionId::HalfPlane {
        return Ok(RadiusResult {
            region: id,
            method: Method::ClosedForm,
            value: STARLIKE_RADIUS,
            residual: bonk::gap(STARLIKE_RADIUS)?.abs(),
            iterations: 0,
        });
    }
    let poly = closed_form_polynomial(id).ok_or(Error::Unsupported {
        region: id,
        op: "closed-form radius",
    })?;

    let (lo, hi) = poly.real_roots().ok_or(Error::NoBracket {
        what: "closed-form quadratic",
    })?;
    let root = [lo, hi]
        .into_iter()
        .find(|&x| x > 0.0 && x < STARLIKE_RADIUS)
        .ok_or(Error::NoBracket {
            what: "closed-form quadratic",
        })?;

    // Independent route: first sign change of the polynomial from 0.
    let sign = poly.eval(0.0).signum();
    let ((a, b), scans) = scan_sign_change(
        |x| Ok(-sign * poly.eval(x)),
        0.0,
        STARLIKE_RADIUS,
        SCAN_STEP,
    )?;
    let (scanned, halvings) = bisect(
        |x| Ok(-sign * poly.eval(x)),
        a,
        b,
        1e-14,
        MAX_BISECTION_STEPS,
    )?;
    if (scanned - root).abs() > 1e-12 {
        return Err(Error::NoConvergence {
            what: "closed-form root cross-check",
            iterations: scans + halvings,
        });
    }

    Ok(RadiusResult {
        region: id,
        method: Method::ClosedForm,
        value: root,
        residual: poly.eval(root).abs(),
        iterations: scans + halvings,
    })
}

/// `g(r) = ρ(r) − r_c(C(r))` on the closed interval `[0, 1/√3]`.
pub fn branch_function(id: RegionId, r: f64) -> Result<f64> {
    if !(0.0..=STARLIKE_RADIUS).contains(&r) {
        return Err(Error::OutOfDomain {
            value: r,
            lo: 0.0,
            hi: STARLIKE_RADIUS,
        });
    }
    let disc = bonk::BonkDisc::extended(r);
    Ok(disc.radius - id.spec().inscribed_radius(disc.center)?)
}

pub fn solve_branch(id: RegionId, tol: f64) -> Result<RadiusResult> {
    let g = |r: f64| branch_function(id, r);
    // At r = 1/√3 the half-plane equation holds only up to rounding.
    let g_scan = |r: f64| {
        let v = g(r)?;
        Ok(if r == STARLIKE_RADIUS && v.abs() <= 1e-12 {
            0.0
        } else {
            v
        })
    };
    let ((a, b), scans) = scan_sign_change(g_scan, 0.0, STARLIKE_RADIUS, SCAN_STEP)?;
    let (root, halvings) = bisect(g, a, b, tol, MAX_BISECTION_STEPS)?;
    Ok(RadiusResult {
        region: id,
        method: Method::Branch,
        value: root,
        residual: g(root)?.abs(),
        iterations: scans + halvings,
    })
}

/// Length along the ray `c + s e^{iθ}` at which the region is first left,
/// capped at [`RAY_CAP`].
fn ray_exit(id: RegionId, c: f64, theta: f64) -> f64 {
    let dir = Complex64::from_polar(1.0, theta);
    let outside = |s: f64| {
        Membership::from_defect(id.defect(Complex64::new(c, 0.0) + s * dir)) == Membership::Outside
    };
    let mut inner = 0.0;
    let mut s = RAY_MARCH;
    loop {
        if outside(s) {
            break;
        }
        if s >= RAY_CAP {
            return RAY_CAP;
        }
        inner = s;
        s = (s + RAY_MARCH).min(RAY_CAP);
    }
    let mut outer = s;
    while outer - inner > RAY_TOL {
        let mid = 0.5 * (inner + outer);
        if outside(mid) {
            outer = mid;
        } else {
            inner = mid;
        }
    }
    0.5 * (inner + outer)
}

/// Numerical inscribed radius: the shortest exit distance over `angles`
/// equally spaced rays from the real point `c`.
pub fn distance_to_complement(id: RegionId, c: f64, angles: usize) -> Result<f64> {
    if angles < MIN_RAYS {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_RAYS} rays are required, got {angles}"
        )));
    }
    if Membership::from_defect(id.defect(Complex64::new(c, 0.0))) != Membership::Inside {
        return Err(Error::NotInterior { region: id, c });
    }
    // Exit lengths are computed exactly per ray; min is order independent.
    Ok((0..angles)
        .into_par_iter()
        .map(|k| ray_exit(id, c, 2.0 * PI * k as f64 / angles as f64))
        .reduce(|| f64::INFINITY, f64::min))
}

pub fn solve_oracle(id: RegionId, tol: f64) -> Result<RadiusResult> {
    solve_oracle_with(id, tol, DEFAULT_RAYS)
}

/// Bisection on `r` of "the disc at `r` fits", tested as
/// `distance_to_complement(C(r)) ≥ ρ(r)`. Returns the largest passing `r`.
pub fn solve_oracle_with(id: RegionId, tol: f64, rays: usize) -> Result<RadiusResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let slack = |r: f64| -> Result<f64> {
        let disc = bonk::BonkDisc::at(r)?;
        match distance_to_complement(id, disc.center, rays) {
            Ok(d) => Ok(d - disc.radius),
            Err(Error::NotInterior { .. }) => Ok(f64::NEG_INFINITY),
            Err(e) => Err(e),
        }
    };
    let (mut lo, mut hi) = (0.0, STARLIKE_RADIUS);
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations == ORACLE_MAX_STEPS {
            return Err(Error::NoConvergence {
                what: "disc-inclusion oracle",
                iterations,
            });
        }
        let mid = 0.5 * (lo + hi);
        if slack(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(RadiusResult {
        region: id,
        method: Method::Oracle,
        value: lo,
        residual: slack(lo)?.abs(),
        iterations,
    })
}

pub fn solve(id: RegionId, method: Method, tol: Option<f64>) -> Result<RadiusResult> {
    match method {
        Method::ClosedForm => solve_closed_form(id),
        Method::Branch => solve_branch(id, tol.unwrap_or(DEFAULT_BRANCH_TOL)),
        Method::Oracle => solve_oracle(id, tol.unwrap_or(DEFAULT_ORACLE_TOL)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_form_values() {
        let cases = [
            (RegionId::Exp, 0.517387),
            (RegionId::Cardioid, 0.524423),
            (RegionId::Lune, 0.507306),
            (RegionId::Rational, 0.349865),
        ];
        for (id, want) in cases {
            let r = solve_closed_form(id).unwrap();
            assert_abs_diff_eq!(r.value, want, epsilon = 5e-7);
            assert!(r.residual < 1e-10, "{id}: {}", r.residual);
        }
        assert_eq!(
            solve_closed_form(RegionId::HalfPlane).unwrap().value,
            STARLIKE_RADIUS
        );
    }

    #[test]
    fn closed_form_rejects_value_only_regions() {
        for id in [
            RegionId::Lemniscate,
            RegionId::Sine,
            RegionId::Nephroid,
            RegionId::Sigmoid,
        ] {
            assert!(matches!(
                solve_closed_form(id),
                Err(Error::Unsupported { .. })
            ));
        }
    }

    #[test]
    fn branch_function_starts_negative() {
        for id in RegionId::ALL {
            let g0 = branch_function(id, 0.0).unwrap();
            assert_abs_diff_eq!(g0, -id.spec().inscribed_radius(1.0).unwrap());
            assert!(g0 < 0.0);
        }
        assert!(branch_function(RegionId::Exp, 0.6).is_err());
    }

    #[test]
    fn branch_halfplane_hits_the_endpoint() {
        let r = solve_branch(RegionId::HalfPlane, DEFAULT_BRANCH_TOL).unwrap();
        assert_abs_diff_eq!(r.value, STARLIKE_RADIUS, epsilon = 1e-12);
    }

    #[test]
    fn branch_tolerance_floor() {
        let r = solve_branch(RegionId::Exp, 1e-20);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn distance_examples() {
        assert_abs_diff_eq!(
            distance_to_complement(RegionId::HalfPlane, 1.0, 256).unwrap(),
            1.0,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            distance_to_complement(RegionId::Exp, 1.0, 256).unwrap(),
            1.0 - 1.0 / E,
            epsilon = 1e-8
        );
        assert!(matches!(
            distance_to_complement(RegionId::Lemniscate, 1.5, 256),
            Err(Error::NotInterior { .. })
        ));
        assert!(distance_to_complement(RegionId::Exp, 1.0, 16).is_err());
    }

    #[test]
    fn oracle_halfplane() {
        let r = solve_oracle(RegionId::HalfPlane, DEFAULT_ORACLE_TOL).unwrap();
        assert_abs_diff_eq!(r.value, STARLIKE_RADIUS, epsilon = 5e-4);
    }

    #[test]
    fn oracle_unreachable_tolerance() {
        let r = solve_oracle_with(RegionId::HalfPlane, 1e-15, 256);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}

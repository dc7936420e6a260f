//! Sharpness at the extremal function, boundary-flip checks, and the
//! cross-validation report over all regions and methods.

use std::f64::consts::{E, PI, SQRT_2};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bonk::{self, BonkDisc, ExtremalFunction, SQRT_3, STARLIKE_RADIUS};
use crate::error::{Error, Result};
use crate::regions::{Membership, RegionId, BOUNDARY_BAND};
use crate::solver::{self, Method, RadiusResult};

pub const SHARPNESS_TOL: f64 = 1e-9;
pub const FLIP_EPS: f64 = 1e-6;
pub const FLIP_ANGLES: usize = 4096;
pub const BRANCH_AGREEMENT_TOL: f64 = 1e-9;
pub const ORACLE_AGREEMENT_TOL: f64 = 5e-4;
pub const RESIDUAL_TOL: f64 = 1e-10;
pub const ANCHOR_TOL: f64 = 1e-10;
pub const RIGHT_EXTREME_TOL: f64 = 1e-9;

/// Real point where the lune boundary identity is checked:
/// `(2√3 − √6)/2`.
pub fn lune_sharpness_point() -> f64 {
    (2.0 * SQRT_3 - 6.0_f64.sqrt()) / 2.0
}

/// Closed-form radius expressions for the regions whose radius is known as a
/// value rather than as a polynomial root.
pub fn value_only_radius(id: RegionId) -> Option<f64> {
    let sin1 = 1.0_f64.sin();
    match id {
        RegionId::HalfPlane => Some(1.0 / SQRT_3),
        RegionId::Lemniscate => Some((2.0 * SQRT_3 - 6.0_f64.sqrt()) / 4.0),
        RegionId::Sine => Some(SQRT_3 * sin1 / (2.0 + 2.0 * sin1)),
        RegionId::Nephroid => Some(SQRT_3 / 5.0),
        RegionId::Sigmoid => Some(SQRT_3 * (E - 1.0) / (4.0 * E)),
        _ => None,
    }
}

pub fn sharpness_claimed(id: RegionId) -> bool {
    matches!(
        id,
        RegionId::Exp | RegionId::Cardioid | RegionId::Lune | RegionId::Rational
    )
}

/// Defect of the extremal quotient `w₀` against the region boundary at the
/// certified radius.
pub fn check_sharpness(id: RegionId) -> Result<f64> {
    if !sharpness_claimed(id) {
        return Err(Error::Unsupported {
            region: id,
            op: "sharpness check",
        });
    }
    let radius = solver::solve_closed_form(id)?.value;
    let w0 = |x: f64| ExtremalFunction.ratio(Complex64::new(x, 0.0));
    let residual = match id {
        RegionId::Exp => (w0(radius)?.ln().norm() - 1.0).abs(),
        RegionId::Cardioid => (w0(radius)? - 1.0 / 3.0).norm(),
        RegionId::Rational => (w0(radius)? - (2.0 * SQRT_2 - 2.0)).norm(),
        RegionId::Lune => {
            let w = w0(lune_sharpness_point())?;
            ((w * w - 1.0).norm() - 2.0 * w.norm()).abs()
        }
        _ => unreachable!(),
    };
    Ok(residual)
}

/// True when the disc bound just below `r` stays in the closed region and
/// just above `r` pokes out by more than the boundary band.
pub fn boundary_flip(id: RegionId, r: f64) -> bool {
    let (below, above) = (r - FLIP_EPS, r + FLIP_EPS);
    if below < 0.0 || above >= SQRT_3 / 2.0 {
        return false;
    }
    let angles = |disc: BonkDisc| {
        (0..FLIP_ANGLES).map(move |k| disc.point(2.0 * PI * k as f64 / FLIP_ANGLES as f64))
    };
    let inner = BonkDisc::extended(below);
    let inner_ok = id.defect(Complex64::new(inner.center, 0.0)) < 0.0
        && angles(inner).all(|w| Membership::from_defect(id.defect(w)) != Membership::Outside);
    let outer_leaves = angles(BonkDisc::extended(above)).any(|w| id.defect(w) > BOUNDARY_BAND);
    inner_ok && outer_leaves
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sharpness {
    NotClaimed,
    Residual(f64),
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Flag {
    pub name: &'static str,
    pub passed: bool,
}

impl Flag {
    fn new(name: &'static str, passed: bool) -> Self {
        Self { name, passed }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodOutcome {
    pub method: Method,
    pub result: std::result::Result<RadiusResult, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertEntry {
    pub region: RegionId,
    pub radii: Vec<MethodOutcome>,
    pub sharpness: Sharpness,
    pub flip: bool,
    pub flags: Vec<Flag>,
}

impl CertEntry {
    pub fn radius(&self, method: Method) -> Option<f64> {
        self.radii
            .iter()
            .find(|o| o.method == method)
            .and_then(|o| o.result.as_ref().ok())
            .map(|r| r.value)
    }

    /// The radius the entry is certified at: closed form when available,
    /// otherwise the branch solution.
    pub fn certified(&self) -> Option<f64> {
        self.radius(Method::ClosedForm)
            .or_else(|| self.radius(Method::Branch))
    }

    pub fn passed(&self) -> bool {
        self.radii.iter().all(|o| o.result.is_ok())
            && self.flip
            && self.flags.iter().all(|f| f.passed)
            && match self.sharpness {
                Sharpness::NotClaimed => true,
                Sharpness::Residual(x) => x < SHARPNESS_TOL,
                Sharpness::Failed(_) => false,
            }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertReport {
    pub entries: Vec<CertEntry>,
    /// Disc-geometry checks that do not depend on a region.
    pub core_flags: Vec<Flag>,
    pub overall: bool,
}

#[derive(Debug, Clone)]
pub struct CertOptions {
    pub regions: Vec<RegionId>,
    pub branch_tol: f64,
    pub oracle_tol: f64,
    pub rays: usize,
}

impl Default for CertOptions {
    fn default() -> Self {
        Self {
            regions: RegionId::ALL.to_vec(),
            branch_tol: solver::DEFAULT_BRANCH_TOL,
            oracle_tol: solver::DEFAULT_ORACLE_TOL,
            rays: solver::DEFAULT_RAYS,
        }
    }
}

fn applicable_methods(id: RegionId) -> &'static [Method] {
    if id == RegionId::HalfPlane || solver::closed_form_polynomial(id).is_some() {
        &Method::ALL
    } else {
        &[Method::Branch, Method::Oracle]
    }
}

/// Grid check of the inscribed-disc formula: discs shrunk by 0.1% stay in,
/// discs grown by 1% leave somewhere.
pub fn inclusion_grid(id: RegionId, centers: usize, angles: usize) -> (bool, bool) {
    let spec = id.spec();
    let (lo, hi) = match spec.c_interval {
        (lo, hi) if hi.is_finite() => (lo, hi),
        (lo, _) => (lo, lo + solver::RAY_CAP),
    };
    let mut sound = true;
    let mut tight = true;
    for i in 1..=centers {
        let c = lo + (hi - lo) * i as f64 / (centers + 1) as f64;
        let Ok(rc) = spec.inscribed_radius(c) else {
            return (false, false);
        };
        let at = |scale: f64, k: usize| {
            let w = Complex64::new(c, 0.0)
                + Complex64::from_polar(scale * rc, 2.0 * PI * k as f64 / angles as f64);
            Membership::from_defect(id.defect(w))
        };
        sound &= (0..angles).all(|k| at(0.999, k) != Membership::Outside);
        tight &= (0..angles).any(|k| at(1.01, k) == Membership::Outside);
    }
    (sound, tight)
}

/// `|r_c(b − ε) − r_c(b + ε)| < 2ε` at the branch point, or `None` for
/// single-branch regions.
pub fn branch_continuity(id: RegionId, eps: f64) -> Option<bool> {
    let spec = id.spec();
    let b = spec.branch_point?;
    let left = spec.inscribed_radius(b - eps).ok()?;
    let right = spec.inscribed_radius(b + eps).ok()?;
    Some((left - right).abs() < 2.0 * eps)
}

fn anchors(id: RegionId, r: f64) -> Option<bool> {
    let disc = BonkDisc::at(r).ok()?;
    let near = |a: f64, b: f64, tol: f64| (a - b).abs() < tol;
    match id {
        RegionId::Lune => Some(
            near(disc.center, SQRT_2, ANCHOR_TOL)
                && near(disc.radius, 1.0, ANCHOR_TOL)
                && near(lune_sharpness_point(), r, ANCHOR_TOL),
        ),
        RegionId::Nephroid => Some(
            near(disc.center, 1.25, ANCHOR_TOL)
                && near(disc.radius, 5.0 / 12.0, ANCHOR_TOL)
                && near(disc.right_end(), 5.0 / 3.0, RIGHT_EXTREME_TOL),
        ),
        RegionId::Lemniscate | RegionId::Sine | RegionId::Sigmoid => Some(near(
            disc.right_end(),
            id.spec().right_extreme,
            RIGHT_EXTREME_TOL,
        )),
        _ => None,
    }
}

fn certify_region(id: RegionId, opts: &CertOptions) -> CertEntry {
    let radii: Vec<MethodOutcome> = applicable_methods(id)
        .iter()
        .map(|&method| {
            let result = match method {
                Method::ClosedForm => solver::solve_closed_form(id),
                Method::Branch => solver::solve_branch(id, opts.branch_tol),
                Method::Oracle => solver::solve_oracle_with(id, opts.oracle_tol, opts.rays),
            };
            MethodOutcome {
                method,
                result: result.map_err(|e| e.to_string()),
            }
        })
        .collect();

    let get = |m: Method| {
        radii
            .iter()
            .find(|o| o.method == m)
            .and_then(|o| o.result.as_ref().ok())
    };
    let reference = get(Method::ClosedForm)
        .map(|r| r.value)
        .or_else(|| value_only_radius(id));
    let mut flags = Vec::new();

    let agreement = match (reference, get(Method::Branch), get(Method::Oracle)) {
        (Some(x), Some(b), Some(o)) => {
            (x - b.value).abs() < BRANCH_AGREEMENT_TOL && (x - o.value).abs() < ORACLE_AGREEMENT_TOL
        }
        _ => false,
    };
    flags.push(Flag::new("agreement", agreement));

    let residuals = [Method::ClosedForm, Method::Branch]
        .into_iter()
        .filter_map(get)
        .all(|r| r.residual < RESIDUAL_TOL);
    flags.push(Flag::new("residuals", residuals));

    let ordering = radii
        .iter()
        .filter_map(|o| o.result.as_ref().ok())
        .all(|r| r.value > 0.0 && r.value <= STARLIKE_RADIUS + 1e-12);
    flags.push(Flag::new("ordering", ordering));

    if let Some(ok) = branch_continuity(id, 1e-8) {
        flags.push(Flag::new("continuity", ok));
    }

    let (sound, tight) = inclusion_grid(id, 50, 256);
    flags.push(Flag::new("inclusion_sound", sound));
    flags.push(Flag::new("inclusion_tight", tight));

    let certified = get(Method::ClosedForm)
        .or_else(|| get(Method::Branch))
        .map(|r| r.value);
    if let Some(r) = certified {
        if let Some(ok) = anchors(id, r) {
            flags.push(Flag::new("anchors", ok));
        }
    }

    let sharpness = if sharpness_claimed(id) {
        match check_sharpness(id) {
            Ok(x) => Sharpness::Residual(x),
            Err(e) => Sharpness::Failed(e.to_string()),
        }
    } else {
        Sharpness::NotClaimed
    };

    let flip = certified.is_some_and(|r| boundary_flip(id, r));

    CertEntry {
        region: id,
        radii,
        sharpness,
        flip,
        flags,
    }
}

/// Disc-geometry invariants: the `C − ρ = h` identity, monotonicity, the disc
/// bound for `w₀` and for the identity map, and Bloch membership of `f₀`.
pub fn core_flags() -> Vec<Flag> {
    const GRID: usize = 10_000;
    let top = STARLIKE_RADIUS - 1e-9;
    let rs: Vec<f64> = (0..GRID)
        .map(|i| top * i as f64 / (GRID - 1) as f64)
        .collect();
    let discs: Vec<BonkDisc> = rs.iter().map(|&r| BonkDisc::extended(r)).collect();
    let gaps: Vec<f64> = rs.iter().map(|&r| bonk::gap_unchecked(r)).collect();

    let identity = discs
        .iter()
        .zip(&gaps)
        .all(|(d, h)| (d.center - d.radius - h).abs() < 1e-12);
    let monotone = discs
        .windows(2)
        .all(|p| p[1].center > p[0].center && p[1].radius > p[0].radius)
        && gaps.windows(2).all(|p| p[1] < p[0]);

    let disc_bound = [0.1, 0.3, 0.5, 0.55].into_iter().all(|r| {
        let disc = BonkDisc::extended(r);
        (0..2048).all(|k| {
            let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / 2048.0);
            ExtremalFunction
                .ratio(z)
                .is_ok_and(|w| (w - disc.center).norm() <= disc.radius + 1e-9)
        })
    });
    let identity_map = discs.iter().all(|d| (1.0 - d.center).abs() <= d.radius);
    let bloch = bonk::bloch_sup(&ExtremalFunction, 512).is_ok_and(|s| s <= 1.0 + 1e-6);

    vec![
        Flag::new("gap_identity", identity),
        Flag::new("monotonicity", monotone),
        Flag::new("extremal_disc_bound", disc_bound),
        Flag::new("identity_disc_bound", identity_map),
        Flag::new("extremal_bloch", bloch),
    ]
}

pub fn cross_validate(opts: &CertOptions) -> CertReport {
    let entries: Vec<CertEntry> = opts
        .regions
        .par_iter()
        .map(|&id| certify_region(id, opts))
        .collect();
    let core_flags = core_flags();
    let overall = entries.iter().all(CertEntry::passed) && core_flags.iter().all(|f| f.passed);
    CertReport {
        entries,
        core_flags,
        overall,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharpness_residuals() {
        for id in [
            RegionId::Exp,
            RegionId::Cardioid,
            RegionId::Lune,
            RegionId::Rational,
        ] {
            let x = check_sharpness(id).unwrap();
            assert!(x < SHARPNESS_TOL, "{id}: {x}");
        }
        assert!(matches!(
            check_sharpness(RegionId::Sine),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn flip_examples() {
        assert!(boundary_flip(RegionId::Exp, 0.517387));
        assert!(boundary_flip(RegionId::HalfPlane, 0.577350));
        assert!(!boundary_flip(RegionId::Exp, 0.40));
    }

    #[test]
    fn continuity_where_branches_exist() {
        assert_eq!(branch_continuity(RegionId::Lemniscate, 1e-8), None);
        assert_eq!(branch_continuity(RegionId::Cardioid, 1e-8), Some(true));
    }

    #[test]
    fn core_flags_pass() {
        for f in core_flags() {
            assert!(f.passed, "{}", f.name);
        }
    }
}

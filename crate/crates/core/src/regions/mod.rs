//! Catalog of the nine target regions.
//!
//! Each region is the image of the unit disc under a univalent function `φ`
//! with `φ(0) = 1`, symmetric about the real axis. Membership is decided by
//! pulling `w` back through `φ⁻¹` where that inverse is explicit, so the
//! defect `|φ⁻¹(w)| − 1` (or an equivalent implicit form) changes sign
//! linearly across the boundary, cusps included.

mod curve;
mod inverse;

use std::f64::consts::{E, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

pub use curve::{winding_along_row, winding_number, BoundaryCurve, ON_CURVE_TOL};

use crate::error::{Error, Result};

/// Half-width of the boundary band in [`membership`].
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Truncation radius for the half-plane boundary contour.
pub const HALFPLANE_CAP: f64 = 4.0;

/// `k = √2 + 1` in the rational generator `1 + (z² + kz)/(k² − kz)`.
pub const RATIONAL_K: f64 = SQRT_2 + 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionId {
    HalfPlane,
    Exp,
    Cardioid,
    Lune,
    Rational,
    Lemniscate,
    Sine,
    Nephroid,
    Sigmoid,
}

impl RegionId {
    /// Catalog order.
    pub const ALL: [RegionId; 9] = [
        RegionId::HalfPlane,
        RegionId::Exp,
        RegionId::Cardioid,
        RegionId::Lune,
        RegionId::Rational,
        RegionId::Lemniscate,
        RegionId::Sine,
        RegionId::Nephroid,
        RegionId::Sigmoid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionId::HalfPlane => "halfplane",
            RegionId::Exp => "exp",
            RegionId::Cardioid => "cardioid",
            RegionId::Lune => "lune",
            RegionId::Rational => "rational",
            RegionId::Lemniscate => "lemniscate",
            RegionId::Sine => "sine",
            RegionId::Nephroid => "nephroid",
            RegionId::Sigmoid => "sigmoid",
        }
    }

    pub fn spec(self) -> RegionSpec {
        RegionSpec::new(self)
    }

    /// The generating function `φ`, analytic on the closed unit disc except
    /// at the half-plane's pole `z = 1`.
    pub fn map(self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            RegionId::HalfPlane => (one + z) / (one - z),
            RegionId::Exp => z.exp(),
            RegionId::Cardioid => one + z * (4.0 / 3.0) + z * z * (2.0 / 3.0),
            RegionId::Lune => z + (one + z * z).sqrt(),
            RegionId::Rational => {
                let k = RATIONAL_K;
                one + (z * z + k * z) / (k * k - k * z)
            }
            RegionId::Lemniscate => (one + z).sqrt(),
            RegionId::Sine => one + z.sin(),
            RegionId::Nephroid => one + z - z * z * z / 3.0,
            RegionId::Sigmoid => 2.0 / (one + (-z).exp()),
        }
    }

    /// Signed boundary defect of `w`: negative inside, zero on the boundary,
    /// positive outside.
    pub fn defect(self, w: Complex64) -> f64 {
        let one = Complex64::new(1.0, 0.0);
        match self {
            RegionId::HalfPlane => -w.re,
            RegionId::Exp => {
                if w.norm_sqr() == 0.0 {
                    return f64::INFINITY;
                }
                // |arg w| > π/2 already forces |log w| > 1.
                w.ln().norm() - 1.0
            }
            RegionId::Cardioid => {
                // φ(z) = 1/3 + (2/3)(z + 1)², and z + 1 stays in Re > 0.
                (((3.0 * w - 1.0) / 2.0).sqrt() - one).norm() - 1.0
            }
            RegionId::Lune => {
                let d = (w * w - one).norm() - 2.0 * w.norm();
                if w.re < 0.0 {
                    d.max(-w.re)
                } else {
                    d
                }
            }
            RegionId::Rational => {
                // ψ(z) = w  ⇔  z² + k w z − k²(w − 1) = 0. The discriminant
                // k²(w² + 4w − 4) = k²(w − ψ(−1))(w + 2 + 2√2) vanishes at the
                // critical value ψ(−1) = 2√2 − 2, so it is kept factored.
                let k = RATIONAL_K;
                let s = ((w - (2.0 * SQRT_2 - 2.0)) * (w + (2.0 + 2.0 * SQRT_2))).sqrt();
                let plus = w + s;
                let minus = w - s;
                let big = if plus.norm_sqr() >= minus.norm_sqr() {
                    plus
                } else {
                    minus
                };
                let q = -0.5 * k * big;
                let c = -k * k * (w - one);
                if q.norm_sqr() == 0.0 {
                    return -1.0;
                }
                let roots = [q, c / q];
                roots[0].norm().min(roots[1].norm()) - 1.0
            }
            RegionId::Lemniscate => {
                let d = (w * w - one).norm() - 1.0;
                if w.re < 0.0 {
                    d.max(-w.re)
                } else {
                    d
                }
            }
            RegionId::Sine => (w - one).asin().norm() - 1.0,
            RegionId::Nephroid => {
                // z − z³/3 = w − 1  ⇔  z³ − 3z + 3(w − 1) = 0
                // q²/4 + p³/27 = (3w − 5)(3w − 1)/4, zero at the cusps φ(±1).
                let half_disc = (3.0 * w - 5.0) * (3.0 * w - 1.0) / 4.0;
                let roots = inverse::depressed_cubic_roots(
                    Complex64::new(-3.0, 0.0),
                    3.0 * (w - one),
                    half_disc,
                );
                roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min) - 1.0
            }
            RegionId::Sigmoid => {
                let strip = (-w.re).max(w.re - 2.0);
                if w.re == 2.0 && w.im == 0.0 {
                    return f64::INFINITY;
                }
                let d = (w / (2.0 - w)).ln().norm() - 1.0;
                if strip >= 0.0 {
                    d.max(strip)
                } else {
                    d
                }
            }
        }
    }

    /// Closed-form implicit predicate where the region has one: the cardioid
    /// quartic, the nephroid sextic, and the modulus/logarithm forms. `None`
    /// for the rational and sine regions.
    pub fn implicit_defect(self, w: Complex64) -> Option<f64> {
        let (x, y) = (w.re, w.im);
        match self {
            RegionId::Cardioid => {
                // Restrict to the bounded component around 1.
                if (w - 1.0).norm() >= 2.1 {
                    return Some(f64::INFINITY);
                }
                let s = 9.0 * (x * x + y * y);
                let a = s - 18.0 * x + 5.0;
                let b = s - 6.0 * x + 1.0;
                Some(a * a - 16.0 * b)
            }
            RegionId::Nephroid => {
                let u = (x - 1.0) * (x - 1.0) + y * y - 4.0 / 9.0;
                Some(u * u * u - 4.0 / 3.0 * y * y)
            }
            RegionId::Rational | RegionId::Sine => None,
            other => Some(other.defect(w)),
        }
    }

    /// Boundary curve with `n` samples, counterclockwise.
    ///
    /// The half-plane boundary is unbounded; it is truncated to the contour
    /// made of the arc `|w| = 4, Re w ≥ 0` and the imaginary-axis segment
    /// between `±4i`, with `t = π` at the origin.
    pub fn boundary(self, n: usize) -> Result<BoundaryCurve> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "boundary needs at least 3 samples, got {n}"
            )));
        }
        match self {
            RegionId::HalfPlane => {
                let params = curve::circle_params(n);
                let points = params.iter().map(|&t| halfplane_contour(t)).collect();
                BoundaryCurve::new(params, points)
            }
            other => BoundaryCurve::from_circle_map(n, |z| other.map(z)),
        }
    }
}

fn halfplane_contour(t: f64) -> Complex64 {
    let cap = HALFPLANE_CAP;
    if t <= PI / 2.0 {
        Complex64::from_polar(cap, t)
    } else if t < 3.0 * PI / 2.0 {
        Complex64::new(0.0, cap - 2.0 * cap * (t - PI / 2.0) / PI)
    } else {
        Complex64::from_polar(cap, t - 2.0 * PI)
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RegionId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown region `{s}`")))
    }
}

/// Inclusion data for one region: extremes `φ(−1)`, `φ(1)`, the branch
/// point of `r_c`, and the open interval of admissible centers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionSpec {
    pub id: RegionId,
    pub left_extreme: f64,
    pub right_extreme: f64,
    pub branch_point: Option<f64>,
    pub c_interval: (f64, f64),
    pub k: Option<f64>,
}

impl RegionSpec {
    pub fn new(id: RegionId) -> Self {
        let sin1 = 1.0_f64.sin();
        let sig = (E - 1.0) / (E + 1.0);
        let (left, right, branch, interval) = match id {
            RegionId::HalfPlane => (0.0, f64::INFINITY, None, (0.0, f64::INFINITY)),
            RegionId::Exp => (1.0 / E, E, Some((E + 1.0 / E) / 2.0), (1.0 / E, E)),
            RegionId::Cardioid => (1.0 / 3.0, 3.0, Some(5.0 / 3.0), (1.0 / 3.0, 3.0)),
            RegionId::Lune => (
                SQRT_2 - 1.0,
                SQRT_2 + 1.0,
                Some(SQRT_2),
                (SQRT_2 - 1.0, SQRT_2 + 1.0),
            ),
            RegionId::Rational => {
                let lo = 2.0 * (SQRT_2 - 1.0);
                (lo, 2.0, Some(SQRT_2), (lo, 2.0))
            }
            RegionId::Lemniscate => (0.0, SQRT_2, None, (2.0 * SQRT_2 / 3.0, SQRT_2)),
            RegionId::Sine => (1.0 - sin1, 1.0 + sin1, Some(1.0), (1.0 - sin1, 1.0 + sin1)),
            RegionId::Nephroid => (1.0 / 3.0, 5.0 / 3.0, Some(1.0), (1.0 / 3.0, 5.0 / 3.0)),
            RegionId::Sigmoid => (1.0 - sig, 1.0 + sig, Some(1.0), (1.0 - sig, 1.0 + sig)),
        };
        Self {
            id,
            left_extreme: left,
            right_extreme: right,
            branch_point: branch,
            c_interval: interval,
            k: (id == RegionId::Rational).then_some(RATIONAL_K),
        }
    }

    pub fn admits_center(&self, c: f64) -> bool {
        self.c_interval.0 < c && c < self.c_interval.1
    }

    /// Radius `r_c` of a disc centered at real `c` that fits in the region.
    pub fn inscribed_radius(&self, c: f64) -> Result<f64> {
        if !self.admits_center(c) {
            return Err(Error::CenterOutsideInterval {
                region: self.id,
                c,
                lo: self.c_interval.0,
                hi: self.c_interval.1,
            });
        }
        let r = match self.id {
            RegionId::HalfPlane => c,
            RegionId::Exp => {
                if c <= (E + 1.0 / E) / 2.0 {
                    c - 1.0 / E
                } else {
                    E - c
                }
            }
            RegionId::Cardioid => {
                if c <= 5.0 / 3.0 {
                    (3.0 * c - 1.0) / 3.0
                } else {
                    3.0 - c
                }
            }
            RegionId::Lune => 1.0 - (SQRT_2 - c).abs(),
            RegionId::Rational => {
                if c <= SQRT_2 {
                    c - 2.0 * (SQRT_2 - 1.0)
                } else {
                    2.0 - c
                }
            }
            RegionId::Lemniscate => SQRT_2 - c,
            RegionId::Sine => 1.0_f64.sin() - (c - 1.0).abs(),
            RegionId::Nephroid => {
                if c <= 1.0 {
                    c - 1.0 / 3.0
                } else {
                    5.0 / 3.0 - c
                }
            }
            RegionId::Sigmoid => (E - 1.0) / (E + 1.0) - (c - 1.0).abs(),
        };
        Ok(r)
    }
}

pub fn inscribed_radius(id: RegionId, c: f64) -> Result<f64> {
    id.spec().inscribed_radius(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl Membership {
    pub fn from_defect(d: f64) -> Self {
        if d.abs() <= BOUNDARY_BAND {
            Membership::Boundary
        } else if d < 0.0 {
            Membership::Inside
        } else {
            Membership::Outside
        }
    }
}

pub fn membership(id: RegionId, w: Complex64) -> Result<Membership> {
    if !w.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite point {w}")));
    }
    Ok(Membership::from_defect(id.defect(w)))
}

pub fn boundary(id: RegionId, n: usize) -> Result<BoundaryCurve> {
    id.boundary(n)
}

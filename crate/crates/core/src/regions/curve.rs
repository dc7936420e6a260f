use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points closer than this to a curve sample have no reliable winding number.
pub const ON_CURVE_TOL: f64 = 1e-12;

/// An ordered sample of a closed curve. The closing segment from the last
/// point back to the first is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub params: Vec<f64>,
    pub points: Vec<Complex64>,
}

impl BoundaryCurve {
    pub fn new(params: Vec<f64>, points: Vec<Complex64>) -> Result<Self> {
        if params.len() != points.len() || points.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "a closed curve needs matching params and at least 3 points, got {} and {}",
                params.len(),
                points.len()
            )));
        }
        Ok(Self { params, points })
    }

    /// Samples `map(e^{it})` at `n` equally spaced `t` in `[0, 2π)`.
    pub fn from_circle_map<F>(n: usize, map: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let params = circle_params(n);
        let points = params
            .iter()
            .map(|&t| map(Complex64::from_polar(1.0, t)))
            .collect();
        Self::new(params, points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(x_min, x_max, y_min, y_max)` over the samples.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        self.points.iter().fold(
            (
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
            ),
            |(x0, x1, y0, y1), p| (x0.min(p.re), x1.max(p.re), y0.min(p.im), y1.max(p.im)),
        )
    }

    /// Distance from `w` to the closed polyline through the samples.
    pub fn distance(&self, w: Complex64) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| segment_distance(w, self.points[i], self.points[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Signed area by the shoelace formula; positive for counterclockwise.
    pub fn signed_area(&self) -> f64 {
        let n = self.points.len();
        0.5 * (0..n)
            .map(|i| {
                let a = self.points[i];
                let b = self.points[(i + 1) % n];
                a.re * b.im - b.re * a.im
            })
            .sum::<f64>()
    }
}

pub(crate) fn circle_params(n: usize) -> Vec<f64> {
    (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect()
}

fn segment_distance(w: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = ((w - a) * ab.conj()).re / len2;
    (w - (a + ab * t.clamp(0.0, 1.0))).norm()
}

/// Number of times the closed polyline winds around `w`.
///
/// Sums the signed angle subtended by each segment; 1 means inside a
/// counterclockwise curve, 0 outside.
pub fn winding_number(curve: &BoundaryCurve, w: Complex64) -> Result<i64> {
    let n = curve.points.len();
    if curve.points.iter().any(|p| (p - w).norm() < ON_CURVE_TOL) {
        return Err(Error::OnCurve {
            w,
            tol: ON_CURVE_TOL,
        });
    }
    let total: f64 = (0..n)
        .map(|i| {
            let a = curve.points[i] - w;
            let b = curve.points[(i + 1) % n] - w;
            (b / a).arg()
        })
        .sum();
    Ok((total / (2.0 * PI)).round() as i64)
}

/// Winding numbers for many points on the horizontal line `Im w = y` at once.
///
/// Counts signed upward crossings to the right of each point, so it agrees
/// with [`winding_number`] off the curve while costing one pass over the
/// segments per row.
pub fn winding_along_row(curve: &BoundaryCurve, y: f64, xs: &[f64]) -> Vec<i64> {
    let n = curve.points.len();
    let mut crossings: Vec<(f64, i64)> = Vec::new();
    for i in 0..n {
        let a = curve.points[i];
        let b = curve.points[(i + 1) % n];
        let dir = if a.im <= y && b.im > y {
            1
        } else if b.im <= y && a.im > y {
            -1
        } else {
            continue;
        };
        let t = (y - a.im) / (b.im - a.im);
        crossings.push((a.re + t * (b.re - a.re), dir));
    }
    crossings.sort_by(|p, q| p.0.total_cmp(&q.0));
    xs.iter()
        .map(|&x| {
            let first = crossings.partition_point(|c| c.0 <= x);
            crossings[first..].iter().map(|c| c.1).sum()
        })
        .collect()
}

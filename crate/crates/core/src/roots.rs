//! Scalar root finding: a cancellation-safe quadratic, a forward sign-change
//! scan, and bisection.

use crate::error::{Error, Result};

/// `a x² + b x + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Quadratic {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.a * x + self.b) * x + self.c
    }

    /// Real roots in ascending order, or `None` when the discriminant is
    /// negative or the leading coefficient vanishes.
    ///
    /// The larger-magnitude root comes from `q = −(b + sign(b)√D)/2`; the
    /// other is `c/q`, which avoids subtracting nearly equal numbers.
    pub fn real_roots(&self) -> Option<(f64, f64)> {
        if self.a == 0.0 {
            return None;
        }
        let disc = self.b * self.b - 4.0 * self.a * self.c;
        if disc < 0.0 || !disc.is_finite() {
            return None;
        }
        let q = -0.5 * (self.b + disc.sqrt().copysign(self.b));
        if q == 0.0 {
            return Some((0.0, 0.0));
        }
        let (x0, x1) = (q / self.a, self.c / q);
        Some((x0.min(x1), x0.max(x1)))
    }
}

/// Walks `lo, lo + step, …` up to `hi` (always evaluated last) and returns
/// the first interval `[x_prev, x]` on which `f` moves from negative to
/// non-negative, together with the number of evaluations.
pub fn scan_sign_change<F>(mut f: F, lo: f64, hi: f64, step: f64) -> Result<((f64, f64), usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut prev = lo;
    let mut evals = 1;
    if f(lo)? >= 0.0 {
        return Err(Error::NoBracket { what: "scan start" });
    }
    let mut k = 1usize;
    loop {
        let x = (lo + k as f64 * step).min(hi);
        let fx = f(x)?;
        evals += 1;
        if fx >= 0.0 {
            return Ok(((prev, x), evals));
        }
        if x >= hi {
            return Err(Error::NoBracket {
                what: "scanned function",
            });
        }
        prev = x;
        k += 1;
    }
}

/// Bisection for an increasing sign change: `f(lo) < 0 ≤ f(hi)`.
/// Returns the midpoint of the final bracket and the number of halvings.
pub fn bisect<F>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations == max_iter {
            return Err(Error::NoConvergence {
                what: "bisection",
                iterations,
            });
        }
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok((0.5 * (lo + hi), iterations))
}

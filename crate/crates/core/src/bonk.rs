//! Disc geometry for the logarithmic derivative of Bloch functions.
//!
//! For a normalized Bloch function `f` and `|z| = r < 1/√3`, the quotient
//! `z f'(z) / f(z)` lies in the closed disc with center `C(r) = √3/(√3 − r)`
//! and radius `ρ(r) = √3 r / ((√3 − r)(√3 − 2r))`. The leftmost point of that
//! disc, `h(r) = C(r) − ρ(r)`, decreases from 1 at the origin to 0 at `1/√3`.
//!
//! The module also carries the extremal function
//! `f₀(z) = 3z(3 − 2√3 z)/(3 − √3 z)²` whose quotient `w₀` realizes the
//! left end of the disc on the positive real axis.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// `1/√3`, the radius of starlikeness of the Bloch class.
pub const STARLIKE_RADIUS: f64 = 0.577_350_269_189_625_8;

/// Denominators smaller than this are reported instead of divided by.
pub const SINGULAR_THRESHOLD: f64 = 1e-300;

fn check_open(r: f64) -> Result<()> {
    if (0.0..STARLIKE_RADIUS).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            value: r,
            lo: 0.0,
            hi: STARLIKE_RADIUS,
        })
    }
}

// The formulas stay finite up to √3/2; callers outside this crate only see
// the checked versions.
pub(crate) fn center_unchecked(r: f64) -> f64 {
    SQRT_3 / (SQRT_3 - r)
}

pub(crate) fn rho_unchecked(r: f64) -> f64 {
    SQRT_3 * r / ((SQRT_3 - r) * (SQRT_3 - 2.0 * r))
}

pub(crate) fn gap_unchecked(r: f64) -> f64 {
    (3.0 - 3.0 * SQRT_3 * r) / ((SQRT_3 - r) * (SQRT_3 - 2.0 * r))
}

/// Center `C(r)` of the disc bound. Domain `[0, 1/√3)`.
pub fn center(r: f64) -> Result<f64> {
    check_open(r)?;
    Ok(center_unchecked(r))
}

/// Radius `ρ(r)` of the disc bound. Domain `[0, 1/√3)`.
pub fn rho(r: f64) -> Result<f64> {
    check_open(r)?;
    Ok(rho_unchecked(r))
}

/// Gap `h(r) = C(r) − ρ(r)`, the leftmost real point of the disc.
///
/// Unlike [`center`] and [`rho`] this accepts the closed endpoint `1/√3`,
/// where the gap vanishes.
pub fn gap(r: f64) -> Result<f64> {
    if !(0.0..=STARLIKE_RADIUS).contains(&r) {
        return Err(Error::OutOfDomain {
            value: r,
            lo: 0.0,
            hi: STARLIKE_RADIUS,
        });
    }
    Ok(gap_unchecked(r))
}

/// The disc `|w − C(r)| ≤ ρ(r)` at a fixed `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BonkDisc {
    pub r: f64,
    pub center: f64,
    pub radius: f64,
}

impl BonkDisc {
    pub fn at(r: f64) -> Result<Self> {
        check_open(r)?;
        Ok(Self::extended(r))
    }

    /// Same formulas without the `1/√3` cutoff. Used for probing just past
    /// the baseline radius.
    pub(crate) fn extended(r: f64) -> Self {
        Self {
            r,
            center: center_unchecked(r),
            radius: rho_unchecked(r),
        }
    }

    pub fn gap(&self) -> f64 {
        self.center - self.radius
    }

    pub fn right_end(&self) -> f64 {
        self.center + self.radius
    }

    pub fn point(&self, theta: f64) -> Complex64 {
        Complex64::new(self.center, 0.0) + Complex64::from_polar(self.radius, theta)
    }

    /// `n` equally spaced points on the bounding circle, starting at angle 0.
    pub fn circle(&self, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| self.point(2.0 * PI * k as f64 / n as f64))
            .collect()
    }

    pub fn contains(&self, w: Complex64) -> bool {
        (w - self.center).norm() <= self.radius
    }
}

/// A function analytic on the unit disc, with an optional closed-form
/// derivative.
pub trait DiscMap {
    fn value(&self, z: Complex64) -> Complex64;

    /// Centered finite difference with step `1e-6` unless overridden.
    fn derivative(&self, z: Complex64) -> Complex64 {
        const STEP: f64 = 1e-6;
        let h = Complex64::new(STEP, 0.0);
        (self.value(z + h) - self.value(z - h)) / (2.0 * STEP)
    }
}

/// Adapter for plain closures; the derivative is taken numerically.
pub struct FnMap<F>(pub F);

impl<F> DiscMap for FnMap<F>
where
    F: Fn(Complex64) -> Complex64,
{
    fn value(&self, z: Complex64) -> Complex64 {
        (self.0)(z)
    }
}

/// `f₀(z) = 3z(3 − 2√3 z)/(3 − √3 z)²`, a Bloch function that is extremal
/// for every sharp radius in the catalog.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExtremalFunction;

impl ExtremalFunction {
    /// `w₀(z) = z f₀'(z)/f₀(z) = (3√3 − 9z)/(2√3 z² − 9z + 3√3)`.
    pub fn ratio(&self, z: Complex64) -> Result<Complex64> {
        let den = 2.0 * SQRT_3 * z * z - 9.0 * z + 3.0 * SQRT_3;
        if den.norm() < SINGULAR_THRESHOLD {
            return Err(Error::SingularDenominator { z });
        }
        Ok((3.0 * SQRT_3 - 9.0 * z) / den)
    }
}

impl DiscMap for ExtremalFunction {
    fn value(&self, z: Complex64) -> Complex64 {
        let d = 3.0 - SQRT_3 * z;
        3.0 * z * (3.0 - 2.0 * SQRT_3 * z) / (d * d)
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        let d = 3.0 - SQRT_3 * z;
        27.0 * (1.0 - SQRT_3 * z) / (d * d * d)
    }
}

pub fn extremal_ratio(z: Complex64) -> Result<Complex64> {
    ExtremalFunction.ratio(z)
}

/// Largest value of `(1 − |z|²)|f'(z)|` over a polar grid with `density`
/// radii in `[0, 1)` and `density` angles.
pub fn bloch_sup<M: DiscMap + ?Sized>(f: &M, density: usize) -> Result<f64> {
    if density < 64 {
        return Err(Error::InvalidArgument(format!(
            "grid density must be at least 64, got {density}"
        )));
    }
    let mut best = 0.0_f64;
    for i in 0..density {
        let modulus = i as f64 / density as f64;
        let weight = 1.0 - modulus * modulus;
        let angles = if i == 0 { 1 } else { density };
        for k in 0..angles {
            let z = Complex64::from_polar(modulus, 2.0 * PI * k as f64 / angles as f64);
            best = best.max(weight * f.derivative(z).norm());
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn endpoints() {
        assert_eq!(center(0.0).unwrap(), 1.0);
        assert_eq!(rho(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(gap(0.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(gap(STARLIKE_RADIUS).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            center(STARLIKE_RADIUS - 1e-12).unwrap(),
            1.5,
            epsilon = 1e-11
        );
    }

    #[test]
    fn domain_is_rejected() {
        for r in [-1e-9, STARLIKE_RADIUS, 0.7, f64::NAN] {
            assert!(matches!(center(r), Err(Error::OutOfDomain { .. })));
            assert!(matches!(rho(r), Err(Error::OutOfDomain { .. })));
            assert!(BonkDisc::at(r).is_err());
        }
        assert!(gap(STARLIKE_RADIUS + 1e-12).is_err());
        assert!(gap(-0.1).is_err());
    }

    #[test]
    fn frozen_values() {
        // mpmath, 30 digits
        assert_abs_diff_eq!(
            center(0.517387).unwrap(),
            1.425_950_783_069_381_7,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(rho(0.25).unwrap(), 0.237_142_244_445_732_8, epsilon = 1e-13);
        let r_exp = 0.517_387_062_943_349_2;
        assert_abs_diff_eq!(gap(r_exp).unwrap(), (-1.0_f64).exp(), epsilon = 1e-13);
    }

    #[test]
    fn extremal_normalization() {
        let f = ExtremalFunction;
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(f.value(zero), zero);
        assert_abs_diff_eq!(f.derivative(zero).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.ratio(zero).unwrap().re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn ratio_matches_quotient() {
        let f = ExtremalFunction;
        for z in [
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.4),
            Complex64::new(0.05, -0.5),
        ] {
            let direct = z * f.derivative(z) / f.value(z);
            assert!((direct - f.ratio(z).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn ratio_on_real_axis_is_gap() {
        for r in [0.0, 0.1, 0.3, 0.5, 0.57] {
            let w = extremal_ratio(Complex64::new(r, 0.0)).unwrap();
            assert_abs_diff_eq!(w.re, gap(r).unwrap(), epsilon = 1e-14);
            assert_eq!(w.im, 0.0);
        }
    }

    #[test]
    fn ratio_pole_is_reported() {
        let pole = Complex64::new(SQRT_3 / 2.0, 0.0);
        // Rounding leaves a tiny nonzero denominator; the closed form of the
        // pole itself still evaluates to something huge, not NaN.
        let w = extremal_ratio(pole);
        assert!(w.is_err() || w.unwrap().norm() > 1e10);
    }

    #[test]
    fn finite_difference_agrees_with_closed_form() {
        let numeric = FnMap(|z| ExtremalFunction.value(z));
        for z in [Complex64::new(0.2, 0.3), Complex64::new(-0.6, 0.1)] {
            let d = numeric.derivative(z) - ExtremalFunction.derivative(z);
            assert!(d.norm() < 1e-8, "{d}");
        }
    }

    #[test]
    fn bloch_sup_examples() {
        let id = FnMap(|z: Complex64| z);
        assert_abs_diff_eq!(bloch_sup(&id, 64).unwrap(), 1.0, epsilon = 1e-9);
        let double = FnMap(|z: Complex64| 2.0 * z);
        assert_abs_diff_eq!(bloch_sup(&double, 64).unwrap(), 2.0, epsilon = 1e-9);
        assert!(bloch_sup(&ExtremalFunction, 256).unwrap() <= 1.0 + 1e-6);
        assert!(bloch_sup(&id, 10).is_err());
    }

    #[test]
    fn disc_helpers() {
        let d = BonkDisc::at(0.3).unwrap();
        assert_abs_diff_eq!(d.gap(), gap(0.3).unwrap(), epsilon = 1e-15);
        assert!(d.contains(Complex64::new(d.center, 0.0)));
        assert_abs_diff_eq!(d.point(0.0).re, d.right_end(), epsilon = 1e-15);
        assert_eq!(d.circle(16).len(), 16);
    }
}

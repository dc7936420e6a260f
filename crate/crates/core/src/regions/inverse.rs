//! Polynomial root helpers used to pull points of the `w`-plane back to the
//! unit disc.

use num_complex::Complex64;

/// The three roots of the depressed cubic `t³ + p t + q`.
///
/// `half_disc` must be `q²/4 + p³/27`; callers pass it in factored form when
/// it is available, since it vanishes at double roots. Each root gets up to
/// two Newton steps, kept only when they lower the residual.
pub(crate) fn depressed_cubic_roots(
    p: Complex64,
    q: Complex64,
    half_disc: Complex64,
) -> [Complex64; 3] {
    let half_q = 0.5 * q;
    let s = half_disc.sqrt();
    let plus = -half_q + s;
    let minus = -half_q - s;
    let big = if plus.norm_sqr() >= minus.norm_sqr() {
        plus
    } else {
        minus
    };
    let omega = Complex64::new(-0.5, 0.866_025_403_784_438_6);

    let mut roots = if big.norm_sqr() == 0.0 {
        // p = q = 0: triple root at the origin.
        [Complex64::new(0.0, 0.0); 3]
    } else {
        let u = big.cbrt();
        let mut out = [u, u * omega, u * omega * omega];
        for t in out.iter_mut() {
            *t -= p / (3.0 * *t);
        }
        out
    };

    let f = |t: Complex64| t * t * t + p * t + q;
    for t in roots.iter_mut() {
        for _ in 0..2 {
            let d = 3.0 * *t * *t + p;
            let next = *t - f(*t) / d;
            if next.is_finite() && f(next).norm() < f(*t).norm() {
                *t = next;
            } else {
                break;
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cubic_residuals() {
        let cases = [
            (c(-3.0, 0.0), c(0.0, 0.0)),
            (c(-3.0, 0.0), c(2.0, 0.0)),
            (c(-3.0, 0.0), c(-2.0, 0.0)),
            (c(-3.0, 0.0), c(0.7, -1.2)),
            (c(0.0, 0.0), c(0.0, 0.0)),
            (c(1.5, 2.0), c(-0.3, 0.1)),
        ];
        for (p, q) in cases {
            let roots = depressed_cubic_roots(p, q, q * q / 4.0 + p * p * p / 27.0);
            for t in roots {
                assert!((t * t * t + p * t + q).norm() < 1e-12, "{p} {q} -> {t}");
            }
            let sum = roots[0] + roots[1] + roots[2];
            assert!(sum.norm() < 1e-10);
        }
    }
}

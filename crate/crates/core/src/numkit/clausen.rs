//! Im Li_2 on the unit circle (the Clausen function Cl_2).

use super::zeta_int;
use crate::real::Real;
use std::f64::consts::PI;
use std::sync::OnceLock;

fn even_zetas() -> &'static Vec<f64> {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| (1..=40).map(|k| zeta_int(2 * k)).collect())
}

/// Im Li_2(e^{2 pi i x}) = Cl_2(2 pi x) = sum_{n>=1} sin(2 pi n x)/n^2,
/// to absolute accuracy 1e-12. Integer x gives exactly 0.
pub fn clausen_im_li2(x: f64) -> Real {
    // reduce to theta in (-pi, pi]
    let mut t = x - x.round();
    if t == -0.5 {
        t = 0.5;
    }
    let theta = 2.0 * PI * t;
    let value = cl2_reduced(theta);
    Real::new(value, 1e-13 * (1.0 + value.abs()))
}

/// Cl_2 on [-pi, pi]: log-singularity series near 0, alternating series near
/// +-pi. Both converge geometrically in their half of the interval.
fn cl2_reduced(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let sign = theta.signum();
    let t = theta.abs();
    if t <= 0.5 * PI {
        sign * cl2_near_zero(t)
    } else {
        sign * cl2_near_pi(PI - t)
    }
}

/// Cl_2(t) = t - t ln t + sum_k zeta(2k) t^{2k+1} / (k (2k+1) (2 pi)^{2k}),
/// for 0 < t <= pi/2. The t ln t term carries the logarithmic singularity.
fn cl2_near_zero(t: f64) -> f64 {
    let zetas = even_zetas();
    let ratio = (t / (2.0 * PI)).powi(2);
    let mut sum = t - t * t.ln();
    let mut pw = ratio * t;
    for (k, z) in zetas.iter().enumerate() {
        let kf = (k + 1) as f64;
        let term = z * pw / (kf * (2.0 * kf + 1.0));
        sum += term;
        if term.abs() < 1e-17 * (1.0 + sum.abs()) {
            break;
        }
        pw *= ratio;
    }
    sum
}

/// Cl_2(pi - phi) = phi ln 2 - sum_k lambda(2k) phi^{2k+1} / (k (2k+1) pi^{2k})
/// with lambda(s) = (1 - 2^{-s}) zeta(s), for 0 <= phi <= pi/2.
fn cl2_near_pi(phi: f64) -> f64 {
    if phi == 0.0 {
        return 0.0;
    }
    let zetas = even_zetas();
    let ratio = (phi / PI).powi(2);
    let mut sum = phi * std::f64::consts::LN_2;
    let mut pw = ratio * phi;
    for (k, z) in zetas.iter().enumerate() {
        let kf = (k + 1) as f64;
        let lambda = (1.0 - 0.25f64.powi(k as i32 + 1)) * z;
        let term = lambda * pw / (kf * (2.0 * kf + 1.0));
        sum -= term;
        if term.abs() < 1e-17 * (1.0 + sum.abs()) {
            break;
        }
        pw *= ratio;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn integer_and_half_integer_points_vanish() {
        assert_eq!(clausen_im_li2(0.0).value, 0.0);
        assert_eq!(clausen_im_li2(3.0).value, 0.0);
        assert!(clausen_im_li2(0.5).value.abs() < 1e-15);
        assert!(clausen_im_li2(-0.5).value.abs() < 1e-15);
    }

    #[test]
    fn quarter_point_is_catalan() {
        // direct accelerated summation of sum sin(pi n / 2)/n^2 gives Catalan
        assert!((clausen_im_li2(0.25).value - CATALAN).abs() < 1e-13);
        assert!((clausen_im_li2(-0.25).value + CATALAN).abs() < 1e-13);
    }

    #[test]
    fn matches_direct_fourier_series() {
        // brute-force partial sums with an averaging tail (converges ~ 1/N^2)
        for &x in &[0.1, 0.23456, 0.37, 0.499, 0.62, 0.85, 1.0e-3] {
            let mut s = 0.0f64;
            let n_max = 200_000u64;
            for n in 1..=n_max {
                s += (2.0 * PI * n as f64 * x).sin() / (n as f64 * n as f64);
            }
            let v = clausen_im_li2(x).value;
            assert!((s - v).abs() < 1e-9, "x = {x}: {s} vs {v}");
        }
    }

    #[test]
    fn oddness_and_periodicity() {
        for &x in &[0.07, 0.33, 0.48] {
            let a = clausen_im_li2(x).value;
            assert!((clausen_im_li2(-x).value + a).abs() < 1e-14);
            assert!((clausen_im_li2(x + 1.0).value - a).abs() < 1e-13);
            assert!((clausen_im_li2(x - 2.0).value - a).abs() < 1e-13);
        }
    }

    #[test]
    fn branch_overlap_at_quarter_turn() {
        // both series evaluated at theta = pi/2 agree
        let a = cl2_near_zero(0.5 * PI);
        let b = cl2_near_pi(0.5 * PI);
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn near_integer_log_behavior() {
        // Cl_2(theta) ~ theta(1 - ln theta) near 0: check tiny arguments survive
        let x = 1e-7;
        let v = clausen_im_li2(x).value;
        let theta = 2.0 * PI * x;
        assert!((v - (theta - theta * theta.ln())).abs() < 1e-12);
    }
}

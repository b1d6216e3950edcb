//! Modified Bessel functions of the second kind.
//!
//! Integer orders are built from K_0 and K_1 by the upward recurrence
//! `K_v = K_{v-2} + (2(v-1)/z) K_{v-1}`; half-integer orders from the
//! elementary K_{1/2} lifted by the same recurrence. K_0 and K_1 themselves
//! use the ascending power series below the crossover and the Steed
//! continued-fraction resummation of the asymptotic series above it; the two
//! branches agree to better than 1e-13 on the overlap interval (tested).

use super::{NumKitError, Result, EULER_GAMMA};
use crate::real::{Jet2, Real};
use std::f64::consts::PI;

const CROSSOVER: f64 = 2.0;

/// K_0(x) for x > 0.
pub fn k0(x: f64) -> f64 {
    if x < CROSSOVER {
        k0_series(x)
    } else {
        k01_steed(x).0
    }
}

/// K_1(x) for x > 0.
pub fn k1(x: f64) -> f64 {
    if x < CROSSOVER {
        k1_series(x)
    } else {
        k01_steed(x).1
    }
}

/// Integer-order K_n(x) from K_0, K_1 by the upward recurrence.
pub fn kn(n: u32, x: f64) -> f64 {
    match n {
        0 => k0(x),
        1 => k1(x),
        _ => {
            let mut km1 = k0(x);
            let mut k = k1(x);
            for v in 2..=n {
                let next = km1 + 2.0 * (v - 1) as f64 / x * k;
                km1 = k;
                k = next;
            }
            k
        }
    }
}

/// Half-integer K_{m/2}(x) (m odd), from the closed form of K_{1/2} lifted by
/// the recurrence. The prefactors stay exact rationals in 1/x.
pub fn k_half(twice_nu: u32, x: f64) -> f64 {
    debug_assert!(twice_nu % 2 == 1);
    let base = (PI / (2.0 * x)).sqrt() * (-x).exp();
    if twice_nu == 1 {
        return base;
    }
    // poly_v(1/x) with K_{v} = poly_v * K_{1/2}: p_{1/2} = 1, p_{3/2} = 1 + 1/x
    let mut pm1 = 1.0; // v - 1
    let mut p = 1.0 + 1.0 / x; // v
    if twice_nu == 3 {
        return base * p;
    }
    let mut m = 3;
    while m < twice_nu {
        // step from order m/2 to (m+2)/2: 2(v-1)/x with v = (m+2)/2
        let next = pm1 + (m as f64) / x * p;
        pm1 = p;
        p = next;
        m += 2;
    }
    base * p
}

/// K_v(x) for v in {0, 1/2, 1, 3/2, ..., 7}, relative accuracy 1e-12 on
/// [1e-3, 50].
pub fn bessel_k(nu: f64, x: f64) -> Result<Real> {
    if x <= 0.0 {
        return Err(NumKitError::Domain(format!("bessel_k requires x > 0, got {x}")));
    }
    let twice = 2.0 * nu;
    if twice < 0.0 || twice > 14.0 || twice.fract() != 0.0 {
        return Err(NumKitError::UnsupportedOrder(nu));
    }
    let t = twice as u32;
    let value = if t % 2 == 0 { kn(t / 2, x) } else { k_half(t, x) };
    Ok(Real::with_rel_err(value, 5e-14 * (1.0 + t as f64)))
}

/// Ascending series for K_0, x below the crossover.
fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let lg = -(0.5 * x).ln() - EULER_GAMMA;
    let mut i0_term = 1.0f64; // (x^2/4)^k / (k!)^2
    let mut h = 0.0f64; // harmonic number H_k
    let mut sum = lg * i0_term;
    for k in 1..200 {
        let kf = k as f64;
        i0_term *= q / (kf * kf);
        h += 1.0 / kf;
        let term = i0_term * (lg + h);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Ascending series for K_1, x below the crossover.
fn k1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let lg = (0.5 * x).ln();
    // ln(x/2) I_1(x)
    let mut i1_term = 0.5 * x;
    let mut i1 = i1_term;
    for k in 1..200 {
        let kf = k as f64;
        i1_term *= q / (kf * (kf + 1.0));
        i1 += i1_term;
        if i1_term.abs() < 1e-18 * i1.abs() {
            break;
        }
    }
    // -(x/4) sum (psi(k+1) + psi(k+2)) (x^2/4)^k / (k! (k+1)!)
    let mut term = 1.0f64; // (x^2/4)^k / (k!(k+1)!)
    let mut hk = 0.0f64;
    let mut hk1 = 1.0f64;
    let mut psi_sum = term * (hk + hk1 - 2.0 * EULER_GAMMA);
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (kf + 1.0));
        hk += 1.0 / kf;
        hk1 += 1.0 / (kf + 1.0);
        let t = term * (hk + hk1 - 2.0 * EULER_GAMMA);
        psi_sum += t;
        if t.abs() < 1e-18 * psi_sum.abs() {
            break;
        }
    }
    1.0 / x + lg * i1 - 0.25 * x * psi_sum
}

/// Steed's continued fraction CF2 for (K_0, K_1) e^x-scaled, unscaled here.
/// This resums the large-argument asymptotic series to machine precision for
/// x above ~1.5.
fn k01_steed(x: f64) -> (f64, f64) {
    let nu = 0.0f64;
    let mut bi = 2.0 * (1.0 + x);
    let mut di = 1.0 / bi;
    let mut delhi = di;
    let mut hi = di;

    let mut qi = 0.0f64;
    let mut qip1 = 1.0f64;

    let mut ai = -(0.25 - nu * nu);
    let a1 = ai;
    let mut ci = -ai;
    let mut bqi = -ai;
    let mut s = 1.0 + bqi * delhi;

    for i in 2..=10_000u32 {
        ai -= 2.0 * (i - 1) as f64;
        ci = -ai * ci / i as f64;
        let tmp = (qi - bi * qip1) / ai;
        qi = qip1;
        qip1 = tmp;
        bqi += ci * qip1;
        bi += 2.0;
        di = 1.0 / (bi + ai * di);
        delhi = (bi * di - 1.0) * delhi;
        hi += delhi;
        let dels = bqi * delhi;
        s += dels;
        if (dels / s).abs() < f64::EPSILON {
            break;
        }
    }
    hi *= -a1;

    let scale = (-x).exp();
    let k0 = (PI / (2.0 * x)).sqrt() / s * scale;
    let k1 = k0 * (nu + x + 0.5 - hi) / x;
    (k0, k1)
}

/// Quadrature oracle: K_v(x) = int_0^inf e^{-x cosh t} cosh(v t) dt by the
/// trapezoidal rule, which converges geometrically for this integrand.
/// Independent of the series/continued-fraction implementation path.
pub fn bessel_k_integral_oracle(nu: f64, x: f64) -> f64 {
    let h = 1e-4f64.max(0.08 / (1.0 + nu));
    let mut sum = 0.5; // t = 0 term: e^{-x}, cosh(0) = 1, factored below
    let mut t = h;
    loop {
        let term = (-x * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
        sum += term;
        if term < 1e-19 * sum {
            break;
        }
        t += h;
        if t > 60.0 {
            break;
        }
    }
    sum * h * (-x).exp()
}

/// Jet of K_0 composed with an inner jet, using K_0' = -K_1.
pub fn k0_jet_of(inner: Jet2) -> Jet2 {
    let x = inner.f;
    let (v0, v1) = (k0(x), k1(x));
    // K_0'' = -K_1' = K_0 + K_1/x
    let outer = Jet2 { f: v0, df: -v1, d2f: v0 + v1 / x };
    inner.compose(outer)
}

/// Jet of K_1 composed with an inner jet, using K_1' = -K_0 - K_1/x.
pub fn k1_jet_of(inner: Jet2) -> Jet2 {
    let x = inner.f;
    let (v0, v1) = (k0(x), k1(x));
    let d1 = -v0 - v1 / x;
    // K_1'' = -K_0' - (K_1/x)' = K_1 - d1/x + K_1/x^2
    let d2 = v1 - d1 / x + v1 / (x * x);
    let outer = Jet2 { f: v1, df: d1, d2f: d2 };
    inner.compose(outer)
}

/// Jet of a half-integer K composed with an inner jet, from the elementary
/// closed form.
pub fn k_half_jet_of(twice_nu: u32, inner: Jet2) -> Jet2 {
    debug_assert!(twice_nu % 2 == 1);
    let x = inner;
    let base = (x.recip() * (PI / 2.0)).sqrt() * (-x).exp();
    let mut pm1 = Jet2::constant(1.0);
    let mut p = if twice_nu == 1 {
        return base;
    } else {
        x.recip() + 1.0
    };
    let mut m = 3;
    while m < twice_nu {
        let next = pm1 + x.recip() * (m as f64) * p;
        pm1 = p;
        p = next;
        m += 2;
    }
    base * p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn k_half_elementary_form() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.1, 1.0, 7.5, 30.0] {
            let expect = (PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!(rel(k_half(1, x), expect) < 1e-15);
        }
        // compare K_{1/2}(1) against the integral-representation oracle
        let oracle = bessel_k_integral_oracle(0.5, 1.0);
        assert!(rel(k_half(1, 1.0), oracle) < 1e-12, "{}", rel(k_half(1, 1.0), oracle));
    }

    #[test]
    fn k_seven_halves_recurrence_consistency() {
        // K_{7/2} must equal the recurrence applied to K_{3/2}, K_{5/2}
        for &x in &[0.37, 1.0, 4.2, 20.0] {
            let direct = k_half(7, x);
            let from_rec = k_half(3, x) + 5.0 / x * k_half(5, x);
            assert!(rel(direct, from_rec) < 1e-15);
            // and against the closed polynomial form
            let closed = (PI / (2.0 * x)).sqrt()
                * (-x).exp()
                * (1.0 + 6.0 / x + 15.0 / (x * x) + 15.0 / (x * x * x));
            assert!(rel(direct, closed) < 1e-14);
        }
    }

    #[test]
    fn k0_k1_against_integral_oracle() {
        for &x in &[1e-3, 0.01, 0.1, 0.5, 1.0, 1.9, 2.1, 5.0, 10.0, 25.0, 50.0] {
            assert!(rel(k0(x), bessel_k_integral_oracle(0.0, x)) < 1e-12, "k0({x})");
            assert!(rel(k1(x), bessel_k_integral_oracle(1.0, x)) < 1e-12, "k1({x})");
        }
    }

    #[test]
    fn branch_overlap_agreement() {
        // series and continued-fraction branches agree to 1e-12 on [1.5, 2.5]
        let mut x = 1.5;
        while x <= 2.5 {
            assert!(rel(k0_series(x), k01_steed(x).0) < 1e-12, "k0 overlap at {x}");
            assert!(rel(k1_series(x), k01_steed(x).1) < 1e-12, "k1 overlap at {x}");
            x += 0.1;
        }
    }

    #[test]
    fn integer_recurrence_residual() {
        // |K_v - K_{v-2} - (2(v-1)/z) K_{v-1}| < 1e-12 K_v for v = 2..7
        for &z in &[0.1, 1.0, 10.0] {
            for v in 2..=7u32 {
                let lhs = kn(v, z);
                let rhs = kn(v - 2, z) + 2.0 * (v - 1) as f64 / z * kn(v - 1, z);
                assert!((lhs - rhs).abs() < 1e-12 * lhs, "v={v} z={z}");
            }
        }
    }

    #[test]
    fn derivative_identity_finite_differences() {
        // |K_v'(z) + (K_{v-1} + K_{v+1})/2| < 1e-8 with 5-point central FD
        let h = 1e-5;
        for &z in &[0.8, 2.0, 6.0] {
            for v in 1..=6u32 {
                let f = |t: f64| kn(v, t);
                let fd = (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h))
                    / (12.0 * h);
                let ident = -0.5 * (kn(v - 1, z) + kn(v + 1, z));
                assert!((fd - ident).abs() < 1e-8 * ident.abs().max(1.0), "v={v} z={z}");
            }
        }
    }

    #[test]
    fn k7_at_two_pi_matches_oracle() {
        let x = 2.0 * PI;
        assert!(rel(kn(7, x), bessel_k_integral_oracle(7.0, x)) < 1e-12);
    }

    #[test]
    fn bessel_k_domain_and_orders() {
        assert!(bessel_k(0.5, -1.0).is_err());
        assert!(bessel_k(0.5, 0.0).is_err());
        assert!(bessel_k(7.5, 1.0).is_err());
        assert!(bessel_k(0.3, 1.0).is_err());
        let r = bessel_k(3.5, 1.25).unwrap();
        assert!(rel(r.value, k_half(7, 1.25)) < 1e-15);
        assert!(r.err > 0.0);
    }

    #[test]
    fn jets_match_finite_differences() {
        let h = 1e-5;
        for &x in &[0.7, 3.0, 9.0] {
            let j0 = k0_jet_of(Jet2::variable(x));
            let j1 = k1_jet_of(Jet2::variable(x));
            let fd0 = (k0(x + h) - k0(x - h)) / (2.0 * h);
            let fd1 = (k1(x + h) - k1(x - h)) / (2.0 * h);
            assert!((j0.df - fd0).abs() < 1e-9 * (1.0 + fd0.abs()));
            assert!((j1.df - fd1).abs() < 1e-9 * (1.0 + fd1.abs()));
            let fdd0 = (k0(x + h) - 2.0 * k0(x) + k0(x - h)) / (h * h);
            assert!((j0.d2f - fdd0).abs() < 1e-5 * (1.0 + fdd0.abs()));
            // composed with an inner function y -> 2y^2
            let inner = Jet2::variable(x) * Jet2::variable(x) * 2.0;
            let jc = k_half_jet_of(7, inner);
            let g = |y: f64| k_half(7, 2.0 * y * y);
            let fdc = (g(x + h) - g(x - h)) / (2.0 * h);
            assert!((jc.df - fdc).abs() < 1e-7 * (1.0 + fdc.abs()));
        }
    }
}

//! Legendre functions of the first and second kind, in the polynomial
//! normalization
//!
//!   P_n(x) = 2^{-n} sum_l (-1)^l C(n,l) C(2n-2l,n) x^{n-2l}
//!   Q_n(x) = (1/2) P_n(x) ln((1+x)/(1-x)) - S_n(x),
//!   S_n(x) = sum_{k=1}^n (1/k) P_{k-1}(x) P_{n-k}(x).
//!
//! Exact rational evaluation is provided for P and S (hence for the
//! Wronskian, which is log-free), float and complex evaluation for Q. On the
//! imaginary axis the logarithm is taken on the principal branch, where
//! ln((1+iu)/(1-iu)) = 2i arctan u.

use super::{NumKitError, Result};
use crate::real::Jet2;
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Zero};

fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Exact coefficients of P_n: pairs (exponent n-2l, rational coefficient).
pub fn legendre_p_coeffs(n: u32) -> Vec<(u32, BigRational)> {
    let two_pow = BigInt::from(2u32).pow(n);
    (0..=n / 2)
        .map(|l| {
            let sign = if l % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let c = sign
                * big_binomial(n as u64, l as u64)
                * big_binomial(2 * (n - l) as u64, n as u64);
            (n - 2 * l, BigRational::new(c, two_pow.clone()))
        })
        .collect()
}

/// P_n at an exact rational point.
pub fn legendre_p_rat(n: u32, x: &BigRational) -> BigRational {
    legendre_p_coeffs(n)
        .into_iter()
        .fold(BigRational::zero(), |acc, (e, c)| acc + c * pow_rat(x, e))
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// P_n at a binary64 point.
pub fn legendre_p_f64(n: u32, x: f64) -> f64 {
    legendre_p_coeffs(n)
        .into_iter()
        .map(|(e, c)| rat_to_f64(&c) * x.powi(e as i32))
        .sum()
}

/// Convert an exact rational to the nearest binary64.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    // exact for the coefficient sizes arising here (numerators < 2^53 up to n ~ 20)
    let num = r.numer();
    let den = r.denom();
    big_to_f64(num) / big_to_f64(den)
}

fn big_to_f64(b: &BigInt) -> f64 {
    let s = b.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// The log-free part S_n of Q_n, exact.
pub fn legendre_q_sum_rat(n: u32, x: &BigRational) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, k| {
        acc + BigRational::new(BigInt::one(), BigInt::from(k))
            * legendre_p_rat(k - 1, x)
            * legendre_p_rat(n - k, x)
    })
}

fn legendre_q_sum_f64(n: u32, x: f64) -> f64 {
    (1..=n)
        .map(|k| legendre_p_f64(k - 1, x) * legendre_p_f64(n - k, x) / k as f64)
        .sum()
}

/// Q_n at a real point away from the poles at +-1.
pub fn legendre_q_f64(n: u32, x: f64) -> Result<f64> {
    if x == 1.0 || x == -1.0 {
        return Err(NumKitError::Pole(format!("legendre_q has a pole at x = {x}")));
    }
    let l = ((1.0 + x) / (1.0 - x)).abs().ln();
    Ok(0.5 * legendre_p_f64(n, x) * l - legendre_q_sum_f64(n, x))
}

/// P_n at a complex point.
pub fn legendre_p_complex(n: u32, z: Complex64) -> Complex64 {
    legendre_p_coeffs(n)
        .into_iter()
        .map(|(e, c)| rat_to_f64(&c) * z.powu(e))
        .sum()
}

/// Q_n at a complex point with the principal branch of the logarithm; on the
/// imaginary axis ln((1+iu)/(1-iu)) = 2i arctan u.
pub fn legendre_q_complex(n: u32, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(1.0, 0.0) || z == Complex64::new(-1.0, 0.0) {
        return Err(NumKitError::Pole("legendre_q has a pole at z = +-1".into()));
    }
    let l = ((Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z)).ln();
    let s: Complex64 = (1..=n)
        .map(|k| legendre_p_complex(k - 1, z) * legendre_p_complex(n - k, z) / k as f64)
        .sum();
    Ok(0.5 * legendre_p_complex(n, z) * l - s)
}

/// Wronskian P_n Q_{n-1} - P_{n-1} Q_n at an exact rational point. The
/// logarithms cancel, leaving P_{n-1} S_n - P_n S_{n-1} = 1/n exactly.
pub fn wronskian_rat(n: u32, x: &BigRational) -> BigRational {
    assert!(n >= 1);
    legendre_p_rat(n - 1, x) * legendre_q_sum_rat(n, x)
        - legendre_p_rat(n, x) * legendre_q_sum_rat(n - 1, x)
}

/// For odd n, P_n(iu) = i * p(u) with p real; this evaluates p as a jet.
pub fn legendre_p_iu_jet(n: u32, u: Jet2) -> Jet2 {
    debug_assert!(n % 2 == 1, "imaginary-axis real form needs odd degree");
    // P_n(iu) = i^n sum_l c_l (-1)^l u^{n-2l}; for odd n, i^n = i (-1)^{(n-1)/2}
    let outer_sign = if ((n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = Jet2::constant(0.0);
    for (e, c) in legendre_p_coeffs(n) {
        let l = (n - e) / 2;
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc + u.powi(e as i32) * (rat_to_f64(&c) * sign);
    }
    acc * outer_sign
}

/// For odd n, Q_n(iu) is real; this evaluates it as a jet:
/// Q_n(iu) = -i^{n-1} (T_n(u) arctan u + s(u)) with T_n(u) = -i P_n(iu).
pub fn legendre_q_iu_jet(n: u32, u: Jet2) -> Jet2 {
    debug_assert!(n % 2 == 1);
    let phase = if ((n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 }; // i^{n-1} for odd n
    let t_n = legendre_p_iu_jet(n, u) * phase; // = i^{-n+1} ... the twisted polynomial
    // s~(u): S_n(iu) = i^{n-1} s~(u); build from twisted polynomial products
    let mut s = Jet2::constant(0.0);
    for k in 1..=n {
        let a = twisted_poly_jet(k - 1, u);
        let b = twisted_poly_jet(n - k, u);
        s = s + a * b * (1.0 / k as f64);
    }
    (t_n * u.atan() + s) * (-phase)
}

/// T_m(u) = i^{-m} P_m(iu) = sum_l c_l (-1)^l u^{m-2l}, real for all m.
fn twisted_poly_jet(m: u32, u: Jet2) -> Jet2 {
    let mut acc = Jet2::constant(0.0);
    for (e, c) in legendre_p_coeffs(m) {
        let l = (m - e) / 2;
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc + u.powi(e as i32) * (rat_to_f64(&c) * sign);
    }
    acc
}

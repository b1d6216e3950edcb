//! Arithmetic functions and special functions consumed by every other module.

mod bessel;
mod clausen;
mod hurwitz;
mod legendre;

pub use bessel::{bessel_k, bessel_k_integral_oracle, k0, k0_jet_of, k1, k1_jet_of, k_half, k_half_jet_of, kn};
pub use clausen::clausen_im_li2;
pub use hurwitz::{bernoulli_number, bernoulli_poly, hurwitz_zeta_nonpos};
pub use legendre::{
    legendre_p_complex, legendre_p_f64, legendre_p_iu_jet, legendre_p_rat, legendre_q_complex,
    legendre_q_f64, legendre_q_iu_jet, legendre_q_sum_rat, rat_to_f64, wronskian_rat,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumKitError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported order {0}: supported orders are 0, 1/2, 1, ..., 7")]
    UnsupportedOrder(f64),
    #[error("pole: {0}")]
    Pole(String),
    #[error("unsupported argument: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, NumKitError>;

/// Euler-Mascheroni constant.
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Sum of k-th powers of the positive divisors of `n`, exact.
pub fn divisor_sigma(k: u32, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(NumKitError::Domain(
            "divisor_sigma requires n >= 1; pass |n| and handle n = 0 separately".into(),
        ));
    }
    let mut total: u64 = 1;
    let mut m = n;
    let mut p: u64 = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut pk_sum: u64 = 1;
            let mut pk: u64 = 1;
            while m % p == 0 {
                m /= p;
                pk *= p.pow(k);
                pk_sum += pk;
            }
            total *= pk_sum;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        total *= 1 + m.pow(k);
    }
    Ok(total)
}

/// Euler's totient, exact.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p: u64 = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Moebius function, exact.
pub fn moebius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut m = n;
    let mut factors = 0;
    let mut p: u64 = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Ramanujan sum c_q(n) = sum over j in (Z/qZ)* of e(jn/q), exact via the
/// Moebius/gcd formula c_q(n) = mu(q/g) phi(q) / phi(q/g) with g = gcd(n, q).
pub fn ramanujan_sum(q: u64, n: i64) -> Result<i64> {
    if q == 0 {
        return Err(NumKitError::Domain("ramanujan_sum requires q >= 1".into()));
    }
    // gcd(0, q) = q covers n = 0 (and n = 0 mod q), giving c_q(0) = phi(q).
    let g = gcd_u64(n.unsigned_abs() % q, q);
    let q_over_g = q / g;
    let mu = moebius(q_over_g);
    if mu == 0 {
        return Ok(0);
    }
    let val = euler_phi(q) / euler_phi(q_over_g);
    Ok(mu * val as i64)
}

/// Sieve-backed tables of sigma_2, the von Mangoldt function, and smallest
/// prime factors for all n up to `bound`. Built once, read-only afterwards.
#[derive(Debug, Clone)]
pub struct ArithCache {
    pub bound: usize,
    sigma2: Vec<u64>,
    lambda: Vec<f64>,
    spf: Vec<u32>,
}

impl ArithCache {
    pub fn new(bound: usize) -> Self {
        assert!(bound >= 2, "cache bound must be positive and at least 2");
        let mut spf = vec![0u32; bound + 1];
        for i in 2..=bound {
            if spf[i] == 0 {
                let mut j = i;
                while j <= bound {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        let mut sigma2 = vec![0u64; bound + 1];
        let mut lambda = vec![0.0f64; bound + 1];
        sigma2[1] = 1;
        for n in 2..=bound {
            let p = spf[n] as usize;
            // multiplicative build: n = p^e * m with p coprime to m
            let mut e = 0u32;
            let mut m = n;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            let mut pk_sum: u64 = 1;
            let mut pk: u64 = 1;
            for _ in 0..e {
                pk *= (p as u64).pow(2);
                pk_sum += pk;
            }
            sigma2[n] = sigma2[m] * pk_sum;
            if m == 1 {
                lambda[n] = (p as f64).ln();
            }
        }
        ArithCache { bound, sigma2, lambda, spf }
    }

    pub fn sigma2(&self, n: u64) -> u64 {
        self.sigma2[n as usize]
    }

    /// von Mangoldt Lambda(n): log p for prime powers p^k, 0 otherwise.
    pub fn lambda(&self, n: u64) -> f64 {
        self.lambda[n as usize]
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u32 {
        self.spf[n as usize]
    }

    /// Prime factorization (p, multiplicity) using the sieve.
    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// Divisors of n, ascending.
    pub fn divisors(&self, n: u64) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (p, e) in self.factorize(n) {
            let prev = divs.clone();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// The zeta values the closed forms depend on.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ZetaConstants {
    /// zeta(2) = pi^2/6, in closed form.
    pub zeta2: f64,
    /// zeta(3), from the accelerated central-binomial series.
    pub zeta3: f64,
    /// zeta'(-2) = -zeta(3) / (4 pi^2).
    pub zeta_prime_minus2: f64,
}

pub fn zeta_constants() -> ZetaConstants {
    let zeta3 = zeta3_series();
    ZetaConstants {
        zeta2: std::f64::consts::PI * std::f64::consts::PI / 6.0,
        zeta3,
        zeta_prime_minus2: -zeta3 / (4.0 * std::f64::consts::PI * std::f64::consts::PI),
    }
}

/// zeta(3) = (5/2) sum_{n>=1} (-1)^{n-1} / (n^3 C(2n,n)); terms shrink by ~4x.
fn zeta3_series() -> f64 {
    let mut sum = 0.0f64;
    let mut binom = 2.0f64; // C(2n, n) at n = 1
    let mut sign = 1.0;
    for n in 1..40u32 {
        let nf = n as f64;
        let term = sign / (nf * nf * nf * binom);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        binom *= 2.0 * (2.0 * nf + 1.0) / (nf + 1.0);
        sign = -sign;
    }
    2.5 * sum
}

/// zeta(s) for integer s >= 2 by direct summation with an Euler-Maclaurin tail.
pub fn zeta_int(s: u32) -> f64 {
    assert!(s >= 2);
    let s = s as f64;
    let n = 100.0f64;
    let mut sum = 0.0;
    let mut k = 1.0;
    while k <= n {
        sum += k.powf(-s);
        k += 1.0;
    }
    sum += n.powf(1.0 - s) / (s - 1.0) - 0.5 * n.powf(-s) + s / 12.0 * n.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * n.powf(-s - 3.0);
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_small_values() {
        assert_eq!(divisor_sigma(2, 1).unwrap(), 1);
        // divisors of 6 are 1, 2, 3, 6 -> 1 + 4 + 9 + 36
        assert_eq!(divisor_sigma(2, 6).unwrap(), 50);
        // 12 has 6 divisors
        assert_eq!(divisor_sigma(0, 12).unwrap(), 6);
        assert!(divisor_sigma(2, 0).is_err());
    }

    #[test]
    fn sigma_cache_matches_enumeration() {
        let cache = ArithCache::new(10_000);
        for n in 1..=10_000u64 {
            let brute: u64 = (1..=n).filter(|d| n % d == 0).map(|d| d * d).sum();
            assert_eq!(cache.sigma2(n), brute, "sigma2({n})");
        }
    }

    #[test]
    fn lambda_table_matches_definition() {
        let cache = ArithCache::new(2000);
        for n in 2..=2000u64 {
            // Lambda(n) = log p exactly when n is a power of its smallest prime factor
            let p = (2..=n).find(|p| n % p == 0).unwrap();
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            let expected = if m == 1 { (p as f64).ln() } else { 0.0 };
            assert!((cache.lambda(n) - expected).abs() < 1e-14, "Lambda({n})");
        }
    }

    #[test]
    fn ramanujan_small_values() {
        // c_1(n) = 1 for any n
        for n in -5..=5 {
            assert_eq!(ramanujan_sum(1, n).unwrap(), 1);
        }
        // c_q(0) = phi(q)
        for q in 1..=30u64 {
            assert_eq!(ramanujan_sum(q, 0).unwrap(), euler_phi(q) as i64);
        }
        // direct evaluation: e(2/4) + e(6/4) = -1 + -1
        assert_eq!(ramanujan_sum(4, 2).unwrap(), -2);
    }

    #[test]
    fn ramanujan_matches_root_of_unity_sum() {
        use std::f64::consts::TAU;
        for q in 1..=40u64 {
            for n in -8..=8i64 {
                let mut re = 0.0f64;
                for j in 1..=q {
                    if gcd_u64(j, q) == 1 {
                        re += (TAU * (j as i64 * n) as f64 / q as f64).cos();
                    }
                }
                let exact = ramanujan_sum(q, n).unwrap() as f64;
                assert!((re - exact).abs() < 1e-8, "c_{q}({n}): {re} vs {exact}");
            }
        }
    }

    #[test]
    fn ramanujan_dirichlet_series_identity() {
        // sum_{q<=N} c_q(n) q^{-s} -> sigma_{1-s}(n) / zeta(s) for s > 2
        let s = 4.0;
        let n = 6i64;
        let nn = 6u64;
        let mut acc = 0.0;
        let big_n = 4000u64;
        for q in 1..=big_n {
            acc += ramanujan_sum(q, n).unwrap() as f64 / (q as f64).powf(s);
        }
        // sigma_{1-s}(6) = sum_{d|6} d^{-3}
        let sigma: f64 = (1..=nn).filter(|d| nn % d == 0).map(|d| (d as f64).powf(1.0 - s)).sum();
        let expected = sigma / zeta_int(4);
        // tail bound: |c_q(n)| <= sigma_1(gcd(n,q)) <= sigma_1(6) = 12
        let tail = 12.0 / (3.0 * (big_n as f64).powi(3));
        assert!((acc - expected).abs() < tail + 1e-12, "{acc} vs {expected}");
    }

    #[test]
    fn zeta_constants_values() {
        let z = zeta_constants();
        assert!((z.zeta2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
        // zeta(3) against the direct sum with integral tail bound
        let n = 1_000_000u64;
        let direct: f64 = (1..=n).map(|k| 1.0 / (k as f64).powi(3)).sum();
        let nf = n as f64;
        let tail = 0.5 / (nf * nf) - 0.5 / (nf * nf * nf);
        assert!((z.zeta3 - (direct + tail)).abs() < 1e-12);
        // zeta'(-2) = -zeta(3)/(4 pi^2): negative, about -0.0304484
        assert!(z.zeta_prime_minus2 < 0.0);
        assert!((z.zeta_prime_minus2 + z.zeta3 / (4.0 * std::f64::consts::PI.powi(2))).abs() < 1e-16);
    }

    #[test]
    fn zeta_int_reference_values() {
        assert!((zeta_int(2) - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
        assert!((zeta_int(4) - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-13);
        assert!((zeta_int(3) - zeta_constants().zeta3).abs() < 1e-13);
    }

    #[test]
    fn divisors_and_factorize() {
        let cache = ArithCache::new(1000);
        assert_eq!(cache.divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(cache.factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}

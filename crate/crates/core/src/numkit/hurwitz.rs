//! Hurwitz zeta at non-positive integers via exact Bernoulli polynomials:
//! zeta(-m, x) = -B_{m+1}(x) / (m+1).

use super::{NumKitError, Result};
use num::{BigInt, BigRational, One, Zero};
use std::sync::OnceLock;

const CACHED_DEGREE: usize = 8;

/// Bernoulli numbers B_0..B_8 (B_1 = -1/2 convention), exact, cached.
fn bernoulli_cache() -> &'static Vec<BigRational> {
    static CACHE: OnceLock<Vec<BigRational>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut b: Vec<BigRational> = Vec::with_capacity(CACHED_DEGREE + 1);
        b.push(BigRational::one());
        for n in 1..=CACHED_DEGREE {
            // B_n = -1/(n+1) sum_{k=0}^{n-1} C(n+1, k) B_k
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from(binomial(n as u64 + 1, k as u64)) * bk;
            }
            b.push(-acc / BigRational::from(BigInt::from(n as u64 + 1)));
        }
        b
    })
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Exact Bernoulli number B_n for n <= 8.
pub fn bernoulli_number(n: usize) -> BigRational {
    assert!(n <= CACHED_DEGREE, "Bernoulli numbers cached to degree {CACHED_DEGREE}");
    bernoulli_cache()[n].clone()
}

/// Exact Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}, n <= 8.
pub fn bernoulli_poly(n: usize, x: &BigRational) -> BigRational {
    assert!(n <= CACHED_DEGREE);
    let mut acc = BigRational::zero();
    let mut xp = BigRational::one();
    // accumulate from k = n down to 0 so powers of x build upward
    for k in (0..=n).rev() {
        acc += BigRational::from(binomial(n as u64, k as u64)) * bernoulli_number(k) * xp.clone();
        xp *= x;
    }
    acc
}

/// zeta(s, x) for s in {-3, -2, -1, 0} and rational x in (0, 1], exact:
/// zeta(s, x) = -B_{1-s}(x) / (1-s).
pub fn hurwitz_zeta_nonpos(s: i32, x: &BigRational) -> Result<BigRational> {
    if !(-3..=0).contains(&s) {
        return Err(NumKitError::Unsupported(format!(
            "hurwitz_zeta_nonpos supports s in {{-3,-2,-1,0}}, got {s}"
        )));
    }
    if *x <= BigRational::zero() || *x > BigRational::one() {
        return Err(NumKitError::Domain(format!("x must lie in (0, 1], got {x}")));
    }
    let m = (1 - s) as usize;
    Ok(-bernoulli_poly(m, x) / BigRational::from(BigInt::from(m as u64)))
}

//! Numeric carriers: a value-with-error-bound type and a second-order jet
//! for exact derivative propagation.

use serde::{Deserialize, Serialize};

/// A binary64 value together with a nonnegative absolute-error estimate.
///
/// Producing operations guarantee `|value - exact| <= err` under their stated
/// tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Real {
    pub value: f64,
    pub err: f64,
}

impl Real {
    pub fn new(value: f64, err: f64) -> Self {
        debug_assert!(err >= 0.0, "error bound must be nonnegative");
        Real { value, err }
    }

    /// Exact value (error bound a few ulps).
    pub fn exact(value: f64) -> Self {
        Real {
            value,
            err: 4.0 * f64::EPSILON * value.abs(),
        }
    }

    /// Value with a relative error bound.
    pub fn with_rel_err(value: f64, rel: f64) -> Self {
        Real {
            value,
            err: rel * value.abs(),
        }
    }
}

impl From<Real> for f64 {
    fn from(r: Real) -> f64 {
        r.value
    }
}

/// Order-2 jet: function value with first and second derivative, propagated
/// through arithmetic by exact chain rules.
///
/// Used wherever a residual check needs exact derivatives instead of finite
/// differences (radial ODE residuals, per-mode PDE residuals in `y`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub f: f64,
    pub df: f64,
    pub d2f: f64,
}

impl Jet2 {
    pub fn constant(c: f64) -> Self {
        Jet2 { f: c, df: 0.0, d2f: 0.0 }
    }

    /// The independent variable: f = x, f' = 1, f'' = 0.
    pub fn variable(x: f64) -> Self {
        Jet2 { f: x, df: 1.0, d2f: 0.0 }
    }

    pub fn recip(self) -> Self {
        let inv = 1.0 / self.f;
        let inv2 = inv * inv;
        Jet2 {
            f: inv,
            df: -self.df * inv2,
            d2f: (2.0 * self.df * self.df * inv - self.d2f) * inv2,
        }
    }

    pub fn sqrt(self) -> Self {
        let s = self.f.sqrt();
        let ds = 0.5 * self.df / s;
        Jet2 {
            f: s,
            df: ds,
            d2f: 0.5 * self.d2f / s - ds * ds / s,
        }
    }

    pub fn exp(self) -> Self {
        let e = self.f.exp();
        Jet2 {
            f: e,
            df: e * self.df,
            d2f: e * (self.d2f + self.df * self.df),
        }
    }

    pub fn ln(self) -> Self {
        let inv = 1.0 / self.f;
        Jet2 {
            f: self.f.ln(),
            df: self.df * inv,
            d2f: self.d2f * inv - self.df * self.df * inv * inv,
        }
    }

    pub fn atan(self) -> Self {
        let d = 1.0 + self.f * self.f;
        let w = 1.0 / d;
        Jet2 {
            f: self.f.atan(),
            df: self.df * w,
            d2f: self.d2f * w - 2.0 * self.f * self.df * self.df * w * w,
        }
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.f.sin_cos();
        Jet2 {
            f: c,
            df: -s * self.df,
            d2f: -s * self.d2f - c * self.df * self.df,
        }
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.f.sin_cos();
        Jet2 {
            f: s,
            df: c * self.df,
            d2f: c * self.d2f - s * self.df * self.df,
        }
    }

    pub fn powi(self, n: i32) -> Self {
        match n {
            0 => Jet2::constant(1.0),
            1 => self,
            _ if n > 1 => {
                let mut acc = self;
                for _ in 1..n {
                    acc = acc * self;
                }
                acc
            }
            _ => self.recip().powi(-n),
        }
    }

    /// Chain-rule composition: `outer` holds (g(u), g'(u), g''(u)) at u = self.f.
    pub fn compose(self, outer: Jet2) -> Self {
        Jet2 {
            f: outer.f,
            df: outer.df * self.df,
            d2f: outer.d2f * self.df * self.df + outer.df * self.d2f,
        }
    }
}

impl std::ops::Add for Jet2 {
    type Output = Jet2;
    fn add(self, o: Jet2) -> Jet2 {
        Jet2 { f: self.f + o.f, df: self.df + o.df, d2f: self.d2f + o.d2f }
    }
}

impl std::ops::Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, o: Jet2) -> Jet2 {
        Jet2 { f: self.f - o.f, df: self.df - o.df, d2f: self.d2f - o.d2f }
    }
}

impl std::ops::Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, o: Jet2) -> Jet2 {
        Jet2 {
            f: self.f * o.f,
            df: self.df * o.f + self.f * o.df,
            d2f: self.d2f * o.f + 2.0 * self.df * o.df + self.f * o.d2f,
        }
    }
}

impl std::ops::Div for Jet2 {
    type Output = Jet2;
    fn div(self, o: Jet2) -> Jet2 {
        self * o.recip()
    }
}

impl std::ops::Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 { f: -self.f, df: -self.df, d2f: -self.d2f }
    }
}

impl std::ops::Mul<f64> for Jet2 {
    type Output = Jet2;
    fn mul(self, c: f64) -> Jet2 {
        Jet2 { f: self.f * c, df: self.df * c, d2f: self.d2f * c }
    }
}

impl std::ops::Add<f64> for Jet2 {
    type Output = Jet2;
    fn add(self, c: f64) -> Jet2 {
        Jet2 { f: self.f + c, ..self }
    }
}

impl std::ops::Sub<f64> for Jet2 {
    type Output = Jet2;
    fn sub(self, c: f64) -> Jet2 {
        Jet2 { f: self.f - c, ..self }
    }
}

//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real arguments z ≤ 1.

use serde::{Deserialize, Serialize};

use super::{beta, digamma, gamma};
use crate::error::{Error, Result};
use crate::quad;

/// Above this argument the direct series is abandoned in favour of a
/// transformation or the Euler integral.
pub const Z_SWITCH: f64 = 0.95;

const TERM_CAP: usize = 1_000_000;
const SERIES_RTOL: f64 = 1e-16;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectSeries,
    PfaffTransform,
    EulerTransform,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct_series",
            Method::PfaffTransform => "pfaff_transform",
            Method::EulerTransform => "euler_transform",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// A function value with an error estimate and the evaluation path used.
///
/// The estimate is an accumulation of truncation and rounding terms, not a
/// rigorous bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn exact(value: f64, method: Method) -> Self {
        EvalResult {
            value,
            abs_error_estimate: 0.0,
            method,
        }
    }

    /// Multiply by a prefactor, scaling the error estimate and adding the
    /// rounding of the product.
    pub fn scaled(self, factor: f64, method: Method) -> Self {
        let value = self.value * factor;
        EvalResult {
            value,
            abs_error_estimate: self.abs_error_estimate * factor.abs()
                + 2.0 * f64::EPSILON * value.abs(),
            method,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyper2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

impl Hyper2F1Params {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Result<Self> {
        let params = Hyper2F1Params { a, b, c, z };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let Hyper2F1Params { a, b, c, z } = *self;
        if ![a, b, c, z].iter().all(|v| v.is_finite()) {
            return Err(Error::Domain(format!(
                "2F1 parameters must be finite: a = {a}, b = {b}, c = {c}, z = {z}"
            )));
        }
        if c <= 0.0 && c == c.round() {
            return Err(Error::Domain(format!(
                "2F1 requires c not in {{0, -1, -2, ...}}, got c = {c}"
            )));
        }
        if z > 1.0 {
            return Err(Error::Domain(format!("2F1 requires z <= 1, got z = {z}")));
        }
        if z == 1.0 && c - a - b <= 0.0 {
            return Err(Error::Domain(format!(
                "2F1 at z = 1 requires c - a - b > 0, got {}",
                c - a - b
            )));
        }
        Ok(())
    }
}

/// Parameters after a linear transformation together with the prefactor:
/// F(original) = prefactor · F(params).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transformed {
    pub params: Hyper2F1Params,
    pub prefactor: f64,
}

/// F(a, b; c; z) = (1 − z)^(−b) F(b, c − a; c; z/(z − 1)).
pub fn pfaff_transform(params: Hyper2F1Params) -> Result<Transformed> {
    let Hyper2F1Params { a, b, c, z } = params;
    if !(z < 1.0) {
        return Err(Error::Domain(format!(
            "Pfaff transformation requires z < 1, got z = {z}"
        )));
    }
    let one_minus_z = 1.0 - z;
    Ok(Transformed {
        params: Hyper2F1Params {
            a: b,
            b: c - a,
            c,
            z: -z / one_minus_z,
        },
        prefactor: one_minus_z.powf(-b),
    })
}

/// F(a, b; c; x) = (1 − x)^(c − a − b) F(c − a, c − b; c; x), stated for
/// a, b, c > 0, c < a + b and 0 ≤ x < 1.
pub fn euler_transform(params: Hyper2F1Params) -> Result<Transformed> {
    let Hyper2F1Params { a, b, c, z } = params;
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain(format!(
            "Euler transformation requires a, b, c > 0, got ({a}, {b}, {c})"
        )));
    }
    if !(c < a + b) {
        return Err(Error::Domain(format!(
            "Euler transformation requires c < a + b, got c = {c}, a + b = {}",
            a + b
        )));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!(
            "Euler transformation requires 0 <= x < 1, got x = {z}"
        )));
    }
    Ok(Transformed {
        params: Hyper2F1Params {
            a: c - a,
            b: c - b,
            c,
            z,
        },
        prefactor: (1.0 - z).powf(c - a - b),
    })
}

/// Evaluate ₂F₁(a, b; c; z) for real z ≤ 1.
///
/// * z < 0: Pfaff transformation onto (0, 1).
/// * 0 ≤ z ≤ [`Z_SWITCH`]: direct series.
/// * z ∈ (Z_SWITCH, 1): [`log_case`] when c = a + b, the Euler
///   transformation when its hypotheses hold, then the Euler integral by double-exponential quadrature; the direct
///   series is the last resort.
/// * z = 1 with c − a − b > 0: Gauss summation.
pub fn hyper2f1(params: Hyper2F1Params) -> Result<EvalResult> {
    params.validate()?;
    let Hyper2F1Params { a, b, c, z } = params;
    if z == 0.0 || a == 0.0 || b == 0.0 {
        return Ok(EvalResult::exact(1.0, Method::DirectSeries));
    }
    if z == 1.0 {
        let v = gamma(c)? * gamma(c - a - b)? / (gamma(c - a)? * gamma(c - b)?);
        return Ok(EvalResult {
            value: v,
            abs_error_estimate: 8.0 * f64::EPSILON * v.abs(),
            method: Method::ClosedForm,
        });
    }
    if z < 0.0 {
        let t = pfaff_transform(params)?;
        let inner = nonnegative(t.params)?;
        return Ok(inner.scaled(t.prefactor, Method::PfaffTransform));
    }
    nonnegative(params)
}

fn nonnegative(params: Hyper2F1Params) -> Result<EvalResult> {
    if params.z <= Z_SWITCH {
        return direct_series(params);
    }
    near_one(params)
}

/// Sum the defining series until the next term drops below 1e-16 of the
/// partial sum.
pub(crate) fn direct_series(params: Hyper2F1Params) -> Result<EvalResult> {
    let Hyper2F1Params { a, b, c, z } = params;
    // Past this index every factor (a+n)(b+n)/((c+n)(n+1)) varies
    // monotonically, so a small term means a small tail.
    let settled = a.abs().max(b.abs()).max(c.abs()) + 2.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for n in 0..TERM_CAP {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
        if term == 0.0 || (nf > settled && term.abs() <= SERIES_RTOL * sum.abs()) {
            let tail = if z < 1.0 {
                term.abs() * z / (1.0 - z)
            } else {
                term.abs()
            };
            return Ok(EvalResult {
                value: sum,
                abs_error_estimate: tail + (nf + 2.0) * f64::EPSILON * abs_sum,
                method: Method::DirectSeries,
            });
        }
    }
    Err(Error::NonConvergence { terms: TERM_CAP })
}

fn near_one(params: Hyper2F1Params) -> Result<EvalResult> {
    let Hyper2F1Params { a, b, c, z } = params;
    if a > 0.0 && b > 0.0 && c == a + b {
        return log_case(a, b, 1.0 - z, (-z).ln_1p());
    }
    if a > 0.0 && b > 0.0 && c > 0.0 && c < a + b {
        let t = euler_transform(params)?;
        let inner = match euler_integral(t.params) {
            Some(r) => r?,
            None => direct_series(t.params)?,
        };
        return Ok(inner.scaled(t.prefactor, Method::EulerTransform));
    }
    match euler_integral(params) {
        Some(r) => r,
        None => direct_series(params),
    }
}

const LOG_CASE_CAP: usize = 1000;

/// F(a, b; a + b; 1 − w) for a, b > 0 and 0 <= w < 1, given ln w (finite even
/// when w underflows):
///
/// F = 1/B(a, b) Σ (a)_n (b)_n / (n!)² [2ψ(n+1) − ψ(a+n) − ψ(b+n) − ln w] wⁿ.
///
/// Converges geometrically in w; meant for w well below 1.
pub fn log_case(a: f64, b: f64, w: f64, ln_w: f64) -> Result<EvalResult> {
    if !(a > 0.0 && b > 0.0 && w >= 0.0 && w < 1.0 && ln_w.is_finite()) {
        return Err(Error::Domain(format!(
            "logarithmic case needs a, b > 0, 0 <= w < 1 and finite ln w, got a = {a}, b = {b}, w = {w}"
        )));
    }
    let norm = 1.0 / beta(a, b)?;
    let settled = a.max(b) + 2.0;
    let mut gap = 2.0 * digamma(1.0)? - digamma(a)? - digamma(b)?;
    let mut coef = 1.0;
    let mut sum = gap - ln_w;
    let mut abs_sum = sum.abs();
    for n in 0..LOG_CASE_CAP {
        let nf = n as f64;
        gap += 2.0 / (nf + 1.0) - 1.0 / (a + nf) - 1.0 / (b + nf);
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0)) * w;
        let term = coef * (gap - ln_w);
        sum += term;
        abs_sum += term.abs();
        if nf > settled && term.abs() <= 1e-17 * sum.abs() {
            let value = norm * sum;
            return Ok(EvalResult {
                value,
                abs_error_estimate: (nf + 4.0) * f64::EPSILON * (norm * abs_sum).abs(),
                method: Method::ClosedForm,
            });
        }
    }
    Err(Error::NonConvergence { terms: LOG_CASE_CAP })
}

/// F(a, b; c; z) = 1/B(b, c − b) ∫₀¹ t^(b−1) (1 − t)^(c−b−1) (1 − z t)^(−a) dt
/// for c > b > 0 (a and b may be swapped). The substitution t = s^(1/b)
/// removes the singularity at t = 0. Returns `None` when neither ordering
/// of (a, b) satisfies the hypotheses.
fn euler_integral(params: Hyper2F1Params) -> Option<Result<EvalResult>> {
    let Hyper2F1Params { a, b, c, z } = params;
    let ok = |bb: f64| bb > 0.0 && c > bb && c - bb - 1.0 > -0.5;
    // Prefer the ordering with the milder singularity at t = 1.
    let (a, b) = match (ok(a), ok(b)) {
        (true, true) => {
            if a >= b {
                (b, a)
            } else {
                (a, b)
            }
        }
        (false, true) => (a, b),
        (true, false) => (b, a),
        (false, false) => return None,
    };
    Some((|| {
        let norm = 1.0 / (b * beta(b, c - b)?);
        let inv_b = 1.0 / b;
        let e = c - b - 1.0;
        let one_minus_z = 1.0 - z;
        let integrand = |n: quad::Node| -> f64 {
            // t = s^(1/b), with 1 - t taken from the complement of s.
            let ln_s = (-n.from_upper).ln_1p();
            let one_minus_t = -(ln_s * inv_b).exp_m1();
            let w = one_minus_z + z * one_minus_t;
            let edge = if e == 0.0 { 1.0 } else { one_minus_t.powf(e) };
            edge * w.powf(-a)
        };
        let r = quad::integrate(integrand, 0.0, 1.0, 1e-13)?;
        let value = norm * r.value;
        Ok(EvalResult {
            value,
            abs_error_estimate: norm * r.abs_error_estimate + 16.0 * f64::EPSILON * value.abs(),
            method: Method::Quadrature,
        })
    })())
}

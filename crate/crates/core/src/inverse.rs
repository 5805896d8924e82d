//! The inverse p-functions arcsin_p, arccos_p, arctan_p, arsinh_p and
//! artanh_p.
//!
//! Away from the singular corners every function is a hypergeometric
//! series. Close to them the value is assembled from a closed-form constant
//! and a short quadrature whose integrand stays bounded. The plain
//! quadrature of the defining integrals is kept separately in
//! [`PFunctions::quadrature_oracle`] for cross-checking.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::{PConstants, PExponent};
use crate::error::{Error, Result};
use crate::quad::{self, Node};
use crate::specfun::{direct_series, log_case, EvalResult, Hyper2F1Params, Method, Z_SWITCH};

/// artanh_p leaves the series once x^p exceeds this.
pub const ARTANH_SWITCH: f64 = 0.75;

/// Absolute tolerance of [`PFunctions::quadrature_oracle`].
pub const ORACLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PFunctionKind {
    #[serde(rename = "arcsin_p")]
    Arcsin,
    #[serde(rename = "arccos_p")]
    Arccos,
    #[serde(rename = "arctan_p")]
    Arctan,
    #[serde(rename = "arsinh_p")]
    Arsinh,
    #[serde(rename = "artanh_p")]
    Artanh,
}

/// Real interval `[lo, hi]`, open at `hi` unless `hi_closed`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub hi_closed: bool,
}

impl Domain {
    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && (x < self.hi || (self.hi_closed && x == self.hi))
    }
}

impl PFunctionKind {
    pub const ALL: [PFunctionKind; 5] = [
        PFunctionKind::Arcsin,
        PFunctionKind::Arccos,
        PFunctionKind::Arctan,
        PFunctionKind::Arsinh,
        PFunctionKind::Artanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PFunctionKind::Arcsin => "arcsin_p",
            PFunctionKind::Arccos => "arccos_p",
            PFunctionKind::Arctan => "arctan_p",
            PFunctionKind::Arsinh => "arsinh_p",
            PFunctionKind::Artanh => "artanh_p",
        }
    }

    /// Name of the forward function this kind inverts.
    pub fn forward_name(self) -> &'static str {
        match self {
            PFunctionKind::Arcsin => "sin_p",
            PFunctionKind::Arccos => "cos_p",
            PFunctionKind::Arctan => "tan_p",
            PFunctionKind::Arsinh => "sinh_p",
            PFunctionKind::Artanh => "tanh_p",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            PFunctionKind::Arcsin | PFunctionKind::Arccos => Domain {
                lo: 0.0,
                hi: 1.0,
                hi_closed: true,
            },
            PFunctionKind::Artanh => Domain {
                lo: 0.0,
                hi: 1.0,
                hi_closed: false,
            },
            PFunctionKind::Arctan | PFunctionKind::Arsinh => Domain {
                lo: 0.0,
                hi: f64::INFINITY,
                hi_closed: false,
            },
        }
    }

    fn check(self, x: f64) -> Result<()> {
        if self.domain().contains(x) {
            Ok(())
        } else {
            let d = self.domain();
            Err(Error::Domain(format!(
                "{}: {}, got {x}",
                self.name(),
                violated_bound("x", x, d.lo, d.hi, d.hi_closed)
            )))
        }
    }
}

impl fmt::Display for PFunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PFunctionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PFunctionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown inverse function {s:?}")))
    }
}

/// The bound `x` breaks, phrased as the condition it should satisfy.
pub(crate) fn violated_bound(var: &str, x: f64, lo: f64, hi: f64, hi_closed: bool) -> String {
    if x.is_nan() {
        format!("{var} must be a number")
    } else if x < lo {
        format!("{var} must be >= {lo}")
    } else if hi == f64::INFINITY {
        format!("{var} must be finite")
    } else if hi_closed {
        format!("{var} must be <= {hi}")
    } else {
        format!("{var} must be < {hi}")
    }
}

/// `1 - x^p` without cancellation for x near 1.
#[inline]
fn one_minus_pow(x: f64, p: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        -(p * x.ln()).exp_m1()
    }
}

/// `x^p - t^p` for `t = x - d`, accurate when `d` is tiny.
#[inline]
fn pow_gap(x: f64, d: f64, p: f64) -> f64 {
    x.powf(p) * -(p * (-d / x).ln_1p()).exp_m1()
}

/// `ln(1 + x^p)` for any x > 0 without overflow.
#[inline]
fn ln_one_plus_pow(x: f64, p: f64) -> f64 {
    let y = p * x.ln();
    if y > 0.0 {
        y + (-y).exp().ln_1p()
    } else {
        y.exp().ln_1p()
    }
}

/// Inverse p-functions for one exponent. Construction computes the
/// constants once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PFunctions {
    constants: PConstants,
}

impl PFunctions {
    pub fn new(p: PExponent) -> Result<Self> {
        Ok(PFunctions {
            constants: PConstants::new(p)?,
        })
    }

    pub fn from_constants(constants: PConstants) -> Self {
        PFunctions { constants }
    }

    #[inline]
    pub fn p(&self) -> PExponent {
        self.constants.p
    }

    #[inline]
    pub fn constants(&self) -> &PConstants {
        &self.constants
    }

    pub fn eval(&self, kind: PFunctionKind, x: f64) -> Result<EvalResult> {
        match kind {
            PFunctionKind::Arcsin => self.arcsin(x),
            PFunctionKind::Arccos => self.arccos(x),
            PFunctionKind::Arctan => self.arctan(x),
            PFunctionKind::Arsinh => self.arsinh(x),
            PFunctionKind::Artanh => self.artanh(x),
        }
    }

    /// ∫₀^x (1 − t^p)^(−1/p) dt on [0, 1].
    pub fn arcsin(&self, x: f64) -> Result<EvalResult> {
        PFunctionKind::Arcsin.check(x)?;
        let p = self.p().get();
        self.arcsin_pair(x, one_minus_pow(x, p).powf(1.0 / p), Method::DirectSeries)
    }

    /// arcsin_p((1 − x^p)^(1/p)) on [0, 1].
    pub fn arccos(&self, x: f64) -> Result<EvalResult> {
        PFunctionKind::Arccos.check(x)?;
        let p = self.p().get();
        self.arcsin_pair(one_minus_pow(x, p).powf(1.0 / p), x, Method::DirectSeries)
    }

    /// ∫₀^x (1 + t^p)^(−1) dt on [0, ∞).
    pub fn arctan(&self, x: f64) -> Result<EvalResult> {
        PFunctionKind::Arctan.check(x)?;
        if x == 0.0 {
            return Ok(EvalResult::exact(0.0, Method::ClosedForm));
        }
        let p = self.p().get();
        // c = (1 + x^p)^(-1/p); arctan_p x = arcsin_p(x c) with (x c)^p + c^p = 1.
        let c = (-ln_one_plus_pow(x, p) / p).exp();
        let u = (x.ln() - ln_one_plus_pow(x, p) / p).exp();
        self.arcsin_pair(u, c, Method::PfaffTransform)
    }

    /// ∫₀^x (1 + t^p)^(−1/p) dt on [0, ∞).
    pub fn arsinh(&self, x: f64) -> Result<EvalResult> {
        PFunctionKind::Arsinh.check(x)?;
        if x == 0.0 {
            return Ok(EvalResult::exact(0.0, Method::ClosedForm));
        }
        let p = self.p().get();
        let l1p = ln_one_plus_pow(x, p);
        let w = (p * x.ln() - l1p).exp();
        if w <= Z_SWITCH {
            // (x^p / (1 + x^p))^(1/p) F(1, 1/p; 1 + 1/p; x^p / (1 + x^p))
            let s = 1.0 / p;
            let f = direct_series(Hyper2F1Params::new(1.0, s, 1.0 + s, w)?)?;
            let z = (x.ln() - l1p / p).exp();
            return Ok(f.scaled(z, Method::PfaffTransform));
        }
        // 1 − w = 1/(1 + x^p)
        let z = (x.ln() - l1p / p).exp();
        Ok(log_case(1.0, 1.0 / p, (-l1p).exp(), -l1p)?.scaled(z, Method::ClosedForm))
    }

    /// ∫₀^x (1 − t^p)^(−1) dt on [0, 1).
    pub fn artanh(&self, x: f64) -> Result<EvalResult> {
        PFunctionKind::Artanh.check(x)?;
        if x == 0.0 {
            return Ok(EvalResult::exact(0.0, Method::ClosedForm));
        }
        let p = self.p().get();
        let xp = x.powf(p);
        if xp <= ARTANH_SWITCH {
            let s = 1.0 / p;
            let f = direct_series(Hyper2F1Params::new(1.0, s, 1.0 + s, xp)?)?;
            return Ok(f.scaled(x, Method::DirectSeries));
        }
        let w = one_minus_pow(x, p);
        Ok(log_case(1.0, 1.0 / p, w, w.ln())?.scaled(x, Method::ClosedForm))
    }

    /// arcsin_p(u) given both u and v = (1 − u^p)^(1/p).
    ///
    /// Series in u^p while u^p ≤ [`Z_SWITCH`]; beyond that a_p − T(v) with
    /// T(v) = a_p − arcsin_p(u) = ∫₀^v s^{p−2} (1 − s^p)^{1/p − 1} ds.
    fn arcsin_pair(&self, u: f64, v: f64, series_method: Method) -> Result<EvalResult> {
        if u == 0.0 {
            return Ok(EvalResult::exact(0.0, Method::ClosedForm));
        }
        let a_p = self.constants.a_p;
        if v == 0.0 {
            return Ok(EvalResult::exact(a_p, Method::ClosedForm));
        }
        let p = self.p().get();
        let up = u.powf(p);
        if up <= Z_SWITCH {
            let s = 1.0 / p;
            let f = direct_series(Hyper2F1Params::new(s, s, 1.0 + s, up)?)?;
            return Ok(f.scaled(u, series_method));
        }
        let t = self.tail(v)?;
        let value = a_p - t.value;
        Ok(EvalResult {
            value,
            abs_error_estimate: t.abs_error_estimate + 2.0 * f64::EPSILON * a_p,
            method: Method::ClosedForm,
        })
    }

    /// T(v) = ∫₀^v s^{p−2} (1 − s^p)^{1/p − 1} ds for small v, from the
    /// expansion of F(1/p, 1/p; 1 + 1/p; ·) about 1:
    /// T(v) = u v^{p−1} F(1, 1; 2 − 1/p; v^p) / (p − 1), u = (1 − v^p)^{1/p}.
    fn tail(&self, v: f64) -> Result<EvalResult> {
        let p = self.p().get();
        let u = one_minus_pow(v, p).powf(1.0 / p);
        let f = direct_series(Hyper2F1Params::new(1.0, 1.0, 2.0 - 1.0 / p, v.powf(p))?)?;
        Ok(f.scaled(u * v.powf(p - 1.0) / (p - 1.0), Method::ClosedForm))
    }

    /// a_p − arccos_p(v), accurate in relative terms for small v.
    pub(crate) fn arccos_complement(&self, v: f64) -> Result<f64> {
        let p = self.p().get();
        if v == 0.0 {
            return Ok(0.0);
        }
        let u = one_minus_pow(v, p).powf(1.0 / p);
        if u.powf(p) <= Z_SWITCH {
            Ok(self.constants.a_p - self.arcsin_pair(u, v, Method::DirectSeries)?.value)
        } else {
            Ok(self.tail(v)?.value)
        }
    }

    /// Derivative of the inverse function at an interior point.
    pub fn inverse_derivative(&self, kind: PFunctionKind, x: f64) -> Result<f64> {
        kind.check(x)?;
        let p = self.p().get();
        let singular = |what: &str| {
            Err(Error::Domain(format!(
                "derivative of {} is unbounded at x = {x}{what}",
                kind.name()
            )))
        };
        match kind {
            PFunctionKind::Arcsin => {
                if x == 1.0 {
                    return singular("");
                }
                Ok(one_minus_pow(x, p).powf(-1.0 / p))
            }
            PFunctionKind::Arccos => {
                if x == 1.0 || (x == 0.0 && p < 2.0) {
                    return singular(if x == 0.0 { " for p < 2" } else { "" });
                }
                // d/dx arcsin_p((1 − x^p)^{1/p}) = −x^{p−2} (1 − x^p)^{1/p − 1}
                if x == 0.0 {
                    return Ok(if p == 2.0 { -1.0 } else { 0.0 });
                }
                Ok(-x.powf(p - 2.0) * one_minus_pow(x, p).powf(1.0 / p - 1.0))
            }
            PFunctionKind::Arctan => Ok((-ln_one_plus_pow(x, p)).exp()),
            PFunctionKind::Arsinh => Ok((-ln_one_plus_pow(x, p) / p).exp()),
            PFunctionKind::Artanh => Ok(1.0 / one_minus_pow(x, p)),
        }
    }

    /// Double-exponential quadrature of the defining integral, to absolute
    /// tolerance [`ORACLE_TOL`]. Used as an independent check on the
    /// production path.
    pub fn quadrature_oracle(&self, kind: PFunctionKind, x: f64) -> Result<EvalResult> {
        kind.check(x)?;
        let p = self.p().get();
        let value = match kind {
            PFunctionKind::Arcsin => oracle_arcsin(p, x, one_minus_pow(x, p))?,
            PFunctionKind::Arccos => {
                let u = one_minus_pow(x, p).powf(1.0 / p);
                oracle_arcsin(p, u, x.powf(p))?
            }
            PFunctionKind::Artanh => {
                let comp = one_minus_pow(x, p);
                oracle_near_upper(x, |n| {
                    let gap = if n.from_upper < 0.5 * x {
                        comp + pow_gap(x, n.from_upper, p)
                    } else {
                        one_minus_pow(n.x, p)
                    };
                    1.0 / gap
                })?
            }
            PFunctionKind::Arctan => oracle_half_line(x, |t| 1.0 / (1.0 + t.powf(p)), |s| {
                (s - ln_one_plus_pow(s.exp(), p)).exp()
            })?,
            PFunctionKind::Arsinh => {
                oracle_half_line(x, |t| (1.0 + t.powf(p)).powf(-1.0 / p), |s| {
                    (s - ln_one_plus_pow(s.exp(), p) / p).exp()
                })?
            }
        };
        Ok(EvalResult {
            value: value.value,
            abs_error_estimate: value.abs_error_estimate,
            method: Method::Quadrature,
        })
    }
}

/// ∫₀^u (1 − t^p)^{−1/p} dt where `comp` = 1 − u^p is known exactly.
fn oracle_arcsin(p: f64, u: f64, comp: f64) -> Result<quad::QuadResult> {
    oracle_near_upper(u, |n| {
        let gap = if n.from_upper < 0.5 * u {
            comp + pow_gap(u, n.from_upper, p)
        } else {
            one_minus_pow(n.x, p)
        };
        gap.powf(-1.0 / p)
    })
}

fn oracle_near_upper<F: Fn(Node) -> f64>(x: f64, f: F) -> Result<quad::QuadResult> {
    quad::integrate(f, 0.0, x, ORACLE_TOL)
}

/// ∫₀^x f(t) dt, with the part beyond t = 1 taken in s = ln t where `g(s)`
/// is `f(e^s) e^s`.
fn oracle_half_line<F, G>(x: f64, f: F, g: G) -> Result<quad::QuadResult>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let head = quad::integrate(|n| f(n.x), 0.0, x.min(1.0), ORACLE_TOL)?;
    if x <= 1.0 {
        return Ok(head);
    }
    let rest = quad::integrate(|n| g(n.x), 0.0, x.ln(), ORACLE_TOL)?;
    Ok(quad::QuadResult {
        value: head.value + rest.value,
        abs_error_estimate: head.abs_error_estimate + rest.abs_error_estimate,
        evaluations: head.evaluations + rest.evaluations,
    })
}

fn context(p: f64) -> Result<PFunctions> {
    PFunctions::new(PExponent::new(p)?)
}

pub fn arcsin_p(p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.arcsin(x)
}

pub fn arccos_p(p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.arccos(x)
}

pub fn arctan_p(p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.arctan(x)
}

pub fn arsinh_p(p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.arsinh(x)
}

pub fn artanh_p(p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.artanh(x)
}

pub fn inverse_derivative(kind: PFunctionKind, p: f64, x: f64) -> Result<f64> {
    context(p)?.inverse_derivative(kind, x)
}

pub fn quadrature_oracle(kind: PFunctionKind, p: f64, x: f64) -> Result<EvalResult> {
    context(p)?.quadrature_oracle(kind, x)
}

//! Forward functions sin_p, cos_p, tan_p, sinh_p and tanh_p, obtained by
//! inverting the functions in [`crate::inverse`] with a bracketed Newton
//! iteration.

use serde::Serialize;

use crate::constants::PExponent;
use crate::error::{Error, Result};
use crate::inverse::{violated_bound, PFunctionKind, PFunctions};
use crate::specfun::digamma;

/// Residual tolerance, relative to `|y|` (or to the distance from the
/// supremum on the branches that work with it).
pub const RESIDUAL_TOL: f64 = 1e-13;
/// Relative bracket width at which the iteration stops regardless of the
/// residual.
pub const BRACKET_TOL: f64 = 1e-15;
pub const MAX_ITERATIONS: usize = 200;
/// sin_p(y) is exactly 1 when y is this close to a_p.
pub const SNAP_TOL: f64 = 1e-14;
/// Largest argument accepted by sinh_p.
pub const SINH_CUTOFF: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InversionResult {
    pub value: f64,
    pub iterations: usize,
    pub bracket_width: f64,
    pub converged: bool,
}

impl InversionResult {
    fn exact(value: f64) -> Self {
        InversionResult {
            value,
            iterations: 0,
            bracket_width: 0.0,
            converged: true,
        }
    }
}

/// Root of an increasing function on `[lo, hi]`, where `f(x)` returns the
/// residual and its derivative. The caller guarantees a sign change.
///
/// A Newton step is taken when it stays inside the bracket and shrinks
/// faster than bisection would; otherwise the bracket is halved.
fn solve<F>(f: F, mut lo: f64, mut hi: f64, x0: f64, res_tol: f64) -> Result<InversionResult>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    let mut x = if x0 > lo && x0 < hi { x0 } else { 0.5 * (lo + hi) };
    let mut last_step = hi - lo;
    for it in 1..=MAX_ITERATIONS {
        let (r, d) = f(x)?;
        if r.abs() <= res_tol {
            return Ok(InversionResult {
                value: x,
                iterations: it,
                bracket_width: hi - lo,
                converged: true,
            });
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= BRACKET_TOL * x.abs() || hi - lo <= f64::MIN_POSITIVE {
            return Ok(InversionResult {
                value: x,
                iterations: it,
                bracket_width: hi - lo,
                converged: true,
            });
        }
        let newton = x - r / d;
        let take_newton = d.is_finite()
            && d > 0.0
            && newton > lo
            && newton < hi
            && 2.0 * r.abs() <= last_step * d;
        if take_newton {
            last_step = (newton - x).abs();
            x = newton;
        } else {
            last_step = 0.5 * (hi - lo);
            x = lo + last_step;
        }
    }
    Err(Error::InversionFailed {
        iterations: MAX_ITERATIONS,
    })
}

#[inline]
fn one_minus_pow(x: f64, p: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        -(p * x.ln()).exp_m1()
    }
}

fn check_arg(name: &str, y: f64, lo: f64, hi: f64, hi_closed: bool) -> Result<()> {
    let ok = y >= lo && (y < hi || (hi_closed && y == hi));
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name}: {}, got {y}",
            violated_bound("y", y, lo, hi, hi_closed)
        )))
    }
}

/// sin_p(y) and cos_p(y) from one inversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SinCos {
    pub sin: f64,
    pub cos: f64,
    pub inversion: InversionResult,
}

impl PFunctions {
    /// Both sin_p(y) and cos_p(y) for y in [0, a_p].
    ///
    /// Below b_p (where sin_p = cos_p) arcsin_p is inverted for the sine.
    /// Above it the cosine is small, so a_p − arccos_p is inverted for the
    /// cosine instead and the sine follows from sin^p + cos^p = 1.
    pub fn sin_cos(&self, y: f64) -> Result<SinCos> {
        let c = *self.constants();
        check_arg("sin_p", y, 0.0, c.a_p, true)?;
        let p = self.p().get();
        if y == 0.0 {
            return Ok(SinCos {
                sin: 0.0,
                cos: 1.0,
                inversion: InversionResult::exact(0.0),
            });
        }
        if y == c.a_p {
            return Ok(SinCos {
                sin: 1.0,
                cos: 0.0,
                inversion: InversionResult::exact(1.0),
            });
        }
        let mid = 0.5f64.powf(1.0 / p);
        if y <= c.b_p {
            let inv = solve(
                |x| {
                    let r = self.arcsin(x)?.value - y;
                    Ok((r, self.inverse_derivative(PFunctionKind::Arcsin, x)?))
                },
                0.0,
                mid,
                y * mid / c.b_p,
                RESIDUAL_TOL * y,
            )?;
            let s = inv.value;
            return Ok(SinCos {
                sin: s,
                cos: one_minus_pow(s, p).powf(1.0 / p),
                inversion: inv,
            });
        }
        let d = c.a_p - y;
        // a_p − arccos_p(v) ≈ v^{p−1}/(p−1) for small v
        let guess = ((p - 1.0) * d).powf(1.0 / (p - 1.0));
        let inv = solve(
            |v| {
                let r = self.arccos_complement(v)? - d;
                let dv = if v == 0.0 {
                    f64::INFINITY
                } else {
                    v.powf(p - 2.0) * one_minus_pow(v, p).powf(1.0 / p - 1.0)
                };
                Ok((r, dv))
            },
            0.0,
            mid,
            guess,
            RESIDUAL_TOL * d,
        )?;
        let v = inv.value;
        // Within SNAP_TOL of a_p the sine is reported as exactly 1; the
        // cosine keeps its inverted value, which still carries information.
        let s = if d <= SNAP_TOL {
            1.0
        } else {
            one_minus_pow(v, p).powf(1.0 / p)
        };
        Ok(SinCos {
            sin: s,
            cos: v,
            inversion: InversionResult { value: s, ..inv },
        })
    }

    pub fn sin(&self, y: f64) -> Result<InversionResult> {
        Ok(self.sin_cos(y)?.inversion)
    }

    pub fn cos(&self, y: f64) -> Result<f64> {
        check_arg("cos_p", y, 0.0, self.constants().a_p, true)?;
        Ok(self.sin_cos(y)?.cos)
    }

    /// Inverse of arctan_p on [0, π_p/2).
    pub fn tan(&self, y: f64) -> Result<InversionResult> {
        let c = *self.constants();
        check_arg("tan_p", y, 0.0, c.a_p, false)?;
        if y == 0.0 {
            return Ok(InversionResult::exact(0.0));
        }
        let p = self.p().get();
        let deriv = |x: f64| self.inverse_derivative(PFunctionKind::Arctan, x);
        if y <= c.b_p {
            return solve(
                |x| Ok((self.arctan(x)?.value - y, deriv(x)?)),
                0.0,
                1.0,
                y / c.b_p,
                RESIDUAL_TOL * y,
            );
        }
        // Work with the distance to a_p so that large results keep their
        // relative accuracy: a_p − arctan_p(x) = a_p − arccos_p((1 + x^p)^{−1/p}).
        let d = c.a_p - y;
        let gap = |x: f64| -> Result<f64> {
            let cx = (-ln_one_plus_pow(x, p) / p).exp();
            self.arccos_complement(cx)
        };
        // a_p − arctan_p(x) ≈ x^{1−p}/(p−1) for large x
        let guess = ((p - 1.0) * d).powf(-1.0 / (p - 1.0)).clamp(1.0, 1e300);
        let mut lo = (0.5 * guess).max(1.0);
        while lo > 1.0 && gap(lo)? < d {
            lo = (0.5 * lo).max(1.0);
        }
        let mut hi = 2.0 * guess;
        while gap(hi)? >= d {
            if hi >= 1e300 {
                return Err(Error::Divergence(format!(
                    "tan_p({y}) exceeds the bracket cap 1e300"
                )));
            }
            lo = hi;
            hi *= 2.0;
        }
        solve(
            |x| Ok((d - gap(x)?, deriv(x)?)),
            lo,
            hi,
            guess,
            RESIDUAL_TOL * d,
        )
    }

    /// Inverse of arsinh_p on [0, 700].
    pub fn sinh(&self, y: f64) -> Result<InversionResult> {
        check_arg("sinh_p", y, 0.0, SINH_CUTOFF, true)?;
        if y == 0.0 {
            return Ok(InversionResult::exact(0.0));
        }
        let tol = RESIDUAL_TOL * y;
        let p = self.p().get();
        let c_p = self.constants().c_p;
        if y <= c_p {
            return solve(
                |x| {
                    Ok((
                        self.arsinh(x)?.value - y,
                        self.inverse_derivative(PFunctionKind::Arsinh, x)?,
                    ))
                },
                0.0,
                1.0,
                y,
                tol,
            );
        }
        // Solve in s = ln x. For x >= 1, (1 + t^p)^{−1/p} lies between
        // 2^{−1/p}/t and 1/t, so c_p + 2^{−1/p} s <= arsinh_p(e^s) <= c_p + s.
        // Both bounds are tight as s -> 0, so they are widened past rounding.
        let span = y - c_p;
        let lo = (span * (1.0 - 1e-9) - 1e-15).max(0.0);
        let hi = (span * 2f64.powf(1.0 / p) * (1.0 + 1e-9) + 1e-15).min(f64::MAX.ln());
        if self.arsinh(hi.exp())?.value < y {
            return Err(Error::Divergence(format!("sinh_p({y}) overflows")));
        }
        // arsinh_p(e^s) − s is nearly constant once s is large
        let offset = self.arsinh(lo.exp())?.value - lo;
        let inv = solve(
            |s| {
                let slope = (-(-p * s).exp().ln_1p() / p).exp();
                Ok((self.arsinh(s.exp())?.value - y, slope))
            },
            lo,
            hi,
            y - offset,
            tol,
        )?;
        let x = inv.value.exp();
        Ok(InversionResult {
            value: x,
            bracket_width: x * inv.bracket_width,
            ..inv
        })
    }

    /// Inverse of artanh_p on [0, ∞). Arguments so large that the result
    /// rounds to 1 return the largest double below 1.
    pub fn tanh(&self, y: f64) -> Result<InversionResult> {
        check_arg("tanh_p", y, 0.0, f64::INFINITY, false)?;
        if y == 0.0 {
            return Ok(InversionResult::exact(0.0));
        }
        let p = self.p().get();
        let top = 1.0 - 0.5 * f64::EPSILON;
        // artanh_p(x) >= −ln(1 − x^p)/p, so smaller y cannot saturate
        let floor = -one_minus_pow(top, p).ln() / p;
        if y >= floor && self.artanh(top)?.value <= y {
            return Ok(InversionResult {
                value: top,
                iterations: 1,
                bracket_width: 0.5 * f64::EPSILON,
                converged: true,
            });
        }
        // artanh_p(x) + ln(1 − x^p)/p → (ψ(1) − ψ(1/p))/p as x → 1
        let k = (digamma(1.0)? - digamma(1.0 / p)?) / p;
        let guess = if y > k + 1.0 {
            (-(-p * (y - k)).exp_m1()).powf(1.0 / p).min(top)
        } else {
            y.min(0.5)
        };
        solve(
            |x| {
                Ok((
                    self.artanh(x)?.value - y,
                    self.inverse_derivative(PFunctionKind::Artanh, x)?,
                ))
            },
            0.0,
            top,
            guess,
            RESIDUAL_TOL * y,
        )
    }

    /// Forward function matching `kind`, as a plain value.
    pub fn forward(&self, kind: PFunctionKind, y: f64) -> Result<f64> {
        match kind {
            PFunctionKind::Arcsin => Ok(self.sin(y)?.value),
            PFunctionKind::Arccos => self.cos(y),
            PFunctionKind::Arctan => Ok(self.tan(y)?.value),
            PFunctionKind::Arsinh => Ok(self.sinh(y)?.value),
            PFunctionKind::Artanh => Ok(self.tanh(y)?.value),
        }
    }
}

#[inline]
fn ln_one_plus_pow(x: f64, p: f64) -> f64 {
    let y = p * x.ln();
    if y > 0.0 {
        y + (-y).exp().ln_1p()
    } else {
        y.exp().ln_1p()
    }
}

fn context(p: f64) -> Result<PFunctions> {
    PFunctions::new(PExponent::new(p)?)
}

pub fn sin_p(p: f64, y: f64) -> Result<InversionResult> {
    context(p)?.sin(y)
}

pub fn cos_p(p: f64, y: f64) -> Result<f64> {
    context(p)?.cos(y)
}

pub fn tan_p(p: f64, y: f64) -> Result<InversionResult> {
    context(p)?.tan(y)
}

pub fn sinh_p(p: f64, y: f64) -> Result<InversionResult> {
    context(p)?.sinh(y)
}

pub fn tanh_p(p: f64, y: f64) -> Result<InversionResult> {
    context(p)?.tanh(y)
}

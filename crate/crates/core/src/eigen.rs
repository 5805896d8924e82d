//! Finite-difference check that u(t) = sin_p(nπ_p t) and
//! λ_n = (p − 1)(nπ_p)^p solve −(|u′|^{p−2}u′)′ = λ|u|^{p−2}u on (0, 1)
//! with u(0) = u(1) = 0.

use serde::Serialize;

use crate::constants::PExponent;
use crate::error::{Error, Result};
use crate::inverse::PFunctions;

/// Samples with |u| at or below this are skipped.
pub const NODE_EXCLUSION: f64 = 1e-3;
pub const MIN_GRID: usize = 64;
pub const MIN_SAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenResidualReport {
    pub p: f64,
    pub n: u32,
    pub grid_size: usize,
    pub step: f64,
    /// Eigenvalue the residual was measured against.
    pub lambda: f64,
    pub max_rel_residual: f64,
    /// Where the maximum was attained.
    pub argmax_t: f64,
    pub samples: usize,
    pub boundary_values: (f64, f64),
    /// Sign changes of u over the interior grid points.
    pub sign_changes: usize,
}

#[inline]
fn phi(z: f64, p: f64) -> f64 {
    if z == 0.0 {
        0.0
    } else {
        z.abs().powf(p - 1.0).copysign(z)
    }
}

/// The n-th eigenfunction profile and its derivative.
#[derive(Debug, Clone, Copy)]
pub struct Eigenfunction {
    funcs: PFunctions,
    n: u32,
}

impl Eigenfunction {
    pub fn new(p: PExponent, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("eigenfunction index n must be >= 1".into()));
        }
        Ok(Eigenfunction {
            funcs: PFunctions::new(p)?,
            n,
        })
    }

    /// sin_p extended to [0, nπ_p]: even about a_p, odd about π_p, period
    /// 2π_p. Returns the value and the matching extension of cos_p (so that
    /// d/ds = cos part).
    pub fn extended_sin_cos(&self, s: f64) -> Result<(f64, f64)> {
        let c = self.funcs.constants();
        let m = (s / c.pi_p).floor();
        let r = (s - m * c.pi_p).clamp(0.0, c.pi_p);
        let sign = if m.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
        let (u, du) = if r <= c.a_p {
            let sc = self.funcs.sin_cos(r)?;
            (sc.sin, sc.cos)
        } else {
            let sc = self.funcs.sin_cos(c.pi_p - r)?;
            (sc.sin, -sc.cos)
        };
        Ok((sign * u, sign * du))
    }

    /// u(t) = sin_p(nπ_p t) for t in [0, 1].
    pub fn value(&self, t: f64) -> Result<f64> {
        Ok(self.value_and_derivative(t)?.0)
    }

    /// (u(t), u′(t)).
    pub fn value_and_derivative(&self, t: f64) -> Result<(f64, f64)> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("t must lie in [0, 1], got {t}")));
        }
        let w = self.n as f64 * self.funcs.constants().pi_p;
        let (u, c) = self.extended_sin_cos(w * t)?;
        Ok((u, w * c))
    }

    pub fn lambda(&self) -> Result<f64> {
        self.funcs.constants().lambda_n(self.n)
    }

    /// Residual against the closed-form eigenvalue.
    pub fn residual(&self, grid_size: usize) -> Result<EigenResidualReport> {
        let lambda = self.lambda()?;
        Ok(self.residuals(grid_size, &[lambda])?.remove(0))
    }

    /// Residual reports on one grid for several trial eigenvalues, sharing
    /// the function evaluations.
    pub fn residuals(&self, grid_size: usize, lambdas: &[f64]) -> Result<Vec<EigenResidualReport>> {
        if grid_size < MIN_GRID {
            return Err(Error::Domain(format!(
                "grid_size must be at least {MIN_GRID}, got {grid_size}"
            )));
        }
        let p = self.funcs.p().get();
        let h = 1.0 / grid_size as f64;
        let mut u = Vec::with_capacity(grid_size + 1);
        let mut w = Vec::with_capacity(grid_size + 1);
        for i in 0..=grid_size {
            let t = if i == grid_size { 1.0 } else { i as f64 * h };
            let (ui, dui) = self.value_and_derivative(t)?;
            u.push(ui);
            w.push(phi(dui, p));
        }
        let sign_changes = u[1..grid_size]
            .windows(2)
            .filter(|pair| pair[0] * pair[1] < 0.0 || (pair[0] != 0.0 && pair[1] == 0.0))
            .count();
        let mut reports: Vec<EigenResidualReport> = lambdas
            .iter()
            .map(|&lambda| EigenResidualReport {
                p,
                n: self.n,
                grid_size,
                step: h,
                lambda,
                max_rel_residual: 0.0,
                argmax_t: f64::NAN,
                samples: 0,
                boundary_values: (u[0], u[grid_size]),
                sign_changes,
            })
            .collect();
        for i in 1..grid_size {
            if u[i].abs() <= NODE_EXCLUSION {
                continue;
            }
            let dw = (w[i + 1] - w[i - 1]) / (2.0 * h);
            let rhs = phi(u[i], p);
            for rep in reports.iter_mut() {
                let r = (-dw - rep.lambda * rhs).abs() / rep.lambda;
                rep.samples += 1;
                if r > rep.max_rel_residual || rep.argmax_t.is_nan() {
                    rep.max_rel_residual = r;
                    rep.argmax_t = i as f64 * h;
                }
            }
        }
        if reports[0].samples < MIN_SAMPLES {
            return Err(Error::DegenerateGrid(format!(
                "only {} samples survive the node exclusion",
                reports[0].samples
            )));
        }
        Ok(reports)
    }
}

pub fn extended_sin_p(p: f64, t: f64, n: u32) -> Result<f64> {
    Eigenfunction::new(PExponent::new(p)?, n)?.value(t)
}

pub fn residual(p: f64, n: u32, grid_size: usize) -> Result<EigenResidualReport> {
    Eigenfunction::new(PExponent::new(p)?, n)?.residual(grid_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ef(p: f64, n: u32) -> Eigenfunction {
        Eigenfunction::new(PExponent::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn classical_profile() {
        let e = ef(2.0, 3);
        for i in 0..=50 {
            let t = i as f64 / 50.0;
            let (u, du) = e.value_and_derivative(t).unwrap();
            assert!((u - (3.0 * PI * t).sin()).abs() < 1e-12, "t = {t}");
            assert!((du - 3.0 * PI * (3.0 * PI * t).cos()).abs() < 1e-11, "t = {t}");
        }
    }

    #[test]
    fn boundary_and_nodes() {
        for &p in &[1.5, 2.0, 3.0, 5.0] {
            for n in 1..=4 {
                let e = ef(p, n);
                assert!(e.value(0.0).unwrap().abs() <= 1e-12);
                assert!(e.value(1.0).unwrap().abs() <= 1e-12, "p = {p} n = {n}");
                for k in 1..n {
                    let t = k as f64 / n as f64;
                    assert!(e.value(t).unwrap().abs() <= 1e-12, "p = {p} n = {n}");
                }
            }
        }
        assert!(ef(3.0, 1).value(1.5).is_err());
        assert!(Eigenfunction::new(PExponent::new(3.0).unwrap(), 0).is_err());
    }

    #[test]
    fn table_value_through_profile() {
        let e = ef(3.0, 1);
        let t = 1.0 / e.funcs.constants().pi_p;
        assert!((e.value(t).unwrap() - 0.91139).abs() < 5e-6);
        assert!(ef(3.0, 2).value(0.5).unwrap().abs() < 1e-12);
    }

    #[test]
    fn symmetric_about_half_period() {
        let e = ef(3.0, 1);
        for &t in &[0.1, 0.2, 0.37, 0.49] {
            let a = e.value(t).unwrap();
            let b = e.value(1.0 - t).unwrap();
            assert!((a - b).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn residual_small_and_sensitive() {
        let rep = ef(2.0, 1).residual(4096).unwrap();
        assert!(rep.max_rel_residual <= 1e-6, "{rep:?}");
        // measured: 1.08e-5 (n = 1) and 3.06e-5 (n = 2), both at a maximum of u
        for (n, bound) in [(1, 1.2e-5), (2, 3.5e-5)] {
            let e = ef(3.0, n);
            let lam = e.lambda().unwrap();
            let reps = e.residuals(4096, &[lam, 1.01 * lam]).unwrap();
            assert!(reps[0].max_rel_residual <= bound, "{:?}", reps[0]);
            assert!(reps[1].max_rel_residual > 5e-3, "{:?}", reps[1]);
            assert_eq!(reps[0].sign_changes, n as usize - 1);
        }
    }

    #[test]
    fn refinement_order() {
        // second order for p = 2; at a maximum of u with p > 2 the flux
        // behaves like |t - t0|^{p/(p-1)}, so halving h gains 2^{p/(p-1)}
        for &(p, order) in &[(2.0, 2.0), (3.0, 1.5), (5.0, 1.25)] {
            let e = ef(p, 1);
            let coarse = e.residual(2048).unwrap().max_rel_residual;
            let fine = e.residual(4096).unwrap().max_rel_residual;
            let ratio = coarse / fine;
            let expected = 2f64.powf(order);
            assert!((ratio / expected - 1.0).abs() < 0.05, "p = {p}: {ratio}");
        }
    }

    #[test]
    fn small_grid_rejected() {
        assert!(matches!(ef(2.0, 1).residual(32), Err(Error::Domain(_))));
    }
}

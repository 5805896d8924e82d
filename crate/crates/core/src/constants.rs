//! The exponent p and the constants π_p, a_p, b_p, c_p derived from it.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{digamma, hyper2f1, Hyper2F1Params};

/// Agreement required between the two closed forms of b_p.
pub const B_P_ROUTE_TOL: f64 = 1e-11;

/// Exponent p > 1 of the p-Laplacian.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 1.0 {
            Ok(PExponent(p))
        } else {
            Err(Error::Domain(format!("p must be a finite number > 1, got {p}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// 1/p
    #[inline]
    pub fn recip(self) -> f64 {
        1.0 / self.0
    }
}

impl TryFrom<f64> for PExponent {
    type Error = Error;
    fn try_from(p: f64) -> Result<Self> {
        PExponent::new(p)
    }
}

impl From<PExponent> for f64 {
    fn from(p: PExponent) -> f64 {
        p.0
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// π_p = 2π / (p sin(π/p)).
pub fn pi_p(p: PExponent) -> f64 {
    let p = p.get();
    2.0 * PI / (p * (PI / p).sin())
}

/// b_p through the digamma difference (1/(2p)) (ψ((1+p)/(2p)) − ψ(1/(2p))).
pub fn b_p_digamma(p: PExponent) -> Result<f64> {
    let pv = p.get();
    Ok((digamma((1.0 + pv) / (2.0 * pv))? - digamma(1.0 / (2.0 * pv))?) / (2.0 * pv))
}

/// b_p through 2^(−1/p) F(1/p, 1/p; 1 + 1/p; 1/2).
pub fn b_p_hypergeometric(p: PExponent) -> Result<f64> {
    let s = p.recip();
    let f = hyper2f1(Hyper2F1Params::new(s, s, 1.0 + s, 0.5)?)?;
    Ok(2f64.powf(-s) * f.value)
}

/// b_p = arctan_p(1). Both closed forms are evaluated and must agree to
/// [`B_P_ROUTE_TOL`]; the hypergeometric value is returned.
pub fn b_p(p: PExponent) -> Result<f64> {
    let via_psi = b_p_digamma(p)?;
    let via_f = b_p_hypergeometric(p)?;
    if (via_psi - via_f).abs() > B_P_ROUTE_TOL {
        return Err(Error::Inconsistent {
            what: "b_p",
            first: via_psi,
            second: via_f,
        });
    }
    Ok(via_f)
}

/// c_p = arsinh_p(1) = 2^(−1/p) F(1, 1/p; 1 + 1/p; 1/2).
pub fn c_p(p: PExponent) -> Result<f64> {
    let s = p.recip();
    let f = hyper2f1(Hyper2F1Params::new(1.0, s, 1.0 + s, 0.5)?)?;
    Ok(2f64.powf(-s) * f.value)
}

/// n-th Dirichlet eigenvalue λ_n = (p − 1)(n π_p)^p on (0, 1).
pub fn lambda_n(p: PExponent, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("eigenvalue index n must be >= 1".into()));
    }
    let v = (p.get() - 1.0) * (n as f64 * pi_p(p)).powf(p.get());
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!(
            "lambda_{n} for p = {p} exceeds the f64 range"
        )))
    }
}

/// The constants for one exponent, computed once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PConstants {
    pub p: PExponent,
    pub pi_p: f64,
    /// π_p / 2, the right end of the increasing branch of sin_p.
    pub a_p: f64,
    pub b_p: f64,
    pub c_p: f64,
}

impl PConstants {
    pub fn new(p: PExponent) -> Result<Self> {
        let pi = pi_p(p);
        Ok(PConstants {
            p,
            pi_p: pi,
            a_p: 0.5 * pi,
            b_p: b_p(p)?,
            c_p: c_p(p)?,
        })
    }

    pub fn lambda_n(&self, n: u32) -> Result<f64> {
        lambda_n(self.p, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;
    use crate::specfun::beta;

    fn p(v: f64) -> PExponent {
        PExponent::new(v).unwrap()
    }

    #[test]
    fn exponent_validation() {
        assert!(PExponent::new(1.0).is_err());
        assert!(PExponent::new(0.5).is_err());
        assert!(PExponent::new(f64::NAN).is_err());
        assert!(PExponent::new(f64::INFINITY).is_err());
        assert!(PExponent::new(1.000_001).is_ok());
        let parsed: std::result::Result<PExponent, _> = serde_json::from_str("0.9");
        assert!(parsed.is_err());
    }

    #[test]
    fn pi_p_values() {
        assert!((pi_p(p(2.0)) - PI).abs() < 1e-15);
        assert!((pi_p(p(3.0)) - 2.418_399_152_312_290_5).abs() < 1e-14);
        assert!((pi_p(p(3.0)) - 2.41840).abs() < 5e-6);
        let expected = 2.0 * PI / (1.5 * (2.0 * PI / 3.0).sin());
        assert!((pi_p(p(1.5)) - expected).abs() < 1e-15);
    }

    #[test]
    fn pi_p_matches_beta_integral() {
        for &v in &[1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0] {
            let closed = pi_p(p(v));
            let via_beta = 2.0 / v * beta(1.0 - 1.0 / v, 1.0 / v).unwrap();
            assert!(((closed - via_beta) / closed).abs() < 1e-12, "p = {v}");
        }
    }

    #[test]
    fn b_p_routes_agree() {
        // mpmath, 50 digits
        let reference = [
            (1.1, 0.705_593_027_004_516_355),
            (1.5, 0.747_101_455_782_848_361),
            (2.0, std::f64::consts::FRAC_PI_4),
            (3.0, 0.835_648_848_264_721_053),
            (5.0, 0.888_313_572_651_788_638),
            (10.0, 0.938_094_287_032_884_827),
            (50.0, 0.986_458_979_337_050_988),
        ];
        for (v, r) in reference {
            let a = b_p_digamma(p(v)).unwrap();
            let b = b_p_hypergeometric(p(v)).unwrap();
            assert!((a - b).abs() < B_P_ROUTE_TOL, "p = {v}: {a} vs {b}");
            assert!((b_p(p(v)).unwrap() - r).abs() < 1e-13, "p = {v}");
        }
        assert!((b_p(p(2.0)).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((b_p(p(3.0)).unwrap() - 0.83565).abs() < 5e-6);
    }

    #[test]
    fn c_p_values() {
        let ln = (1.0 + 2f64.sqrt()).ln();
        assert!((c_p(p(2.0)).unwrap() - ln).abs() < 1e-15);
        assert!((c_p(p(3.0)).unwrap() - 0.93771).abs() < 5e-6);
        // independent quadrature of ∫₀¹ (1 + t^10)^(-1/10) dt
        let q = quad::integrate(|n| (1.0 + n.x.powi(10)).powf(-0.1), 0.0, 1.0, 1e-14).unwrap();
        assert!((c_p(p(10.0)).unwrap() - q.value).abs() < 1e-13);
        assert!((q.value - 0.992_730_685_006_727_304).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues() {
        assert!((lambda_n(p(2.0), 1).unwrap() - PI * PI).abs() < 1e-13);
        assert!((lambda_n(p(2.0), 3).unwrap() - 9.0 * PI * PI).abs() < 1e-12);
        let pi3 = pi_p(p(3.0));
        assert!((lambda_n(p(3.0), 1).unwrap() - 2.0 * pi3.powi(3)).abs() < 1e-13);
        assert!(lambda_n(p(2.0), 0).is_err());
        assert!(matches!(lambda_n(p(400.0), 1_000_000), Err(Error::Overflow(_))));
    }

    #[test]
    fn constants_record() {
        let c = PConstants::new(p(3.0)).unwrap();
        assert_eq!(c.a_p, c.pi_p / 2.0);
        assert!((c.a_p - 1.20920).abs() < 5e-6);
        assert!((c.lambda_n(2).unwrap() - lambda_n(p(3.0), 2).unwrap()).abs() == 0.0);
    }
}

//! Sweep of sin_p(π_p x/2), tan_p(π_p x/2), sinh_p(c_p x) and tanh_p(x) in
//! p at fixed x. Informational only: sign changes are reported, never
//! asserted.

use serde::Serialize;

use crate::constants::PExponent;
use crate::error::{Error, Result};
use crate::inverse::PFunctions;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub function: &'static str,
    pub x: f64,
    pub p: Vec<f64>,
    pub values: Vec<f64>,
    /// Sign of each successive difference: 1, −1 or 0.
    pub signs: Vec<i8>,
    /// No sign change among the nonzero differences.
    pub monotone: bool,
    /// Whether tanh_p(x) increases, the expected direction; `None` for the
    /// other functions, where only monotonicity is expected.
    pub matches_expected: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    pub sign_changes: usize,
}

pub const CONJECTURE_FUNCTIONS: [&str; 4] = ["sin_p(π_p x/2)", "tan_p(π_p x/2)", "sinh_p(c_p x)", "tanh_p(x)"];

fn signs(values: &[f64]) -> Vec<i8> {
    values
        .windows(2)
        .map(|w| match (w[1] - w[0]).partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => 1,
            Some(std::cmp::Ordering::Less) => -1,
            _ => 0,
        })
        .collect()
}

pub fn explore_conjecture(p_grid: &[f64], x_grid: &[f64]) -> Result<ConjectureReport> {
    if let Some(&x) = x_grid.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
        return Err(Error::Domain(format!("x must lie in (0, 1), got {x}")));
    }
    let funcs: Vec<PFunctions> = p_grid
        .iter()
        .map(|&p| PFunctions::new(PExponent::new(p)?))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for &x in x_grid {
        for (idx, name) in CONJECTURE_FUNCTIONS.iter().enumerate() {
            let values = funcs
                .iter()
                .map(|f| {
                    let c = f.constants();
                    Ok(match idx {
                        0 => f.sin(c.a_p * x)?.value,
                        1 => f.tan(c.a_p * x)?.value,
                        2 => f.sinh(c.c_p * x)?.value,
                        _ => f.tanh(x)?.value,
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            let s = signs(&values);
            let nonzero: Vec<i8> = s.iter().copied().filter(|&d| d != 0).collect();
            let monotone = nonzero.windows(2).all(|w| w[0] == w[1]);
            let matches_expected = (idx == 3).then(|| s.iter().all(|&d| d > 0));
            rows.push(ConjectureRow {
                function: name,
                x,
                p: p_grid.to_vec(),
                values,
                signs: s,
                monotone,
                matches_expected,
            });
        }
    }
    let sign_changes = rows.iter().filter(|r| !r.monotone).count();
    Ok(ConjectureReport { rows, sign_changes })
}

//! Inequalities, monotonicity statements and identities for the p-functions
//! and related elementary functions, as predicates swept over deterministic
//! grids plus seeded random points.
//!
//! A check is a list of variables and a predicate returning a [`Claim`].
//! Each variable contributes Chebyshev points over its range (ranges may
//! depend on the variables before it); the product grid is evaluated
//! exhaustively and then `random_factor` times as many random points are
//! drawn from a ChaCha stream keyed by the seed and the check id.

mod conjecture;
mod registry;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use conjecture::{explore_conjecture, ConjectureReport, ConjectureRow};
pub use registry::{negative_control, register_paper_checks};

/// Slack for inequalities, relative to `1 + |lhs| + |rhs|`.
pub const INEQ_SLACK: f64 = 1e-12;
/// Two-sided tolerance for identities.
pub const IDENTITY_TOL: f64 = 1e-10;

/// Exponent values used on the deterministic grid. Random points draw p
/// log-uniformly from `[P_SET[0], P_SET[7]]`.
pub const P_SET: [f64; 8] = [1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0, 50.0];

/// What a predicate asserts at one sample point.
#[derive(Debug, Clone, PartialEq)]
pub enum Claim {
    /// `v[0] <= v[1] <= ...`, each step with the inequality slack.
    Chain(Vec<f64>),
    /// `|lhs - rhs| <= IDENTITY_TOL`.
    Identity(f64, f64),
    /// `|lhs - rhs| <= IDENTITY_TOL * max(1, |lhs|, |rhs|)`.
    RelIdentity(f64, f64),
    /// `|value - target| <= tol`, no slack.
    Near { value: f64, target: f64, tol: f64 },
}

impl Claim {
    /// (margin, slack): the claim holds when `margin >= -slack`.
    fn assess(&self) -> (f64, f64) {
        match self {
            Claim::Chain(v) => {
                let mut worst = (f64::INFINITY, 0.0);
                for pair in v.windows(2) {
                    let margin = pair[1] - pair[0];
                    let slack = INEQ_SLACK * (1.0 + pair[0].abs() + pair[1].abs());
                    // NaN margins compare false and must count as failures
                    if !(margin + slack >= worst.0 + worst.1) {
                        worst = (if margin.is_nan() { f64::NEG_INFINITY } else { margin }, slack);
                    }
                }
                worst
            }
            Claim::Identity(a, b) => (-nan_to_inf((a - b).abs()), IDENTITY_TOL),
            Claim::RelIdentity(a, b) => {
                let scale = 1f64.max(a.abs()).max(b.abs());
                (-nan_to_inf((a - b).abs()), IDENTITY_TOL * scale)
            }
            Claim::Near { value, target, tol } => (tol - nan_to_inf((value - target).abs()), 0.0),
        }
    }
}

fn nan_to_inf(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

type RangeFn = Box<dyn Fn(&[f64]) -> (f64, f64) + Send + Sync>;

pub enum VarRange {
    /// The exponent p: [`P_SET`] on the grid, log-uniform random draws.
    Exponent,
    /// Open interval, possibly depending on earlier variables.
    Interval { bounds: RangeFn, scale: Scale },
}

pub struct Variable {
    pub name: &'static str,
    pub range: VarRange,
}

impl Variable {
    pub fn exponent() -> Self {
        Variable {
            name: "p",
            range: VarRange::Exponent,
        }
    }

    pub fn interval(name: &'static str, lo: f64, hi: f64) -> Self {
        Self::dependent(name, move |_| (lo, hi))
    }

    pub fn log_interval(name: &'static str, lo: f64, hi: f64) -> Self {
        Variable {
            name,
            range: VarRange::Interval {
                bounds: Box::new(move |_| (lo, hi)),
                scale: Scale::Log,
            },
        }
    }

    pub fn dependent<F>(name: &'static str, bounds: F) -> Self
    where
        F: Fn(&[f64]) -> (f64, f64) + Send + Sync + 'static,
    {
        Variable {
            name,
            range: VarRange::Interval {
                bounds: Box::new(bounds),
                scale: Scale::Linear,
            },
        }
    }

    fn is_free(&self) -> bool {
        matches!(self.range, VarRange::Interval { .. })
    }
}

type PredicateFn = Box<dyn Fn(&[f64]) -> Result<Claim> + Send + Sync>;

pub struct InequalityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub variables: Vec<Variable>,
    predicate: PredicateFn,
    /// Grid points per free variable; `None` uses [`GridSpec`].
    pub points: Option<usize>,
}

impl InequalityCheck {
    pub fn new<F>(id: &'static str, description: &'static str, variables: Vec<Variable>, f: F) -> Self
    where
        F: Fn(&[f64]) -> Result<Claim> + Send + Sync + 'static,
    {
        InequalityCheck {
            id,
            description,
            variables,
            predicate: Box::new(f),
            points: None,
        }
    }

    pub fn with_points(mut self, n: usize) -> Self {
        self.points = Some(n);
        self
    }

    pub fn evaluate(&self, point: &[f64]) -> Result<Claim> {
        (self.predicate)(point)
    }

    pub fn free_variables(&self) -> usize {
        self.variables.iter().filter(|v| v.is_free()).count()
    }
}

/// Grid density. `per_free_var[k - 1]` is the number of Chebyshev points
/// per free variable in a check with k free variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GridSpec {
    pub per_free_var: Vec<usize>,
    pub random_factor: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            per_free_var: vec![64, 64, 16, 8],
            random_factor: 10,
        }
    }
}

impl GridSpec {
    fn points_for(&self, check: &InequalityCheck) -> usize {
        if let Some(n) = check.points {
            return n;
        }
        let k = check.free_variables().max(1);
        let idx = (k - 1).min(self.per_free_var.len().saturating_sub(1));
        self.per_free_var.get(idx).copied().unwrap_or(8)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub description: String,
    pub samples: usize,
    pub violations: usize,
    /// Samples whose evaluation failed; each also counts as a violation.
    pub errors: usize,
    pub worst_margin: f64,
    pub worst_slack: f64,
    pub worst_point: BTreeMap<String, f64>,
    pub first_error: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Chebyshev points of the first kind on the open interval (lo, hi).
pub fn chebyshev(lo: f64, hi: f64, n: usize, scale: Scale) -> Vec<f64> {
    let (a, b) = match scale {
        Scale::Linear => (lo, hi),
        Scale::Log => (lo.ln(), hi.ln()),
    };
    (0..n)
        .map(|i| {
            let c = ((2 * i + 1) as f64 * PI / (2 * n) as f64).cos();
            let t = 0.5 * (a + b) - 0.5 * (b - a) * c;
            match scale {
                Scale::Linear => t,
                Scale::Log => t.exp(),
            }
        })
        .collect()
}

/// 64-bit FNV-1a, used to derive a per-check stream from the seed.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

struct Tally<'a> {
    check: &'a InequalityCheck,
    report: CheckReport,
    worst_key: f64,
}

impl<'a> Tally<'a> {
    fn new(check: &'a InequalityCheck) -> Self {
        Tally {
            check,
            report: CheckReport {
                id: check.id.to_string(),
                description: check.description.to_string(),
                samples: 0,
                violations: 0,
                errors: 0,
                worst_margin: f64::INFINITY,
                worst_slack: 0.0,
                worst_point: BTreeMap::new(),
                first_error: None,
            },
            worst_key: f64::INFINITY,
        }
    }

    fn record(&mut self, point: &[f64]) {
        let r = &mut self.report;
        r.samples += 1;
        match self.check.evaluate(point) {
            Ok(claim) => {
                let (margin, slack) = claim.assess();
                if margin < -slack {
                    r.violations += 1;
                }
                if margin + slack < self.worst_key {
                    self.worst_key = margin + slack;
                    r.worst_margin = margin;
                    r.worst_slack = slack;
                    r.worst_point = self
                        .check
                        .variables
                        .iter()
                        .zip(point)
                        .map(|(v, &x)| (v.name.to_string(), x))
                        .collect();
                }
            }
            Err(e) => {
                r.violations += 1;
                r.errors += 1;
                if r.first_error.is_none() {
                    let at: Vec<String> = self
                        .check
                        .variables
                        .iter()
                        .zip(point)
                        .map(|(v, x)| format!("{}={x}", v.name))
                        .collect();
                    r.first_error = Some(format!("{e} at {}", at.join(", ")));
                }
            }
        }
    }
}

fn enumerate_grid(vars: &[Variable], n: usize, prefix: &mut Vec<f64>, visit: &mut dyn FnMut(&[f64])) {
    let depth = prefix.len();
    if depth == vars.len() {
        visit(prefix);
        return;
    }
    let values = match &vars[depth].range {
        VarRange::Exponent => P_SET.to_vec(),
        VarRange::Interval { bounds, scale } => {
            let (lo, hi) = bounds(prefix);
            chebyshev(lo, hi, n, *scale)
        }
    };
    for v in values {
        prefix.push(v);
        enumerate_grid(vars, n, prefix, visit);
        prefix.pop();
    }
}

fn draw_point(vars: &[Variable], rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut point = Vec::with_capacity(vars.len());
    for v in vars {
        let x = match &v.range {
            VarRange::Exponent => {
                let (lo, hi) = (P_SET[0].ln(), P_SET[P_SET.len() - 1].ln());
                (lo + (hi - lo) * rng.gen::<f64>()).exp()
            }
            VarRange::Interval { bounds, scale } => {
                let (lo, hi) = bounds(&point);
                let (a, b) = match scale {
                    Scale::Linear => (lo, hi),
                    Scale::Log => (lo.ln(), hi.ln()),
                };
                // open interval: redraw the (rare) endpoint hits
                let mut t = a + (b - a) * rng.gen::<f64>();
                while t <= a || t >= b {
                    t = a + (b - a) * rng.gen::<f64>();
                }
                match scale {
                    Scale::Linear => t,
                    Scale::Log => t.exp().clamp(lo, hi),
                }
            }
        };
        point.push(x);
    }
    point
}

/// Run one check over its grid and `random_factor` times as many random
/// points.
pub fn run_check_with(check: &InequalityCheck, seed: u64, grid: &GridSpec) -> CheckReport {
    let n = grid.points_for(check);
    let mut tally = Tally::new(check);
    let mut prefix = Vec::with_capacity(check.variables.len());
    let mut grid_count = 0usize;
    enumerate_grid(&check.variables, n, &mut prefix, &mut |pt| {
        grid_count += 1;
        tally.record(pt);
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(check.id));
    for _ in 0..grid.random_factor * grid_count {
        let pt = draw_point(&check.variables, &mut rng);
        tally.record(&pt);
    }
    tally.report
}

pub fn run_check(check: &InequalityCheck, seed: u64) -> CheckReport {
    run_check_with(check, seed, &GridSpec::default())
}

/// Run several checks on all available cores. Reports come back in the
/// order of `checks`, so the result does not depend on scheduling.
pub fn run_checks(checks: &[InequalityCheck], seed: u64, grid: &GridSpec) -> Vec<CheckReport> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(checks.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<CheckReport>>> = checks.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(check) = checks.get(i) else { break };
                let report = run_check_with(check, seed, grid);
                *slots[i].lock().unwrap() = Some(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every check was run"))
        .collect()
}

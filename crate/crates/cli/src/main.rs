mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ptrig::constants::{PConstants, PExponent};
use ptrig::eigen::Eigenfunction;
use ptrig::forward::RESIDUAL_TOL;
use ptrig::ineq::{self, CheckReport, InequalityCheck};
use ptrig::inverse::{PFunctionKind, PFunctions};

use config::Config;
use output::{emit, Cell, Format, OutputSpec, Report};

/// Generalized trigonometric and hyperbolic functions of the p-Laplacian.
///
/// Exit status: 0 on success, 1 when a verification fails, 2 on usage or
/// domain errors.
#[derive(Parser, Debug)]
#[command(name = "ptrig", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Digits after the decimal point (round half to even).
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// TOML file with grid densities, tolerances and seeds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one of the ten functions at a list of points.
    Eval {
        /// sin_p, cos_p, tan_p, sinh_p, tanh_p, arcsin_p, arccos_p, arctan_p, arsinh_p or artanh_p
        function: String,
        #[arg(long)]
        p: f64,
        #[arg(long, visible_alias = "grid", value_delimiter = ',', required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
    },
    /// Both value tables (inverse functions, then forward functions).
    Table {
        #[arg(long)]
        p: f64,
        #[arg(long, visible_alias = "x", value_delimiter = ',', allow_negative_numbers = true)]
        grid: Option<Vec<f64>>,
    },
    /// π_p, a_p, b_p, c_p and λ_1 for each p.
    Constants {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        p: Vec<f64>,
    },
    /// Sweep registered inequality checks.
    Check {
        /// Comma-separated check ids; all registered checks when omitted.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Finite-difference residual of the n-th Dirichlet eigenpair.
    VerifyEigen {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        grid: Option<usize>,
        /// Residual threshold at the reference grid.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Monotonicity in p of four functions at fixed x (informational).
    ExploreConjecture {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        p: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        x: Option<Vec<f64>>,
    },
}

/// Bad input: reported with exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn exit_status(err: &anyhow::Error) -> u8 {
    if err.is::<UsageError>() {
        return 2;
    }
    match err.downcast_ref::<ptrig::Error>() {
        Some(ptrig::Error::Domain(_)) | Some(ptrig::Error::DegenerateGrid(_)) => 2,
        Some(_) => 1,
        None => 2,
    }
}

#[derive(Debug, Clone, Copy)]
enum Function {
    Inverse(PFunctionKind),
    Forward(PFunctionKind),
}

impl Function {
    fn parse(name: &str) -> anyhow::Result<Function> {
        for kind in PFunctionKind::ALL {
            if kind.name() == name {
                return Ok(Function::Inverse(kind));
            }
            if kind.forward_name() == name {
                return Ok(Function::Forward(kind));
            }
        }
        let names: Vec<&str> = PFunctionKind::ALL
            .iter()
            .flat_map(|k| [k.forward_name(), k.name()])
            .collect();
        Err(usage(format!("unknown function {name:?}; expected one of {}", names.join(", "))))
    }
}

struct Context {
    config: Config,
    spec: OutputSpec,
    command: &'static str,
}

impl Context {
    fn meta(&self, seed: Option<u64>, params: Value) -> Value {
        json!({
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "seed": seed,
            "config": {
                "params": params,
                "precision": self.spec.precision,
                "settings": self.config,
            },
        })
    }
}

fn funcs(p: f64) -> anyhow::Result<PFunctions> {
    Ok(PFunctions::new(PExponent::new(p)?)?)
}

/// Forward value with an error estimate: the residual tolerance of the
/// inversion carried through the derivative of the inverse.
fn forward_value(f: &PFunctions, kind: PFunctionKind, y: f64) -> anyhow::Result<(f64, f64)> {
    let value = f.forward(kind, y)?;
    let estimate = match f.inverse_derivative(kind, value) {
        Ok(d) if d.is_finite() && d != 0.0 => RESIDUAL_TOL * y.abs() / d.abs(),
        _ => 0.0,
    };
    Ok((value, estimate))
}

fn cmd_eval(ctx: &Context, name: &str, p: f64, xs: &[f64]) -> anyhow::Result<bool> {
    let function = Function::parse(name)?;
    let f = funcs(p)?;
    let mut report = Report::new(["function", "p", "x", "value", "method", "error_estimate"]);
    for &x in xs {
        let (value, method, estimate) = match function {
            Function::Inverse(kind) => {
                let r = f.eval(kind, x)?;
                (r.value, r.method.as_str(), r.abs_error_estimate)
            }
            Function::Forward(kind) => {
                let (v, e) = forward_value(&f, kind, x)?;
                (v, "newton_inversion", e)
            }
        };
        report.push(vec![
            name.into(),
            Cell::Fixed(p),
            Cell::Fixed(x),
            Cell::Fixed(value),
            method.into(),
            Cell::Sci(estimate),
        ]);
    }
    emit(&report, &ctx.spec, ctx.meta(None, json!({ "function": name, "p": p, "x": xs })))?;
    Ok(true)
}

fn cmd_table(ctx: &Context, p: f64, grid: &[f64]) -> anyhow::Result<bool> {
    if let Some(&x) = grid.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(usage(format!("grid values must lie in [0, 1], got {x}")));
    }
    let f = funcs(p)?;
    let mut columns = vec!["x"];
    columns.extend(PFunctionKind::ALL.iter().map(|k| k.name()));
    columns.extend(PFunctionKind::ALL.iter().map(|k| k.forward_name()));
    let mut report = Report::new(columns);
    report.text_sections = vec![(0..=5).collect(), std::iter::once(0).chain(6..=10).collect()];
    for &x in grid {
        let mut row = vec![Cell::Fixed(x)];
        for kind in PFunctionKind::ALL {
            let v = if kind == PFunctionKind::Artanh && x == 1.0 {
                f64::INFINITY
            } else {
                f.eval(kind, x)?.value
            };
            row.push(Cell::Fixed(v));
        }
        for kind in PFunctionKind::ALL {
            row.push(Cell::Fixed(f.forward(kind, x)?));
        }
        report.push(row);
    }
    emit(&report, &ctx.spec, ctx.meta(None, json!({ "p": p, "grid": grid })))?;
    Ok(true)
}

fn cmd_constants(ctx: &Context, ps: &[f64]) -> anyhow::Result<bool> {
    let mut report = Report::new(["p", "pi_p", "a_p", "b_p", "c_p", "lambda_1"]);
    for &p in ps {
        let c = PConstants::new(PExponent::new(p)?)?;
        report.push(vec![
            Cell::Fixed(p),
            Cell::Fixed(c.pi_p),
            Cell::Fixed(c.a_p),
            Cell::Fixed(c.b_p),
            Cell::Fixed(c.c_p),
            Cell::Fixed(c.lambda_n(1)?),
        ]);
    }
    emit(&report, &ctx.spec, ctx.meta(None, json!({ "p": ps })))?;
    Ok(true)
}

fn select_checks(ids: Option<&[String]>) -> anyhow::Result<Vec<InequalityCheck>> {
    let registry = ineq::register_paper_checks();
    let Some(ids) = ids else {
        return Ok(registry);
    };
    let mut pool: Vec<Option<InequalityCheck>> = registry.into_iter().map(Some).collect();
    pool.push(Some(ineq::negative_control()));
    let mut selected = Vec::with_capacity(ids.len());
    for id in ids {
        let slot = pool.iter_mut().find(|c| c.as_ref().is_some_and(|c| c.id == id.as_str()));
        match slot.and_then(Option::take) {
            Some(check) => selected.push(check),
            None if selected.iter().any(|c: &InequalityCheck| c.id == id.as_str()) => {}
            None => return Err(usage(format!("unknown check id {id:?}"))),
        }
    }
    Ok(selected)
}

fn check_row(r: &CheckReport) -> Vec<Cell> {
    let point = r
        .worst_point
        .iter()
        .map(|(k, v)| (k.clone(), Cell::Sci(*v)))
        .collect();
    vec![
        r.id.as_str().into(),
        r.description.as_str().into(),
        r.samples.into(),
        r.violations.into(),
        r.errors.into(),
        Cell::Sci(r.worst_margin),
        Cell::Sci(r.worst_slack),
        Cell::Map(point),
        r.first_error.clone().into(),
        if r.passed() { "PASS" } else { "FAIL" }.into(),
    ]
}

fn cmd_check(ctx: &Context, ids: Option<&[String]>, seed: u64) -> anyhow::Result<bool> {
    let checks = select_checks(ids)?;
    let reports = ineq::run_checks(&checks, seed, &ctx.config.check);
    let mut report = Report::new([
        "id",
        "description",
        "samples",
        "violations",
        "errors",
        "worst_margin",
        "worst_slack",
        "worst_point",
        "first_error",
        "status",
    ]);
    report.text_sections = vec![vec![0, 2, 3, 4, 5, 7, 9]];
    for r in &reports {
        report.push(check_row(r));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    emit(&report, &ctx.spec, ctx.meta(Some(seed), json!({ "ids": ids })))?;
    eprintln!("{} checks, {failed} with violations", reports.len());
    Ok(failed == 0)
}

fn cmd_verify_eigen(ctx: &Context, p: f64, n: u32, grid: usize) -> anyhow::Result<bool> {
    let e = Eigenfunction::new(PExponent::new(p)?, n)?;
    let r = e.residual(grid)?;
    let threshold = ctx.config.eigen.threshold(grid);
    let passed = r.max_rel_residual <= threshold;
    let mut report = Report::new([
        "p",
        "n",
        "grid_size",
        "step",
        "lambda",
        "max_rel_residual",
        "argmax_t",
        "samples",
        "u_0",
        "u_1",
        "sign_changes",
        "threshold",
        "status",
    ]);
    report.push(vec![
        Cell::Fixed(r.p),
        (r.n as usize).into(),
        r.grid_size.into(),
        Cell::Sci(r.step),
        Cell::Sci(r.lambda),
        Cell::Sci(r.max_rel_residual),
        Cell::Fixed(r.argmax_t),
        r.samples.into(),
        Cell::Sci(r.boundary_values.0),
        Cell::Sci(r.boundary_values.1),
        r.sign_changes.into(),
        Cell::Sci(threshold),
        if passed { "PASS" } else { "FAIL" }.into(),
    ]);
    emit(&report, &ctx.spec, ctx.meta(None, json!({ "p": p, "n": n, "grid": grid })))?;
    Ok(passed)
}

fn cmd_explore(ctx: &Context, ps: &[f64], xs: &[f64]) -> anyhow::Result<bool> {
    let r = ineq::explore_conjecture(ps, xs)?;
    let mut report = Report::new(["function", "x", "p", "values", "signs", "monotone", "matches_expected"]);
    for row in &r.rows {
        report.push(vec![
            row.function.into(),
            Cell::Fixed(row.x),
            Cell::List(row.p.iter().map(|&v| Cell::Fixed(v)).collect()),
            Cell::List(row.values.iter().map(|&v| Cell::Fixed(v)).collect()),
            Cell::List(row.signs.iter().map(|&s| Cell::Signed(s as i64)).collect()),
            row.monotone.into(),
            row.matches_expected.into(),
        ]);
    }
    emit(&report, &ctx.spec, ctx.meta(None, json!({ "p": ps, "x": xs })))?;
    eprintln!("{} rows, {} with a sign change (informational)", r.rows.len(), r.sign_changes);
    Ok(true)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut config = Config::load(cli.config.as_deref()).map_err(|e| usage(format!("{e:#}")))?;
    let spec = OutputSpec {
        format: cli.format,
        precision: cli.precision as usize,
        out: cli.out,
    };
    let command = match &cli.command {
        Command::Eval { .. } => "eval",
        Command::Table { .. } => "table",
        Command::Constants { .. } => "constants",
        Command::Check { .. } => "check",
        Command::VerifyEigen { .. } => "verify-eigen",
        Command::ExploreConjecture { .. } => "explore-conjecture",
    };
    match cli.command {
        Command::Eval { function, p, x } => {
            let ctx = Context { config, spec, command };
            cmd_eval(&ctx, &function, p, &x)
        }
        Command::Table { p, grid } => {
            if let Some(g) = grid {
                config.table.grid = g;
            }
            let ctx = Context { config, spec, command };
            cmd_table(&ctx, p, &ctx.config.table.grid)
        }
        Command::Constants { p } => {
            let ctx = Context { config, spec, command };
            cmd_constants(&ctx, &p)
        }
        Command::Check { ids, seed } => {
            if let Some(s) = seed {
                config.seed = s;
            }
            let ctx = Context { config, spec, command };
            cmd_check(&ctx, ids.as_deref(), ctx.config.seed)
        }
        Command::VerifyEigen { p, n, grid, tolerance } => {
            if let Some(g) = grid {
                config.eigen.grid = g;
            }
            if let Some(t) = tolerance {
                config.eigen.tolerance = t;
            }
            let ctx = Context { config, spec, command };
            cmd_verify_eigen(&ctx, p, n, ctx.config.eigen.grid)
        }
        Command::ExploreConjecture { p, x } => {
            if let Some(p) = p {
                config.conjecture.p = p;
            }
            if let Some(x) = x {
                config.conjecture.x = x;
            }
            let ctx = Context { config, spec, command };
            cmd_explore(&ctx, &ctx.config.conjecture.p, &ctx.config.conjecture.x)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_status(&e))
        }
    }
}

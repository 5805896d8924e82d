//! The registered claims. Ids follow the numbering of the statements they
//! transcribe; descriptions give the statement itself. Unbounded ranges are
//! truncated to finite windows listed in each description.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{Claim, InequalityCheck, Variable};
use crate::constants::{self, PExponent};
use crate::error::Result;
use crate::inverse::{PFunctionKind, PFunctions};
use crate::specfun::{beta, gamma, hyper2f1, Hyper2F1Params};

use PFunctionKind::{Arccos, Arcsin, Arctan, Arsinh, Artanh};

fn funcs(p: f64) -> Result<PFunctions> {
    PFunctions::new(PExponent::new(p)?)
}

fn inv(f: &PFunctions, kind: PFunctionKind, x: f64) -> Result<f64> {
    Ok(f.eval(kind, x)?.value)
}

fn fwd(f: &PFunctions, kind: PFunctionKind, y: f64) -> Result<f64> {
    f.forward(kind, y)
}

fn f21(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    Ok(hyper2f1(Hyper2F1Params::new(a, b, c, z)?)?.value)
}

fn a_p(p: f64) -> f64 {
    PExponent::new(p).map(|e| 0.5 * constants::pi_p(e)).unwrap_or(f64::NAN)
}

fn b_p(p: f64) -> f64 {
    PExponent::new(p).and_then(constants::b_p).unwrap_or(f64::NAN)
}

fn c_p(p: f64) -> f64 {
    PExponent::new(p).and_then(constants::c_p).unwrap_or(f64::NAN)
}

fn pi_of(p: f64) -> Result<f64> {
    Ok(constants::pi_p(PExponent::new(p)?))
}

fn chain(v: Vec<f64>) -> Result<Claim> {
    Ok(Claim::Chain(v))
}

/// (F(a, b; c; x) − 1) summed without the leading 1.
fn f21_minus_one(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if x > 0.5 {
        return Ok(f21(a, b, c, x)? - 1.0);
    }
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 0..10_000 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    Ok(sum)
}

/// ln(cos kx + sin kx) / k, accurate as k → 0.
fn log_cos_plus_sin(k: f64, x: f64) -> f64 {
    let s = (0.5 * k * x).sin();
    ((k * x).sin() - 2.0 * s * s).ln_1p() / k
}

fn p_x() -> Vec<Variable> {
    vec![Variable::exponent(), Variable::interval("x", 0.0, 1.0)]
}

fn p_r_s(hi: fn(f64) -> f64) -> Vec<Variable> {
    vec![
        Variable::exponent(),
        Variable::dependent("r", move |v| (0.0, hi(v[0]))),
        Variable::dependent("s", move |v| (0.0, hi(v[0]))),
    ]
}

fn r_s(lo: f64, hi: f64) -> Vec<Variable> {
    vec![Variable::interval("r", lo, hi), Variable::interval("s", lo, hi)]
}

/// `pre` variables, then an ordered pair k1 < k2 on a log scale.
fn ordered_k(mut pre: Vec<Variable>, lo: f64, hi: f64) -> Vec<Variable> {
    pre.push(Variable::log_interval("k1", lo, hi));
    pre.push(Variable::dependent("k2", move |v| (v[v.len() - 1], hi)));
    pre
}

fn ordered_pair(lo: f64, hi: f64) -> Vec<Variable> {
    vec![
        Variable::interval("y1", lo, hi),
        Variable::dependent("y2", move |v| (v[0], hi)),
    ]
}

/// g(k2) <= g(k1) when `decreasing`, else g(k1) <= g(k2).
fn monotone(g1: f64, g2: f64, decreasing: bool) -> Result<Claim> {
    if decreasing {
        chain(vec![g2, g1])
    } else {
        chain(vec![g1, g2])
    }
}

/// H(y) = (π/2) y log(1/y) cot(πy/2) − log csc(πy/2).
fn h48(y: f64) -> f64 {
    let t = FRAC_PI_2 * y;
    FRAC_PI_2 * y * (-y.ln()) / t.tan() + t.sin().ln()
}

/// G(y) = log cosh(πy/2) − (π/2) y log(y) tanh(πy/2).
fn g48(y: f64) -> f64 {
    let t = FRAC_PI_2 * y;
    t.cosh().ln() - t * y.ln() * t.tanh()
}

/// x/√(1−x²) log(1/x) − arcsin x log(1/arcsin x).
fn g49(x: f64) -> f64 {
    let a = x.asin();
    let one_minus = (1.0 - x) * (1.0 + x);
    x / one_minus.sqrt() * (-x.ln()) - a * (-a.ln())
}

pub fn register_paper_checks() -> Vec<InequalityCheck> {
    let mut v = Vec::new();
    inverse_bounds(&mut v);
    hypergeometric(&mut v);
    inverse_products(&mut v);
    forward_products(&mut v);
    orderings_and_constants(&mut v);
    elementary(&mut v);
    v
}

/// The first sandwich bound with its inequalities swapped; must fail.
pub fn negative_control() -> InequalityCheck {
    InequalityCheck::new(
        "thm1.1.1.reversed",
        "arcsin_p x <= (1 + x^p/(p(1+p))) x, which is false on (0, 1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let lower = (1.0 + x.powf(p) / (p * (1.0 + p))) * x;
            chain(vec![inv(&f, Arcsin, x)?, lower])
        },
    )
}

fn inverse_bounds(v: &mut Vec<InequalityCheck>) {
    v.push(InequalityCheck::new(
        "thm1.1.1",
        "(1 + x^p/(p(1+p))) x < arcsin_p x < (π_p/2) x, x in (0,1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let lower = (1.0 + x.powf(p) / (p * (1.0 + p))) * x;
            chain(vec![lower, inv(&f, Arcsin, x)?, f.constants().a_p * x])
        },
    ));
    v.push(InequalityCheck::new(
        "thm1.1.2",
        "(1 + (1−x^p)/(p(1+p))) (1−x^p)^(1/p) < arccos_p x < (π_p/2)(1−x^p)^(1/p), x in (0,1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let q = 1.0 - x.powf(p);
            let w = q.powf(1.0 / p);
            let lower = (1.0 + q / (p * (1.0 + p))) * w;
            chain(vec![lower, inv(&f, Arccos, x)?, f.constants().a_p * w])
        },
    ));
    v.push(InequalityCheck::new(
        "thm1.1.3",
        "(p(1+p)(1+x^p) + x^p) x / (p(1+p)(1+x^p)^(1+1/p)) < arctan_p x < 2^(1/p) b_p (x^p/(1+x^p))^(1/p), x in (0,1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let xp = x.powf(p);
            let k = p * (1.0 + p);
            let lower = (k * (1.0 + xp) + xp) * x / (k * (1.0 + xp).powf(1.0 + 1.0 / p));
            let upper = 2f64.powf(1.0 / p) * f.constants().b_p * (xp / (1.0 + xp)).powf(1.0 / p);
            chain(vec![lower, inv(&f, Arctan, x)?, upper])
        },
    ));
    v.push(InequalityCheck::new(
        "thm1.2.3",
        "z (1 + log(1+x^p)/(1+p)) < arsinh_p x < z (1 + log(1+x^p)/p), z = (x^p/(1+x^p))^(1/p), x in (0,1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let xp = x.powf(p);
            let z = (xp / (1.0 + xp)).powf(1.0 / p);
            let l = xp.ln_1p();
            chain(vec![z * (1.0 + l / (1.0 + p)), inv(&f, Arsinh, x)?, z * (1.0 + l / p)])
        },
    ));
    v.push(InequalityCheck::new(
        "thm1.2.4",
        "x (1 − log(1−x^p)/(1+p)) < artanh_p x < x (1 − log(1−x^p)/p), x in (0,1)",
        p_x(),
        |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let l = (-x.powf(p)).ln_1p();
            chain(vec![x * (1.0 - l / (1.0 + p)), inv(&f, Artanh, x)?, x * (1.0 - l / p)])
        },
    ));
    let thm15: [(&'static str, &'static str, f64, f64, fn(f64) -> f64); 3] = [
        (
            "thm1.5.1",
            "q ↦ arsinh(z^q)^(1/q) is decreasing on q in (0.1, 5), z = πx/2, x in (0, 2)",
            0.0,
            2.0,
            f64::asinh,
        ),
        (
            "thm1.5.2",
            "q ↦ arcosh(z^q)^(1/q) is decreasing on q in (0.1, 5), z = πx/2, x in (2/π, 2)",
            2.0 / PI,
            2.0,
            f64::acosh,
        ),
        (
            "thm1.5.3",
            "q ↦ artanh(2z^q/π)^(1/q) is decreasing on q in (0.1, 5), z = πx/2, x in (0, 2/π)",
            0.0,
            2.0 / PI,
            |w| (2.0 * w / PI).atanh(),
        ),
    ];
    for (id, desc, lo, hi, f) in thm15 {
        v.push(InequalityCheck::new(
            id,
            desc,
            ordered_k(vec![Variable::interval("x", lo, hi)], 0.1, 5.0),
            move |v| {
                let z = FRAC_PI_2 * v[0];
                let g = |q: f64| f(z.powf(q)).powf(1.0 / q);
                monotone(g(v[1]), g(v[2]), true)
            },
        ));
    }
}

fn hypergeometric(v: &mut Vec<InequalityCheck>) {
    let abc = |c_hi: fn(&[f64]) -> (f64, f64)| {
        vec![
            Variable::interval("a", 0.0, 3.0),
            Variable::interval("b", 0.0, 3.0),
            Variable::dependent("c", c_hi),
        ]
    };
    v.push(InequalityCheck::new(
        "eq2.2",
        "F(a,b;c;z) = (1−z)^(−b) F(b, c−a; c; −z/(1−z)), a, b, c in (0,3), z in (0, 0.9)",
        {
            let mut vars = abc(|_| (0.0, 3.0));
            vars.push(Variable::interval("z", 0.0, 0.9));
            vars
        },
        |v| {
            let (a, b, c, z) = (v[0], v[1], v[2], v[3]);
            let lhs = f21(a, b, c, z)?;
            let rhs = (1.0 - z).powf(-b) * f21(b, c - a, c, -z / (1.0 - z))?;
            Ok(Claim::RelIdentity(lhs, rhs))
        },
    ));
    v.push(InequalityCheck::new(
        "lem2.3.1",
        "F(a,b;c;x) = (1−x)^(c−a−b) F(c−a, c−b; c; x), a, b in (0,3), c in (0, a+b), x in (−0.999, 0.999)",
        {
            let mut vars = abc(|v| (0.0, v[0] + v[1]));
            vars.push(Variable::interval("x", -0.999, 0.999));
            vars
        },
        |v| {
            let (a, b, c, x) = (v[0], v[1], v[2], v[3]);
            let lhs = f21(a, b, c, x)?;
            let rhs = (1.0 - x).powf(c - a - b) * f21(c - a, c - b, c, x)?;
            Ok(Claim::RelIdentity(lhs, rhs))
        },
    ));
    let neg_a_vars = || {
        vec![
            Variable::interval("a", 0.0, 1.0),
            Variable::interval("b", 0.0, 5.0),
            Variable::interval("c", 0.0, 5.0),
            Variable::interval("x", 0.0, 0.999),
        ]
    };
    v.push(InequalityCheck::new(
        "lem2.3.2",
        "F(−a,b;c;x) < 1 − abx/c, a in (0,1), b, c in (0,5), x in (0, 0.999)",
        neg_a_vars(),
        |v| {
            let (a, b, c, x) = (v[0], v[1], v[2], v[3]);
            chain(vec![f21(-a, b, c, x)?, 1.0 - a * b * x / c])
        },
    ));
    v.push(InequalityCheck::new(
        "lem2.3.3",
        "F(a,b;c;x) + F(−a,b;c;x) > 2, a in (0,1), b, c in (0,5), x in (0, 0.999)",
        neg_a_vars(),
        |v| {
            let (a, b, c, x) = (v[0], v[1], v[2], v[3]);
            chain(vec![2.0, f21(a, b, c, x)? + f21(-a, b, c, x)?])
        },
    ));
    v.push(InequalityCheck::new(
        "lem2.3.4",
        "F(a,b;c;x) <= Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)), a, b in (0,3), c in (a+b, a+b+5), x in (0,1)",
        {
            let mut vars = abc(|v| (v[0] + v[1], v[0] + v[1] + 5.0));
            vars.push(Variable::interval("x", 0.0, 1.0));
            vars
        },
        |v| {
            let (a, b, c, x) = (v[0], v[1], v[2], v[3]);
            let gauss = gamma(c)? * gamma(c - a - b)? / (gamma(c - a)? * gamma(c - b)?);
            chain(vec![f21(a, b, c, x)?, gauss])
        },
    ));
    let f235 = |a: f64, b: f64, x: f64| -> Result<f64> {
        Ok(f21_minus_one(a, b, a + b, x)? / -(-x).ln_1p())
    };
    v.push(InequalityCheck::new(
        "lem2.3.5",
        "x ↦ (F(a,b;a+b;x) − 1)/log(1/(1−x)) is increasing on (0,1), a, b in (0,3)",
        vec![
            Variable::interval("a", 0.0, 3.0),
            Variable::interval("b", 0.0, 3.0),
            Variable::interval("x1", 0.0, 1.0),
            Variable::dependent("x2", |v| (v[2], 1.0)),
        ],
        move |v| chain(vec![f235(v[0], v[1], v[2])?, f235(v[0], v[1], v[3])?]),
    ));
    v.push(InequalityCheck::new(
        "lem2.3.5.range",
        "ab/(a+b) < (F(a,b;a+b;x) − 1)/log(1/(1−x)) < 1/B(a,b), a, b in (0,3), x in (0,1)",
        vec![
            Variable::interval("a", 0.0, 3.0),
            Variable::interval("b", 0.0, 3.0),
            Variable::interval("x", 0.0, 1.0),
        ],
        move |v| {
            let (a, b, x) = (v[0], v[1], v[2]);
            chain(vec![a * b / (a + b), f235(a, b, x)?, 1.0 / beta(a, b)?])
        },
    ));
}

fn inverse_products(v: &mut Vec<InequalityCheck>) {
    let lem24: [(&'static str, &'static str, PFunctionKind, bool); 4] = [
        ("lem2.4.1", "k ↦ arcsin_p(x^k)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", Arcsin, true),
        ("lem2.4.2", "k ↦ artanh_p(x^k)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", Artanh, true),
        ("lem2.4.3", "k ↦ arctan_p(x^k)^(1/k) is increasing on k in (0.1, 10), x in (0,1)", Arctan, false),
        ("lem2.4.4", "k ↦ arsinh_p(x^k)^(1/k) is increasing on k in (0.1, 10), x in (0,1)", Arsinh, false),
    ];
    for (id, desc, kind, decreasing) in lem24 {
        v.push(InequalityCheck::new(id, desc, ordered_k(p_x(), 0.1, 10.0), move |v| {
            let (p, x) = (v[0], v[1]);
            let f = funcs(p)?;
            let g = |k: f64| -> Result<f64> { Ok(inv(&f, kind, x.powf(k))?.powf(1.0 / k)) };
            monotone(g(v[2])?, g(v[3])?, decreasing)
        }));
    }
    // lower, middle, upper of the product chain, ordered as claimed
    let thm25: [(&'static str, &'static str, PFunctionKind, bool); 4] = [
        ("thm2.5.1", "arcsin_p(rs) <= √(arcsin_p(r²) arcsin_p(s²)) <= arcsin_p(r) arcsin_p(s), r, s in (0,1)", Arcsin, true),
        ("thm2.5.2", "artanh_p(rs) <= √(artanh_p(r²) artanh_p(s²)) <= artanh_p(r) artanh_p(s), r, s in (0,1)", Artanh, true),
        ("thm2.5.3", "arsinh_p(r) arsinh_p(s) <= √(arsinh_p(r²) arsinh_p(s²)) <= arsinh_p(rs), r, s in (0,1)", Arsinh, false),
        ("thm2.5.4", "arctan_p(r) arctan_p(s) <= √(arctan_p(r²) arctan_p(s²)) <= arctan_p(rs), r, s in (0,1)", Arctan, false),
    ];
    for (id, desc, kind, product_on_top) in thm25 {
        v.push(InequalityCheck::new(id, desc, p_r_s(|_| 1.0), move |v| {
            let (p, r, s) = (v[0], v[1], v[2]);
            let f = funcs(p)?;
            let at_rs = inv(&f, kind, r * s)?;
            let mid = (inv(&f, kind, r * r)? * inv(&f, kind, s * s)?).sqrt();
            let prod = inv(&f, kind, r)? * inv(&f, kind, s)?;
            if product_on_top {
                chain(vec![at_rs, mid, prod])
            } else {
                chain(vec![prod, mid, at_rs])
            }
        }));
    }
    let lem26: [(&'static str, &'static str, PFunctionKind, bool); 3] = [
        ("lem2.6.1", "(arcsin_p s / arcsin_p r)^k <= arcsin_p(s^k)/arcsin_p(r^k), k in (1,5), 0 < s <= r < 1", Arcsin, true),
        ("lem2.6.2", "(artanh_p s / artanh_p r)^k <= artanh_p(s^k)/artanh_p(r^k), k in (1,5), 0 < s <= r < 1", Artanh, true),
        ("lem2.6.3", "arsinh_p(s^k)/arsinh_p(r^k) <= (arsinh_p s / arsinh_p r)^k, k in (1,5), 0 < s <= r < 1", Arsinh, false),
    ];
    for (id, desc, kind, power_smaller) in lem26 {
        v.push(InequalityCheck::new(
            id,
            desc,
            vec![
                Variable::exponent(),
                Variable::interval("k", 1.0, 5.0),
                Variable::interval("r", 0.0, 1.0),
                Variable::dependent("s", |v| (0.0, v[2])),
            ],
            move |v| {
                let (p, k, r, s) = (v[0], v[1], v[2], v[3]);
                let f = funcs(p)?;
                let power = (inv(&f, kind, s)? / inv(&f, kind, r)?).powf(k);
                let ratio = inv(&f, kind, s.powf(k))? / inv(&f, kind, r.powf(k))?;
                if power_smaller {
                    chain(vec![power, ratio])
                } else {
                    chain(vec![ratio, power])
                }
            },
        ));
    }
    v.push(InequalityCheck::new(
        "lem3.4.1",
        "arctan_p x < arsinh_p x < arcsin_p x < artanh_p x, x in (0,1)",
        p_x(),
        |v| {
            let f = funcs(v[0])?;
            let x = v[1];
            chain(vec![
                inv(&f, Arctan, x)?,
                inv(&f, Arsinh, x)?,
                inv(&f, Arcsin, x)?,
                inv(&f, Artanh, x)?,
            ])
        },
    ));
    let lem37: [(&'static str, &'static str, fn(&PFunctions, f64, f64) -> Result<(f64, f64)>); 4] = [
        ("lem3.7.1", "arcsin_p(x/(1+x^p)^(1/p)) = arctan_p x, x in (0,1)", |f, p, x| {
            Ok((inv(f, Arcsin, x / (1.0 + x.powf(p)).powf(1.0 / p))?, inv(f, Arctan, x)?))
        }),
        ("lem3.7.2", "arcsin_p x = arctan_p(x/(1−x^p)^(1/p)), x in (0,1)", |f, p, x| {
            let w = (-(-x.powf(p)).ln_1p() / p).exp();
            Ok((inv(f, Arcsin, x)?, inv(f, Arctan, x * w)?))
        }),
        ("lem3.7.3", "arccos_p x = arctan_p((1−x^p)^(1/p)/x), x in (0,1)", |f, p, x| {
            let w = ((-x.powf(p)).ln_1p() / p).exp();
            Ok((inv(f, Arccos, x)?, inv(f, Arctan, w / x)?))
        }),
        ("lem3.7.4", "arccos_p(1/(1+x^p)^(1/p)) = arctan_p x, x in (0,1)", |f, p, x| {
            let w = (-x.powf(p).ln_1p() / p).exp();
            // For large p, w rounds to a neighbour of 1 (often 1 itself);
            // compare at the x that maps exactly onto the rounded w.
            let x_w = (-p * w.ln()).exp_m1().powf(1.0 / p);
            Ok((inv(f, Arccos, w)?, inv(f, Arctan, x_w)?))
        }),
    ];
    for (id, desc, sides) in lem37 {
        v.push(InequalityCheck::new(id, desc, p_x(), move |v| {
            let (p, x) = (v[0], v[1]);
            let (lhs, rhs) = sides(&funcs(p)?, p, x)?;
            Ok(Claim::Identity(lhs, rhs))
        }));
    }
    let zhu = |x: f64| -> f64 {
        let r = (1.0 + x * x).sqrt();
        6.0 * 2f64.sqrt() * (r - 1.0).sqrt() / (4.0 + 2f64.sqrt() * (r + 1.0).sqrt())
    };
    let ours = |x: f64| -> f64 {
        let z = (x * x / (1.0 + x * x)).sqrt();
        z * (1.0 + (x * x).ln_1p() / 3.0)
    };
    v.push(InequalityCheck::new(
        "rem3.3",
        "at p = 2 the lower bound z(1 + log(1+x²)/3) stays within 0.02 of 6√2 √(√(1+x²) − 1)/(4 + √2 √(√(1+x²) + 1)), x in (0,1)",
        vec![Variable::interval("x", 0.0, 1.0)],
        move |v| chain(vec![(ours(v[0]) - zhu(v[0])).abs(), 0.02]),
    ));
    v.push(InequalityCheck::new(
        "rem3.3.lower",
        "6√2 √(√(1+x²) − 1)/(4 + √2 √(√(1+x²) + 1)) < arsinh x, x in (0,1)",
        vec![Variable::interval("x", 0.0, 1.0)],
        move |v| chain(vec![zhu(v[0]), v[0].asinh()]),
    ));
}

fn forward_products(v: &mut Vec<InequalityCheck>) {
    type Bound = fn(f64) -> f64;
    // (id, description, kind, k range, r upper bound, power on the small side)
    let lem28: [(&'static str, &'static str, PFunctionKind, (f64, f64), Bound, bool); 6] = [
        ("lem2.8.1", "(sin_p r / sin_p s)^k <= sin_p(r^k)/sin_p(s^k), k in (1,4), 0 < s <= r < 1", Arcsin, (1.0, 4.0), |_| 1.0, true),
        ("lem2.8.1.reversed", "(sin_p r / sin_p s)^k >= sin_p(r^k)/sin_p(s^k), k in (0.1,1), 0 < s <= r < 1", Arcsin, (0.1, 1.0), |_| 1.0, false),
        ("lem2.8.2", "(tanh_p r / tanh_p s)^k <= tanh_p(r^k)/tanh_p(s^k), k in (1,4), 0 < s <= r < 3", Artanh, (1.0, 4.0), |_| 3.0, true),
        ("lem2.8.2.reversed", "(tanh_p r / tanh_p s)^k >= tanh_p(r^k)/tanh_p(s^k), k in (0.1,1), 0 < s <= r < 3", Artanh, (0.1, 1.0), |_| 3.0, false),
        ("lem2.8.3", "(sinh_p r / sinh_p s)^k >= sinh_p(r^k)/sinh_p(s^k), k in (1,4), 0 < s <= r < 1", Arsinh, (1.0, 4.0), |_| 1.0, false),
        ("lem2.8.3.reversed", "(sinh_p r / sinh_p s)^k <= sinh_p(r^k)/sinh_p(s^k), k in (0.1,1), 0 < s <= r < 1", Arsinh, (0.1, 1.0), |_| 1.0, true),
    ];
    for (id, desc, kind, (k_lo, k_hi), hi, power_smaller) in lem28 {
        v.push(InequalityCheck::new(
            id,
            desc,
            vec![
                Variable::exponent(),
                Variable::interval("k", k_lo, k_hi),
                Variable::dependent("r", move |v| (0.0, hi(v[0]))),
                Variable::dependent("s", |v| (0.0, v[2])),
            ],
            move |v| {
                let (p, k, r, s) = (v[0], v[1], v[2], v[3]);
                let f = funcs(p)?;
                let power = (fwd(&f, kind, r)? / fwd(&f, kind, s)?).powf(k);
                let ratio = fwd(&f, kind, r.powf(k))? / fwd(&f, kind, s.powf(k))?;
                if power_smaller {
                    chain(vec![power, ratio])
                } else {
                    chain(vec![ratio, power])
                }
            },
        ));
    }
    // √(f(r²) f(s²)) against f(rs)
    let lem29: [(&'static str, &'static str, PFunctionKind, Bound, bool); 3] = [
        ("lem2.9.1", "√(sin_p(r²) sin_p(s²)) <= sin_p(rs), r, s in (0, √(π_p/2))", Arcsin, |p| a_p(p).sqrt(), true),
        ("lem2.9.2", "√(tanh_p(r²) tanh_p(s²)) <= tanh_p(rs), r, s in (0,3)", Artanh, |_| 3.0, true),
        ("lem2.9.3", "sinh_p(rs) <= √(sinh_p(r²) sinh_p(s²)), r, s in (0,4)", Arsinh, |_| 4.0, false),
    ];
    for (id, desc, kind, hi, mean_smaller) in lem29 {
        v.push(InequalityCheck::new(id, desc, p_r_s(hi), move |v| {
            let (p, r, s) = (v[0], v[1], v[2]);
            let f = funcs(p)?;
            let mean = (fwd(&f, kind, r * r)? * fwd(&f, kind, s * s)?).sqrt();
            let at = fwd(&f, kind, r * s)?;
            if mean_smaller {
                chain(vec![mean, at])
            } else {
                chain(vec![at, mean])
            }
        }));
    }
    let lem210: [(&'static str, &'static str, PFunctionKind, Bound); 2] = [
        ("lem2.10.1", "√(sin_p r sin_p s) <= sin_p((r+s)/2), r, s in (0, π_p/2)", Arcsin, a_p),
        ("lem2.10.2", "√(sinh_p r sinh_p s) <= sinh_p((r+s)/2), r, s in (0,8)", Arsinh, |_| 8.0),
    ];
    for (id, desc, kind, hi) in lem210 {
        v.push(InequalityCheck::new(id, desc, p_r_s(hi), move |v| {
            let (p, r, s) = (v[0], v[1], v[2]);
            let f = funcs(p)?;
            let g = (fwd(&f, kind, r)? * fwd(&f, kind, s)?).sqrt();
            chain(vec![g, fwd(&f, kind, 0.5 * (r + s))?])
        }));
    }
    let lem211: [(&'static str, &'static str, PFunctionKind, Bound, bool); 4] = [
        ("lem2.11.1", "sin_p(r+s) <= sin_p r + sin_p s, r, s in (0, π_p/4)", Arcsin, |p| 0.5 * a_p(p), true),
        ("lem2.11.2", "tanh_p(r+s) <= tanh_p r + tanh_p s, r, s in (0, b_p/2)", Artanh, |p| 0.5 * b_p(p), true),
        ("lem2.11.3", "tan_p r + tan_p s <= tan_p(r+s), r, s in (0, b_p/2)", Arctan, |p| 0.5 * b_p(p), false),
        ("lem2.11.4", "sinh_p r + sinh_p s <= sinh_p(r+s), r, s in (0, c_p/2)", Arsinh, |p| 0.5 * c_p(p), false),
    ];
    for (id, desc, kind, hi, sub) in lem211 {
        v.push(InequalityCheck::new(id, desc, p_r_s(hi), move |v| {
            let (p, r, s) = (v[0], v[1], v[2]);
            let f = funcs(p)?;
            let sum = fwd(&f, kind, r)? + fwd(&f, kind, s)?;
            let at = fwd(&f, kind, r + s)?;
            if sub {
                chain(vec![at, sum])
            } else {
                chain(vec![sum, at])
            }
        }));
    }
    v.push(InequalityCheck::new(
        "lem3.4.2",
        "tanh_p z < sin_p z < sinh_p z, z in (0, π_p/2)",
        vec![Variable::exponent(), Variable::dependent("z", |v| (0.0, a_p(v[0])))],
        |v| {
            let f = funcs(v[0])?;
            let z = v[1];
            chain(vec![fwd(&f, Artanh, z)?, fwd(&f, Arcsin, z)?, fwd(&f, Arsinh, z)?])
        },
    ));
    v.push(InequalityCheck::new(
        "lem3.4.2.tan",
        "sinh_p z < tan_p z, z in (0, b_p)",
        vec![Variable::exponent(), Variable::dependent("z", |v| (0.0, b_p(v[0])))],
        |v| {
            let f = funcs(v[0])?;
            let z = v[1];
            chain(vec![fwd(&f, Arsinh, z)?, fwd(&f, Arctan, z)?])
        },
    ));
}

fn orderings_and_constants(v: &mut Vec<InequalityCheck>) {
    v.push(InequalityCheck::new(
        "lem3.5",
        "6p²/(3p²−2) <= π_p <= 12p²/(6p²−π²), p in (1, 100]",
        vec![Variable::log_interval("p", 1.0, 100.0)],
        |v| {
            let p = v[0];
            let p2 = p * p;
            chain(vec![6.0 * p2 / (3.0 * p2 - 2.0), pi_of(p)?, 12.0 * p2 / (6.0 * p2 - PI * PI)])
        },
    ));
    v.push(InequalityCheck::new(
        "lem3.6.1",
        "π_(rs) <= √(π_(r²) π_(s²)) <= √(π_r π_s), r, s in (1, 20)",
        vec![Variable::log_interval("r", 1.0, 20.0), Variable::log_interval("s", 1.0, 20.0)],
        |v| {
            let (r, s) = (v[0], v[1]);
            chain(vec![
                pi_of(r * s)?,
                (pi_of(r * r)? * pi_of(s * s)?).sqrt(),
                (pi_of(r)? * pi_of(s)?).sqrt(),
            ])
        },
    ));
    v.push(InequalityCheck::new(
        "lem3.6.2",
        "π_(r^a s^(1−a)) <= a π_r + (1−a) π_s, a in (0,1), r, s in (1, 20)",
        vec![
            Variable::interval("a", 0.0, 1.0),
            Variable::log_interval("r", 1.0, 20.0),
            Variable::log_interval("s", 1.0, 20.0),
        ],
        |v| {
            let (a, r, s) = (v[0], v[1], v[2]);
            chain(vec![pi_of(r.powf(a) * s.powf(1.0 - a))?, a * pi_of(r)? + (1.0 - a) * pi_of(s)?])
        },
    ));
    v.push(InequalityCheck::new(
        "lem3.6.3",
        "(π_s/π_r)^k <= π_(s^k)/π_(r^k), k in (1,5), 1 < r <= s < 20",
        vec![
            Variable::interval("k", 1.0, 5.0),
            Variable::log_interval("r", 1.0, 20.0),
            Variable::dependent("s", |v| (v[1], 20.0)),
        ],
        |v| {
            let (k, r, s) = (v[0], v[1], v[2]);
            chain(vec![(pi_of(s)? / pi_of(r)?).powf(k), pi_of(s.powf(k))? / pi_of(r.powf(k))?])
        },
    ));
}

fn elementary(v: &mut Vec<InequalityCheck>) {
    type Elem = fn(f64, f64) -> f64;
    // (id, description, x range, g(k, x), decreasing)
    let in_k: [(&'static str, &'static str, (f64, f64), Elem, bool); 9] = [
        ("lem4.1.1", "k ↦ sin(x^k)^(1/k) is increasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| x.powf(k).sin().powf(1.0 / k), false),
        ("lem4.1.2", "k ↦ cos(x^k)^(1/k) is increasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| x.powf(k).cos().powf(1.0 / k), false),
        ("lem4.1.4", "k ↦ tanh(z^k)^(1/k) is increasing on k in (0.1, 10), z in (0,5)", (0.0, 5.0), |k, z| z.powf(k).tanh().powf(1.0 / k), false),
        ("lem4.10.1", "k ↦ sin(πx^k/2)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| (FRAC_PI_2 * x.powf(k)).sin().powf(1.0 / k), true),
        ("lem4.10.2", "k ↦ tan(πx^k/2)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| (FRAC_PI_2 * x.powf(k)).tan().powf(1.0 / k), true),
        ("lem4.10.3", "k ↦ sinh(x^k)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| x.powf(k).sinh().powf(1.0 / k), true),
        ("lem4.11.1", "k ↦ cos(πx^(1/k)/2)^k is decreasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| (FRAC_PI_2 * x.powf(1.0 / k)).cos().powf(k), true),
        ("lem4.11.2", "k ↦ cosh(x^k)^(1/k) is decreasing on k in (0.1, 10), x in (0,1)", (0.0, 1.0), |k, x| x.powf(k).cosh().powf(1.0 / k), true),
        ("lem4.11.3", "k ↦ arcosh(πx^k/2)^(1/k) is decreasing on k in (0.1, 10), x in (1, 10)", (1.0, 10.0), |k, x| (FRAC_PI_2 * x.powf(k)).acosh().powf(1.0 / k), true),
    ];
    for (id, desc, (lo, hi), g, decreasing) in in_k {
        v.push(InequalityCheck::new(
            id,
            desc,
            ordered_k(vec![Variable::interval("x", lo, hi)], 0.1, 10.0),
            move |v| monotone(g(v[1], v[0]), g(v[2], v[0]), decreasing),
        ));
    }
    v.push(InequalityCheck::new(
        "lem4.13",
        "k ↦ (cos kx + sin kx)^(1/k) is decreasing on k in (0,1), x in (0,1)",
        vec![
            Variable::interval("x", 0.0, 1.0),
            Variable::interval("k1", 0.0, 1.0),
            Variable::dependent("k2", |v| (v[1], 1.0)),
        ],
        |v| {
            let g = |k: f64| log_cos_plus_sin(k, v[0]).exp();
            monotone(g(v[1]), g(v[2]), true)
        },
    ));

    type Pair = fn(f64, f64) -> Vec<f64>;
    let pairs: [(&'static str, &'static str, (f64, f64), Pair); 10] = [
        ("lem4.2.1", "√(arccos(r²) arccos(s²)) < arccos(rs), r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![((r * r).acos() * (s * s).acos()).sqrt(), (r * s).acos()]
        }),
        ("lem4.2.2", "arctan r arctan s < √(arctan(r²) arctan(s²)) < arctan(rs), r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![r.atan() * s.atan(), ((r * r).atan() * (s * s).atan()).sqrt(), (r * s).atan()]
        }),
        ("lem4.2.3", "√(arcosh(r²) arcosh(s²)) < arcosh(rs), r, s in (1,10)", (1.0, 10.0), |r, s| {
            vec![((r * r).acosh() * (s * s).acosh()).sqrt(), (r * s).acosh()]
        }),
        ("lem4.3.1", "cosh(rs) < √(cosh(r²) cosh(s²)), r, s in (0,3)", (0.0, 3.0), |r, s| {
            vec![(r * s).cosh(), ((r * r).cosh() * (s * s).cosh()).sqrt()]
        }),
        ("lem4.3.1.upper", "√(cosh(r²) cosh(s²)) < cosh r cosh s, r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![((r * r).cosh() * (s * s).cosh()).sqrt(), r.cosh() * s.cosh()]
        }),
        ("lem4.3.2", "tanh r tanh s < √(tanh(r²) tanh(s²)) < √(tanh(r²s²)), r, s in (0,3)", (0.0, 3.0), |r, s| {
            vec![r.tanh() * s.tanh(), ((r * r).tanh() * (s * s).tanh()).sqrt(), (r * r * s * s).tanh().sqrt()]
        }),
        ("lem4.12.1", "sin r sin s < √(sin(r²) sin(s²)), r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![r.sin() * s.sin(), ((r * r).sin() * (s * s).sin()).sqrt()]
        }),
        ("lem4.12.2.lower", "cos r cos s < √(cos(r²) cos(s²)), r, s in (0, √(π/2))", (0.0, FRAC_PI_2.sqrt()), |r, s| {
            vec![r.cos() * s.cos(), ((r * r).cos() * (s * s).cos()).sqrt()]
        }),
        ("lem4.12.2.upper", "√(cos(r²) cos(s²)) < cos(rs), r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![((r * r).cos() * (s * s).cos()).sqrt(), (r * s).cos()]
        }),
        ("lem4.12.3.upper", "tan(rs) < √(tan(r²) tan(s²)), r, s in (0,1)", (0.0, 1.0), |r, s| {
            vec![(r * s).tan(), ((r * r).tan() * (s * s).tan()).sqrt()]
        }),
    ];
    for (id, desc, (lo, hi), values) in pairs {
        v.push(InequalityCheck::new(id, desc, r_s(lo, hi), move |v| chain(values(v[0], v[1]))));
    }
    v.push(InequalityCheck::new(
        "lem4.12.3.lower",
        "√(tan(r²) tan(s²)) < tan r tan s, r, s in (0, √(π/2))",
        r_s(0.0, FRAC_PI_2.sqrt()),
        |v| {
            let (r, s) = (v[0], v[1]);
            chain(vec![((r * r).tan() * (s * s).tan()).sqrt(), r.tan() * s.tan()])
        },
    ));

    let y01 = || vec![Variable::interval("y", 0.0, 1.0)];
    v.push(InequalityCheck::new(
        "lem4.4.5",
        "(π/2) y cot(πy/2) log y < log sin(πy/2), y in (0,1)",
        y01(),
        |v| {
            let y = v[0];
            let t = FRAC_PI_2 * y;
            chain(vec![FRAC_PI_2 * y / t.tan() * y.ln(), t.sin().ln()])
        },
    ));
    v.push(InequalityCheck::new(
        "lem4.4.6",
        "y coth(y) log y < log sinh y, y in (0,1)",
        y01(),
        |v| {
            let y = v[0];
            chain(vec![y / y.tanh() * y.ln(), y.sinh().ln()])
        },
    ));
    v.push(InequalityCheck::new(
        "lem4.4.7",
        "(π/2) y log(y) csc(πy/2) sec(πy/2) < log tan(πy/2), y in (0,1)",
        y01(),
        |v| {
            let y = v[0];
            let t = FRAC_PI_2 * y;
            chain(vec![FRAC_PI_2 * y * y.ln() / (t.sin() * t.cos()), t.tan().ln()])
        },
    ));

    let ln_half_pi = FRAC_PI_2.ln();
    let g_sup = FRAC_PI_2 * FRAC_PI_2.cosh().ln();
    let g49_sup = FRAC_PI_2 * ln_half_pi;
    v.push(InequalityCheck::new(
        "lem4.8.1",
        "H(y) = (π/2) y log(1/y) cot(πy/2) − log csc(πy/2) is decreasing on (0,1)",
        ordered_pair(0.0, 1.0),
        |v| chain(vec![h48(v[1]), h48(v[0])]),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.1.range",
        "0 < H(y) < log(π/2), y in (0,1)",
        y01(),
        move |v| chain(vec![0.0, h48(v[0]), ln_half_pi]),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.1.lim0",
        "H(y) is within 1e-3 of log(π/2) for y in (1e-6, 1e-4)",
        vec![Variable::interval("y", 1e-6, 1e-4)],
        move |v| Ok(Claim::Near { value: h48(v[0]), target: ln_half_pi, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.1.lim1",
        "H(y) is within 1e-3 of 0 for 1 − y in (1e-6, 1e-4)",
        vec![Variable::interval("y", 1.0 - 1e-4, 1.0 - 1e-6)],
        |v| Ok(Claim::Near { value: h48(v[0]), target: 0.0, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.2",
        "G(y) = log cosh(πy/2) − (π/2) y log(y) tanh(πy/2) is increasing on (0,1)",
        ordered_pair(0.0, 1.0),
        |v| chain(vec![g48(v[0]), g48(v[1])]),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.2.range",
        "0 < G(y) < (π/2) log cosh(π/2), y in (0,1)",
        y01(),
        move |v| chain(vec![0.0, g48(v[0]), g_sup]),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.2.lim0",
        "G(y) is within 1e-3 of 0 for y in (1e-6, 1e-4)",
        vec![Variable::interval("y", 1e-6, 1e-4)],
        |v| Ok(Claim::Near { value: g48(v[0]), target: 0.0, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.8.2.lim1",
        "G(y) is within 1e-3 of (π/2) log cosh(π/2) for 1 − y in (1e-6, 1e-4)",
        vec![Variable::interval("y", 1.0 - 1e-4, 1.0 - 1e-6)],
        move |v| Ok(Claim::Near { value: g48(v[0]), target: g_sup, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.9",
        "g(x) = x/√(1−x²) log(1/x) − arcsin x log(1/arcsin x) is increasing on (0,1)",
        ordered_pair(0.0, 1.0),
        |v| chain(vec![g49(v[0]), g49(v[1])]),
    ));
    v.push(InequalityCheck::new(
        "lem4.9.range",
        "0 < g(x) < (π/2) log(π/2), x in (0,1)",
        vec![Variable::interval("x", 0.0, 1.0)],
        move |v| chain(vec![0.0, g49(v[0]), g49_sup]),
    ));
    v.push(InequalityCheck::new(
        "lem4.9.lim0",
        "g(x) is within 1e-3 of 0 for x in (1e-6, 1e-4)",
        vec![Variable::interval("x", 1e-6, 1e-4)],
        |v| Ok(Claim::Near { value: g49(v[0]), target: 0.0, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.9.lim1",
        "g(x) is within 1e-3 of (π/2) log(π/2) for 1 − x in (1e-9, 1e-8)",
        vec![Variable::interval("x", 1.0 - 1e-8, 1.0 - 1e-9)],
        move |v| Ok(Claim::Near { value: g49(v[0]), target: g49_sup, tol: 1e-3 }),
    ));
    v.push(InequalityCheck::new(
        "lem4.9.bounds",
        "x^(x/√(1−x²)) < (arcsin x)^(arcsin x) < (π/2)^(π/2) x^(x/√(1−x²)), x in (0,1)",
        vec![Variable::interval("x", 0.0, 1.0)],
        |v| {
            let x = v[0];
            let e = x / ((1.0 - x) * (1.0 + x)).sqrt();
            let base = x.powf(e);
            let a = x.asin();
            chain(vec![base, a.powf(a), FRAC_PI_2.powf(FRAC_PI_2) * base])
        },
    ));
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique_and_plentiful() {
        let checks = register_paper_checks();
        assert!(checks.len() >= 28);
        let ids: HashSet<_> = checks.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), checks.len());
        assert!(!ids.contains(negative_control().id));
    }

    #[test]
    fn helper_functions() {
        let small = f21_minus_one(0.5, 0.5, 1.0, 1e-6).unwrap();
        assert!((small - (0.25e-6 + 0.140625e-12)).abs() < 1e-18);
        let direct = f21(0.7, 1.3, 2.0, 0.3).unwrap() - 1.0;
        assert!((f21_minus_one(0.7, 1.3, 2.0, 0.3).unwrap() - direct).abs() < 1e-15);
        for &(k, x) in &[(0.5f64, 0.7f64), (1e-9, 0.3), (0.99, 0.99)] {
            let naive = ((k * x).cos() + (k * x).sin()).ln() / k;
            let tol = if k < 1e-6 { 1e-6 } else { 1e-14 };
            assert!((log_cos_plus_sin(k, x) - naive).abs() < tol);
        }
        assert!((log_cos_plus_sin(1e-9, 0.3) - 0.3).abs() < 1e-8);
        assert!((h48(0.5) - (FRAC_PI_2 * 0.5 * 2f64.ln() + (0.25 * PI).sin().ln())).abs() < 1e-15);
        assert!((g49(1.0 - 1e-9) - FRAC_PI_2 * FRAC_PI_2.ln()).abs() < 1e-3);
    }
}

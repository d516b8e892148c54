mod config;
mod emit;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use pfl_core::algebraic::text::ParseError;
use pfl_core::algebraic::{Algebraic, Dyadic, NumberField, DEFAULT_PRECISION};
use pfl_core::approx::{certify, decompose_at, EngineParams, WindowPolicy};
use pfl_core::fourier::{self, Argument, LogAbs};
use pfl_core::heights::{minkowski_lower_bound, mult_dependence_search, weil_height};
use pfl_core::report::{self, interval_json};
use pfl_core::roth::{exponent_report, ReportInputs};
use serde_json::{json, Value as Json};

use crate::emit::Sink;
use crate::parse::{parse_product, parse_root_form, parse_value};

#[derive(Parser, Debug)]
#[command(name = "pfl", version, about = "Certified numerics for Pisot Fourier products, heights and Roth exponents")]
struct Cli {
    /// Working precision in bits (overrides PFL_PRECISION_BITS and the config file)
    #[arg(long, global = true)]
    prec: Option<u32>,

    /// TOML file whose keys are long flag names
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the largest root of a polynomial is a Pisot number
    Pisot {
        poly: String,
        #[arg(long)]
        assume_irreducible: bool,
    },
    /// Absolute Weil height of an algebraic number
    Height { value: String },
    /// Search for a multiplicative relation l1^m1 l2^m2 = 1
    MultDep {
        a: String,
        b: String,
        #[arg(long, default_value_t = 50)]
        bound: u32,
    },
    /// min H(a^m1 b^m2)^(1/(|m1|+|m2|)) over a bounded range
    Minkowski {
        a: String,
        b: String,
        #[arg(long, default_value_t = 6)]
        cap: u32,
    },
    /// Evaluate G_lambda(u) = prod cos(pi lambda^n u)
    Geval {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        u: String,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate |G_l1(u) G_l2(u)| over a grid
    Scan {
        #[arg(long)]
        lambda1: String,
        #[arg(long)]
        lambda2: String,
        /// `decades:<lo>..<hi>:<m>`, `pow:<b>:<lo>..<hi>` or a comma list
        #[arg(long)]
        grid: String,
        /// Drop grid points above this value
        #[arg(long)]
        umax: Option<String>,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-decade maxima of the product's upper bound, as CSV
        #[arg(long)]
        maxima: Option<PathBuf>,
    },
    /// |G_{1/theta}(theta^n)| for n = 1..nmax
    Erdos {
        #[arg(long)]
        theta: String,
        #[arg(long, default_value_t = 30)]
        nmax: u32,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the algebraic approximation of a pair (u1, u2)
    Approx {
        #[arg(long)]
        theta1: String,
        #[arg(long)]
        u1: String,
        #[arg(long)]
        theta2: String,
        #[arg(long)]
        u2: String,
        #[command(flatten)]
        engine: Engine,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Roth-exponent rows for a sequence u_n
    RothDemo {
        #[arg(long)]
        lambda1: String,
        #[arg(long)]
        lambda2: String,
        #[arg(long, default_value = "identity")]
        f1: String,
        #[arg(long, default_value = "identity")]
        f2: String,
        #[arg(long)]
        useq: String,
        #[command(flatten)]
        engine: Engine,
        #[arg(long, default_value_t = 0)]
        burn_in: usize,
        #[arg(long, default_value_t = 50)]
        bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Target {
    /// Target radius 2^-bits for each enclosure
    #[arg(long, default_value_t = 64)]
    target_bits: u32,
}

#[derive(Args, Debug)]
struct Engine {
    #[arg(long = "N", default_value_t = 3)]
    n: u64,
    #[arg(long, default_value = "1/100")]
    delta: String,
    #[arg(long, default_value_t = 4)]
    c2: u32,
    #[arg(long, value_enum, default_value_t = Policy::Strict)]
    policy: Policy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Policy {
    Strict,
    Measure,
}

/// Usage errors exit with 2, domain errors with 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain { code: String, message: String },
    Io(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<parse::ValueError> for Failure {
    fn from(e: parse::ValueError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

macro_rules! domain_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Domain { code: e.code().to_string(), message: e.to_string() }
            }
        }
    )*};
}

domain_error!(
    pfl_core::algebraic::AlgebraicError,
    pfl_core::heights::HeightError,
    pfl_core::fourier::FourierError,
    pfl_core::approx::ApproxError,
    pfl_core::roth::RothError
);

type Result<T> = std::result::Result<T, Failure>;

fn value(text: &str) -> Result<Algebraic> {
    Ok(parse_value(text)?.algebraic()?)
}

fn field(text: &str) -> Result<NumberField> {
    let p = parse_value(text)?.polynomial()?;
    Ok(NumberField::new(p)?)
}

fn target(t: &Target) -> Dyadic {
    Dyadic::pow2(-(t.target_bits as i64))
}

fn engine(e: &Engine, prec: u32) -> Result<EngineParams> {
    let delta = pfl_core::algebraic::text::parse_rational(&e.delta)?;
    let policy = match e.policy {
        Policy::Strict => WindowPolicy::Strict,
        Policy::Measure => WindowPolicy::Measure,
    };
    Ok(EngineParams { n: e.n, delta, c2: e.c2, prec, policy })
}

fn grid(spec: &str, umax: Option<&BigRational>) -> Result<Vec<(u32, BigRational)>> {
    let points = if let Some(rest) = spec.strip_prefix("decades:") {
        let (range, m) = rest
            .split_once(':')
            .ok_or_else(|| Failure::Usage("expected decades:<lo>..<hi>:<m>".into()))?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| Failure::Usage("expected decades:<lo>..<hi>:<m>".into()))?;
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| Failure::Usage(format!("bad grid number `{s}`")));
        let m = num(m)?;
        if m > 20 {
            return Err(Failure::Usage("grid refinement above 2^20 per decade".into()));
        }
        fourier::dyadic_decade_grid(num(lo)?..=num(hi)?, m)
    } else if spec.starts_with("pow:") {
        parse_value(spec)?.sequence()?.into_iter().map(|(_, u)| (decade_of(&u), u)).collect()
    } else {
        let mut out = Vec::new();
        for part in spec.split(',') {
            let u = pfl_core::algebraic::text::parse_rational(part)?;
            out.push((decade_of(&u), u));
        }
        out
    };
    Ok(points.into_iter().filter(|(_, u)| umax.is_none_or(|m| u <= m)).collect())
}

fn decade_of(u: &BigRational) -> u32 {
    let mut j = 0;
    let ten = BigRational::from_integer(10.into());
    let mut p = ten.clone();
    while &p <= u {
        p *= &ten;
        j += 1;
    }
    j
}

fn run(cli: Cli, prec: u32) -> Result<()> {
    match cli.command {
        Command::Pisot { poly, assume_irreducible } => {
            let p = parse_value(&poly)?.polynomial()?;
            let rep = pfl_core::algebraic::pisot::is_pisot_with(&p, prec, assume_irreducible)?;
            let out = json!({
                "polynomial": pfl_core::algebraic::text::format_polynomial(&p),
                "is_pisot": rep.is_pisot,
                "theta": rep.theta.as_ref().map(interval_json),
                "max_conjugate_modulus": rep.max_conjugate_modulus.as_ref().map(interval_json),
                "reason": rep.reason,
            });
            Sink::Stdout.json(&out)
        }
        Command::Height { value: v } => {
            let x = value(&v)?;
            let h = weil_height(&x, prec)?;
            let mut out = json!({ "value": x.to_string() });
            merge(&mut out, report::height_json(&h));
            Sink::Stdout.json(&out)
        }
        Command::MultDep { a, b, bound } => {
            let w = mult_dependence_search(&value(&a)?, &value(&b)?, bound)?;
            let out = match w {
                Some(w) => json!({ "dependent": true, "exponents": [w.exponents.0, w.exponents.1], "verified": w.verified }),
                None => json!({ "dependent": false, "bound": bound }),
            };
            Sink::Stdout.json(&out)
        }
        Command::Minkowski { a, b, cap } => {
            let m = minkowski_lower_bound(&value(&a)?, &value(&b)?, cap, prec)?;
            let out = json!({
                "constant": interval_json(&m.constant),
                "exponents": [m.exponents.0, m.exponents.1],
                "height": m.exact_height.map(|h| h.to_string()),
                "cap": cap,
            });
            Sink::Stdout.json(&out)
        }
        Command::Geval { lambda, u, target: t, out } => {
            let lam = value(&lambda)?;
            let arg = Argument::Exact(parse_product(&u)?);
            let r = target(&t);
            let g = fourier::eval_g(&lam, &arg, &r)?;
            let log = match fourier::eval_log_abs_g(&lam, &arg, &r)? {
                LogAbs::Finite(b) => interval_json(&b),
                LogAbs::NegInfinity => json!("-inf"),
            };
            let doc = json!({
                "lambda": lam.to_string(),
                "u": arg.to_string(),
                "value": interval_json(&g.value),
                "log_abs": log,
                "head_terms": g.head_terms,
                "tail_log_bound": interval_json(&g.tail_log_bound),
            });
            Sink::from(out).json(&doc)
        }
        Command::Scan { lambda1, lambda2, grid: spec, umax, target: t, out, maxima } => {
            let umax = umax.map(|s| pfl_core::algebraic::text::parse_rational(&s)).transpose()?;
            let points = grid(&spec, umax.as_ref())?;
            let args: Vec<Argument> = points.iter().map(|(_, u)| Argument::rational(u.clone())).collect();
            let rows = fourier::scan_product(&value(&lambda1)?, &value(&lambda2)?, &args, &target(&t))?;
            let mut buf = Vec::new();
            report::write_scan_csv(&mut buf, &rows).map_err(|e| Failure::Io(e.to_string()))?;
            Sink::from(out).bytes(&buf)?;
            if let Some(path) = maxima {
                let decades: Vec<u32> = points.iter().map(|(j, _)| *j).collect();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["decade", "max_hi"]).map_err(|e| Failure::Io(e.to_string()))?;
                for (j, m) in fourier::decade_maxima(&decades, &rows) {
                    w.write_record([j.to_string(), report::format_up(&m)]).map_err(|e| Failure::Io(e.to_string()))?;
                }
                let buf = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
                Sink::File(path).bytes(&buf)?;
            }
            Ok(())
        }
        Command::Erdos { theta, nmax, target: t, out } => {
            let k = field(&theta)?;
            let rep = fourier::erdos_witness(&k, nmax, &target(&t))?;
            let rows: Vec<Json> = rep
                .rows
                .iter()
                .zip(&rep.running_min)
                .map(|((n, b), m)| json!({ "n": n, "abs": interval_json(b), "running_min_lo": report::format_down(m) }))
                .collect();
            let doc = json!({
                "theta": pfl_core::algebraic::text::format_polynomial(k.poly()),
                "rows": rows,
                "min_lower": report::format_down(&rep.min_lower),
                "positive": rep.min_lower.is_positive(),
            });
            Sink::from(out).json(&doc)
        }
        Command::Approx { theta1, u1, theta2, u2, engine: e, out } => {
            let (k1, k2) = (field(&theta1)?, field(&theta2)?);
            let params = engine(&e, prec)?;
            let d1 = decompose_at(&Argument::Exact(parse_product(&u1)?), &k1, prec)?;
            let d2 = decompose_at(&Argument::Exact(parse_product(&u2)?), &k2, prec)?;
            let cert = certify(&d1, &d2, &params)?;
            let mut doc = report::certificate_json(&cert);
            doc["e1"] = json!(d1.e);
            doc["e2"] = json!(d2.e);
            Sink::from(out).json(&doc)
        }
        Command::RothDemo { lambda1, lambda2, f1, f2, useq, engine: e, burn_in, bound, out } => {
            let inputs = ReportInputs {
                lambda1: value(&lambda1)?,
                lambda2: value(&lambda2)?,
                f1: parse_root_form(&f1)?,
                f2: parse_root_form(&f2)?,
                useq: parse_value(&useq)?.sequence()?,
                params: engine(&e, prec)?,
                burn_in,
                dependence_bound: bound,
            };
            let rep = exponent_report(&inputs)?;
            let mut buf = Vec::new();
            report::write_roth_csv(&mut buf, &rep.rows).map_err(|e| Failure::Io(e.to_string()))?;
            match out {
                Some(path) => {
                    Sink::File(path).bytes(&buf)?;
                    let summary = json!({
                        "rows": rep.rows.len(),
                        "failed": rep.rows.iter().filter(|r| r.t.is_none()).count(),
                        "monotone_violation": rep.monotone_violation,
                        "growth_constant": rep.growth_constant.as_ref().map(interval_json),
                    });
                    Sink::Stdout.json(&summary)
                }
                None => Sink::Stdout.bytes(&buf),
            }
        }
    }
}

fn merge(into: &mut Json, from: Json) {
    if let (Json::Object(a), Json::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn precision(cli: Option<u32>, cfg: &config::Config) -> Result<u32> {
    if let Some(p) = cli {
        return Ok(p);
    }
    if let Ok(s) = std::env::var("PFL_PRECISION_BITS") {
        return s.trim().parse().map_err(|_| Failure::Usage(format!("PFL_PRECISION_BITS: not a bit count: `{s}`")));
    }
    Ok(cfg.prec().unwrap_or(DEFAULT_PRECISION))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let parsed = config::parse_with_config(argv);
    let (cli, cfg) = match parsed {
        Ok(x) => x,
        Err(config::Error::Clap(e)) => e.exit(),
        Err(config::Error::Config(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = precision(cli.prec, &cfg).and_then(|p| {
        if !(16..=pfl_core::algebraic::PRECISION_CAP).contains(&p) {
            return Err(Failure::Usage(format!("precision {p} outside 16..={}", pfl_core::algebraic::PRECISION_CAP)));
        }
        run(cli, p)
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain { code, message }) => {
            eprintln!("error[{code}]: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

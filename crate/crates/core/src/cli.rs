//! Command-line front end. [`run`] parses arguments and returns the exit
//! code together with everything that would be printed to stdout.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use rug::Complex;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rat};
use crate::hyp::{q0_by_reversal, q0_r0_by_series, theorem_poly, ContigOrder, HypParams};
use crate::numeric::{
    find_roots, float_to_decimal, gosper_check, hyp2f1_num, incomplete_beta_check, rat_to_c, sweep,
    verify_theorem, CJson, RootStatus, SweepOptions, VerdictStatus, VerifyOptions, VerifyReport,
};
use crate::operator::{
    build_h, build_l, factor_remainder, genericity_flags, right_reduce, GenericityFlags, RemainderShape,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "strange-eval", version, about = "Exact and numerical checks of strange hypergeometric evaluations")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check both root identities at every root of F(1-a, -l, 2-c; x).
    Verify(VerifyArgs),
    /// Compute q0 and r0 by every available method.
    Q0(Q0Args),
    /// Right-divide H(l) by the hypergeometric operator and factor the remainder.
    Reduce(ReduceArgs),
    /// Check F(1-a, b, b+2; b/(a+b)) = (b+1)(a/(a+b))^a.
    Gosper(GosperArgs),
    /// Verify random parameter draws.
    Sweep(SweepArgs),
    /// Evaluate F(a, b, c; z) numerically.
    Eval(EvalArgs),
    /// Roots of a polynomial, or of F(1-a, -l, 2-c; x).
    Roots(RootsArgs),
    /// Compare F(a, 1, c; x) with its incomplete-beta series.
    Beta(BetaArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Numeric {
    /// Working precision in bits.
    #[arg(long, default_value_t = 192, value_parser = clap::value_parser!(u32).range(32..=65536))]
    pub precision: u32,
    /// Largest accepted relative residual.
    #[arg(long, default_value_t = 1e-30)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rat,
    #[arg(long)]
    pub ell: usize,
    /// Series truncation order, or `auto` for l + 32.
    #[arg(long, default_value = "auto", value_parser = parse_order)]
    pub order: SeriesOrder,
    #[command(flatten)]
    pub numeric: Numeric,
}

#[derive(Debug, Args)]
pub struct Q0Args {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rat,
    #[arg(long)]
    pub ell: usize,
    #[arg(long, default_value = "auto", value_parser = parse_order)]
    pub order: SeriesOrder,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub b: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rat,
    #[arg(long)]
    pub ell: usize,
}

#[derive(Debug, Args)]
pub struct GosperArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rat,
    #[command(flatten)]
    pub numeric: Numeric,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 5)]
    pub ell_max: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub numeric: Numeric,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rat,
    /// Real part of the argument.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Rat,
    /// Imaginary part of the argument.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub z_im: Rat,
    #[arg(long, default_value_t = 192)]
    pub precision: u32,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    /// Comma-separated coefficients, constant term first.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "c", "ell"])]
    pub coeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["c", "ell"])]
    pub a: Option<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Rat>,
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long, default_value_t = 192)]
    pub precision: u32,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Rat,
    /// Number of series terms.
    #[arg(long, default_value_t = 128)]
    pub terms: usize,
    #[command(flatten)]
    pub numeric: Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOrder {
    Auto,
    Fixed(usize),
}

fn parse_order(s: &str) -> std::result::Result<SeriesOrder, String> {
    if s == "auto" {
        return Ok(SeriesOrder::Auto);
    }
    s.parse().map(SeriesOrder::Fixed).map_err(|_| format!("expected `auto` or a natural number, got `{s}`"))
}

impl SeriesOrder {
    fn resolve(self, ell: ContigOrder) -> usize {
        match self {
            SeriesOrder::Auto => ell.default_series_order(),
            SeriesOrder::Fixed(n) => n,
        }
    }
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Outcome {
            code: if pass { EXIT_OK } else { EXIT_FAILURE },
            stdout,
            stderr: String::new(),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Precondition(_)
        | Error::Parameter(_)
        | Error::DivisionByZero(_)
        | Error::BranchCut(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args, cli.json),
        Command::Q0(args) => cmd_q0(args, cli.json),
        Command::Reduce(args) => cmd_reduce(args, cli.json),
        Command::Gosper(args) => cmd_gosper(args, cli.json),
        Command::Sweep(args) => cmd_sweep(args, cli.json),
        Command::Eval(args) => cmd_eval(args, cli.json),
        Command::Roots(args) => cmd_roots(args, cli.json),
        Command::Beta(args) => cmd_beta(args, cli.json),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Short decimal form for text output.
fn show_c(z: &Complex) -> String {
    let re = z.real().to_string_radix(10, Some(20));
    if z.imag().is_zero() {
        return re;
    }
    let im = z.imag().to_string_radix(10, Some(20));
    match im.strip_prefix('-') {
        Some(abs) => format!("{re} - {abs}i"),
        None => format!("{re} + {im}i"),
    }
}

fn show_flags(f: &GenericityFlags) -> String {
    let mut s = format!("A1={} A2={} E1={} E2'={}", f.a1, f.a2, f.e1, f.e2_prime);
    for note in &f.notes {
        let _ = write!(s, " ({note})");
    }
    s
}

fn verify_options(n: &Numeric, order: Option<usize>) -> VerifyOptions {
    VerifyOptions {
        precision: n.precision,
        order,
        tolerance: n.tolerance,
    }
}

fn verify_text(rep: &VerifyReport) -> String {
    let p = &rep.params;
    let mut s = String::new();
    let _ = writeln!(s, "a = {}, c = {}, l = {}, precision = {} bits", p.a, p.c, p.ell.get(), p.precision);
    let _ = writeln!(s, "F(1-a, -l, 2-c; x) = {}", p.polynomial);
    let _ = writeln!(s, "q0 = {}; r0 = {}", p.q0, p.r0);
    for prov in &rep.flags.provenance {
        match (&prov.q0, &prov.note) {
            (Some(q0), _) => {
                let _ = writeln!(s, "  {:<9} q0 = {q0}", prov.method);
            }
            (None, Some(note)) => {
                let _ = writeln!(s, "  {:<9} {note}", prov.method);
            }
            (None, None) => {}
        }
    }
    let _ = writeln!(s, "flags: {}", show_flags(&rep.flags.genericity));
    if rep.flags.no_roots {
        let _ = writeln!(s, "no roots: the polynomial is constant");
    }
    for (i, rec) in rep.records.iter().enumerate() {
        let lambda = match &rec.exact {
            Some(r) => r.to_string(),
            None => show_c(&rec.lambda),
        };
        let mult = if rec.multiplicity > 1 { format!(" (multiplicity {})", rec.multiplicity) } else { String::new() };
        let _ = writeln!(s, "root {}: lambda = {lambda}{mult}", i + 1);
        match (rec.status, &rec.contiguous, &rec.companion) {
            (RootStatus::Skipped, _, _) => {
                let reason = rec.skip_reason.map(|r| serde_json::to_value(r).expect("tag")).unwrap_or(Value::Null);
                let _ = writeln!(
                    s,
                    "  skipped: {} ({})",
                    reason.as_str().unwrap_or("unknown"),
                    rec.skip_detail.as_deref().unwrap_or("")
                );
            }
            (status, Some(first), Some(second)) => {
                let _ = writeln!(s, "  F(a, 1+l, c; lambda)      = {}", show_c(&first.lhs));
                let _ = writeln!(s, "    residual {:.3e}  [{}]", first.residual, first.route);
                let _ = writeln!(s, "  F(c-a, c-1-l, c; lambda)  = {}", show_c(&second.lhs));
                let _ = writeln!(s, "    residual {:.3e}  [{}]", second.residual, second.route);
                let _ = writeln!(s, "  {}", if status == RootStatus::Pass { "PASS" } else { "FAIL" });
            }
            _ => {}
        }
    }
    let v = &rep.verdict;
    let status = match v.status {
        VerdictStatus::Pass => "PASS",
        VerdictStatus::Fail => "FAIL",
        VerdictStatus::NoRoots => "PASS (no roots)",
    };
    let _ = writeln!(s, "verdict: {status}: {} checked, {} skipped, {} failed", v.checked, v.skipped, v.failed);
    s
}

fn cmd_verify(args: &VerifyArgs, json: bool) -> Result<Outcome> {
    let ell = ContigOrder::new(args.ell)?;
    let order = args.order.resolve(ell);
    let rep = verify_theorem(&args.a, &args.c, ell, &verify_options(&args.numeric, Some(order)))?;
    let out = if json { to_json(&rep) } else { verify_text(&rep) };
    Ok(Outcome::ok(out, rep.verdict.ok()))
}

fn cmd_q0(args: &Q0Args, json: bool) -> Result<Outcome> {
    let ell = ContigOrder::new(args.ell)?;
    let order = args.order.resolve(ell);
    let (a, c) = (&args.a, &args.c);
    HypParams::new(a.clone(), Rat::one(), c.clone()).require_nonintegral_c()?;
    let series = q0_r0_by_series(a, c, ell, order)?;
    let red = right_reduce(&build_h(&Rat::one(), ell), &build_l(&HypParams::new(a.clone(), Rat::one(), c.clone())))?;
    let op = factor_remainder(&red.q, &red.r, ell)?;
    let reversal = if a.is_integer() { None } else { Some(q0_by_reversal(a, c, ell)?) };
    let agree = op.q0 == series.q0 && op.r0 == series.r0 && reversal.as_ref().is_none_or(|q| *q == series.q0);
    let reversal_note = format!("skipped: a = {a} is an integer");

    let out = if json {
        let records = json!([
            {"method": "series", "q0": series.q0, "r0": series.r0, "note": null},
            {"method": "operator", "q0": op.q0, "r0": op.r0, "note": null},
            match &reversal {
                Some(q) => json!({"method": "reversal", "q0": q, "r0": null, "note": null}),
                None => json!({"method": "reversal", "q0": null, "r0": null, "note": reversal_note}),
            },
        ]);
        to_json(&json!({
            "params": {"a": a, "c": c, "ell": ell, "order": order},
            "flags": {"reversal_available": reversal.is_some()},
            "records": records,
            "verdict": {"agree": agree, "q0": series.q0, "r0": series.r0},
        }))
    } else {
        let mut s = format!(
            "q0 = {}; r0 = {}; {}\n",
            series.q0,
            series.r0,
            if agree { "methods agree" } else { "methods DISAGREE" }
        );
        let _ = writeln!(s, "  series    q0 = {}; r0 = {}", series.q0, series.r0);
        let _ = writeln!(s, "  operator  q0 = {}; r0 = {}", op.q0, op.r0);
        match &reversal {
            Some(q) => {
                let _ = writeln!(s, "  reversal  q0 = {q}");
            }
            None => {
                let _ = writeln!(s, "  reversal  {reversal_note}");
            }
        }
        let _ = writeln!(s, "{}", if agree { "AGREE" } else { "DISAGREE" });
        s
    };
    Ok(Outcome::ok(out, agree))
}

fn show_shape(s: &RemainderShape) -> String {
    if s.degree.is_none() {
        return "0".into();
    }
    let mut parts = Vec::new();
    match s.x_exp {
        0 => {}
        1 => parts.push("x".to_string()),
        k => parts.push(format!("x^{k}")),
    }
    match s.one_minus_x_exp {
        0 => {}
        1 => parts.push("(1 - x)".to_string()),
        k => parts.push(format!("(1 - x)^{k}")),
    }
    parts.push(format!("({})", s.core));
    parts.join(" ")
}

fn cmd_reduce(args: &ReduceArgs, json: bool) -> Result<Outcome> {
    let ell = ContigOrder::new(args.ell)?;
    let p = HypParams::new(args.a.clone(), args.b.clone(), args.c.clone());
    let h = build_h(&p.b, ell);
    let l = build_l(&p);
    let red = right_reduce(&h, &l)?;
    let reconstructed = red.reconstruct(&l) == h;
    let q_shape = RemainderShape::of(&red.q)?;
    let r_shape = RemainderShape::of(&red.r)?;
    let factored = factor_remainder(&red.q, &red.r, ell);
    let flags = genericity_flags(&p, ell);
    let exps = [
        q_shape.x_exp,
        q_shape.one_minus_x_exp,
        q_shape.degree.map_or(-1, |d| d as i64),
        r_shape.x_exp,
        r_shape.one_minus_x_exp,
        r_shape.degree.map_or(-1, |d| d as i64),
    ];
    let generic = factored.as_ref().is_ok_and(|f| f.is_generic_shape(ell));

    let out = if json {
        let (q0, r0, note) = match &factored {
            Ok(f) => (json!(f.q0), json!(f.r0), Value::Null),
            Err(e) => (Value::Null, Value::Null, json!(e.to_string())),
        };
        to_json(&json!({
            "params": {"a": p.a, "b": p.b, "c": p.c, "ell": ell},
            "flags": flags,
            "records": [{
                "h": h.to_string(),
                "quotient": red.quotient.to_string(),
                "q": red.q.to_string(),
                "r": red.r.to_string(),
                "q_shape": q_shape,
                "r_shape": r_shape,
                "exponents": exps,
                "q0": q0,
                "r0": r0,
                "note": note,
            }],
            "verdict": {"reconstruction": reconstructed, "generic_shape": generic},
        }))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "H(l) = {h}");
        let _ = writeln!(s, "p(d) = {}", red.quotient);
        let _ = writeln!(s, "q = {}", red.q);
        let _ = writeln!(s, "  = {}", show_shape(&q_shape));
        let _ = writeln!(s, "r = {}", red.r);
        let _ = writeln!(s, "  = {}", show_shape(&r_shape));
        let _ = writeln!(
            s,
            "exponents (v0, v1, g, w0, w1, h) = ({}, {}, {}, {}, {}, {})",
            exps[0], exps[1], exps[2], exps[3], exps[4], exps[5]
        );
        match &factored {
            Ok(f) => {
                let _ = writeln!(s, "q0 = {}; r0 = {}", f.q0, f.r0);
            }
            Err(e) => {
                let _ = writeln!(s, "q0, r0: {e}");
            }
        }
        let _ = writeln!(s, "flags: {}", show_flags(&flags));
        let _ = writeln!(s, "generic shape: {}", if generic { "yes" } else { "no" });
        let _ = writeln!(s, "reconstruction: {}", if reconstructed { "OK" } else { "FAILED" });
        s
    };
    Ok(Outcome::ok(out, reconstructed))
}

fn cmd_gosper(args: &GosperArgs, json: bool) -> Result<Outcome> {
    let rep = gosper_check(&args.a, &args.b, args.numeric.precision)?;
    let pass = rep.residual <= args.numeric.tolerance;
    let out = if json {
        to_json(&json!({
            "params": {"a": rep.a, "b": rep.b, "z": rep.z, "precision": args.numeric.precision},
            "flags": {"exact": rep.lhs_exact.is_some()},
            "records": [rep],
            "verdict": {"pass": pass},
        }))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "F(1-a, b, b+2; z) with a = {}, b = {}, z = {}", rep.a, rep.b, rep.z);
        match (&rep.lhs_exact, &rep.rhs_exact) {
            (Some(l), Some(r)) => {
                let _ = writeln!(s, "lhs = {l}");
                let _ = writeln!(s, "rhs = {r}");
            }
            _ => {
                let _ = writeln!(s, "lhs = {}", show_c(&rep.lhs));
                let _ = writeln!(s, "rhs = {}", show_c(&rep.rhs));
            }
        }
        let _ = writeln!(s, "residual = {:e}", rep.residual);
        let _ = writeln!(s, "{}", if pass { "PASS" } else { "FAIL" });
        s
    };
    Ok(Outcome::ok(out, pass))
}

fn cmd_sweep(args: &SweepArgs, json: bool) -> Result<Outcome> {
    let opts = SweepOptions {
        trials: args.trials,
        ell_max: args.ell_max,
        seed: args.seed,
        verify: verify_options(&args.numeric, None),
    };
    let rep = sweep(&opts)?;
    let sum = &rep.summary;
    let pass = sum.failed == 0;
    let out = if json {
        to_json(&json!({
            "params": {
                "trials": args.trials,
                "ell_max": args.ell_max,
                "seed": args.seed,
                "precision": args.numeric.precision,
                "tolerance": format!("{:e}", args.numeric.tolerance),
            },
            "flags": {"skips_by_reason": sum.skips_by_reason},
            "records": rep.records,
            "verdict": sum,
        }))
    } else {
        let mut s = String::new();
        for t in &rep.records {
            let p = &t.report.params;
            let v = &t.report.verdict;
            let _ = writeln!(
                s,
                "#{:<3} a = {:<7} c = {:<7} l = {}  roots {}  skipped {}  {}",
                t.index,
                p.a.to_string(),
                p.c.to_string(),
                p.ell.get(),
                t.report.records.len(),
                v.skipped,
                match v.status {
                    VerdictStatus::Pass => format!("max residual {:.2e}", v.max_residual.unwrap_or(0.0)),
                    VerdictStatus::NoRoots => "no roots".into(),
                    VerdictStatus::Fail => "FAIL".into(),
                }
            );
        }
        let _ = writeln!(
            s,
            "{} roots, {} skipped (rate {:.3})",
            sum.roots, sum.skipped_roots, sum.skip_rate
        );
        for (reason, n) in &sum.skips_by_reason {
            let tag = serde_json::to_value(reason).expect("tag");
            let _ = writeln!(s, "  {}: {n}", tag.as_str().unwrap_or("?"));
        }
        let _ = writeln!(s, "{} trials, {} failures", sum.trials, sum.failed);
        s
    };
    Ok(Outcome::ok(out, pass))
}

fn cmd_eval(args: &EvalArgs, json: bool) -> Result<Outcome> {
    let wp = args.precision + 64;
    let z = Complex::with_val(wp, (rat_to_c(&args.z, wp).real(), rat_to_c(&args.z_im, wp).real()));
    let r = hyp2f1_num(
        &rat_to_c(&args.a, wp),
        &rat_to_c(&args.b, wp),
        &rat_to_c(&args.c, wp),
        &z,
        args.precision,
    )?;
    let out = if json {
        to_json(&json!({
            "params": {"a": args.a, "b": args.b, "c": args.c, "z": CJson::from(&Complex::with_val(args.precision, &z)), "precision": args.precision},
            "flags": {"path": r.path},
            "records": [{"value": CJson::from(&r.value), "est_error": format!("{:e}", r.est_error), "route": r.route}],
            "verdict": {"ok": true},
        }))
    } else {
        format!(
            "F({}, {}, {}; {}) =\n  re {}\n  im {}\nest_error {:e}\npath {}\nroute {}\n",
            args.a,
            args.b,
            args.c,
            show_c(&z),
            float_to_decimal(r.value.real()),
            float_to_decimal(r.value.imag()),
            r.est_error,
            r.path.tag(),
            r.route
        )
    };
    Ok(Outcome::ok(out, true))
}

fn parse_coeffs(s: &str) -> Result<Poly> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<Rat>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

fn cmd_roots(args: &RootsArgs, json: bool) -> Result<Outcome> {
    let poly = match (&args.coeffs, &args.a, &args.c, args.ell) {
        (Some(s), _, _, _) => parse_coeffs(s)?,
        (None, Some(a), Some(c), Some(ell)) => theorem_poly(a, c, ContigOrder::new(ell)?)?,
        _ => return Err(Error::Parse("give --coeffs or all of --a, --c, --ell".into())),
    };
    let set = find_roots(&poly, args.precision)?;
    let out = if json {
        let records: Vec<_> = set
            .roots
            .iter()
            .map(|r| {
                json!({
                    "value": CJson::from(&Complex::with_val(args.precision, &r.value)),
                    "multiplicity": r.multiplicity,
                    "exact": r.exact,
                    "residual": format!("{:e}", r.residual),
                })
            })
            .collect();
        to_json(&json!({
            "params": {"polynomial": poly, "precision": args.precision},
            "flags": {"residual_bound": format!("{:e}", set.residual_bound)},
            "records": records,
            "verdict": {"count": set.count()},
        }))
    } else {
        let mut s = format!("P(x) = {poly}\n");
        for r in &set.roots {
            let value = match &r.exact {
                Some(q) => q.to_string(),
                None => show_c(&r.value),
            };
            let _ = writeln!(s, "  {value}  multiplicity {}  |P| = {:.2e}", r.multiplicity, r.residual);
        }
        let _ = writeln!(s, "{} roots with multiplicity; residual bound {:.2e}", set.count(), set.residual_bound);
        s
    };
    Ok(Outcome::ok(out, true))
}

fn cmd_beta(args: &BetaArgs, json: bool) -> Result<Outcome> {
    let rep = incomplete_beta_check(&args.a, &args.c, &args.x, args.terms, args.numeric.precision)?;
    let pass = rep.residual <= args.numeric.tolerance;
    let out = if json {
        to_json(&json!({
            "params": {"a": rep.a, "c": rep.c, "x": rep.x, "terms": rep.terms, "precision": args.numeric.precision},
            "flags": {"exact_rhs": rep.rhs_exact.is_some()},
            "records": [rep],
            "verdict": {"pass": pass},
        }))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "F(a, 1, c; x) with a = {}, c = {}, x = {}, {} terms", rep.a, rep.c, rep.x, rep.terms);
        let _ = writeln!(s, "series   = {}", show_c(&rep.lhs));
        match &rep.rhs_exact {
            Some(r) => {
                let _ = writeln!(s, "integral = {r}");
            }
            None => {
                let _ = writeln!(s, "integral = {}", show_c(&rep.rhs));
            }
        }
        let _ = writeln!(s, "residual = {:e} (truncation bound {:e})", rep.residual, rep.truncation_bound);
        let _ = writeln!(s, "{}", if pass { "PASS" } else { "FAIL" });
        s
    };
    Ok(Outcome::ok(out, pass))
}

//! End-to-end numerical checks of the strange evaluations: the root
//! identities for `F(a, 1+ℓ, c; λ)` and `F(c−a, c−1−ℓ, c; λ)`, Gosper's
//! identity, and the incomplete-beta representation of `F(a, 1, c; x)`.

use std::cmp::Ordering;

use rug::{Complex, Float};
use rug::ops::Pow;
use serde::Serialize;

use super::{
    find_roots, hyp2f1_num, log2_abs, rat_to_c, rat_to_float, relative_residual, ser_c, ser_f64,
    CFloat, EvalPath, DEFAULT_PRECISION,
};
use crate::error::{Error, Result};
use crate::exact::{binomial_series, poch, Poly, Rat};
use crate::hyp::{q0_by_reversal, q0_r0_by_series, terminating_poly, theorem_poly, ContigOrder, HypParams};
use crate::operator::{build_h, build_l, factor_remainder, genericity_flags, right_reduce, GenericityFlags};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub precision: u32,
    /// Series truncation order for `q0`; `None` means `ℓ + 32`.
    pub order: Option<usize>,
    pub tolerance: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            precision: DEFAULT_PRECISION,
            order: None,
            tolerance: 1e-30,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyParams {
    pub a: Rat,
    pub c: Rat,
    pub ell: ContigOrder,
    pub precision: u32,
    pub order: usize,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    /// `F(1−a, −ℓ, 2−c; x)`.
    pub polynomial: Poly,
    pub q0: Poly,
    pub r0: Poly,
}

/// One way of computing `q0` and what it produced.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub method: &'static str,
    pub q0: Option<Poly>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyFlags {
    pub genericity: GenericityFlags,
    pub no_roots: bool,
    pub provenance: Vec<Provenance>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    BranchCut,
    DegenerateConnection,
    Unsupported,
    Pole,
    NoConvergence,
}

impl SkipReason {
    fn from_error(e: &Error) -> Option<SkipReason> {
        match e {
            Error::BranchCut(_) => Some(SkipReason::BranchCut),
            Error::DegenerateConnection(_) => Some(SkipReason::DegenerateConnection),
            Error::Unsupported(_) => Some(SkipReason::Unsupported),
            Error::Pole(_) | Error::Parameter(_) => Some(SkipReason::Pole),
            Error::NoConvergence { .. } => Some(SkipReason::NoConvergence),
            _ => None,
        }
    }
}

/// Both sides of one identity at one root.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    #[serde(serialize_with = "ser_c")]
    pub lhs: CFloat,
    #[serde(serialize_with = "ser_c")]
    pub rhs: CFloat,
    #[serde(serialize_with = "ser_f64")]
    pub residual: f64,
    #[serde(serialize_with = "ser_f64")]
    pub est_error: f64,
    pub path: EvalPath,
    pub route: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    #[serde(serialize_with = "ser_c")]
    pub lambda: CFloat,
    pub exact: Option<Rat>,
    pub multiplicity: usize,
    pub on_cut: bool,
    pub status: RootStatus,
    pub skip_reason: Option<SkipReason>,
    pub skip_detail: Option<String>,
    /// `F(a, 1+ℓ, c; λ) = −(1−c) q0(λ) / (ℓ! (1−λ)^ℓ)`.
    pub contiguous: Option<IdentityCheck>,
    /// `F(c−a, c−1−ℓ, c; λ) = −(1−c) (1−λ)^{a+1−c} q0(λ) / ℓ!`.
    pub companion: Option<IdentityCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Pass,
    Fail,
    NoRoots,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyVerdict {
    pub status: VerdictStatus,
    pub checked: usize,
    pub skipped: usize,
    pub failed: usize,
    #[serde(serialize_with = "ser_opt_f64")]
    pub max_residual: Option<f64>,
}

impl VerifyVerdict {
    pub fn ok(&self) -> bool {
        self.status != VerdictStatus::Fail
    }
}

fn ser_opt_f64<S: serde::Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_f64(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub params: VerifyParams,
    pub flags: VerifyFlags,
    pub records: Vec<RootRecord>,
    pub verdict: VerifyVerdict,
}

/// `q0`, `r0` by series, cross-checked exactly against operator division
/// and, for `a ∉ ℤ`, the reversed expansion.
fn q0_with_provenance(a: &Rat, c: &Rat, ell: ContigOrder, order: usize) -> Result<(Poly, Poly, Vec<Provenance>)> {
    let series = q0_r0_by_series(a, c, ell, order)?;
    let p = HypParams::new(a.clone(), Rat::one(), c.clone());
    let red = right_reduce(&build_h(&Rat::one(), ell), &build_l(&p))?;
    let op = factor_remainder(&red.q, &red.r, ell)?;
    if (&op.q0, &op.r0) != (&series.q0, &series.r0) {
        return Err(Error::Inconsistency(format!(
            "series gives q0 = {}, r0 = {}; operator division gives q0 = {}, r0 = {}",
            series.q0, series.r0, op.q0, op.r0
        )));
    }
    let mut prov = vec![
        Provenance {
            method: "series",
            q0: Some(series.q0.clone()),
            note: None,
        },
        Provenance {
            method: "operator",
            q0: Some(op.q0.clone()),
            note: None,
        },
    ];
    if a.is_integer() {
        prov.push(Provenance {
            method: "reversal",
            q0: None,
            note: Some(format!("skipped: a = {a} is an integer")),
        });
    } else {
        let rev = q0_by_reversal(a, c, ell)?;
        if rev != series.q0 {
            return Err(Error::Inconsistency(format!(
                "series gives q0 = {}; reversal gives {rev}",
                series.q0
            )));
        }
        prov.push(Provenance {
            method: "reversal",
            q0: Some(rev),
            note: None,
        });
    }
    Ok((series.q0, series.r0, prov))
}

/// `(1 − λ)^e` on the principal branch.
fn one_minus_pow(lambda: &CFloat, e: &CFloat, wp: u32) -> CFloat {
    Complex::with_val(wp, 1 - lambda).pow(e)
}

/// The left side arrives rounded to `prec` bits; the right side is kept at
/// working precision for the residual so that agreement is not overstated.
fn check(lhs: Result<super::EvalResult>, rhs: CFloat, prec: u32) -> Result<IdentityCheck> {
    let lhs = lhs?;
    Ok(IdentityCheck {
        residual: relative_residual(&lhs.value, &rhs),
        lhs: lhs.value,
        rhs: Complex::with_val(prec, &rhs),
        est_error: lhs.est_error,
        path: lhs.path,
        route: lhs.route,
    })
}

fn check_root(a: &Rat, c: &Rat, ell: ContigOrder, q0: &Poly, lambda: &CFloat, prec: u32) -> Result<(IdentityCheck, IdentityCheck)> {
    let wp = prec + 64;
    let one = Rat::one();
    let l = ell.as_rat();
    let lam = Complex::with_val(wp, lambda);
    let q0_at = super::eval_poly_c(q0, &lam);
    let fact = rat_to_float(&poch(&one, ell.get()), wp);
    // −(1 − c) q0(λ) / ℓ!
    let common = Complex::with_val(wp, &q0_at * rat_to_float(&(c - &one), wp)) / &fact;

    let omx_l = Complex::with_val(wp, 1 - &lam).pow(ell.get() as u32);
    let rhs1 = Complex::with_val(wp, &common / &omx_l);
    let lhs1 = hyp2f1_num(
        &rat_to_c(a, wp),
        &rat_to_c(&(&one + &l), wp),
        &rat_to_c(c, wp),
        &lam,
        prec,
    );
    let first = check(lhs1, rhs1, prec)?;

    let rhs2 = Complex::with_val(wp, &common * one_minus_pow(&lam, &rat_to_c(&(a + &one - c), wp), wp));
    let lhs2 = hyp2f1_num(
        &rat_to_c(&(c - a), wp),
        &rat_to_c(&(c - &one - &l), wp),
        &rat_to_c(c, wp),
        &lam,
        prec,
    );
    let second = check(lhs2, rhs2, prec)?;
    Ok((first, second))
}

/// Builds `F(1−a, −ℓ, 2−c; x)`, computes `q0` three ways, and checks both
/// root identities at every root off `[1, ∞)`.
pub fn verify_theorem(a: &Rat, c: &Rat, ell: ContigOrder, opts: &VerifyOptions) -> Result<VerifyReport> {
    HypParams::new(a.clone(), Rat::one(), c.clone()).require_nonintegral_c()?;
    let order = opts.order.unwrap_or_else(|| ell.default_series_order());
    let polynomial = theorem_poly(a, c, ell)?;
    let (q0, r0, provenance) = q0_with_provenance(a, c, ell, order)?;
    let genericity = genericity_flags(&HypParams::new(a.clone(), Rat::one(), c.clone()), ell);
    let params = VerifyParams {
        a: a.clone(),
        c: c.clone(),
        ell,
        precision: opts.precision,
        order,
        tolerance: opts.tolerance,
        polynomial: polynomial.clone(),
        q0: q0.clone(),
        r0,
    };
    let no_roots = polynomial.degree().is_none_or(|d| d == 0);
    let mut records = Vec::new();
    if !no_roots {
        let roots = find_roots(&polynomial, opts.precision)?;
        for root in &roots.roots {
            let mut rec = RootRecord {
                lambda: Complex::with_val(opts.precision, &root.value),
                exact: root.exact.clone(),
                multiplicity: root.multiplicity,
                on_cut: root.on_cut(),
                status: RootStatus::Skipped,
                skip_reason: None,
                skip_detail: None,
                contiguous: None,
                companion: None,
            };
            if rec.on_cut {
                rec.skip_reason = Some(SkipReason::BranchCut);
                rec.skip_detail = Some("root lies on [1, inf)".into());
            } else {
                match check_root(a, c, ell, &q0, &root.value, opts.precision) {
                    Ok((first, second)) => {
                        let pass = first.residual <= opts.tolerance && second.residual <= opts.tolerance;
                        rec.status = if pass { RootStatus::Pass } else { RootStatus::Fail };
                        rec.contiguous = Some(first);
                        rec.companion = Some(second);
                    }
                    Err(e) => match SkipReason::from_error(&e) {
                        Some(reason) => {
                            rec.skip_reason = Some(reason);
                            rec.skip_detail = Some(e.to_string());
                        }
                        None => return Err(e),
                    },
                }
            }
            records.push(rec);
        }
    }
    let verdict = tally(&records, no_roots);
    Ok(VerifyReport {
        params,
        flags: VerifyFlags {
            genericity,
            no_roots,
            provenance,
        },
        records,
        verdict,
    })
}

fn tally(records: &[RootRecord], no_roots: bool) -> VerifyVerdict {
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let failed = count(RootStatus::Fail);
    let max_residual = records
        .iter()
        .flat_map(|r| [&r.contiguous, &r.companion])
        .flatten()
        .map(|c| c.residual)
        .reduce(f64::max);
    let status = if no_roots {
        VerdictStatus::NoRoots
    } else if failed > 0 {
        VerdictStatus::Fail
    } else {
        VerdictStatus::Pass
    };
    VerifyVerdict {
        status,
        checked: count(RootStatus::Pass) + failed,
        skipped: count(RootStatus::Skipped),
        failed,
        max_residual,
    }
}

/// `F(1−a, b, b+2; b/(a+b))` against `(b+1) (a/(a+b))^a`.
#[derive(Clone, Debug, Serialize)]
pub struct GosperReport {
    pub a: Rat,
    pub b: Rat,
    pub z: Rat,
    /// Both sides as exact rationals, when `a` is a positive integer.
    pub lhs_exact: Option<Rat>,
    pub rhs_exact: Option<Rat>,
    #[serde(serialize_with = "ser_c")]
    pub lhs: CFloat,
    #[serde(serialize_with = "ser_c")]
    pub rhs: CFloat,
    #[serde(serialize_with = "ser_f64")]
    pub residual: f64,
    pub path: EvalPath,
}

pub fn gosper_check(a: &Rat, b: &Rat, prec: u32) -> Result<GosperReport> {
    let one = Rat::one();
    let two = Rat::from(2);
    let sum = a + b;
    if sum.is_zero() {
        return Err(Error::Parameter("a + b = 0".into()));
    }
    let lower = b + &two;
    if lower.is_nonpositive_integer() {
        return Err(Error::Parameter(format!("b + 2 = {lower} is a nonpositive integer")));
    }
    let z = b / &sum;
    if z >= one {
        return Err(Error::BranchCut(format!("argument {z} lies on [1, inf)")));
    }
    let base = a / &sum;
    let wp = prec + 64;
    let b1 = b + &one;
    if a.is_integer() && a.signum() == Ordering::Greater {
        let poly = terminating_poly(&HypParams::new(b.clone(), &one - a, lower))?;
        let lhs = poly.eval(&z);
        let n = a.to_i64().and_then(|n| i32::try_from(n).ok()).ok_or_else(|| Error::Parameter(format!("a = {a} too large")))?;
        let rhs = &b1 * &base.pow(n)?;
        let residual = if lhs == rhs {
            0.0
        } else {
            relative_residual(&rat_to_c(&lhs, wp), &rat_to_c(&rhs, wp))
        };
        return Ok(GosperReport {
            a: a.clone(),
            b: b.clone(),
            z,
            lhs: rat_to_c(&lhs, prec),
            rhs: rat_to_c(&rhs, prec),
            lhs_exact: Some(lhs),
            rhs_exact: Some(rhs),
            residual,
            path: EvalPath::DirectSeries,
        });
    }
    let lhs = hyp2f1_num(&rat_to_c(&(&one - a), wp), &rat_to_c(b, wp), &rat_to_c(&lower, wp), &rat_to_c(&z, wp), prec)?;
    let rhs = Complex::with_val(wp, rat_to_c(&base, wp).pow(rat_to_c(a, wp))) * rat_to_float(&b1, wp);
    Ok(GosperReport {
        a: a.clone(),
        b: b.clone(),
        z,
        lhs_exact: None,
        rhs_exact: None,
        residual: relative_residual(&lhs.value, &rhs),
        lhs: lhs.value,
        rhs: Complex::with_val(prec, &rhs),
        path: lhs.path,
    })
}

/// `F(a, 1, c; x)` against `(c−1) (1−x)^{c−a−1} Σ_{n≤N} β_n x^n / (c−1+n)`,
/// where `β_n` are the coefficients of `(1−t)^{a−c}`.
#[derive(Clone, Debug, Serialize)]
pub struct BetaReport {
    pub a: Rat,
    pub c: Rat,
    pub x: Rat,
    pub terms: usize,
    /// Exact right side, when `c − a` is an integer.
    pub rhs_exact: Option<Rat>,
    #[serde(serialize_with = "ser_c")]
    pub lhs: CFloat,
    #[serde(serialize_with = "ser_c")]
    pub rhs: CFloat,
    #[serde(serialize_with = "ser_f64")]
    pub residual: f64,
    /// Heuristic bound on the neglected terms, relative to the right side.
    #[serde(serialize_with = "ser_f64")]
    pub truncation_bound: f64,
}

pub fn incomplete_beta_check(a: &Rat, c: &Rat, x: &Rat, terms: usize, prec: u32) -> Result<BetaReport> {
    let one = Rat::one();
    if *c <= one {
        return Err(Error::Precondition(format!("c = {c} must exceed 1")));
    }
    if x.signum() != Ordering::Greater || *x >= one {
        return Err(Error::Precondition(format!("x = {x} must lie in (0, 1)")));
    }
    let wp = prec + 64;
    let beta = binomial_series(&(a - c), terms + 1);
    let cm1 = c - &one;
    let mut sum = Rat::zero();
    let mut xn = Rat::one();
    for n in 0..=terms {
        sum += &(beta.coeff(n) * &xn / (&cm1 + &Rat::from(n)));
        xn *= x;
    }
    let omx = &one - x;
    let exponent = c - a - &one;
    let rhs_exact = match exponent.to_i64().and_then(|e| i32::try_from(e).ok()) {
        Some(e) if exponent.is_integer() => Some(&cm1 * &omx.pow(e)? * &sum),
        _ => None,
    };
    let rhs = match &rhs_exact {
        Some(r) => rat_to_c(r, wp),
        None => {
            let pre = Float::with_val(wp, rat_to_float(&omx, wp).pow(rat_to_float(&exponent, wp)));
            Complex::with_val(wp, (pre * rat_to_float(&(&cm1 * &sum), wp), 0))
        }
    };
    // first neglected term, continued geometrically
    let next = (beta.coeff(terms + 1) * &xn / (&cm1 + &Rat::from(terms + 1))).abs();
    let next_log2 = log2_abs(&rat_to_c(&next, 64)) - (1.0 - x.to_f64()).log2();
    let truncation_bound = (next_log2 - log2_abs(&rat_to_c(&sum, 64)).max(0.0)).exp2();
    let lhs = hyp2f1_num(&rat_to_c(a, wp), &rat_to_c(&one, wp), &rat_to_c(c, wp), &rat_to_c(x, wp), prec)?;
    Ok(BetaReport {
        a: a.clone(),
        c: c.clone(),
        x: x.clone(),
        terms,
        rhs_exact,
        residual: relative_residual(&lhs.value, &rhs),
        lhs: lhs.value,
        rhs: Complex::with_val(prec, &rhs),
        truncation_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn ell(l: usize) -> ContigOrder {
        ContigOrder::new(l).unwrap()
    }

    #[test]
    fn first_order_closed_forms() {
        let rep = verify_theorem(&r(3, 1), &r(3, 2), ell(1), &VerifyOptions::default()).unwrap();
        assert_eq!(rep.records.len(), 1);
        let rec = &rep.records[0];
        assert_eq!(rec.exact, Some(r(-1, 4)));
        let first = rec.contiguous.as_ref().unwrap();
        let second = rec.companion.as_ref().unwrap();
        assert!(first.residual < 1e-40 && second.residual < 1e-40);
        assert!(relative_residual(&first.lhs, &rat_to_c(&r(2, 5), 192)) < 1e-50);
        // (1/2)(5/4)^{5/2}
        let want = Float::with_val(192, 1.25f64).pow(2.5f64) / 2u32;
        assert!(relative_residual(&second.lhs, &Complex::with_val(192, (want, 0))) < 1e-50);
        assert_eq!(rep.verdict.status, VerdictStatus::Pass);
    }

    #[test]
    fn no_roots_when_a_is_one() {
        let rep = verify_theorem(&r(1, 1), &r(1, 2), ell(3), &VerifyOptions::default()).unwrap();
        assert!(rep.flags.no_roots);
        assert!(rep.records.is_empty());
        assert_eq!(rep.verdict.status, VerdictStatus::NoRoots);
    }

    #[test]
    fn second_order_end_to_end() {
        let rep = verify_theorem(&r(1, 2), &r(1, 3), ell(2), &VerifyOptions::default()).unwrap();
        assert_eq!(rep.records.len(), 2);
        for rec in &rep.records {
            assert_eq!(rec.status, RootStatus::Pass, "{rec:?}");
            assert!(rec.contiguous.as_ref().unwrap().residual < 1e-40);
            assert!(rec.companion.as_ref().unwrap().residual < 1e-40);
        }
        // q0 = (4 − c) + (a − 2) x
        assert_eq!(rep.params.q0, Poly::new(vec![r(11, 3), r(-3, 2)]));
        assert_eq!(rep.flags.provenance.len(), 3);
    }

    #[test]
    fn integral_c_rejected() {
        assert!(matches!(
            verify_theorem(&r(1, 2), &r(2, 1), ell(2), &VerifyOptions::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn gosper_terminating() {
        let rep = gosper_check(&r(2, 1), &r(1, 1), 192).unwrap();
        assert_eq!(rep.lhs_exact, Some(r(8, 9)));
        assert_eq!(rep.rhs_exact, Some(r(8, 9)));
        assert_eq!(rep.residual, 0.0);
        let rep = gosper_check(&r(1, 1), &r(1, 1), 192).unwrap();
        assert_eq!(rep.lhs_exact, Some(Rat::one()));
    }

    #[test]
    fn gosper_non_terminating() {
        let rep = gosper_check(&r(1, 2), &r(1, 3), 192).unwrap();
        assert!(rep.residual < 1e-40, "{}", rep.residual);
    }

    #[test]
    fn gosper_errors() {
        assert!(matches!(gosper_check(&r(1, 2), &r(-1, 2), 192), Err(Error::Parameter(_))));
        assert!(matches!(gosper_check(&r(1, 2), &r(-3, 1), 192), Err(Error::Parameter(_))));
        assert!(matches!(gosper_check(&r(-1, 2), &r(1, 1), 192), Err(Error::BranchCut(_))));
    }

    #[test]
    fn beta_representation() {
        let rep = incomplete_beta_check(&r(2, 1), &r(3, 1), &r(1, 2), 128, 192).unwrap();
        assert!(rep.residual < 1e-30, "{}", rep.residual);
        assert!(rep.truncation_bound < 1e-30);
    }

    #[test]
    fn beta_geometric_reduction() {
        let x = r(1, 3);
        let rep = incomplete_beta_check(&r(5, 2), &r(5, 2), &x, 16, 192).unwrap();
        assert_eq!(rep.rhs_exact, Some(r(3, 2)));
        assert!(rep.residual < 1e-50);
    }

    #[test]
    fn beta_small_x() {
        let rep = incomplete_beta_check(&r(7, 3), &r(9, 4), &r(1, 1_000_000), 8, 192).unwrap();
        assert!(relative_residual(&rep.lhs, &rat_to_c(&Rat::one(), 192)) < 1e-5);
        assert!(rep.residual < 1e-40);
    }
}

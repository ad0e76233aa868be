//! Numerical `F(a, b, c; z)` via direct summation, the Pfaff and Euler
//! transformations, and the two-term `z → 1 − z` connection formula.
//!
//! Transformations compose: a Pfaff map followed by the connection formula
//! reaches `1/(1 − z)`, and the connection formula followed by a Pfaff map
//! on its inner series reaches `1 − 1/z`. The route with the smallest
//! effective argument modulus is taken; only a neighbourhood of
//! `e^{±iπ/3}` stays out of reach.

use rug::Complex;
use rug::ops::Pow;
use serde::Serialize;

use super::gamma::{gamma_c, rgamma_c};
use super::{abs_f64, log2_abs, near_integer, CFloat};
use crate::error::{Error, Result};

/// Largest effective argument modulus summed directly.
const RHO_MAX: f64 = 0.975;
/// Below this modulus the untransformed series is always used.
const DIRECT_RADIUS: f64 = 0.7;
/// Distance of `c − a − b` to the integers below which the connection
/// formula is refused (2^-40).
const CONNECTION_TOL: f64 = 9.094947017729282e-13;
const MAX_TERMS: usize = 400_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EvalPath {
    #[serde(rename = "direct-series")]
    DirectSeries,
    #[serde(rename = "pfaff-a")]
    PfaffA,
    #[serde(rename = "pfaff-b")]
    PfaffB,
    #[serde(rename = "euler")]
    Euler,
    #[serde(rename = "connection-1mz")]
    Connection1mz,
    #[serde(rename = "taylor-recentre")]
    TaylorRecentre,
    #[serde(rename = "unsupported")]
    Unsupported,
}

impl EvalPath {
    pub fn tag(self) -> &'static str {
        match self {
            EvalPath::DirectSeries => "direct-series",
            EvalPath::PfaffA => "pfaff-a",
            EvalPath::PfaffB => "pfaff-b",
            EvalPath::Euler => "euler",
            EvalPath::Connection1mz => "connection-1mz",
            EvalPath::TaylorRecentre => "taylor-recentre",
            EvalPath::Unsupported => "unsupported",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EvalResult {
    pub value: CFloat,
    /// Heuristic absolute error bound.
    pub est_error: f64,
    /// Outermost transformation applied.
    pub path: EvalPath,
    /// Full route, e.g. `connection-1mz(pfaff-a(direct-series), direct-series)`.
    pub route: String,
}

#[derive(Clone)]
struct Params {
    a: CFloat,
    b: CFloat,
    c: CFloat,
}

struct Partial {
    value: CFloat,
    /// log2 of the largest intermediate magnitude, the cancellation reference.
    mag_log2: f64,
    /// log2 of the truncation error bound.
    tail_log2: f64,
    path: EvalPath,
    route: String,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Route {
    Direct,
    PfaffA,
    PfaffB,
    Euler,
    Connection,
}

fn log2_add(x: f64, y: f64) -> f64 {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + (1.0 + (lo - hi).exp2()).log2()
}

fn int_tol(wp: u32) -> f64 {
    2f64.powi(-(wp as i32) / 2)
}

fn nonpos_int(x: &CFloat, wp: u32) -> Option<u64> {
    near_integer(x, int_tol(wp)).filter(|&n| n <= 0).map(|n| n.unsigned_abs())
}

/// Index of the last nonzero term if the series terminates.
fn termination(p: &Params, wp: u32) -> Option<u64> {
    match (nonpos_int(&p.a, wp), nonpos_int(&p.b, wp)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (m, n) => m.or(n),
    }
}

fn on_cut(z: &CFloat) -> bool {
    z.imag().is_zero() && *z.real() >= 1
}

fn cx(wp: u32, v: &CFloat) -> CFloat {
    Complex::with_val(wp, v)
}

impl Params {
    fn pfaff_a(&self, wp: u32) -> Params {
        Params {
            a: self.a.clone(),
            b: Complex::with_val(wp, &self.c - &self.b),
            c: self.c.clone(),
        }
    }

    fn pfaff_b(&self, wp: u32) -> Params {
        Params {
            a: Complex::with_val(wp, &self.c - &self.a),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    fn euler(&self, wp: u32) -> Params {
        Params {
            a: Complex::with_val(wp, &self.c - &self.a),
            b: Complex::with_val(wp, &self.c - &self.b),
            c: self.c.clone(),
        }
    }

    /// `c − a − b`.
    fn excess(&self, wp: u32) -> CFloat {
        Complex::with_val(wp, &self.c - &self.a) - &self.b
    }

    /// Parameters of the two series in the `1 − z` connection formula.
    fn connection(&self, wp: u32) -> (Params, Params) {
        let s = self.excess(wp);
        let first = Params {
            a: self.a.clone(),
            b: self.b.clone(),
            c: Complex::with_val(wp, 1 - &s),
        };
        let second = Params {
            a: Complex::with_val(wp, &self.c - &self.a),
            b: Complex::with_val(wp, &self.c - &self.b),
            c: Complex::with_val(wp, &s + 1u32),
        };
        (first, second)
    }

    fn connection_degenerate(&self, wp: u32) -> bool {
        near_integer(&self.excess(wp), CONNECTION_TOL).is_some()
    }
}

fn pfaff_arg(z: &CFloat, wp: u32) -> CFloat {
    let den = Complex::with_val(wp, z - 1u32);
    Complex::with_val(wp, z / &den)
}

fn one_minus(z: &CFloat, wp: u32) -> CFloat {
    Complex::with_val(wp, 1 - z)
}

#[derive(Clone, Copy)]
struct Plan {
    wp: u32,
    /// Refuse connection steps whose parameter excess is integral.
    strict: bool,
}

/// Effective modulus reachable from `z`; infinite if nothing applies.
fn best_rho(p: &Params, z: &CFloat, plan: Plan, allow_pfaff: bool, allow_conn: bool) -> f64 {
    candidates(p, z, plan, allow_pfaff, allow_conn)
        .iter()
        .map(|&(r, _)| r)
        .fold(f64::INFINITY, f64::min)
}

fn candidates(
    p: &Params,
    z: &CFloat,
    plan: Plan,
    allow_pfaff: bool,
    allow_conn: bool,
) -> Vec<(f64, Route)> {
    let wp = plan.wp;
    if termination(p, wp).is_some() {
        return vec![(0.0, Route::Direct)];
    }
    let mut out = Vec::new();
    if !on_cut(z) {
        out.push((abs_f64(z), Route::Direct));
    }
    if on_cut(z) || z.real().is_nan() {
        return out;
    }
    if allow_pfaff {
        let w = pfaff_arg(z, wp);
        for (params, route) in [(p.pfaff_a(wp), Route::PfaffA), (p.pfaff_b(wp), Route::PfaffB)] {
            out.push((best_rho(&params, &w, plan, false, allow_conn), route));
        }
        if termination(&p.euler(wp), wp).is_some() {
            out.push((0.0, Route::Euler));
        }
    }
    if allow_conn && !(plan.strict && p.connection_degenerate(wp)) {
        let w = one_minus(z, wp);
        let (p1, p2) = p.connection(wp);
        let r = best_rho(&p1, &w, plan, allow_pfaff, false).max(best_rho(&p2, &w, plan, allow_pfaff, false));
        out.push((r, Route::Connection));
    }
    out
}

fn direct_sum(p: &Params, z: &CFloat, wp: u32) -> Result<Partial> {
    let stop = termination(p, wp);
    if stop.is_none() {
        if let Some(k) = nonpos_int(&p.c, wp) {
            return Err(Error::Parameter(format!("lower parameter is the nonpositive integer -{k}")));
        }
    } else if let (Some(k), Some(m)) = (nonpos_int(&p.c, wp), stop) {
        if k < m {
            return Err(Error::Parameter(format!(
                "lower parameter -{k} is a pole before the series terminates at term {m}"
            )));
        }
    }
    let z_abs = abs_f64(z);
    let mut term = Complex::with_val(wp, 1);
    let mut sum = Complex::with_val(wp, 1);
    let mut mag_log2 = 0f64;
    let mut tail_log2 = f64::NEG_INFINITY;
    let mut quiet = 0;
    let mut n: u64 = 0;
    loop {
        if stop == Some(n) {
            break;
        }
        if n as usize > MAX_TERMS {
            return Err(Error::NoConvergence {
                what: "hypergeometric series",
                iterations: MAX_TERMS,
                best: vec![sum.to_string()],
            });
        }
        let an = Complex::with_val(wp, &p.a + n);
        let bn = Complex::with_val(wp, &p.b + n);
        let cn = Complex::with_val(wp, &p.c + n);
        let num = Complex::with_val(wp, &an * &bn);
        let den = Complex::with_val(wp, &cn * (n + 1));
        term *= &num;
        term /= &den;
        term *= z;
        sum += &term;
        n += 1;
        let t_log2 = log2_abs(&term);
        mag_log2 = mag_log2.max(t_log2);
        if stop.is_some() {
            continue;
        }
        // ratio of the next term to this one
        let an1 = abs_f64(&Complex::with_val(53, &an + 1u32));
        let bn1 = abs_f64(&Complex::with_val(53, &bn + 1u32));
        let cn1 = abs_f64(&Complex::with_val(53, &cn + 1u32));
        let ratio = an1 * bn1 / (cn1 * (n + 1) as f64) * z_abs;
        let rho = ratio.max(z_abs);
        if rho < 1.0 {
            let bound = t_log2 + (rho / (1.0 - rho)).log2();
            let s_log2 = log2_abs(&sum).max(mag_log2 - f64::from(wp));
            if bound < s_log2 - f64::from(wp) - 4.0 {
                quiet += 1;
                if quiet >= 2 {
                    tail_log2 = bound;
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    Ok(Partial {
        value: sum,
        mag_log2,
        tail_log2,
        path: EvalPath::DirectSeries,
        route: EvalPath::DirectSeries.tag().to_string(),
    })
}

fn scaled(prefactor: CFloat, inner: Partial, path: EvalPath) -> Partial {
    let lp = log2_abs(&prefactor);
    Partial {
        value: prefactor * &inner.value,
        mag_log2: inner.mag_log2 + lp,
        tail_log2: inner.tail_log2 + lp,
        path,
        route: format!("{}({})", path.tag(), inner.route),
    }
}

fn eval(p: &Params, z: &CFloat, wp: u32, allow_pfaff: bool, allow_conn: bool) -> Result<Partial> {
    if z.is_zero() {
        return direct_sum(p, z, wp);
    }
    if termination(p, wp).is_some() {
        return direct_sum(p, z, wp);
    }
    if on_cut(z) {
        return Err(Error::BranchCut(z.to_string()));
    }
    if abs_f64(z) <= DIRECT_RADIUS {
        return direct_sum(p, z, wp);
    }
    let plan = Plan { wp, strict: true };
    let cands = candidates(p, z, plan, allow_pfaff, allow_conn);
    let best = cands
        .iter()
        .copied()
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .filter(|&(r, _)| r <= RHO_MAX);
    let Some((_, route)) = best else {
        if allow_pfaff && allow_conn {
            if let Some(z0) = recentre_point(z) {
                return taylor(p, z, &z0, wp);
            }
        }
        let lax = Plan { wp, strict: false };
        if best_rho(p, z, lax, allow_pfaff, allow_conn) <= RHO_MAX {
            return Err(Error::DegenerateConnection(format!(
                "every usable route needs the 1 - z connection with an integral parameter excess at z = {z}"
            )));
        }
        return Err(Error::Unsupported(z.to_string()));
    };
    match route {
        Route::Direct => direct_sum(p, z, wp),
        Route::PfaffA | Route::PfaffB => {
            let (params, exponent, path) = if route == Route::PfaffA {
                (p.pfaff_a(wp), cx(wp, &p.a), EvalPath::PfaffA)
            } else {
                (p.pfaff_b(wp), cx(wp, &p.b), EvalPath::PfaffB)
            };
            let w = pfaff_arg(z, wp);
            let inner = eval(&params, &w, wp, false, allow_conn)?;
            let pre = one_minus(z, wp).pow(-exponent);
            Ok(scaled(pre, inner, path))
        }
        Route::Euler => {
            let inner = direct_sum(&p.euler(wp), z, wp)?;
            let pre = one_minus(z, wp).pow(p.excess(wp));
            Ok(scaled(pre, inner, EvalPath::Euler))
        }
        Route::Connection => connection(p, z, wp, allow_pfaff),
    }
}

fn connection(p: &Params, z: &CFloat, wp: u32, allow_pfaff: bool) -> Result<Partial> {
    let s = p.excess(wp);
    let w = one_minus(z, wp);
    let (p1, p2) = p.connection(wp);
    let gc = gamma_c(&p.c, wp)?;
    let coef1 = Complex::with_val(wp, &gc * gamma_c(&s, wp)?)
        * rgamma_c(&Complex::with_val(wp, &p.c - &p.a), wp)?
        * rgamma_c(&Complex::with_val(wp, &p.c - &p.b), wp)?;
    let neg_s = Complex::with_val(wp, -&s);
    let coef2 = Complex::with_val(wp, &gc * gamma_c(&neg_s, wp)?)
        * rgamma_c(&p.a, wp)?
        * rgamma_c(&p.b, wp)?
        * w.clone().pow(&s);
    let mut value = Complex::with_val(wp, 0);
    let mut mag = f64::NEG_INFINITY;
    let mut tail = f64::NEG_INFINITY;
    let mut routes = Vec::new();
    for (coef, params) in [(coef1, p1), (coef2, p2)] {
        if coef.is_zero() {
            continue;
        }
        let inner = eval(&params, &w, wp, allow_pfaff, false)?;
        routes.push(inner.route.clone());
        let part = scaled(coef, inner, EvalPath::Connection1mz);
        value += &part.value;
        mag = mag.max(part.mag_log2).max(log2_abs(&part.value));
        tail = log2_add(tail, part.tail_log2);
    }
    Ok(Partial {
        value,
        mag_log2: mag,
        tail_log2: tail,
        path: EvalPath::Connection1mz,
        route: format!("connection-1mz({})", routes.join(", ")),
    })
}

/// Fraction of the distance to the nearest singularity covered by a
/// re-centred Taylor step.
const TAYLOR_RATIO: f64 = 0.5;
const TAYLOR_RADIUS: f64 = 0.8;

/// Expansion point for `z` on the radial segment at modulus 0.8, if a
/// Taylor step from it converges fast enough.
fn recentre_point(z: &CFloat) -> Option<CFloat> {
    let wp = z.prec().0;
    let z0 = Complex::with_val(wp, z * TAYLOR_RADIUS) / abs_f64(z);
    let step = abs_f64(&Complex::with_val(wp, z - &z0));
    let reach = abs_f64(&z0).min(abs_f64(&one_minus(&z0, wp)));
    (step <= TAYLOR_RATIO * reach).then_some(z0)
}

/// Continues `F` from `z0` to `z` with the Taylor series of the
/// hypergeometric equation `z(1−z)y'' + [c − (a+b+1)z]y' − ab y = 0`.
fn taylor(p: &Params, z: &CFloat, z0: &CFloat, wp: u32) -> Result<Partial> {
    let f0 = eval(p, z0, wp, true, true)?;
    let shifted = Params {
        a: Complex::with_val(wp, &p.a + 1u32),
        b: Complex::with_val(wp, &p.b + 1u32),
        c: Complex::with_val(wp, &p.c + 1u32),
    };
    let ab = Complex::with_val(wp, &p.a * &p.b);
    let d0 = eval(&shifted, z0, wp, true, true)?;
    let t = Complex::with_val(wp, z - z0);
    let t2 = Complex::with_val(wp, &t * &t);
    let pre = Complex::with_val(wp, &ab / &p.c);

    let p0 = Complex::with_val(wp, z0 * one_minus(z0, wp));
    let p1 = Complex::with_val(wp, 1 - Complex::with_val(wp, z0 * 2u32));
    let abc1 = Complex::with_val(wp, &p.a + &p.b) + 1u32;
    let q0 = Complex::with_val(wp, &p.c - Complex::with_val(wp, &abc1 * z0));
    let q1 = Complex::with_val(wp, -&abc1);

    // u_n = y_n t^n
    let mut u_prev = f0.value.clone();
    let mut u = Complex::with_val(wp, &d0.value * &pre) * &t;
    let mut sum = Complex::with_val(wp, &u_prev + &u);
    let mut mag = f0.mag_log2.max(d0.mag_log2 + log2_abs(&pre) + log2_abs(&t));
    let m = abs_f64(&t) / abs_f64(z0).min(abs_f64(&one_minus(z0, wp)));
    let mut quiet = 0;
    let mut tail = f64::NEG_INFINITY;
    for n in 0u32.. {
        if n as usize > MAX_TERMS {
            return Err(Error::NoConvergence {
                what: "Taylor continuation",
                iterations: MAX_TERMS,
                best: vec![sum.to_string()],
            });
        }
        let nf = Complex::with_val(wp, (n, 0));
        let n1 = Complex::with_val(wp, &nf + 1u32);
        // [P1 n + q0](n+1) u_{n+1} t
        let c1 = Complex::with_val(wp, Complex::with_val(wp, &p1 * &nf) + &q0) * &n1 * &u * &t;
        // [−n(n−1) + q1 n − ab] u_n t²
        let k = Complex::with_val(wp, &q1 * &nf) - Complex::with_val(wp, (u64::from(n) * u64::from(n.saturating_sub(1)), 0)) - &ab;
        let c0 = k * &u_prev * &t2;
        let den = Complex::with_val(wp, &p0 * ((u64::from(n) + 2) * (u64::from(n) + 1)));
        let next = -(c1 + c0) / den;
        sum += &next;
        let next_log2 = log2_abs(&next);
        mag = mag.max(next_log2);
        let bound = log2_add(log2_abs(&u), next_log2) - (1.0 - m).log2();
        if n >= 2 && bound < log2_abs(&sum).max(mag - f64::from(wp)) - f64::from(wp) - 4.0 {
            quiet += 1;
            if quiet >= 2 {
                tail = bound;
                break;
            }
        } else {
            quiet = 0;
        }
        u_prev = std::mem::replace(&mut u, next);
    }
    Ok(Partial {
        value: sum,
        mag_log2: mag,
        tail_log2: log2_add(tail, log2_add(f0.tail_log2, d0.tail_log2 + log2_abs(&pre) + log2_abs(&t))),
        path: EvalPath::TaylorRecentre,
        route: format!("taylor-recentre({}, {})", f0.route, d0.route),
    })
}

/// `F(a, b, c; z)` at `prec` bits.
///
/// Terminating series are summed as finite sums for any `z`. Otherwise the
/// evaluation route minimizing the effective argument modulus is chosen and
/// the working precision is raised until cancellation is covered.
pub fn hyp2f1_num(a: &CFloat, b: &CFloat, c: &CFloat, z: &CFloat, prec: u32) -> Result<EvalResult> {
    let mut guard = 64u32;
    for _ in 0..5 {
        let wp = prec + guard;
        let p = Params {
            a: cx(wp, a),
            b: cx(wp, b),
            c: cx(wp, c),
        };
        let part = eval(&p, &cx(wp, z), wp, true, true)?;
        let v_log2 = log2_abs(&part.value);
        let loss = if v_log2.is_finite() {
            (part.mag_log2 - v_log2).max(0.0)
        } else {
            0.0
        };
        if loss + 32.0 > f64::from(guard) && guard < 8 * prec {
            guard = (loss as u32) + 64;
            continue;
        }
        let rounding = part.mag_log2 - f64::from(wp) + 8.0;
        let est = log2_add(rounding, part.tail_log2).exp2();
        return Ok(EvalResult {
            value: Complex::with_val(prec, &part.value),
            est_error: est,
            path: part.path,
            route: part.route,
        });
    }
    Err(Error::NoConvergence {
        what: "precision escalation",
        iterations: 5,
        best: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;
    use crate::numeric::{rat_to_c, real_c, relative_residual};
    use rug::Float;

    const P: u32 = 192;

    fn q(n: i64, d: i64) -> CFloat {
        rat_to_c(&Rat::new(n, d), P + 64)
    }

    fn f(a: &CFloat, b: &CFloat, c: &CFloat, z: &CFloat) -> EvalResult {
        hyp2f1_num(a, b, c, z, P).unwrap()
    }

    #[test]
    fn at_zero() {
        let r = f(&q(3, 7), &q(-2, 9), &q(1, 4), &real_c(0.0, P));
        assert_eq!(r.value, Complex::with_val(P, 1));
    }

    #[test]
    fn strange_value_at_quarter() {
        let r = f(&q(3, 1), &q(2, 1), &q(3, 2), &q(-1, 4));
        assert!(relative_residual(&r.value, &q(2, 5)) < 1e-55);
        assert_eq!(r.path, EvalPath::DirectSeries);
    }

    #[test]
    fn log_identity() {
        // F(1,1,2;z) = −ln(1−z)/z
        let r = f(&q(1, 1), &q(1, 1), &q(2, 1), &q(1, 2));
        let want = Float::with_val(P, 2) * Float::with_val(P, 2).ln();
        let want = Complex::with_val(P, (want, 0));
        assert!(relative_residual(&r.value, &want) < 1e-55);
        assert!(r.value.real().to_string_radix(10, Some(17)).starts_with("1.386294361119890"));
    }

    #[test]
    fn pfaff_routes_match_closed_form() {
        // F(1,1,2;z) = −ln(1−z)/z
        for (re, im) in [(-3.0, 0.5), (-30.0, 0.0), (-0.9, -0.9)] {
            let z = Complex::with_val(P + 64, (re, im));
            let r = f(&q(1, 1), &q(1, 1), &q(2, 1), &z);
            let want = Complex::with_val(P + 64, 1 - &z).ln();
            let want = Complex::with_val(P, -want / &z);
            assert!(relative_residual(&r.value, &want) < 1e-50, "z = {re}+{im}i via {}", r.route);
        }
    }

    #[test]
    fn integral_excess_refuses_connection() {
        for (re, im) in [(1.1, 0.2), (-40.0, 0.0)] {
            let z = Complex::with_val(P + 64, (re, im));
            let err = hyp2f1_num(&q(1, 1), &q(1, 1), &q(2, 1), &z, P).unwrap_err();
            assert!(matches!(err, Error::DegenerateConnection(_)), "{err:?}");
        }
    }

    #[test]
    fn connection_routes_match_closed_form() {
        // F(1/2,1/2,3/2;z) = arcsin(√z)/√z
        for (re, im) in [(0.9, 0.2), (5.0, 2.0), (0.6, 0.75), (3.0, -0.01), (0.99, 0.0)] {
            let z = Complex::with_val(P + 64, (re, im));
            let r = f(&q(1, 2), &q(1, 2), &q(3, 2), &z);
            let s = Complex::with_val(P + 64, z.sqrt_ref());
            let want = Complex::with_val(P, Complex::with_val(P + 64, s.asin_ref()) / &s);
            assert!(relative_residual(&r.value, &want) < 1e-50, "z = {re}+{im}i via {}", r.route);
        }
    }

    #[test]
    fn recentred_near_sixth_roots_of_unity() {
        // F(1/2,1/2,3/2;z) = arcsin(√z)/√z
        for (re, im) in [(0.5, 0.866), (0.507, -0.8816), (0.49, 0.88)] {
            let z = Complex::with_val(P + 64, (re, im));
            let r = f(&q(1, 2), &q(1, 2), &q(3, 2), &z);
            assert_eq!(r.path, EvalPath::TaylorRecentre);
            let s = Complex::with_val(P + 64, z.sqrt_ref());
            let want = Complex::with_val(P, Complex::with_val(P + 64, s.asin_ref()) / &s);
            assert!(relative_residual(&r.value, &want) < 1e-50, "z = {re}+{im}i: {}", relative_residual(&r.value, &want));
        }
    }

    #[test]
    fn direct_and_pfaff_agree() {
        let (a, b, c) = (q(2, 7), q(-5, 3), q(4, 9));
        let z = Complex::with_val(P + 64, (0.3, -0.2));
        let direct = f(&a, &b, &c, &z);
        let w = pfaff_arg(&z, P + 64);
        let cb = Complex::with_val(P + 64, &c - &b);
        let inner = f(&a, &cb, &c, &w);
        let pre = one_minus(&z, P + 64).pow(Complex::with_val(P + 64, -&a));
        let via = Complex::with_val(P, pre * &inner.value);
        assert!(relative_residual(&direct.value, &via) < 1e-50);
    }

    #[test]
    fn terminating_anywhere() {
        // F(−2, b, c; z) is a quadratic; evaluate far outside the unit disc
        let (b, c) = (q(1, 3), q(5, 7));
        let z = Complex::with_val(P + 64, (7, -3));
        let r = f(&q(-2, 1), &b, &c, &z);
        let bc = Complex::with_val(P + 64, &b / &c);
        let t1 = Complex::with_val(P + 64, -2 * bc.clone() * &z);
        let b1 = Complex::with_val(P + 64, &b + 1u32);
        let c1 = Complex::with_val(P + 64, &c + 1u32);
        let t2 = Complex::with_val(P + 64, &bc * &b1) / &c1 * Complex::with_val(P + 64, &z * &z);
        let want = Complex::with_val(P, 1 + t1 + t2);
        assert!(relative_residual(&r.value, &want) < 1e-55);
    }

    #[test]
    fn branch_cut_rejected() {
        let err = hyp2f1_num(&q(1, 3), &q(1, 4), &q(1, 5), &q(3, 2), P).unwrap_err();
        assert!(matches!(err, Error::BranchCut(_)));
    }

    #[test]
    fn pole_in_lower_parameter() {
        let err = hyp2f1_num(&q(1, 3), &q(1, 4), &q(-2, 1), &q(1, 5), P).unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
    }

    #[test]
    fn connection_path_for_z_near_one() {
        let (a, b, c) = (q(1, 3), q(2, 5), q(7, 4));
        let z = q(19, 20);
        let r = f(&a, &b, &c, &z);
        assert_eq!(r.path, EvalPath::Connection1mz);
        // Gauss summation at z → 1 is the limit; compare with Euler instead
        let e = Complex::with_val(P + 64, 1 - &z).pow(Complex::with_val(P + 64, &c - &a) - &b);
        let g = f(&Complex::with_val(P + 64, &c - &a), &Complex::with_val(P + 64, &c - &b), &c, &z);
        let want = Complex::with_val(P, e * &g.value);
        assert!(relative_residual(&r.value, &want) < 1e-50);
    }
}

//! Arbitrary-precision complex numerics: gamma, Gauss ₂F₁ with
//! argument transformations, polynomial roots, and the verification
//! pipelines built on them.

mod gamma;
mod hyp2f1;
mod roots;
mod sweep;
mod verify;

use rug::float::Round;
use rug::ops::CompleteRound;
use rug::{Complex, Float};
use serde::{Serialize, Serializer};

use crate::exact::{Poly, Rat};

pub use gamma::{gamma_c, rgamma_c};
pub use hyp2f1::{hyp2f1_num, EvalPath, EvalResult};
pub use roots::{find_roots, Root, RootSet};
pub use sweep::{draw_params, draw_rat, sweep, SweepOptions, SweepReport, SweepSummary, SweepTrial};
pub use verify::{
    gosper_check, incomplete_beta_check, verify_theorem, BetaReport, GosperReport, IdentityCheck,
    Provenance, RootRecord, RootStatus, SkipReason, VerdictStatus, VerifyFlags, VerifyOptions,
    VerifyParams, VerifyReport, VerifyVerdict,
};

/// Complex number with real and imaginary parts of a given binary precision.
pub type CFloat = Complex;

pub const DEFAULT_PRECISION: u32 = 192;

pub fn rat_to_float(r: &Rat, prec: u32) -> Float {
    Float::with_val(prec, r.as_rational())
}

pub fn rat_to_c(r: &Rat, prec: u32) -> CFloat {
    Complex::with_val(prec, (rat_to_float(r, prec), 0))
}

pub fn real_c(v: f64, prec: u32) -> CFloat {
    Complex::with_val(prec, (v, 0))
}

pub fn abs_f(z: &CFloat) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

/// `|z|` as `f64`, saturating instead of overflowing.
pub fn abs_f64(z: &CFloat) -> f64 {
    abs_f(z).to_f64()
}

/// `log2 |z|`, or `-inf` for zero. Safe for magnitudes beyond `f64` range.
pub fn log2_abs(z: &CFloat) -> f64 {
    let a = abs_f(z);
    if a.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (m, e) = a.to_f64_exp();
    m.abs().log2() + e as f64
}

/// Horner evaluation of an exact polynomial at a complex point.
pub fn eval_poly_c(p: &Poly, z: &CFloat) -> CFloat {
    let prec = z.prec().0;
    let mut acc = Complex::new(prec);
    for c in p.coeffs().iter().rev() {
        acc *= z;
        acc += rat_to_float(c, prec);
    }
    acc
}

/// `|lhs − rhs| / (1 + |rhs|)`.
pub fn relative_residual(lhs: &CFloat, rhs: &CFloat) -> f64 {
    let prec = lhs.prec().0.max(rhs.prec().0);
    let diff = Complex::with_val(prec, lhs - rhs);
    let num = abs_f(&diff);
    let den = Float::with_val(prec, abs_f(rhs) + 1u32);
    (num / den).to_f64()
}

/// Rounds `z` to the nearest integer if it lies within `tol` of one.
pub(crate) fn near_integer(z: &CFloat, tol: f64) -> Option<i64> {
    if abs_f64(&Complex::with_val(53, z.imag())) > tol {
        return None;
    }
    let re = z.real();
    let n = re.to_integer_round(Round::Nearest)?.0;
    let diff = (re - &n).complete(re.prec()).abs().to_f64();
    if diff <= tol * 1f64.max(re.to_f64().abs()) {
        n.to_i64()
    } else {
        None
    }
}

/// Decimal rendering of a float with every significant digit of its
/// precision.
pub fn float_to_decimal(f: &Float) -> String {
    let digits = (f64::from(f.prec()) * std::f64::consts::LOG10_2).ceil() as usize + 1;
    f.to_string_radix(10, Some(digits))
}

/// JSON carrier for a complex value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CJson {
    pub re: String,
    pub im: String,
}

impl From<&CFloat> for CJson {
    fn from(z: &CFloat) -> Self {
        CJson {
            re: float_to_decimal(z.real()),
            im: float_to_decimal(z.imag()),
        }
    }
}

pub(crate) fn ser_c<S: Serializer>(z: &CFloat, s: S) -> std::result::Result<S::Ok, S::Error> {
    CJson::from(z).serialize(s)
}

/// Shortest round-tripping decimal form.
pub(crate) fn ser_f64<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{v:e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_integer_snaps() {
        let z = Complex::with_val(128, (-3, 0));
        assert_eq!(near_integer(&z, 1e-20), Some(-3));
        let z = Complex::with_val(128, (Float::with_val(128, -2.5), 0));
        assert_eq!(near_integer(&z, 1e-20), None);
        let z = Complex::with_val(128, (1, 1));
        assert_eq!(near_integer(&z, 1e-20), None);
    }

    #[test]
    fn poly_eval() {
        let p = Poly::from_ints(&[1, 4]);
        let z = rat_to_c(&Rat::new(-1, 4), 128);
        assert!(eval_poly_c(&p, &z).real().is_zero());
    }

    #[test]
    fn log2_abs_huge() {
        let z = Complex::with_val(64, (Float::with_val(64, Float::i_exp(1, 5000)), 0));
        assert!((log2_abs(&z) - 5000.0).abs() < 1e-9);
    }
}

use serde::Serialize;

use super::DiffOp;
use crate::error::{Error, Result};
use crate::exact::{poch, Poly, Rat, RatFunc};
use crate::hyp::{ContigOrder, HypParams};

/// `dividend = quotient · divisor + q ∂ + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionData {
    pub quotient: DiffOp,
    pub q: RatFunc,
    pub r: RatFunc,
}

impl ReductionData {
    pub fn remainder(&self) -> DiffOp {
        DiffOp::new(vec![self.r.clone(), self.q.clone()])
    }

    pub fn reconstruct(&self, divisor: &DiffOp) -> DiffOp {
        self.quotient.ore_mul(divisor).add(&self.remainder())
    }
}

/// Right division by a second-order operator: eliminates the leading term of
/// the running remainder until its order is at most one.
pub fn right_reduce(dividend: &DiffOp, divisor: &DiffOp) -> Result<ReductionData> {
    if divisor.order() != Some(2) {
        return Err(Error::Precondition(format!(
            "divisor must have order 2, got {:?}",
            divisor.order()
        )));
    }
    let lead_inv = divisor.coeff(2).recip()?;
    let mut rem = dividend.clone();
    let mut quotient = DiffOp::zero();
    while let Some(k) = rem.order().filter(|&k| k >= 2) {
        let t = DiffOp::term(&rem.coeff(k) * &lead_inv, k - 2);
        rem = rem.sub(&t.ore_mul(divisor));
        debug_assert!(rem.order().is_none_or(|o| o < k));
        quotient = quotient.add(&t);
    }
    let data = ReductionData {
        quotient,
        q: rem.coeff(1),
        r: rem.coeff(0),
    };
    if data.reconstruct(divisor) != *dividend {
        return Err(Error::Inconsistency("right division does not reconstruct the dividend".into()));
    }
    Ok(data)
}

/// `f = x^{x_exp} (1 − x)^{one_minus_x_exp} · core` with `core(0) core(1) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemainderShape {
    pub x_exp: i64,
    pub one_minus_x_exp: i64,
    /// Degree of `core`; `None` when the remainder coefficient is zero.
    pub degree: Option<usize>,
    pub core: Poly,
}

impl RemainderShape {
    /// Splits a rational function whose denominator has no factors other
    /// than `x` and `1 − x`.
    pub fn of(f: &RatFunc) -> Result<Self> {
        if f.is_zero() {
            return Ok(RemainderShape {
                x_exp: 0,
                one_minus_x_exp: 0,
                degree: None,
                core: Poly::zero(),
            });
        }
        let (ni, nj, ncore) = f.num().split_zero_one();
        let (di, dj, dcore) = f.den().split_zero_one();
        if dcore.degree() != Some(0) {
            return Err(Error::Inconsistency(format!(
                "denominator {} has factors other than x and 1 - x",
                f.den()
            )));
        }
        let core = ncore.scale(&dcore.coeff(0).recip()?);
        Ok(RemainderShape {
            x_exp: ni as i64 - di as i64,
            one_minus_x_exp: nj as i64 - dj as i64,
            degree: core.degree(),
            core,
        })
    }

    /// `x^{-x_shift} (1 − x)^{-omx_shift} f` as a polynomial, if it is one.
    fn strip(&self, x_shift: i64, omx_shift: i64) -> Option<Poly> {
        if self.core.is_zero() {
            return Some(Poly::zero());
        }
        let i = self.x_exp - x_shift;
        let j = self.one_minus_x_exp - omx_shift;
        if i < 0 || j < 0 {
            return None;
        }
        Some(&self.core.shift(i as usize) * &Poly::one_minus_x_pow(j as usize))
    }
}

/// The remainder pair rewritten as `q = x (1 − x)^{1−ℓ} q0` and
/// `r = (1 − x)^{1−ℓ} r0`, together with the exponents actually observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredRemainder {
    pub q_shape: RemainderShape,
    pub r_shape: RemainderShape,
    pub q0: Poly,
    pub r0: Poly,
}

impl FactoredRemainder {
    /// `(v0, v1, g)`.
    pub fn q_exponents(&self) -> (i64, i64, Option<usize>) {
        let s = &self.q_shape;
        (s.x_exp, s.one_minus_x_exp, s.degree)
    }

    /// `(w0, w1, h)`.
    pub fn r_exponents(&self) -> (i64, i64, Option<usize>) {
        let s = &self.r_shape;
        (s.x_exp, s.one_minus_x_exp, s.degree)
    }

    /// Whether the observed exponents are the generic
    /// `(1, 1−ℓ, ℓ−1)` and `(0, 1−ℓ, ℓ−1)`.
    pub fn is_generic_shape(&self, ell: ContigOrder) -> bool {
        let l = ell.get() as i64;
        let top = Some(ell.get() - 1);
        self.q_exponents() == (1, 1 - l, top) && self.r_exponents() == (0, 1 - l, top)
    }
}

pub fn factor_remainder(q: &RatFunc, r: &RatFunc, ell: ContigOrder) -> Result<FactoredRemainder> {
    let l = ell.get() as i64;
    let q_shape = RemainderShape::of(q)?;
    let r_shape = RemainderShape::of(r)?;
    let q0 = q_shape.strip(1, 1 - l).ok_or_else(|| {
        Error::Inconsistency(format!("q = {q} is not of the form x (1-x)^(1-{l}) q0"))
    })?;
    let r0 = r_shape.strip(0, 1 - l).ok_or_else(|| {
        Error::Inconsistency(format!("r = {r} is not of the form (1-x)^(1-{l}) r0"))
    })?;
    for (name, p) in [("q0", &q0), ("r0", &r0)] {
        if p.degree().is_some_and(|d| d >= ell.get()) {
            return Err(Error::Inconsistency(format!(
                "{name} = {p} has degree above ℓ - 1 = {}",
                l - 1
            )));
        }
    }
    Ok(FactoredRemainder { q_shape, r_shape, q0, r0 })
}

/// The non-degeneracy hypotheses under which the generic remainder shape is
/// expected, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityFlags {
    /// `a, b, c − a, c − b ∉ ℤ`
    pub a1: bool,
    /// `c, c − a − b, a − b ∉ ℤ`
    pub a2: bool,
    /// `(b, ℓ) − (b + 1 − c, ℓ) ≠ 0`
    pub e1: bool,
    /// `ℓ ≠ 1` or `(b+1, ℓ−1)/a − (c−a, ℓ−1)/(c−b−1) ≠ 0`
    pub e2_prime: bool,
    pub notes: Vec<String>,
}

impl GenericityFlags {
    pub fn all(&self) -> bool {
        self.a1 && self.a2 && self.e1 && self.e2_prime
    }
}

pub fn genericity_flags(p: &HypParams, ell: ContigOrder) -> GenericityFlags {
    let HypParams { a, b, c } = p;
    let one = Rat::one();
    let non_int = |v: Rat| !v.is_integer();
    let a1 = non_int(a.clone()) && non_int(b.clone()) && non_int(c - a) && non_int(c - b);
    let a2 = non_int(c.clone()) && non_int(c - a - b) && non_int(a - b);
    let e1 = !(poch(b, ell.get()) - poch(&(b + &one - c), ell.get())).is_zero();
    let mut notes = Vec::new();
    let e2_prime = if ell.get() != 1 {
        true
    } else {
        let denom = c - b - &one;
        if a.is_zero() || denom.is_zero() {
            notes.push(format!(
                "E2': division by zero ({} = 0)",
                if a.is_zero() { "a" } else { "c - b - 1" }
            ));
            false
        } else {
            let top = ell.get() - 1;
            !(poch(&(b + &one), top) / a - poch(&(c - a), top) / denom).is_zero()
        }
    };
    GenericityFlags { a1, a2, e1, e2_prime, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{build_h, build_l};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn ell(l: usize) -> ContigOrder {
        ContigOrder::new(l).unwrap()
    }

    fn reduce_b1(a: &Rat, c: &Rat, l: usize) -> ReductionData {
        let p = HypParams::new(a.clone(), Rat::one(), c.clone());
        right_reduce(&build_h(&Rat::one(), ell(l)), &build_l(&p)).unwrap()
    }

    #[test]
    fn order_one_needs_no_division() {
        let red = reduce_b1(&r(2, 3), &r(1, 5), 1);
        assert!(red.quotient.is_zero());
        assert_eq!(red.q, RatFunc::from_poly(Poly::x()));
        assert_eq!(red.r, RatFunc::one());
        let f = factor_remainder(&red.q, &red.r, ell(1)).unwrap();
        assert_eq!((f.q0.clone(), f.r0.clone()), (Poly::one(), Poly::one()));
    }

    #[test]
    fn order_two_by_hand() {
        let (a, c) = (r(3, 1), r(3, 2));
        let red = reduce_b1(&a, &c, 2);
        let omx = Poly::from_ints(&[1, -1]);
        let q = RatFunc::new(Poly::new(vec![Rat::zero(), r(5, 2), Rat::one()]), omx.clone()).unwrap();
        let rr = RatFunc::new(Poly::from_ints(&[2, 1]), omx).unwrap();
        assert_eq!(red.q, q);
        assert_eq!(red.r, rr);
        let f = factor_remainder(&red.q, &red.r, ell(2)).unwrap();
        assert_eq!(f.q_exponents(), (1, -1, Some(1)));
        assert_eq!(f.r_exponents(), (0, -1, Some(1)));
    }

    #[test]
    fn degenerate_a_equals_two() {
        let c = r(1, 3);
        let red = reduce_b1(&r(2, 1), &c, 2);
        let f = factor_remainder(&red.q, &red.r, ell(2)).unwrap();
        assert_eq!(f.q0, Poly::constant(r(4, 1) - c));
        assert_eq!(f.q_exponents().2, Some(0));
        assert!(!f.is_generic_shape(ell(2)));
    }

    #[test]
    fn foreign_denominator_is_rejected() {
        let bad = RatFunc::new(Poly::one(), Poly::from_ints(&[2, 1])).unwrap();
        assert!(matches!(
            factor_remainder(&bad, &RatFunc::one(), ell(1)),
            Err(Error::Inconsistency(_))
        ));
    }

    #[test]
    fn divisor_must_be_second_order() {
        let h = build_h(&Rat::one(), ell(2));
        assert!(right_reduce(&h, &DiffOp::contiguity(&Rat::one())).is_err());
    }

    #[test]
    fn flag_examples() {
        let f = genericity_flags(&HypParams::new(r(3, 1), Rat::one(), r(3, 2)), ell(1));
        assert!(!f.a1);
        let f = genericity_flags(&HypParams::new(r(1, 3), Rat::one(), r(1, 2)), ell(2));
        assert!(f.e1);
        assert!(f.e2_prime);
        // ℓ = 1 with c − b − 1 = 0
        let f = genericity_flags(&HypParams::new(r(1, 3), r(1, 2), r(3, 2)), ell(1));
        assert!(!f.e2_prime);
        assert_eq!(f.notes.len(), 1);
    }
}

//! Linear differential operators `Σ f_k(x) ∂^k` with rational-function
//! coefficients, composed in the Weyl algebra (`∂ f = f ∂ + f'`).

mod apply;
mod reduce;

use std::fmt;

use crate::exact::{Poly, Rat, RatFunc};
use crate::hyp::{ContigOrder, HypParams};

pub use apply::apply_to_genseries;
pub use reduce::{
    factor_remainder, genericity_flags, right_reduce, FactoredRemainder, GenericityFlags,
    ReductionData, RemainderShape,
};

/// `coeffs[k]` is the coefficient of `∂^k`; trailing zeros are trimmed and
/// the zero operator has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn one() -> Self {
        DiffOp::new(vec![RatFunc::one()])
    }

    /// `f(x) ∂^k`.
    pub fn term(f: RatFunc, k: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(); k + 1];
        coeffs[k] = f;
        DiffOp::new(coeffs)
    }

    /// `x ∂ + b`.
    pub fn contiguity(b: &Rat) -> Self {
        DiffOp::new(vec![
            RatFunc::constant(b.clone()),
            RatFunc::from_poly(Poly::x()),
        ])
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }

    /// Composition `self · rhs`.
    pub fn ore_mul(&self, rhs: &DiffOp) -> DiffOp {
        let (Some(na), Some(nb)) = (self.order(), rhs.order()) else {
            return DiffOp::zero();
        };
        let mut out = vec![RatFunc::zero(); na + nb + 1];
        for (j, b) in rhs.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            // derivs[k] = b^{(k)}
            let mut derivs = vec![b.clone()];
            for _ in 0..na {
                let next = derivs.last().unwrap().derivative();
                derivs.push(next);
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                // ∂^i b = Σ_k C(i, k) b^{(k)} ∂^{i−k}
                let mut binom = Rat::one();
                for (k, dk) in derivs.iter().enumerate().take(i + 1) {
                    if !dk.is_zero() {
                        let term = (a * dk).scale(&binom);
                        out[i - k + j] = &out[i - k + j] + &term;
                    }
                    binom = binom * Rat::from(i - k) / Rat::from(k + 1);
                }
            }
        }
        DiffOp::new(out)
    }
}

/// The hypergeometric operator
/// `∂² + (c − (a+b+1)x)/(x(1−x)) ∂ − ab/(x(1−x))`.
pub fn build_l(p: &HypParams) -> DiffOp {
    let one = Rat::one();
    let x_one_minus_x = Poly::from_ints(&[0, 1, -1]);
    let first = RatFunc::new(
        Poly::linear(p.c.clone(), -(&p.a + &p.b + &one)),
        x_one_minus_x.clone(),
    )
    .expect("nonzero denominator");
    let zeroth = RatFunc::new(Poly::constant(-(&p.a * &p.b)), x_one_minus_x)
        .expect("nonzero denominator");
    DiffOp::new(vec![zeroth, first, RatFunc::one()])
}

/// `(x∂ + b + ℓ − 1) ⋯ (x∂ + b + 1)(x∂ + b)`.
pub fn build_h(b: &Rat, ell: ContigOrder) -> DiffOp {
    (1..ell.get()).fold(DiffOp::contiguity(b), |acc, j| {
        DiffOp::contiguity(&(b + &Rat::from(j))).ore_mul(&acc)
    })
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})∂")?,
                _ => write!(f, "({c})∂^{k}")?,
            }
        }
        Ok(())
    }
}

//! Truncated power series with exact coefficients, and series carrying a
//! prefactor `x^μ (1 − x)^ν`.

use std::fmt;

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// A power series known exactly through `x^order`.
///
/// Arithmetic never reads past `order`; binary operations produce the
/// smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(vec![Rat::one()], order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncatedSeries::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Panics if `i` exceeds the truncation order.
    pub fn coeff(&self, i: usize) -> &Rat {
        assert!(i <= self.order(), "coefficient {i} beyond order {}", self.order());
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        TruncatedSeries::new(self.coeffs[..=order].to_vec(), order)
    }

    /// First index `>= from` carrying a nonzero coefficient, if any.
    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        (from..=self.order()).find(|&i| !self.coeffs[i].is_zero())
    }

    /// The polynomial `c_0 + … + c_k x^k`.
    pub fn partial_poly(&self, k: usize) -> Poly {
        Poly::new(self.coeffs[..=k.min(self.order())].to_vec())
    }

    /// Converts to a polynomial of degree below `bound`, failing if any
    /// coefficient of index `bound..=order` is nonzero.
    pub fn to_poly_below(&self, bound: usize) -> Result<Poly> {
        if let Some(i) = self.first_nonzero_from(bound) {
            return Err(Error::Inconsistency(format!(
                "series coefficient of x^{i} is {} (expected zero from x^{bound} on)",
                self.coeffs[i]
            )));
        }
        Ok(self.partial_poly(bound.saturating_sub(1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller input order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplication by a polynomial keeps the order.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&TruncatedSeries::from_poly(p, self.order()))
    }

    /// `x^k · f`, known through `order + k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// `f / x^k`; the first `k` coefficients must vanish and the order drops
    /// by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Precondition(format!(
                "cannot divide a series of order {} by x^{k}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::Precondition(format!(
                "x^{k} does not divide the series (coefficient of x^{i} is nonzero)"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `d/dx`; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from(i))
                .collect(),
        }
    }

    /// `x · d/dx`, order preserved.
    pub fn theta(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from(i))
                .collect(),
        }
    }

    /// Exact partial sum `Σ_{n ≤ order} c_n x^n`.
    pub fn eval_partial(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", Poly::new(self.coeffs.clone()), self.order() + 1)
    }
}

/// Coefficients of `(1 − x)^α` through `x^order`.
pub fn binomial_series(alpha: &Rat, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rat::one();
    for n in 0..=order {
        coeffs.push(c.clone());
        let n_r = Rat::from(n);
        c = c * (&n_r - alpha) / (n_r + Rat::one());
    }
    TruncatedSeries { coeffs }
}

/// `x^mu (1 − x)^nu · body(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeries {
    pub mu: Rat,
    pub nu: Rat,
    pub body: TruncatedSeries,
}

impl GenSeries {
    pub fn new(mu: Rat, nu: Rat, body: TruncatedSeries) -> Self {
        GenSeries { mu, nu, body }
    }

    pub fn plain(body: TruncatedSeries) -> Self {
        GenSeries::new(Rat::zero(), Rat::zero(), body)
    }

    pub fn order(&self) -> usize {
        self.body.order()
    }

    /// Canonical form. Leading zeros of the body move into `mu`; when `mu`
    /// is an integer it is driven to zero if the body allows it. `nu` is left
    /// alone.
    pub fn normalize(&self) -> GenSeries {
        let Some(z) = self.body.valuation() else {
            return GenSeries::new(Rat::zero(), Rat::zero(), self.body.clone());
        };
        if let Some(m) = self.mu.to_i64() {
            let total = m + z as i64;
            if total >= 0 {
                // target mu = 0
                let body = if m >= 0 {
                    self.body.mul_x_pow(m as usize)
                } else {
                    self.body.div_x_pow((-m) as usize).expect("leading zeros checked")
                };
                return GenSeries::new(Rat::zero(), self.nu.clone(), body);
            }
        }
        GenSeries::new(
            &self.mu + &Rat::from(z),
            self.nu.clone(),
            self.body.div_x_pow(z).expect("leading zeros checked"),
        )
    }

    /// Re-expresses the same function with `(1 − x)` exponent `nu`; the
    /// difference must be an integer.
    pub fn with_nu(&self, nu: &Rat) -> Result<GenSeries> {
        let diff = (&self.nu - nu)
            .to_i64()
            .ok_or_else(|| Error::Precondition(format!("(1-x) exponents {} and {nu} differ by a non-integer", self.nu)))?;
        let body = if diff >= 0 {
            self.body.mul_poly(&Poly::one_minus_x_pow(diff as usize))
        } else {
            self.body.mul(&binomial_series(&Rat::from(diff), self.order()))
        };
        Ok(GenSeries::new(self.mu.clone(), nu.clone(), body))
    }

    pub fn scale(&self, c: &Rat) -> GenSeries {
        GenSeries::new(self.mu.clone(), self.nu.clone(), self.body.scale(c))
    }

    pub fn mul(&self, rhs: &GenSeries) -> GenSeries {
        GenSeries::new(&self.mu + &rhs.mu, &self.nu + &rhs.nu, self.body.mul(&rhs.body))
    }

    /// Sum of two generalized series whose exponents differ by integers.
    pub fn add(&self, rhs: &GenSeries) -> Result<GenSeries> {
        let int_diff = |a: &Rat, b: &Rat| {
            (a - b).to_i64().ok_or_else(|| {
                Error::Precondition(format!("exponents {a} and {b} differ by a non-integer"))
            })
        };
        let dmu = int_diff(&self.mu, &rhs.mu)?;
        let dnu = int_diff(&self.nu, &rhs.nu)?;
        let mu = if dmu <= 0 { self.mu.clone() } else { rhs.mu.clone() };
        let nu = if dnu <= 0 { self.nu.clone() } else { rhs.nu.clone() };
        let lift = |g: &GenSeries, dm: i64, dn: i64| {
            let p = Poly::one_minus_x_pow(dn.max(0) as usize).shift(dm.max(0) as usize);
            g.body.mul_poly(&p)
        };
        let a = lift(self, dmu, dnu);
        let b = lift(rhs, -dmu, -dnu);
        Ok(GenSeries::new(mu, nu, a.add(&b)))
    }

    /// True when both sides describe the same function through the smaller
    /// of their truncation orders.
    pub fn agrees_with(&self, other: &GenSeries) -> Result<bool> {
        let other = other.with_nu(&self.nu)?;
        let a = self.normalize();
        let b = other.normalize();
        if a.body.is_zero() || b.body.is_zero() {
            return Ok(a.body.is_zero() && b.body.is_zero());
        }
        if a.mu != b.mu {
            return Ok(false);
        }
        let n = a.order().min(b.order());
        Ok(a.body.truncate(n) == b.body.truncate(n))
    }
}

impl fmt::Display for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({}) (1-x)^({}) [{}]", self.mu, self.nu, self.body)
    }
}

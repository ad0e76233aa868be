//! Dense univariate polynomials in `x` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::Rat;
use crate::error::{Error, Result};

/// Coefficients indexed by degree; the leading coefficient is nonzero unless
/// the polynomial is zero, in which case the vector is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    /// `a + b x`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    /// `(1 − x)^k`.
    pub fn one_minus_x_pow(k: usize) -> Self {
        let base = Poly::linear(Rat::one(), -Rat::one());
        (0..k).fold(Poly::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from(i))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero("polynomial division"))?;
        let lc_inv = d.leading().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); n - dd];
        for i in (dd..n).rev() {
            let factor = &rem[i] * &lc_inv;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[i - dd + j] -= &t;
            }
            quot[i - dd] = factor;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistency(format!(
                "{d} does not divide {self}"
            )));
        }
        Ok(q)
    }

    /// Largest `k` with `x^k | self`; `None` for zero.
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Splits off the maximal power of `(1 − x)`: returns `(k, rest)` with
    /// `self = (1 − x)^k · rest` and `rest(1) ≠ 0`.
    pub fn split_one_minus_x(&self) -> (usize, Poly) {
        if self.is_zero() {
            return (0, Poly::zero());
        }
        let factor = Poly::linear(Rat::one(), -Rat::one());
        let mut k = 0;
        let mut rest = self.clone();
        while rest.eval(&Rat::one()).is_zero() {
            rest = rest.div_exact(&factor).expect("x = 1 is a root");
            k += 1;
        }
        (k, rest)
    }

    /// `self = x^i (1 − x)^j · core` with `core(0) core(1) ≠ 0`; returns
    /// `(i, j, core)`. The zero polynomial gives `(0, 0, 0)`.
    pub fn split_zero_one(&self) -> (usize, usize, Poly) {
        let Some(i) = self.x_valuation() else {
            return (0, 0, Poly::zero());
        };
        let stripped = Poly::new(self.coeffs[i..].to_vec());
        let (j, core) = stripped.split_one_minus_x();
        (i, j, core)
    }

    /// Square-free decomposition: pairs `(f_i, i)` with `self = lc · ∏ f_i^i`,
    /// each `f_i` monic, square-free and pairwise coprime. Constant factors are
    /// omitted.
    pub fn square_free(&self) -> Vec<(Poly, usize)> {
        // Yun's algorithm
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).unwrap();
        let mut c = df.div_exact(&a).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            i += 1;
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Ascending powers, e.g. `7/2 + 3x - (1/2)x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.signum() == std::cmp::Ordering::Less;
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{var}")?;
            } else {
                write!(f, "({mag}){var}")?;
            }
        }
        Ok(())
    }
}

/// Serialized as the ascending coefficient list of `p/q` strings.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1) = (x + 1)(x - 1)
        let p = Poly::from_ints(&[-1, 0, 1]);
        let d = Poly::from_ints(&[-1, 1]);
        let (q, rem) = p.div_rem(&d).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
        let g = p.gcd(&Poly::from_ints(&[2, 2]));
        assert_eq!(g, Poly::from_ints(&[1, 1]));
        assert!(p.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![r(7, 2), r(3, 1)]);
        assert_eq!(p.to_string(), "7/2 + 3x");
        let p = Poly::new(vec![r(11, 3), r(-3, 2), r(1, 1)]);
        assert_eq!(p.to_string(), "11/3 - (3/2)x + x^2");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn square_free_of_repeated_root() {
        // (x - 1/3)^2 (x + 2)
        let a = Poly::linear(r(-1, 3), Rat::one());
        let b = Poly::linear(Rat::from(2), Rat::one());
        let p = &(&a * &a) * &b.scale(&Rat::from(5));
        let sf = p.square_free();
        assert_eq!(sf.len(), 2);
        assert!(sf.contains(&(b, 1)));
        assert!(sf.contains(&(a, 2)));
    }

    #[test]
    fn split_one_minus_x_extracts_power() {
        let p = &Poly::one_minus_x_pow(3) * &Poly::from_ints(&[2, 5]);
        let (k, rest) = p.split_one_minus_x();
        assert_eq!(k, 3);
        assert_eq!(rest, Poly::from_ints(&[2, 5]));
        assert_eq!(Poly::from_ints(&[0, 0, 3]).x_valuation(), Some(2));
    }
}

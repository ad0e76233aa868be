//! Exact rational scalars.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::{Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Rational);

impl Rat {
    pub fn zero() -> Self {
        Rat(Rational::new())
    }

    pub fn one() -> Self {
        Rat::from(1)
    }

    /// `num/den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(Rational::from((num, den)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Rat(r)
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_one(&self) -> bool {
        self.0 == 1
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    /// True for 0, −1, −2, …
    pub fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && self.0.cmp0() != Ordering::Greater
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn floor(&self) -> Rat {
        Rat(self.0.clone().floor())
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp0()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.clone().abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("rational reciprocal"));
        }
        Ok(Rat(self.0.clone().recip()))
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    pub fn pow(&self, exp: i32) -> Result<Rat> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut out = Rat::one();
        for _ in 0..exp.unsigned_abs() {
            out *= &base;
        }
        Ok(out)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

/// Rising factorial `a (a+1) ⋯ (a+n−1)`, equal to `1` for `n = 0`.
pub fn poch(a: &Rat, n: usize) -> Rat {
    let mut out = Rat::one();
    let mut term = a.clone();
    for _ in 0..n {
        out *= &term;
        term += &Rat::one();
    }
    out
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat(Rational::from(v))
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat(Rational::from(v))
    }
}

impl From<usize> for Rat {
    fn from(v: usize) -> Self {
        Rat(Rational::from(v))
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p`, `p/q` and `-p/q`; decimals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational of the form p/q: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: Integer = num.parse().map_err(|_| bad())?;
        let den: Integer = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => Integer::from(1),
        };
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rat(Rational::from((num, den))))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(Rational::from($trait::$method(&self.0, &rhs.0)))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(mut self, rhs: Rat) -> Rat {
                $assign_trait::$assign_method(&mut self.0, rhs.0);
                self
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(mut self, rhs: &Rat) -> Rat {
                $assign_trait::$assign_method(&mut self.0, &rhs.0);
                self
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(Rational::from($trait::$method(&self.0, &rhs.0)))
            }
        }
    };
}

rat_binop!(Add, add, AddAssign, add_assign);
rat_binop!(Sub, sub, SubAssign, sub_assign);
rat_binop!(Mul, mul, MulAssign, mul_assign);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// Panics on a zero divisor; use [`Rat::recip`] where zero is possible.
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(Rational::from(&self.0 / &rhs.0))
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        &self / rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(Rational::from(-&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn poch_examples() {
        assert_eq!(poch(&Rat::new(5, 2), 0), Rat::one());
        assert_eq!(poch(&Rat::one(), 3), Rat::from(6));
        assert_eq!(poch(&Rat::from(3), 4), Rat::from(360));
        assert_eq!(poch(&Rat::from(-2), 3), Rat::zero());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<Rat>().unwrap(), Rat::new(3, 2));
        assert_eq!("-6/4".parse::<Rat>().unwrap(), Rat::new(-3, 2));
        assert_eq!(" 7 ".parse::<Rat>().unwrap(), Rat::from(7));
        assert!("1.5".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = Rat::new(0, -5);
        assert!(z.is_zero());
        assert_eq!(z.denom().to_i64(), Some(1));
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn integer_membership() {
        assert!(Rat::from(-3).is_nonpositive_integer());
        assert!(Rat::zero().is_nonpositive_integer());
        assert!(!Rat::from(2).is_nonpositive_integer());
        assert!(!Rat::new(-1, 2).is_integer());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn poch_splits(a in small_rat(), m in 0usize..=20, n in 0usize..=20) {
            let lhs = poch(&a, m + n);
            let rhs = poch(&a, m) * poch(&(&a + &Rat::from(m)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_roundtrip(a in small_rat()) {
            prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
        }
    }
}

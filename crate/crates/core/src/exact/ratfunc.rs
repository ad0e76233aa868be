//! Rational functions in `x` over the rationals, kept in normal form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function denominator"));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading().unwrap().recip().unwrap();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.recip()?)
    }

    /// Quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(num, &self.den * &self.den)
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero("rational function evaluation"));
        }
        Ok(self.num.eval(x) / d)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn one_minus_x() -> Poly {
        Poly::one_minus_x_pow(1)
    }

    #[test]
    fn common_denominator_sum() {
        let f = RatFunc::new(Poly::x(), one_minus_x()).unwrap();
        let g = RatFunc::new(Poly::monomial(Rat::one(), 2), one_minus_x()).unwrap();
        let want = RatFunc::new(Poly::from_ints(&[0, 1, 1]), one_minus_x()).unwrap();
        assert_eq!(&f + &g, want);
        // den is monic: x - 1
        assert_eq!(want.den(), &Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn derivative_of_square() {
        let f = RatFunc::from_poly(Poly::monomial(Rat::one(), 2));
        assert_eq!(f.derivative(), RatFunc::from_poly(Poly::from_ints(&[0, 2])));
        // d/dx 1/x = -1/x^2
        let g = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        let want = RatFunc::new(Poly::from_ints(&[-1]), Poly::monomial(Rat::one(), 2)).unwrap();
        assert_eq!(g.derivative(), want);
    }

    #[test]
    fn gcd_cancellation() {
        let f = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(Poly::from_ints(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
        assert!(RatFunc::zero().recip().is_err());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..4)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| Rat::new(n, d)).collect()))
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_poly(), small_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn add_then_sub_is_identity(f in small_ratfunc(), g in small_ratfunc()) {
            prop_assert_eq!(&(&f + &g) - &g, f);
        }

        #[test]
        fn normalization_idempotent(f in small_ratfunc()) {
            let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(again, f);
        }

        #[test]
        fn product_rule(f in small_ratfunc(), g in small_ratfunc()) {
            let lhs = (&f * &g).derivative();
            let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

//! Gauss hypergeometric series with exact rational coefficients, and the
//! reduction polynomials `q0`, `r0` computed from series identities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial_series, poch, Poly, Rat, TruncatedSeries};

/// Upper parameters `a`, `b` and lower parameter `c` of `F(a, b, c; x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HypParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HypParams {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        HypParams { a, b, c }
    }

    /// Rejects integral `c`, which the reduction identities exclude.
    pub fn require_nonintegral_c(&self) -> Result<()> {
        if self.c.is_integer() {
            return Err(Error::Precondition(format!("c = {} must not be an integer", self.c)));
        }
        Ok(())
    }
}

/// The number `ℓ ≥ 1` of composed contiguity operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ContigOrder(usize);

impl ContigOrder {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Precondition("contiguity order must be at least 1".into()));
        }
        Ok(ContigOrder(ell))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn as_rat(self) -> Rat {
        Rat::from(self.0)
    }

    /// Truncation order used when none is given.
    pub fn default_series_order(self) -> usize {
        self.0 + 32
    }
}

/// The pair of reduction polynomials, each of degree at most `ℓ − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QRPair {
    pub q0: Poly,
    pub r0: Poly,
}

/// `F(a, b, c; x)` through `x^order`.
///
/// Coefficients satisfy `t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1))`. A zero
/// upper factor terminates the series before a vanishing lower factor is
/// consulted.
pub fn hyp_series(p: &HypParams, order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut t = Rat::one();
    for n in 0..=order {
        coeffs.push(t.clone());
        if n == order || t.is_zero() {
            continue;
        }
        let nr = Rat::from(n);
        let upper = (&p.a + &nr) * (&p.b + &nr);
        if upper.is_zero() {
            t = Rat::zero();
            continue;
        }
        let lower = &p.c + &nr;
        if lower.is_zero() {
            return Err(Error::Parameter(format!(
                "F({}, {}, {}; x): lower parameter reaches a pole at term {}",
                p.a,
                p.b,
                p.c,
                n + 1
            )));
        }
        t = t * upper / (lower * (nr + Rat::one()));
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

fn f(a: &Rat, b: &Rat, c: &Rat, order: usize) -> Result<TruncatedSeries> {
    hyp_series(&HypParams::new(a.clone(), b.clone(), c.clone()), order)
}

/// The terminating series `F(a, −m, c; x)` as an exact polynomial, where
/// `b = −m` must be a nonpositive integer.
pub fn terminating_poly(p: &HypParams) -> Result<Poly> {
    let m = p
        .b
        .to_i64()
        .filter(|&m| m <= 0)
        .ok_or_else(|| Error::Precondition(format!("b = {} is not a nonpositive integer", p.b)))?;
    let degree = (-m) as usize;
    let s = hyp_series(p, degree)?;
    Ok(s.partial_poly(degree))
}

/// `F(1 − a, −ℓ, 2 − c; x)`, whose roots carry the strange evaluations.
pub fn theorem_poly(a: &Rat, c: &Rat, ell: ContigOrder) -> Result<Poly> {
    let one = Rat::one();
    let two = Rat::from(2);
    terminating_poly(&HypParams::new(&one - a, -ell.as_rat(), &two - c))
}

fn check_order(ell: ContigOrder, order: usize) -> Result<()> {
    if order < ell.get() + 16 {
        return Err(Error::Precondition(format!(
            "series order {order} is below ℓ + 16 = {}",
            ell.get() + 16
        )));
    }
    Ok(())
}

/// The two series whose sums are `q0` and `r0` for `b = 1`, in the form
/// with the explicit `(1 − x)^{c−a−1}` factor.
pub fn qr_series_b1(
    a: &Rat,
    c: &Rat,
    ell: ContigOrder,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    HypParams::new(a.clone(), Rat::one(), c.clone()).require_nonintegral_c()?;
    let one = Rat::one();
    let two = Rat::from(2);
    let l = ell.as_rat();
    let one_minus_c = &one - c;
    let fact = poch(&one, ell.get());
    let p2c = poch(&(&two - c), ell.get());

    let f_cont = f(&(c - a), &(c - &one - &l), c, order)?;
    let f_term = f(&(&one - a), &-&l, &(&two - c), order)?;

    let q_first = binomial_series(&(c - a - &one), order)
        .mul(&f_cont)
        .scale(&(-&fact / &one_minus_c));
    let q_second = f(a, &one, c, order)?
        .mul(&f_term)
        .scale(&(&p2c / &one_minus_c));
    let q = q_first.add(&q_second);

    let r_first = f_cont
        .mul(&f(&(a + &one - c), &(&two - c), &one_minus_c, order)?)
        .scale(&fact);
    let r_coef = a * &p2c / (c * &one_minus_c);
    let r_second = f(&(a + &one), &two, &(c + &one), order)?
        .mul(&f_term)
        .mul_x_pow(1)
        .truncate(order)
        .scale(&r_coef);
    let r = r_first.sub(&r_second);
    Ok((q, r))
}

/// `q0`, `r0` for `b = 1` from their series representations. Every
/// coefficient from `x^ℓ` through `x^order` is required to vanish.
pub fn q0_r0_by_series(a: &Rat, c: &Rat, ell: ContigOrder, order: usize) -> Result<QRPair> {
    check_order(ell, order)?;
    let (q, r) = qr_series_b1(a, c, ell, order)?;
    Ok(QRPair {
        q0: q.to_poly_below(ell.get())?,
        r0: r.to_poly_below(ell.get())?,
    })
}

/// The series for `q0`, `r0` at general `b`, as products of two Gauss series.
pub fn qr_series_general(
    p: &HypParams,
    ell: ContigOrder,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    p.require_nonintegral_c()?;
    let HypParams { a, b, c } = p;
    let one = Rat::one();
    let two = Rat::from(2);
    let l = ell.as_rat();
    let one_minus_c = &one - c;
    let pb = poch(b, ell.get());
    let pbc = poch(&(b + &one - c), ell.get());

    let f_cont = f(&(c - a), &(c - b - &l), c, order)?;
    let f_term = f(&(&one - a), &(&one - b - &l), &(&two - c), order)?;

    let q_first = f_cont
        .mul(&f(&(a + &one - c), &(b + &one - c), &(&two - c), order)?)
        .scale(&(-&pb / &one_minus_c));
    let q_second = f(a, b, c, order)?
        .mul(&f_term)
        .scale(&(&pbc / &one_minus_c));
    let q = q_first.add(&q_second);

    let r_first = f_cont
        .mul(&f(&(a + &one - c), &(b + &one - c), &one_minus_c, order)?)
        .scale(&pb);
    let r_coef = a * b * &pbc / (c * &one_minus_c);
    let r_second = f(&(a + &one), &(b + &one), &(c + &one), order)?
        .mul(&f_term)
        .mul_x_pow(1)
        .truncate(order)
        .scale(&r_coef);
    let r = r_first.sub(&r_second);
    Ok((q, r))
}

/// `q0`, `r0` for arbitrary rational `b` (with `c ∉ ℤ`).
pub fn q0_r0_general_b(p: &HypParams, ell: ContigOrder, order: usize) -> Result<QRPair> {
    check_order(ell, order)?;
    let (q, r) = qr_series_general(p, ell, order)?;
    Ok(QRPair {
        q0: q.to_poly_below(ell.get())?,
        r0: r.to_poly_below(ell.get())?,
    })
}

/// `q0` for `b = 1` from the expansion in `1/x`:
/// `(2−a, ℓ−1) (−x)^{ℓ−1}` times the partial sum through `x^{−(ℓ−1)}` of
/// `F(2−c, 1, 2−a; 1/x) F(c−1−ℓ, −ℓ, a−ℓ; 1/x)`. Requires `a ∉ ℤ`.
pub fn q0_by_reversal(a: &Rat, c: &Rat, ell: ContigOrder) -> Result<Poly> {
    if a.is_integer() {
        return Err(Error::Precondition(format!("a = {a} is an integer")));
    }
    HypParams::new(a.clone(), Rat::one(), c.clone()).require_nonintegral_c()?;
    let one = Rat::one();
    let two = Rat::from(2);
    let l = ell.as_rat();
    let top = ell.get() - 1;
    let s = f(&(&two - c), &one, &(&two - a), top)?.mul(&f(
        &(c - &one - &l),
        &-&l,
        &(a - &l),
        top,
    )?);
    let mut scale = poch(&(&two - a), top);
    if top % 2 == 1 {
        scale = -scale;
    }
    Ok(Poly::new((0..=top).map(|j| s.coeff(top - j) * &scale).collect()))
}

/// `(1 − x)^{c−a−b} F(c−a, c−b, c; x)`, to be compared with `F(a, b, c; x)`.
pub fn euler_transform_series(p: &HypParams, order: usize) -> Result<TruncatedSeries> {
    let HypParams { a, b, c } = p;
    Ok(binomial_series(&(c - a - b), order).mul(&f(&(c - a), &(c - b), c, order)?))
}

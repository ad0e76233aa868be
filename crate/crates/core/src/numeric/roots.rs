//! Complex roots of exact rational polynomials.
//!
//! Multiplicities come from an exact square-free decomposition, so the
//! floating-point iteration only ever sees simple roots. Linear factors are
//! solved exactly; the rest go through Aberth–Ehrlich iteration.

use rug::float::Constant;
use rug::{Complex, Float, Integer, Rational};

use super::{abs_f64, eval_poly_c, rat_to_c, rat_to_float, CFloat};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat};

const MAX_ITERATIONS: usize = 1000;

#[derive(Clone, Debug)]
pub struct Root {
    pub value: CFloat,
    pub multiplicity: usize,
    /// Set when the root is rational and was found exactly.
    pub exact: Option<Rat>,
    /// `|P(value)|` evaluated at working precision.
    pub residual: f64,
}

impl Root {
    /// Real and not below 1 within rounding, i.e. on `[1, ∞)`.
    pub fn on_cut(&self) -> bool {
        match &self.exact {
            Some(r) => *r >= Rat::one(),
            None => self.value.imag().is_zero() && *self.value.real() >= 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Distinct roots ordered by real part, then imaginary part.
    pub roots: Vec<Root>,
    pub source_poly: Poly,
    /// Every root satisfies `|P(root)| ≤ residual_bound`.
    pub residual_bound: f64,
}

impl RootSet {
    /// Roots counted with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

fn poly_c(p: &Poly, wp: u32) -> Vec<CFloat> {
    p.coeffs().iter().map(|c| rat_to_c(c, wp)).collect()
}

/// `(p(z), p'(z))` by Horner.
fn eval_with_derivative(coeffs: &[CFloat], z: &CFloat) -> (CFloat, CFloat) {
    let wp = z.prec().0;
    let mut p = Complex::new(wp);
    let mut dp = Complex::new(wp);
    for c in coeffs.iter().rev() {
        dp *= z;
        dp += &p;
        p *= z;
        p += c;
    }
    (p, dp)
}

fn initial_guesses(coeffs: &[CFloat], wp: u32) -> Vec<CFloat> {
    let n = coeffs.len() - 1;
    let lead = abs_f64(&coeffs[n]);
    // Fujiwara-type radius
    let radius = (0..n)
        .map(|i| (abs_f64(&coeffs[i]) / lead).powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let two_pi = Float::with_val(wp, Constant::Pi) * 2u32;
    (0..n)
        .map(|k| {
            let angle = Float::with_val(wp, &two_pi * k as u32) / n as u32 + 0.4f64;
            let (s, c) = angle.sin_cos(Float::new(wp));
            Complex::with_val(wp, (c * radius, s * radius))
        })
        .collect()
}

fn aberth(p: &Poly, prec: u32) -> Result<Vec<CFloat>> {
    let wp = prec + 32;
    let coeffs = poly_c(p, wp);
    let mut z = initial_guesses(&coeffs, wp);
    let n = z.len();
    let tol = 2f64.powi(-(prec as i32) - 8);
    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0f64;
        for k in 0..n {
            let (pv, dp) = eval_with_derivative(&coeffs, &z[k]);
            if pv.is_zero() {
                continue;
            }
            let w = Complex::with_val(wp, &pv / &dp);
            let mut repulsion = Complex::new(wp);
            for j in (0..n).filter(|&j| j != k) {
                let d = Complex::with_val(wp, &z[k] - &z[j]);
                repulsion += d.recip();
            }
            let den = Complex::with_val(wp, 1 - Complex::with_val(wp, &w * &repulsion));
            let corr = Complex::with_val(wp, &w / &den);
            let scale = abs_f64(&z[k]).max(1.0);
            worst = worst.max(abs_f64(&corr) / scale);
            z[k] -= corr;
        }
        if worst <= tol {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence {
        what: "Aberth iteration",
        iterations: MAX_ITERATIONS,
        best: z.iter().map(|v| v.to_string()).collect(),
    })
}

/// Restores exact conjugate symmetry for roots of a real polynomial.
fn symmetrize(mut z: Vec<CFloat>, prec: u32) -> Result<Vec<CFloat>> {
    let tol = 2f64.powi(-(prec as i32) / 3);
    let mut real = Vec::new();
    let mut upper = Vec::new();
    let mut lower = 0;
    for v in z.drain(..) {
        let im = v.imag().to_f64();
        if im.abs() <= tol * abs_f64(&v).max(1.0) {
            let re = v.real().clone();
            real.push(Complex::with_val(v.prec(), (re, 0)));
        } else if im > 0.0 {
            upper.push(v);
        } else {
            lower += 1;
        }
    }
    if upper.len() != lower {
        return Err(Error::Inconsistency(format!(
            "{} roots above the real axis but {lower} below",
            upper.len()
        )));
    }
    let mut out = real;
    for v in upper {
        out.push(Complex::with_val(v.prec(), v.conj_ref()));
        out.push(v);
    }
    Ok(out)
}

/// Continued-fraction convergents of a real root, with denominators up to
/// `2^64`, that lie within `tol` of `x` and are exact roots of `factor`.
fn recognize_rational(factor: &Poly, x: &Float, tol: f64) -> Option<Rat> {
    let mut rest = x.to_rational()?;
    let limit = Integer::from(1) << 64;
    let (mut h0, mut h1) = (Integer::from(0), Integer::from(1));
    let (mut k0, mut k1) = (Integer::from(1), Integer::from(0));
    loop {
        let a = rest.clone().floor().into_numer_denom().0;
        let h = Integer::from(&a * &h1) + &h0;
        let k = Integer::from(&a * &k1) + &k0;
        if k > limit {
            return None;
        }
        let candidate = Rat::from_rational(Rational::from((h.clone(), k.clone())));
        let close = (rat_to_float(&candidate, x.prec()) - x).abs().to_f64() <= tol;
        if close && factor.eval(&candidate).is_zero() {
            return Some(candidate);
        }
        let frac = rest - Rational::from(a);
        if frac == 0 {
            return None;
        }
        rest = frac.recip();
        (h0, h1) = (h1, h);
        (k0, k1) = (k1, k);
    }
}

fn newton_polish(coeffs: &[CFloat], z: &mut CFloat) {
    for _ in 0..2 {
        let (p, dp) = eval_with_derivative(coeffs, z);
        if p.is_zero() || dp.is_zero() {
            return;
        }
        *z -= Complex::with_val(z.prec().0, &p / &dp);
    }
}

/// All distinct complex roots of `p` at `prec` bits, with multiplicities.
pub fn find_roots(p: &Poly, prec: u32) -> Result<RootSet> {
    if p.degree().is_none_or(|d| d == 0) {
        return Err(Error::Precondition(format!("{p} has no roots")));
    }
    let wp = prec + 32;
    let mut roots = Vec::new();
    for (factor, multiplicity) in p.square_free() {
        match factor.degree() {
            Some(0) | None => {}
            Some(1) => {
                let exact = -(factor.coeff(0) / factor.coeff(1));
                roots.push(Root {
                    value: rat_to_c(&exact, wp),
                    multiplicity,
                    exact: Some(exact),
                    residual: 0.0,
                });
            }
            Some(_) => {
                let coeffs = poly_c(&factor, wp);
                let found = symmetrize(aberth(&factor, prec)?, prec)?;
                for mut v in found {
                    newton_polish(&coeffs, &mut v);
                    let mut exact = None;
                    if v.imag().to_f64().abs() <= 2f64.powi(-(prec as i32) / 3) {
                        let tol = 2f64.powi(-(prec as i32) / 2) * abs_f64(&v).max(1.0);
                        exact = recognize_rational(&factor, v.real(), tol);
                        v = match &exact {
                            Some(r) => rat_to_c(r, wp),
                            None => {
                                let re = v.real().clone();
                                Complex::with_val(wp, (re, 0))
                            }
                        };
                    }
                    roots.push(Root {
                        value: v,
                        multiplicity,
                        exact,
                        residual: 0.0,
                    });
                }
            }
        }
    }
    let mut residual_bound = 0f64;
    for root in &mut roots {
        root.residual = abs_f64(&eval_poly_c(p, &root.value));
        let modulus = abs_f64(&root.value);
        let scale: f64 = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| rat_to_float(c, 53).to_f64().abs() * modulus.powi(i as i32))
            .sum();
        residual_bound = residual_bound.max(scale * 2f64.powi(-(prec as i32 - 16)));
    }
    for root in &roots {
        if root.residual > residual_bound {
            return Err(Error::NoConvergence {
                what: "root residual",
                iterations: MAX_ITERATIONS,
                best: vec![root.value.to_string()],
            });
        }
    }
    roots.sort_by(|x, y| {
        x.value
            .real()
            .total_cmp(y.value.real())
            .then(x.value.imag().total_cmp(y.value.imag()))
    });
    let out = RootSet {
        roots,
        source_poly: p.clone(),
        residual_bound,
    };
    debug_assert_eq!(Some(out.count()), p.degree());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P: u32 = 192;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn linear() {
        let s = find_roots(&Poly::from_ints(&[1, 4]), P).unwrap();
        assert_eq!(s.roots.len(), 1);
        assert_eq!(s.roots[0].exact, Some(r(-1, 4)));
        assert_eq!(s.roots[0].value.real().to_f64(), -0.25);
    }

    #[test]
    fn conjugate_pair() {
        let s = find_roots(&Poly::from_ints(&[1, 0, 1]), P).unwrap();
        assert_eq!(s.roots.len(), 2);
        let (lo, hi) = (&s.roots[0].value, &s.roots[1].value);
        assert_eq!(*lo, Complex::with_val(lo.prec(), hi.conj_ref()));
        assert!(abs_f64(&Complex::with_val(P, hi - Complex::with_val(P, (0, 1)))) < 1e-55);
    }

    #[test]
    fn double_root() {
        let p = Poly::new(vec![r(1, 9), r(-2, 3), Rat::one()]);
        let s = find_roots(&p, P).unwrap();
        assert_eq!(s.roots.len(), 1);
        assert_eq!(s.roots[0].multiplicity, 2);
        assert_eq!(s.roots[0].exact, Some(r(1, 3)));
    }

    #[test]
    fn mixed_multiplicities() {
        // (x² − 2)² (x − 5) (x² + x + 1)
        let a = Poly::from_ints(&[-2, 0, 1]);
        let p = &(&(&a * &a) * &Poly::from_ints(&[-5, 1])) * &Poly::from_ints(&[1, 1, 1]);
        let s = find_roots(&p, P).unwrap();
        assert_eq!(s.count(), 7);
        let mults: Vec<_> = s.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![2, 1, 1, 2, 1]);
        let sqrt2 = Float::with_val(P, 2).sqrt();
        assert!((Float::with_val(P, s.roots[3].value.real() - &sqrt2)).abs() < 1e-55);
        assert!(s.roots[4].on_cut());
    }

    #[test]
    fn rational_roots_inside_irreducible_looking_factors() {
        // (x − 1)(x + 2/7)(x² − 3), square-free so solved numerically
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::new(vec![r(2, 7), Rat::one()])) * &Poly::from_ints(&[-3, 0, 1]);
        let s = find_roots(&p, P).unwrap();
        let exact: Vec<_> = s.roots.iter().filter_map(|r| r.exact.clone()).collect();
        assert_eq!(exact, vec![r(-2, 7), Rat::one()]);
        assert!(s.roots.iter().any(|r| r.exact == Some(Rat::one()) && r.on_cut()));
    }

    #[test]
    fn constant_rejected() {
        assert!(find_roots(&Poly::one(), P).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn residuals_within_bound(coeffs in proptest::collection::vec((-20i64..=20, 1i64..=20), 2..8)) {
            let p = Poly::new(coeffs.iter().map(|&(n, d)| r(n, d)).collect());
            prop_assume!(p.degree().is_some_and(|d| d >= 1));
            let s = find_roots(&p, P).unwrap();
            prop_assert_eq!(Some(s.count()), p.degree());
            for root in &s.roots {
                prop_assert!(root.residual <= s.residual_bound);
            }
        }
    }
}

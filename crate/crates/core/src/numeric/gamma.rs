use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::{near_integer, CFloat};
use crate::error::{Error, Result};

fn pole_tolerance(prec: u32) -> f64 {
    2f64.powi(-(prec as i32) / 2)
}

/// `Γ(w + 1)` by Spouge's approximation, for `Re w ≥ −1/2`.
fn spouge(w: &CFloat, prec: u32) -> CFloat {
    // relative error ~ (2π)^{-(A + 1/2)}
    let a = (f64::from(prec) * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI).ln()).ceil() as u32 + 2;
    let wp = prec + 2 * a + 32;
    let w = Complex::with_val(wp, w);
    let a_f = Float::with_val(wp, a);
    let two_pi = Float::with_val(wp, Constant::Pi) * 2u32;
    let mut sum = Complex::with_val(wp, (two_pi.sqrt(), 0));
    let mut fact = Float::with_val(wp, 1u32); // (k−1)!
    for k in 1..a {
        if k > 1 {
            fact *= k - 1;
        }
        let base = Float::with_val(wp, &a_f - k);
        let mut ck = Float::with_val(wp, base.clone().pow(Float::with_val(wp, k) - 0.5f64));
        ck *= Float::with_val(wp, base).exp();
        ck /= &fact;
        if k % 2 == 0 {
            ck = -ck;
        }
        let den = Complex::with_val(wp, &w + k);
        sum += Complex::with_val(wp, ck / den);
    }
    let shifted = Complex::with_val(wp, &w + &a_f);
    let exponent = Complex::with_val(wp, &w + 0.5f64);
    let power = Complex::with_val(wp, shifted.clone().pow(&exponent));
    let damp = Complex::with_val(wp, -shifted).exp();
    Complex::with_val(prec, power * damp * sum)
}

/// Complex gamma function at `prec` bits, using the reflection formula for
/// `Re z < 1/2`.
pub fn gamma_c(z: &CFloat, prec: u32) -> Result<CFloat> {
    if let Some(n) = near_integer(z, pole_tolerance(prec)) {
        if n <= 0 {
            return Err(Error::Pole(n.to_string()));
        }
    }
    let wp = prec + 16;
    let z = Complex::with_val(wp, z);
    if *z.real() < 0.5f64 {
        // Γ(z) = π / (sin(πz) Γ(1 − z))
        let pi = Float::with_val(wp, Constant::Pi);
        let s = Complex::with_val(wp, &z * &pi).sin();
        let one_minus = Complex::with_val(wp, 1 - &z);
        let g = spouge(&Complex::with_val(wp, &one_minus - 1u32), wp);
        return Ok(Complex::with_val(prec, pi / (s * g)));
    }
    let w = Complex::with_val(wp, &z - 1u32);
    Ok(Complex::with_val(prec, spouge(&w, wp)))
}

/// `1/Γ(z)`, exactly zero at the poles.
pub fn rgamma_c(z: &CFloat, prec: u32) -> Result<CFloat> {
    if let Some(n) = near_integer(z, pole_tolerance(prec)) {
        if n <= 0 {
            return Ok(Complex::new(prec));
        }
    }
    let g = gamma_c(z, prec)?;
    Ok(Complex::with_val(prec, g.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{abs_f64, real_c};

    const P: u32 = 192;

    fn rel(a: &CFloat, b: &CFloat) -> f64 {
        abs_f64(&Complex::with_val(P, a - b)) / abs_f64(b)
    }

    #[test]
    fn small_integers() {
        let one = gamma_c(&real_c(1.0, P), P).unwrap();
        assert!(rel(&one, &real_c(1.0, P)) < 1e-55);
        let g5 = gamma_c(&real_c(5.0, P), P).unwrap();
        assert!(rel(&g5, &real_c(24.0, P)) < 1e-55);
    }

    #[test]
    fn half_is_sqrt_pi() {
        let g = gamma_c(&real_c(0.5, P), P).unwrap();
        let sqrt_pi = Float::with_val(P, Constant::Pi).sqrt();
        let want = Complex::with_val(P, (sqrt_pi, 0));
        assert!(rel(&g, &want) < 1e-55);
        let s = g.real().to_string_radix(10, Some(17));
        assert!(s.starts_with("1.772453850905516"), "{s}");
    }

    #[test]
    fn agrees_with_mpfr_on_reals() {
        for &x in &[0.1, 0.75, 3.3, 17.25, -0.5, -2.7, -11.2] {
            let g = gamma_c(&real_c(x, P), P).unwrap();
            let want = Float::with_val(P, x).gamma();
            let want = Complex::with_val(P, (want, 0));
            assert!(rel(&g, &want) < 1e-52, "x = {x}");
        }
    }

    #[test]
    fn recurrence_in_the_plane() {
        for &(re, im) in &[(0.3, 2.0), (4.5, -7.25), (-3.2, 0.9), (12.0, 30.0)] {
            let z = Complex::with_val(P, (re, im));
            let g = gamma_c(&z, P).unwrap();
            let g1 = gamma_c(&Complex::with_val(P, &z + 1u32), P).unwrap();
            let zg = Complex::with_val(P, &z * &g);
            assert!(rel(&zg, &g1) < 1e-52, "z = {re} + {im}i");
        }
    }

    #[test]
    fn poles() {
        assert!(matches!(gamma_c(&real_c(0.0, P), P), Err(Error::Pole(_))));
        assert!(matches!(gamma_c(&real_c(-4.0, P), P), Err(Error::Pole(_))));
        assert!(rgamma_c(&real_c(-4.0, P), P).unwrap().is_zero());
        let r = rgamma_c(&real_c(3.0, P), P).unwrap();
        assert!(rel(&r, &real_c(0.5, P)) < 1e-55);
    }
}

use super::DiffOp;
use crate::error::{Error, Result};
use crate::exact::{GenSeries, Rat, RatFunc};

/// `∂ [x^μ (1−x)^ν f] = x^{μ−1} (1−x)^{ν−1} [μ f − (μ+ν) x f + (1 − x) x f']`.
fn differentiate(g: &GenSeries) -> GenSeries {
    let n = g.order();
    let f = &g.body;
    let xf = f.mul_x_pow(1).truncate(n);
    let theta = f.theta();
    let x_theta = theta.mul_x_pow(1).truncate(n);
    let body = f
        .scale(&g.mu)
        .sub(&xf.scale(&(&g.mu + &g.nu)))
        .add(&theta)
        .sub(&x_theta);
    GenSeries::new(&g.mu - &Rat::one(), &g.nu - &Rat::one(), body)
}

/// `f · g` where the denominator of `f` is `κ x^i (x − 1)^j`.
fn multiply(f: &RatFunc, g: &GenSeries) -> Result<GenSeries> {
    let (di, dj, dcore) = f.den().split_zero_one();
    if dcore.degree() != Some(0) {
        return Err(Error::UnsupportedOperator(format!(
            "coefficient denominator {} is not of the form x^i (1-x)^j",
            f.den()
        )));
    }
    let scale = dcore.coeff(0).recip()?;
    let body = g.body.mul_poly(&f.num().scale(&scale));
    Ok(GenSeries::new(
        &g.mu - &Rat::from(di),
        &g.nu - &Rat::from(dj),
        body,
    ))
}

/// Applies `op` to `x^μ (1−x)^ν f(x)` term by term. The result is normalized
/// and known through the order of the input body.
pub fn apply_to_genseries(op: &DiffOp, g: &GenSeries) -> Result<GenSeries> {
    let mut acc: Option<GenSeries> = None;
    let mut deriv = g.clone();
    for (k, coeff) in op.coeffs().iter().enumerate() {
        if k > 0 {
            deriv = differentiate(&deriv);
        }
        if coeff.is_zero() {
            continue;
        }
        let term = multiply(coeff, &deriv)?;
        acc = Some(match acc {
            None => term,
            Some(prev) => prev.add(&term)?,
        });
    }
    let out = acc.unwrap_or_else(|| {
        GenSeries::new(g.mu.clone(), g.nu.clone(), g.body.scale(&Rat::zero()))
    });
    Ok(out.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Poly, TruncatedSeries};
    use crate::hyp::{hyp_series, ContigOrder, HypParams};
    use crate::operator::{build_h, build_l};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn contiguity_on_monomials() {
        let b = r(2, 5);
        let op = DiffOp::contiguity(&b);
        let c = r(1, 3);
        let mu = Rat::one() - c.clone();
        let g = GenSeries::new(mu.clone(), Rat::zero(), TruncatedSeries::one(10));
        let out = apply_to_genseries(&op, &g).unwrap();
        let want = GenSeries::new(mu.clone(), Rat::zero(), TruncatedSeries::one(10).scale(&(&mu + &b)));
        assert!(out.agrees_with(&want).unwrap());

        let one = GenSeries::plain(TruncatedSeries::one(10));
        let out = apply_to_genseries(&op, &one).unwrap();
        assert!(out.agrees_with(&one.scale(&b)).unwrap());
    }

    #[test]
    fn second_solution_shift() {
        // (x∂ + b) x^{1−c}(1−x)^{c−a−b} F(1−a, 1−b, 2−c; x)
        //   = (b+1−c) x^{1−c}(1−x)^{c−a−b−1} F(1−a, −b, 2−c; x)
        let (a, b, c) = (r(1, 2), Rat::one(), r(1, 3));
        let one = Rat::one();
        let two = Rat::from(2);
        let n = 32;
        let lhs_body = hyp_series(&HypParams::new(&one - &a, &one - &b, &two - &c), n).unwrap();
        let lhs = GenSeries::new(&one - &c, &c - &a - &b, lhs_body);
        let out = apply_to_genseries(&DiffOp::contiguity(&b), &lhs).unwrap();
        let rhs_body = hyp_series(&HypParams::new(&one - &a, -&b, &two - &c), n)
            .unwrap()
            .scale(&(&b + &one - &c));
        let rhs = GenSeries::new(&one - &c, &c - &a - &b - &one, rhs_body);
        assert!(out.agrees_with(&rhs).unwrap());
    }

    #[test]
    fn hypergeometric_operator_annihilates() {
        let p = HypParams::new(r(2, 7), r(-5, 3), r(4, 9));
        let f = GenSeries::plain(hyp_series(&p, 30).unwrap());
        let out = apply_to_genseries(&build_l(&p), &f).unwrap();
        assert!(out.body.is_zero(), "{out}");
    }

    #[test]
    fn h1_on_first_solution() {
        let (a, c) = (r(3, 4), r(5, 7));
        for l in 1..=4 {
            let ell = ContigOrder::new(l).unwrap();
            let y1 = hyp_series(&HypParams::new(a.clone(), Rat::one(), c.clone()), 40).unwrap();
            let out = apply_to_genseries(&build_h(&Rat::one(), ell), &GenSeries::plain(y1)).unwrap();
            let want = hyp_series(&HypParams::new(a.clone(), Rat::from(1 + l), c.clone()), 40)
                .unwrap()
                .scale(&crate::exact::poch(&Rat::one(), l));
            assert!(out.agrees_with(&GenSeries::plain(want)).unwrap());
        }
    }

    #[test]
    fn foreign_denominator_unsupported() {
        let coeff = RatFunc::new(Poly::one(), Poly::from_ints(&[3, 1])).unwrap();
        let op = DiffOp::term(coeff, 0);
        let g = GenSeries::plain(TruncatedSeries::one(5));
        assert!(matches!(apply_to_genseries(&op, &g), Err(Error::UnsupportedOperator(_))));
    }
}

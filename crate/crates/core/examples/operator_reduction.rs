//! Right division of `H(ℓ) = (x∂+b+ℓ−1)⋯(x∂+b)` by the hypergeometric
//! operator, and the factored shape of the remainder.

use strange_eval::exact::Rat;
use strange_eval::hyp::{ContigOrder, HypParams};
use strange_eval::operator::{build_h, build_l, factor_remainder, genericity_flags, right_reduce};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = HypParams::new(Rat::from(3), Rat::one(), Rat::new(3, 2));
    let ell = ContigOrder::new(2)?;
    let h = build_h(&p.b, ell);
    let l = build_l(&p);
    let red = right_reduce(&h, &l)?;
    println!("H = {h}");
    println!("L = {l}");
    println!("quotient = {}", red.quotient);
    println!("q = {}", red.q);
    println!("r = {}", red.r);
    assert_eq!(red.reconstruct(&l), h);

    let f = factor_remainder(&red.q, &red.r, ell)?;
    println!("(v0, v1, g) = {:?}", f.q_exponents());
    println!("(w0, w1, h) = {:?}", f.r_exponents());
    println!("flags: {:?}", genericity_flags(&p, ell));

    // a non-integral b, where every genericity flag holds
    let p = HypParams::new(Rat::new(2, 7), Rat::new(3, 5), Rat::new(1, 3));
    let ell = ContigOrder::new(3)?;
    let red = right_reduce(&build_h(&p.b, ell), &build_l(&p))?;
    let f = factor_remainder(&red.q, &red.r, ell)?;
    assert!(genericity_flags(&p, ell).all());
    assert!(f.is_generic_shape(ell));
    println!("b = 3/5, l = 3: q0 = {}; r0 = {}", f.q0, f.r0);
    Ok(())
}

fn main() {
    run_example().unwrap();
}

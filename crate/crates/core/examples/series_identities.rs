//! Exact truncated-series identities: Euler's transformation and the action
//! of the contiguity operator.

use strange_eval::exact::{GenSeries, Rat};
use strange_eval::hyp::{euler_transform_series, hyp_series, HypParams};
use strange_eval::operator::{apply_to_genseries, DiffOp};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = HypParams::new(Rat::new(3, 7), Rat::new(-5, 2), Rat::new(2, 9));
    let order = 48;
    let f = hyp_series(&p, order)?;
    assert_eq!(f, euler_transform_series(&p, order)?);
    println!("Euler transformation holds through x^{order}");

    // (x∂ + b) F(a, b, c) = b F(a, b+1, c)
    let out = apply_to_genseries(&DiffOp::contiguity(&p.b), &GenSeries::plain(f))?;
    let shifted = hyp_series(&HypParams::new(p.a.clone(), &p.b + &Rat::one(), p.c.clone()), order)?;
    assert!(out.agrees_with(&GenSeries::plain(shifted.scale(&p.b)))?);
    println!("contiguity relation holds through x^{order}");
    Ok(())
}

fn main() {
    run_example().unwrap();
}

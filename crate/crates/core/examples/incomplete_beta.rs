//! `F(a, 1, c; x)` through the termwise-integrated incomplete beta series.

use strange_eval::exact::Rat;
use strange_eval::numeric::incomplete_beta_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rep = incomplete_beta_check(&Rat::from(2), &Rat::from(3), &Rat::new(1, 2), 128, 192)?;
    println!("(2, 3, 1/2): residual {:e}, truncation bound {:e}", rep.residual, rep.truncation_bound);
    assert!(rep.residual < 1e-30);

    // a = c collapses the integral to 1/(1 − x)
    let rep = incomplete_beta_check(&Rat::new(7, 2), &Rat::new(7, 2), &Rat::new(2, 5), 16, 192)?;
    println!("(7/2, 7/2, 2/5): integral side {}", rep.rhs_exact.expect("rational"));
    Ok(())
}

fn main() {
    run_example().unwrap();
}

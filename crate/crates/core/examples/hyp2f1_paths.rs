//! Numerical `₂F₁` across the plane, showing which transformation route
//! each argument takes.

use rug::Complex;
use strange_eval::exact::Rat;
use strange_eval::numeric::{hyp2f1_num, rat_to_c};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let prec = 128;
    let wp = prec + 64;
    let (a, b, c) = (Rat::new(1, 3), Rat::new(2, 5), Rat::new(7, 4));
    let (a, b, c) = (rat_to_c(&a, wp), rat_to_c(&b, wp), rat_to_c(&c, wp));
    for (re, im) in [(0.5, 0.0), (-3.0, 1.0), (0.95, 0.1), (4.0, -2.0), (0.5, 0.86), (-200.0, 0.0)] {
        let z = Complex::with_val(wp, (re, im));
        let r = hyp2f1_num(&a, &b, &c, &z, prec)?;
        println!("z = {re:>6} {im:+}i  ->  {:.15}  via {}", r.value.real().to_f64(), r.route);
    }
    let cut = hyp2f1_num(&a, &b, &c, &Complex::with_val(wp, (2, 0)), prec);
    println!("z = 2: {}", cut.unwrap_err());
    Ok(())
}

fn main() {
    run_example().unwrap();
}

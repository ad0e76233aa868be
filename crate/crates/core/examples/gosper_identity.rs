//! Gosper's evaluation `F(1−a, b, b+2; b/(a+b)) = (b+1)(a/(a+b))^a`,
//! exactly for positive integer `a` and numerically otherwise.

use strange_eval::exact::Rat;
use strange_eval::numeric::{gosper_check, DEFAULT_PRECISION};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b) in [("2", "1"), ("3", "2"), ("1/2", "1/3"), ("-7/3", "5/4")] {
        let (a, b): (Rat, Rat) = (a.parse()?, b.parse()?);
        let rep = gosper_check(&a, &b, DEFAULT_PRECISION)?;
        match &rep.lhs_exact {
            Some(v) => println!("a = {a}, b = {b}: both sides {v} exactly"),
            None => println!("a = {a}, b = {b}: z = {}, residual {:e}", rep.z, rep.residual),
        }
        assert!(rep.residual < 1e-40);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}

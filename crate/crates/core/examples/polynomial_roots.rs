//! Roots of exact polynomials with multiplicities.

use strange_eval::exact::{Poly, Rat};
use strange_eval::numeric::find_roots;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let third = Poly::new(vec![Rat::new(-1, 3), Rat::one()]);
    let p = &(&third * &third) * &Poly::from_ints(&[1, 0, 1]);
    let set = find_roots(&p, 192)?;
    println!("P(x) = {p}");
    for r in &set.roots {
        let shown = r.exact.as_ref().map_or_else(|| r.value.to_string_radix(10, Some(12)), Rat::to_string);
        println!("  {shown}  multiplicity {}", r.multiplicity);
    }
    assert_eq!(set.count(), 4);
    Ok(())
}

fn main() {
    run_example().unwrap();
}

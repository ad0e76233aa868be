//! The reduction polynomials `q0`, `r0` from their series, from operator
//! division, and (for `a ∉ ℤ`) from the expansion in `1/x`.

use strange_eval::exact::Rat;
use strange_eval::hyp::{q0_by_reversal, q0_r0_by_series, ContigOrder, HypParams};
use strange_eval::operator::{build_h, build_l, factor_remainder, right_reduce};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (a, c) = (Rat::new(5, 7), Rat::new(-3, 4));
    for l in 1..=4 {
        let ell = ContigOrder::new(l)?;
        let series = q0_r0_by_series(&a, &c, ell, ell.default_series_order())?;
        let red = right_reduce(
            &build_h(&Rat::one(), ell),
            &build_l(&HypParams::new(a.clone(), Rat::one(), c.clone())),
        )?;
        let op = factor_remainder(&red.q, &red.r, ell)?;
        let rev = q0_by_reversal(&a, &c, ell)?;
        assert_eq!(series.q0, op.q0);
        assert_eq!(series.r0, op.r0);
        assert_eq!(series.q0, rev);
        println!("l = {l}: q0 = {}; r0 = {}", series.q0, series.r0);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}

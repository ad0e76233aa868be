//! Both root identities at every root of `F(1−a, −ℓ, 2−c; x)`.

use strange_eval::exact::Rat;
use strange_eval::hyp::ContigOrder;
use strange_eval::numeric::{verify_theorem, VerdictStatus, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = VerifyOptions::default();
    for (a, c, l) in [(Rat::from(3), Rat::new(3, 2), 1), (Rat::new(1, 2), Rat::new(1, 3), 2), (Rat::new(2, 3), Rat::new(7, 5), 4)] {
        let rep = verify_theorem(&a, &c, ContigOrder::new(l)?, &opts)?;
        println!("a = {a}, c = {c}, l = {l}: q0 = {}", rep.params.q0);
        for rec in &rep.records {
            let first = rec.contiguous.as_ref().expect("checked");
            let second = rec.companion.as_ref().expect("checked");
            println!(
                "  lambda = {:.12}  residuals {:.1e} {:.1e}",
                rec.lambda.real().to_f64(),
                first.residual,
                second.residual
            );
        }
        assert_eq!(rep.verdict.status, VerdictStatus::Pass);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}

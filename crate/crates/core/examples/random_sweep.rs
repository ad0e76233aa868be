//! A small seeded sweep of the root identities.

use strange_eval::numeric::{sweep, SweepOptions, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rep = sweep(&SweepOptions {
        trials: 12,
        ell_max: 4,
        seed: 2024,
        verify: VerifyOptions::default(),
    })?;
    for t in &rep.records {
        let p = &t.report.params;
        println!("#{:<2} a = {:<6} c = {:<6} l = {}  {:?}", t.index, p.a.to_string(), p.c.to_string(), p.ell.get(), t.report.verdict.status);
    }
    let s = &rep.summary;
    println!("{} trials, {} failures, skip rate {:.3}", s.trials, s.failed, s.skip_rate);
    assert_eq!(s.failed, 0);
    Ok(())
}

fn main() {
    run_example().unwrap();
}

//! Seeded random sweeps of the root identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{verify_theorem, SkipReason, VerdictStatus, VerifyOptions, VerifyReport};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::hyp::ContigOrder;

/// Largest numerator magnitude and denominator of a random parameter.
pub const DRAW_BOUND: i64 = 20;

/// A rational `p/q` with `|p| ≤ 20` and `1 ≤ q ≤ 20`.
pub fn draw_rat<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(-DRAW_BOUND..=DRAW_BOUND), rng.gen_range(1..=DRAW_BOUND))
}

/// A parameter set `(a, c, ℓ)` with `c ∉ ℤ`.
pub fn draw_params<R: Rng>(rng: &mut R, ell_max: usize) -> (Rat, Rat, ContigOrder) {
    let a = draw_rat(rng);
    let c = loop {
        let c = draw_rat(rng);
        if !c.is_integer() {
            break c;
        }
    };
    let ell = ContigOrder::new(rng.gen_range(1..=ell_max)).expect("ℓ ≥ 1");
    (a, c, ell)
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub trials: usize,
    pub ell_max: usize,
    pub seed: u64,
    pub verify: VerifyOptions,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepTrial {
    pub index: usize,
    pub report: VerifyReport,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub no_roots: usize,
    pub roots: usize,
    pub skipped_roots: usize,
    pub skip_rate: f64,
    /// Skip counts keyed by reason, in a fixed order.
    pub skips_by_reason: Vec<(SkipReason, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub ell_max: usize,
    pub records: Vec<SweepTrial>,
    pub summary: SweepSummary,
}

/// Runs `trials` independent verifications. Parameters are drawn
/// sequentially from the seed, so results do not depend on scheduling.
pub fn sweep(opts: &SweepOptions) -> Result<SweepReport> {
    if opts.ell_max == 0 {
        return Err(Error::Precondition("ell-max must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let draws: Vec<_> = (0..opts.trials).map(|_| draw_params(&mut rng, opts.ell_max)).collect();
    let records = draws
        .par_iter()
        .enumerate()
        .map(|(index, (a, c, ell))| {
            verify_theorem(a, c, *ell, &opts.verify).map(|report| SweepTrial { index, report })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&records);
    Ok(SweepReport {
        seed: opts.seed,
        ell_max: opts.ell_max,
        records,
        summary,
    })
}

fn summarize(records: &[SweepTrial]) -> SweepSummary {
    let mut s = SweepSummary {
        trials: records.len(),
        ..SweepSummary::default()
    };
    let reasons = [
        SkipReason::BranchCut,
        SkipReason::DegenerateConnection,
        SkipReason::Unsupported,
        SkipReason::Pole,
        SkipReason::NoConvergence,
    ];
    let mut by_reason = [0usize; 5];
    for t in records {
        let v = &t.report.verdict;
        match v.status {
            VerdictStatus::Pass => s.passed += 1,
            VerdictStatus::Fail => s.failed += 1,
            VerdictStatus::NoRoots => s.no_roots += 1,
        }
        s.roots += t.report.records.len();
        s.skipped_roots += v.skipped;
        for rec in &t.report.records {
            if let Some(reason) = rec.skip_reason {
                let i = reasons.iter().position(|&r| r == reason).expect("listed reason");
                by_reason[i] += 1;
            }
        }
    }
    s.skip_rate = if s.roots == 0 {
        0.0
    } else {
        s.skipped_roots as f64 / s.roots as f64
    };
    s.skips_by_reason = reasons.into_iter().zip(by_reason).filter(|&(_, n)| n > 0).collect();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (a, c, ell) = draw_params(&mut r1, 5);
            assert_eq!((a.clone(), c.clone(), ell), draw_params(&mut r2, 5));
            assert!(!c.is_integer());
            assert!((1..=5).contains(&ell.get()));
            assert!(*a.numer() <= 20 && *a.numer() >= -20 && *a.denom() <= 20);
        }
    }

    #[test]
    fn small_sweep() {
        let opts = SweepOptions {
            trials: 6,
            ell_max: 3,
            seed: 1,
            verify: VerifyOptions::default(),
        };
        let rep = sweep(&opts).unwrap();
        assert_eq!(rep.records.len(), 6);
        assert_eq!(rep.summary.failed, 0);
        assert!(rep.records.iter().enumerate().all(|(i, t)| t.index == i));
    }
}

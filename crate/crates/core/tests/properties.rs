//! Invariants over random parameters.

use proptest::prelude::*;
use rug::ops::Pow;
use rug::Complex;
use strange_eval::exact::{GenSeries, Poly, Rat};
use strange_eval::hyp::{
    euler_transform_series, hyp_series, q0_by_reversal, q0_r0_by_series, ContigOrder, HypParams,
};
use strange_eval::numeric::{
    find_roots, gamma_c, gosper_check, hyp2f1_num, rat_to_c, relative_residual,
};
use strange_eval::operator::{apply_to_genseries, build_h, build_l, factor_remainder, right_reduce, DiffOp};

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=20).prop_map(|(p, q)| Rat::new(p, q))
}

fn lower() -> impl Strategy<Value = Rat> {
    rat().prop_filter("c not a nonpositive integer", |c| !c.is_nonpositive_integer())
}

fn non_integer() -> impl Strategy<Value = Rat> {
    rat().prop_filter("not an integer", |c| !c.is_integer())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pfaff_transformation_holds_numerically(
        a in rat(), b in rat(), c in lower(),
        r in 0.05f64..0.45, t in 0.0f64..std::f64::consts::TAU,
    ) {
        let prec = 128;
        let wp = prec + 64;
        let z = Complex::with_val(wp, (r * t.cos(), r * t.sin()));
        let w = Complex::with_val(wp, &z / Complex::with_val(wp, &z - 1u32));
        let (ac, bc, cc) = (rat_to_c(&a, wp), rat_to_c(&b, wp), rat_to_c(&c, wp));
        let cmb = rat_to_c(&(&c - &b), wp);
        let lhs = hyp2f1_num(&ac, &bc, &cc, &z, prec).unwrap();
        let inner = hyp2f1_num(&ac, &cmb, &cc, &w, prec).unwrap();
        let one_minus = Complex::with_val(wp, 1u32 - &z);
        let factor = Complex::with_val(wp, one_minus.pow(Complex::with_val(wp, -&ac)));
        let rhs = Complex::with_val(wp, inner.value * factor);
        prop_assert!(relative_residual(&lhs.value, &rhs) < 1e-30, "{} vs {}", lhs.value, rhs);
    }

    #[test]
    fn gamma_recurrence(re in -6.0f64..6.0, im in 0.1f64..4.0) {
        let prec = 160;
        let z = Complex::with_val(prec, (re, im));
        let g = gamma_c(&z, prec).unwrap();
        let g1 = gamma_c(&Complex::with_val(prec, &z + 1u32), prec).unwrap();
        let rhs = Complex::with_val(prec, &z * &g);
        prop_assert!(relative_residual(&g1, &rhs) < 1e-40);
    }

    #[test]
    fn roots_reproduce_degree_and_trace(coeffs in prop::collection::vec(-9i64..=9, 2..8)) {
        let p = Poly::from_ints(&coeffs);
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let d = p.degree().unwrap();
        let set = find_roots(&p, 128).unwrap();
        prop_assert_eq!(set.count(), d);
        let mut trace = Complex::with_val(160, 0);
        for root in &set.roots {
            prop_assert!(root.residual <= set.residual_bound);
            trace += Complex::with_val(160, &root.value * root.multiplicity as u32);
        }
        let expected = rat_to_c(&(-(p.coeff(d - 1) / p.coeff(d))), 160);
        let err = Complex::with_val(160, &trace - &expected).abs().real().to_f64();
        prop_assert!(err < 1e-20, "trace error {err}");
    }

    #[test]
    fn q0_methods_agree(a in rat(), c in non_integer(), l in 1usize..=4) {
        let ell = ContigOrder::new(l).unwrap();
        let series = q0_r0_by_series(&a, &c, ell, ell.default_series_order()).unwrap();
        let red = right_reduce(
            &build_h(&Rat::one(), ell),
            &build_l(&HypParams::new(a.clone(), Rat::one(), c.clone())),
        ).unwrap();
        let op = factor_remainder(&red.q, &red.r, ell).unwrap();
        prop_assert_eq!(&series.q0, &op.q0);
        prop_assert_eq!(&series.r0, &op.r0);
        if !a.is_integer() {
            prop_assert_eq!(&series.q0, &q0_by_reversal(&a, &c, ell).unwrap());
        }
    }

    #[test]
    fn euler_and_contiguity_series(a in rat(), b in rat(), c in lower()) {
        let p = HypParams::new(a.clone(), b.clone(), c.clone());
        let order = 24;
        let f = hyp_series(&p, order).unwrap();
        prop_assert_eq!(&f, &euler_transform_series(&p, order).unwrap());
        let out = apply_to_genseries(&DiffOp::contiguity(&b), &GenSeries::plain(f)).unwrap();
        let shifted = hyp_series(&HypParams::new(a, &b + &Rat::one(), c), order).unwrap();
        prop_assert!(out.agrees_with(&GenSeries::plain(shifted.scale(&b))).unwrap());
    }

    #[test]
    fn gosper_exact_for_positive_integer_a(a in 1i64..=6, b in rat()) {
        let a = Rat::from(a);
        prop_assume!(!(&a + &b).is_zero() && !(&b + &Rat::from(2)).is_nonpositive_integer());
        prop_assume!(&b / &(&a + &b) < Rat::one());
        let rep = gosper_check(&a, &b, 128).unwrap();
        prop_assert_eq!(rep.lhs_exact, rep.rhs_exact);
    }
}

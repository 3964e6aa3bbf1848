mod common;

use common::{small_module, small_rational};
use mhahn_core::bases::{build_all, check_eigen_residuals, check_gram};
use mhahn_core::genericity::rational_genericity;
use mhahn_core::overlaps::{closed_form_table, match_closed_forms, overlap_table};
use mhahn_core::repn::check_meta_relations;
use mhahn_core::specfun::*;
use mhahn_core::{Family, Float, OverlapKind, Rational, Scalar};
use proptest::prelude::*;

fn f(r: &Rational) -> Float {
    Float::from_rational(r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn float_pipeline((params, mu) in (1usize..=16).prop_flat_map(small_module)) {
        let params = params.convert::<Float>();
        let mu = f(&mu);
        let (repn, bases) = build_all(params, &mu).unwrap();
        let rep = check_meta_relations(&repn);
        prop_assert!(rep.pass, "{}", rep);
        for family in Family::ALL {
            let rep = check_eigen_residuals(&repn, bases.get(family));
            prop_assert!(rep.pass, "{}", rep);
        }
        prop_assert!(check_gram(&repn, &bases).pass);
        for kind in OverlapKind::ALL {
            let closed = closed_form_table(&repn.params, &mu, kind).unwrap();
            let rep = match_closed_forms(&overlap_table(&repn, &bases, kind), &closed).unwrap();
            prop_assert!(rep.pass, "{}", rep);
        }
    }

    #[test]
    fn float_rational_functions(
        (n, a, b) in (0usize..=16)
            .prop_flat_map(|n| (Just(n), small_rational(), small_rational()))
            .prop_filter("generic", |(n, a, b)| rational_genericity(a, b, *n).is_empty())
    ) {
        let p = RatParams::new(f(&a), f(&b), n);
        for rep in [check_biorthogonality(&p), check_u_recurrence(&p), check_v_recurrence(&p), check_contiguity(&p)] {
            let rep = rep.unwrap();
            prop_assert!(rep.pass, "{}", rep);
        }
        // The limit itself is approached like C/x with C up to ~1e3 here, so only
        // agreement with the exact value at large x is asserted.
        let x = Rational::from_integer(100_000_000.into());
        let exact = RatParams::new(a, b, n);
        for m in 0..=n {
            let want = rat_u(m, &x, &exact).unwrap().to_f64();
            let got = rat_u(m, &f(&x), &p).unwrap().value();
            prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "m={} {} vs {}", m, got, want);
        }
    }
}

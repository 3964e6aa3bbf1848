mod common;

use common::module;
use mhahn_core::appendix::check_appendix_actions;
use mhahn_core::bases::{
    build_all, check_completeness, check_eigen_residuals, check_gram, check_triangularity, operator_in_basis,
};
use mhahn_core::Family;
use mhahn_core::Scalar;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn eigenbases((params, mu) in (1usize..=10, any::<bool>()).prop_flat_map(|(n, g)| module(n, g))) {
        let (repn, bases) = build_all(params, &mu).unwrap();
        for family in Family::ALL {
            let rep = check_eigen_residuals(&repn, bases.get(family));
            prop_assert!(rep.pass, "{}", rep);
        }
        prop_assert!(check_gram(&repn, &bases).pass);
        prop_assert!(check_completeness(&repn, &bases).pass);
        prop_assert!(check_triangularity(&bases).pass);
        let ve = operator_in_basis(&repn.v, &bases.e).unwrap();
        prop_assert!(ve.is_banded(0, 0));
        let vd = operator_in_basis(&repn.v, &bases.d).unwrap();
        prop_assert!(vd.entries().all(|(i, j, x)| i + 1 >= j || x.is_zero()));
    }

    #[test]
    fn appendix_actions((params, mu) in (1usize..=7, any::<bool>()).prop_flat_map(|(n, g)| module(n, g))) {
        let (repn, bases) = build_all(params, &mu).unwrap();
        for rep in check_appendix_actions(&repn, &bases).unwrap() {
            prop_assert!(rep.pass, "{}", rep);
        }
    }
}

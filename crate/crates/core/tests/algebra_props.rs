mod common;

use common::{module, rational};
use mhahn_core::repn::{check_casimir, check_hahn_embedding, check_meta_relations, pencil};
use mhahn_core::{build_repn, genericity_check, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn defining_relations_hold((params, _) in (0usize..=12, any::<bool>()).prop_flat_map(|(n, random)| module(n, random))) {
        let repn = build_repn(params).unwrap();
        let rep = check_meta_relations(&repn);
        prop_assert!(rep.pass, "{}", rep);
        prop_assert_eq!(rep.max_residual.as_str(), "0");
        prop_assert!(check_casimir(&repn).pass);
    }

    #[test]
    fn embedding_holds_for_every_rho((params, mu) in (1usize..=8).prop_flat_map(|n| module(n, true)), rhos in proptest::collection::vec(rational(), 10)) {
        prop_assert!(genericity_check(&params, &mu).is_empty());
        let repn = build_repn(params).unwrap();
        for rho in &rhos {
            let rep = check_hahn_embedding(&repn, rho);
            prop_assert!(rep.pass, "rho = {}: {}", rho, rep);
        }
    }

    #[test]
    fn pencil_diagonal((params, mu) in (0usize..=8).prop_flat_map(|n| module(n, true))) {
        let repn = build_repn(params.clone()).unwrap();
        let w = pencil(&repn, &mu);
        for k in 0..=params.n() {
            let rho: Rational = Rational::from_integer((k as i64).into()) - params.alpha() - &mu;
            prop_assert_eq!(&w[(k, k)], &rho);
        }
    }
}

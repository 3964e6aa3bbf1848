mod common;

use common::rational;
use mhahn_core::scalar::{hyp3f2, is_canonical, multi_poch, poch, PochList};
use mhahn_core::{Float, Rational, Scalar};
use proptest::prelude::*;

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

proptest! {
    #[test]
    fn poch_splits(a in rational(), j in 0usize..=10, k in 0usize..=10) {
        let jj = int(j as i64);
        prop_assert_eq!(poch(&a, j + k), poch(&a, j) * poch(&(a.clone() + jj), k));
    }

    #[test]
    fn multi_poch_is_a_product(bases in proptest::collection::vec(rational(), 0..4), k in 0usize..6) {
        let expect = bases.iter().fold(int(1), |acc, b| acc * poch(b, k));
        prop_assert_eq!(multi_poch(&PochList::new(bases, k)), expect);
    }

    #[test]
    fn results_stay_canonical(a in rational(), b in rational(), k in 0usize..8) {
        let v = poch(&a, k) * b.clone() - poch(&b, k) + a;
        prop_assert!(is_canonical(&v));
    }

    /// Terminating transformation
    /// `3F2(-n, b, c; d, e) = (e-c)_n / (e)_n 3F2(-n, d-b, c; d, c-e-n+1)`.
    #[test]
    fn terminating_transformation(n in 0usize..=8, b in rational(), c in rational(), d in rational(), e in rational()) {
        let generic = |x: &Rational| x.as_integer().is_none_or(|k| !(-12..=12).contains(&k));
        prop_assume!([&d, &e, &(c.clone() - e.clone())].into_iter().all(generic));
        let nn = int(n as i64);
        let lhs = hyp3f2(&[-nn.clone(), b.clone(), c.clone()], &[d.clone(), e.clone()], n).unwrap();
        let pre = poch(&(e.clone() - c.clone()), n) / poch(&e, n);
        let rhs = hyp3f2(
            &[-nn.clone(), d.clone() - b, c.clone()],
            &[d, c - e - nn + int(1)],
            n,
        ).unwrap();
        prop_assert_eq!(lhs, pre * rhs);
    }

    #[test]
    fn float_poch_agrees(a in rational(), k in 0usize..=10) {
        let exact = poch(&a, k).to_f64();
        prop_assume!(exact != 0.0 && (1e-6..=1e6).contains(&exact.abs()));
        let float = poch(&Float::from_rational(&a), k).value();
        prop_assert!(((float - exact) / exact).abs() <= 1e-12, "{float} vs {exact}");
    }

    #[test]
    fn float_hyp3f2_agrees(
        m in 0usize..=8,
        x in 0usize..=8,
        t in rational(),
        b in rational(),
        n in 8usize..=12,
    ) {
        let top = [int(-(m as i64)), t, int(-(x as i64))];
        let bottom = [int(-(n as i64)), b];
        let Ok(exact) = hyp3f2(&top, &bottom, m) else { return Ok(()) };
        let exact = exact.to_f64();
        prop_assume!(exact != 0.0 && (1e-6..=1e6).contains(&exact.abs()));
        let ftop = top.each_ref().map(Float::from_rational);
        let fbottom = bottom.each_ref().map(Float::from_rational);
        let float = hyp3f2(&ftop, &fbottom, m).unwrap().value();
        prop_assert!(((float - exact) / exact).abs() <= 1e-12, "{float} vs {exact}");
    }
}

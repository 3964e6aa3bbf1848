#![allow(dead_code)]

use mhahn_core::genericity::{hahn_genericity, rational_genericity};
use mhahn_core::{genericity_check, ModuleParams, Rational};
use proptest::prelude::*;

/// `±p/q` with `p, q` in `1..=97`.
pub fn rational() -> impl Strategy<Value = Rational> {
    (1i64..=97, 1i64..=97, any::<bool>())
        .prop_map(|(p, q, neg)| Rational::new((if neg { -p } else { p }).into(), q.into()))
}

/// Like [`rational`] with `|value| <= 10`, for the float backend.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("magnitude <= 10", |r| r.numer().magnitude() <= &(r.denom().magnitude() * 10u32))
}

pub fn gauge(n: usize, random: bool) -> BoxedStrategy<Vec<Rational>> {
    if random {
        proptest::collection::vec(rational(), n)
            .prop_map(|mut g| {
                g.push(Rational::from_integer(0.into()));
                g
            })
            .boxed()
    } else {
        Just(
            ModuleParams::<Rational>::unit_gauge(n, Rational::from_integer(0.into()), Rational::from_integer(0.into()))
                .gauge()
                .to_vec(),
        )
        .boxed()
    }
}

/// Generic module parameters and pencil parameter at dimension `n + 1`.
pub fn module(n: usize, random_gauge: bool) -> impl Strategy<Value = (ModuleParams<Rational>, Rational)> {
    (rational(), rational(), rational(), gauge(n, random_gauge))
        .prop_map(move |(alpha, beta, mu, g)| (ModuleParams::new(n, alpha, beta, g).unwrap(), mu))
        .prop_filter("generic", |(p, mu)| genericity_check(p, mu).is_empty())
}

/// Generic module parameters with `|alpha|, |beta|, |mu|, |a_n| <= 10`.
pub fn small_module(n: usize) -> impl Strategy<Value = (ModuleParams<Rational>, Rational)> {
    (small_rational(), small_rational(), small_rational(), proptest::collection::vec(small_rational(), n))
        .prop_map(move |(alpha, beta, mu, mut g)| {
            g.push(Rational::from_integer(0.into()));
            (ModuleParams::new(n, alpha, beta, g).unwrap(), mu)
        })
        .prop_filter("generic", |(p, mu)| genericity_check(p, mu).is_empty())
}

pub fn hahn(n: usize) -> impl Strategy<Value = (Rational, Rational)> {
    (rational(), rational()).prop_filter("generic", move |(a, b)| hahn_genericity(a, b, n).is_empty())
}

pub fn rat(n: usize) -> impl Strategy<Value = (Rational, Rational)> {
    (rational(), rational()).prop_filter("generic", move |(a, b)| rational_genericity(a, b, n).is_empty())
}

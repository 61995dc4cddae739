#![allow(dead_code)]

use grossone::number::{normalize, ratio};
use grossone::{GrossNumber, Rational};
use proptest::prelude::*;

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_coeff() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=6, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

/// Integers -3..=3 plus a few halves and thirds.
pub fn exponent() -> BoxedStrategy<Rational> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(|n| ratio(n, 1)),
        1 => (-5i64..=5).prop_map(|n| ratio(n, 2)),
        1 => (-4i64..=4).prop_map(|n| ratio(n, 3)),
    ]
    .boxed()
}

pub fn int_exponent() -> BoxedStrategy<Rational> {
    (-2i64..=3).prop_map(|n| ratio(n, 1)).boxed()
}

pub fn gross_with(
    expo: BoxedStrategy<Rational>,
    max_terms: usize,
) -> impl Strategy<Value = GrossNumber> {
    prop::collection::vec((coeff(), expo), 0..=max_terms).prop_map(normalize)
}

pub fn gross() -> impl Strategy<Value = GrossNumber> {
    gross_with(exponent(), 4)
}

pub fn int_gross() -> impl Strategy<Value = GrossNumber> {
    gross_with(int_exponent(), 4)
}

pub fn nonzero_gross() -> impl Strategy<Value = GrossNumber> {
    (nonzero_coeff(), exponent(), gross()).prop_map(|(c, e, rest)| {
        let lead = GrossNumber::term(c, e);
        let s = &lead + &rest;
        if s.is_zero() {
            lead
        } else {
            s
        }
    })
}

pub fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

#![allow(dead_code)]

use proptest::prelude::*;
use tropsatz_core::{Exponent, ExtValue, MinPlusPolynomial, TropicalPolynomial};

/// Exponents of degree at most `d` in `n` variables.
pub fn exponents(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = vec![];
    let mut e = vec![0u32; n];
    loop {
        if e.iter().sum::<u32>() <= d {
            out.push(Exponent(e.clone()));
        }
        let mut i = 0;
        while i < n {
            e[i] += 1;
            if e[i] <= d {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

/// A polynomial with 1 to 4 distinct monomials of degree ≤ `d`, coefficients in `[−2, 2]`.
pub fn poly(n: usize, d: u32) -> impl Strategy<Value = TropicalPolynomial> {
    let exps = exponents(n, d);
    let len = exps.len();
    proptest::sample::subsequence(exps, 1..=len.min(4))
        .prop_flat_map(|es| {
            let k = es.len();
            (Just(es), proptest::collection::vec(-2i64..=2, k))
        })
        .prop_map(move |(es, cs)| {
            TropicalPolynomial::new(n, es.into_iter().zip(cs).map(|(e, c)| (e, ExtValue::int(c)))).unwrap()
        })
}

pub fn system(n: usize) -> impl Strategy<Value = Vec<TropicalPolynomial>> {
    (1u32..=2).prop_flat_map(move |d| proptest::collection::vec(poly(n, d), 1..=3))
}

pub fn minplus_system(n: usize) -> impl Strategy<Value = Vec<MinPlusPolynomial>> {
    (1u32..=2).prop_flat_map(move |d| {
        proptest::collection::vec(
            (poly(n, d), poly(n, d)).prop_map(|(l, r)| MinPlusPolynomial::new(l, r).unwrap()),
            1..=3,
        )
    })
}

pub fn value() -> impl Strategy<Value = ExtValue> {
    prop_oneof![4 => (-6i64..=6, 1i64..=3).prop_map(|(p, q)| ExtValue::ratio(p, q)), 1 => Just(ExtValue::Infinity)]
}

pub fn finite_point(n: usize) -> impl Strategy<Value = Vec<ExtValue>> {
    proptest::collection::vec((-3i64..=3).prop_map(ExtValue::int), n)
}

pub fn grid_point(n: usize) -> impl Strategy<Value = Vec<ExtValue>> {
    proptest::collection::vec(prop_oneof![4 => (-3i64..=3).prop_map(ExtValue::int), 1 => Just(ExtValue::Infinity)], n)
}

//! Strategies shared by the property tests and the acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;

use qcert_core::calculus::schwarzian_q;
use qcert_core::field::{int, Field};
use qcert_core::{rat, FieldValue, QSeries, Rational, Series};

pub fn cases() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

/// Agree on the common range.
pub fn same(a: &QSeries, b: &QSeries) -> bool {
    a.sub(b).is_zero()
}

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

pub fn coeff() -> impl Strategy<Value = FieldValue> {
    prop_oneof![
        3 => small_rat().prop_map(FieldValue::from),
        1 => (small_rat(), small_rat()).prop_map(|(a, b)| FieldValue::quad(a, b)),
    ]
}

/// A series on grid `1/d` starting at `k/d`, with a nonzero leading coefficient.
pub fn series_from(lead_num: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = QSeries> {
    (1i64..=3, lead_num, prop::collection::vec(coeff(), 1..8), coeff())
        .prop_map(|(d, k, rest, c0)| {
            let c0 = if c0.is_zero() { FieldValue::from(int(1)) } else { c0 };
            let mut rel = vec![c0];
            rel.extend(rest);
            Series::from_relative(d, &rat(k, d), rel)
        })
}

pub fn series() -> impl Strategy<Value = QSeries> {
    series_from(-3..=3)
}

pub fn unit_lead_series() -> impl Strategy<Value = QSeries> {
    (1i64..=3, -2i64..=2, prop::collection::vec(coeff(), 1..8)).prop_map(|(d, k, rest)| {
        let mut rel = vec![FieldValue::from(int(1))];
        rel.extend(rest);
        Series::from_relative(d, &rat(k, d), rel)
    })
}


pub fn check_ring(a: &QSeries, b: &QSeries, c: &QSeries) -> Result<(), TestCaseError> {
    prop_assert!(same(&a.add(b), &b.add(a)));
    prop_assert!(same(&a.add(b).add(c), &a.add(&b.add(c))));
    prop_assert!(a.sub(a).is_zero());
    prop_assert!(same(&a.mul(b), &b.mul(a)));
    prop_assert!(same(&a.mul(b).mul(c), &a.mul(&b.mul(c))));
    prop_assert!(same(&a.mul(&b.add(c)), &a.mul(b).add(&a.mul(c))));
    let one = QSeries::constant(FieldValue::one(), &int(40));
    prop_assert!(same(&a.mul(&one), a));
    let prod = a.mul(&a.invert().unwrap());
    prop_assert_eq!(prod.valuation(), Some(int(0)));
    prop_assert!(same(&prod, &one));
    Ok(())
}

pub fn check_leibniz(a: &QSeries, b: &QSeries) -> Result<(), TestCaseError> {
    let lhs = a.mul(b).dq();
    let rhs = a.dq().mul(b).add(&a.mul(&b.dq()));
    prop_assert!(same(&lhs, &rhs));
    Ok(())
}

pub fn mobius() -> impl Strategy<Value = (Rational, Rational, Rational, Rational)> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_filter("invertible, finite at q = 0", |(a, b, c, d)| *d != int(0) && a * d - b * c != int(0))
}

/// `{(ax+b)/(cx+d), τ} = {x, τ}` for `x` of positive valuation.
pub fn check_mobius(x: &QSeries, m: &(Rational, Rational, Rational, Rational)) -> Result<(), TestCaseError> {
    let (a, b, c, d) = m;
    let k = |r: &Rational| FieldValue::from(r.clone());
    let bound = x.bound();
    let num = x.scale(&k(a)).add(&QSeries::constant(k(b), &bound));
    let den = x.scale(&k(c)).add(&QSeries::constant(k(d), &bound));
    let y = num.div(&den).unwrap();
    prop_assert!(same(&schwarzian_q(x).unwrap(), &schwarzian_q(&y).unwrap()));
    Ok(())
}

pub fn exponent() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

pub fn check_pow_additive(s: &QSeries, r1: &Rational, r2: &Rational) -> Result<(), TestCaseError> {
    let lhs = s.pow_rational(r1).unwrap().mul(&s.pow_rational(r2).unwrap());
    let rhs = s.pow_rational(&(r1 + r2)).unwrap();
    prop_assert_eq!(lhs.valuation(), rhs.valuation());
    prop_assert!(same(&lhs, &rhs));
    Ok(())
}

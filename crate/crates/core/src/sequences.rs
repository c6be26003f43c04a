//! Linear recurrences with polynomial coefficients and the named level-5 and Apéry-like
//! sequences.

use crate::calculus::Poly;
use crate::field::{int, rat, Field, FieldValue, Rational};
use crate::Error;

/// `lead(n) t(n+1) + Σ_k lags[k](n) t(n−k) = 0`, with `t(m) = 0` for `m < 0`.
/// The relation is applied for `n ≥ initial.len() − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceSpec<F> {
    pub name: String,
    pub lead: Poly<F>,
    pub lags: Vec<Poly<F>>,
    pub initial: Vec<F>,
}

impl<F: Field> RecurrenceSpec<F> {
    pub fn run(&self, count: usize) -> Result<Vec<F>, Error> {
        let mut t: Vec<F> = self.initial.iter().take(count).cloned().collect();
        while t.len() < count {
            let n = t.len() as i64 - 1;
            let nf = F::from_rational(int(n));
            let mut acc = F::zero();
            for (k, p) in self.lags.iter().enumerate() {
                let idx = n - k as i64;
                if idx >= 0 {
                    acc = acc.add(&p.eval(&nf).mul(&t[idx as usize]));
                }
            }
            let l = self.lead.eval(&nf).inv().ok_or(Error::LeadingCoefficientZero(n))?;
            t.push(acc.mul(&l).neg());
        }
        Ok(t)
    }

    pub fn map<G: Field>(&self, name: &str, f: impl Fn(&F) -> G + Copy) -> RecurrenceSpec<G> {
        let mp = |p: &Poly<F>| Poly::new(p.coeffs().iter().map(f).collect());
        RecurrenceSpec {
            name: name.to_string(),
            lead: mp(&self.lead),
            lags: self.lags.iter().map(mp).collect(),
            initial: self.initial.iter().map(f).collect(),
        }
    }
}

pub fn run_recurrence<F: Field>(spec: &RecurrenceSpec<F>, count: usize) -> Result<Vec<F>, Error> {
    spec.run(count)
}

fn q5(a: Rational, b: Rational) -> FieldValue {
    FieldValue::quad(a, b)
}

fn poly(cs: Vec<FieldValue>) -> Poly<FieldValue> {
    Poly::new(cs)
}

fn n_plus_one_squared() -> Poly<FieldValue> {
    poly(vec![1.into(), 2.into(), 1.into()])
}

/// `(n+1)² t(n+1) = (αn² + αn + β) t(n) + γ n² t(n−1)`, `t(0) = 1`.
pub fn zagier(alpha: Rational, beta: Rational, gamma: Rational) -> RecurrenceSpec<FieldValue> {
    let a: FieldValue = (-alpha).into();
    RecurrenceSpec {
        name: "zagier".into(),
        lead: n_plus_one_squared(),
        lags: vec![
            poly(vec![(-beta).into(), a.clone(), a]),
            poly(vec![0.into(), 0.into(), (-gamma).into()]),
        ],
        initial: vec![1.into()],
    }
}

/// Coefficients of the weight-one form V in powers of the Hauptmodul v.
pub fn a5() -> RecurrenceSpec<FieldValue> {
    let c1 = q5(rat(11, 2), rat(15, 2));
    let c0 = q5(rat(5, 2), rat(5, 2));
    let d2 = q5(rat(125, 2), rat(55, 2));
    RecurrenceSpec {
        name: "a5".into(),
        lead: n_plus_one_squared(),
        lags: vec![poly(vec![c0, c1.clone(), c1]), poly(vec![0.into(), 0.into(), d2])],
        initial: vec![1.into()],
    }
}

/// Coefficients of W in powers of the Hauptmodul w.
pub fn b5() -> RecurrenceSpec<FieldValue> {
    let c1 = q5(rat(11, 2), rat(-15, 2));
    let c0 = q5(rat(5, 2), rat(-5, 2));
    let d2 = q5(rat(125, 2), rat(-55, 2));
    RecurrenceSpec {
        name: "b5".into(),
        lead: n_plus_one_squared(),
        lags: vec![poly(vec![c0, c1.clone(), c1]), poly(vec![0.into(), 0.into(), d2])],
        initial: vec![1.into()],
    }
}

/// Coefficients of V in powers of the level-5 Hauptmodul g.
pub fn s5() -> RecurrenceSpec<FieldValue> {
    let alpha = q5(rat(11, 2), rat(5, 2));
    let lag0 = poly(vec![q5(rat(5, 2), rat(5, 2)), q5(int(0), int(5)), q5(rat(-33, 2), rat(-5, 2))]);
    let lag1 = poly(vec![
        q5(rat(279, 2), rat(125, 2)),
        q5(rat(-363, 2), rat(-165, 2)),
        q5(rat(119, 2), rat(55, 2)),
    ]);
    let four: FieldValue = 4.into();
    let lag2 = poly(vec![alpha.mul(&four), alpha.mul(&four).neg(), alpha]);
    RecurrenceSpec {
        name: "s5".into(),
        lead: n_plus_one_squared(),
        lags: vec![lag0, lag1, lag2],
        initial: vec![1.into()],
    }
}

/// Coefficients of W in powers of the level-5 Hauptmodul g.
pub fn t5() -> RecurrenceSpec<FieldValue> {
    let alpha = q5(rat(11, 2), rat(-5, 2));
    let lag0 = poly(vec![q5(rat(5, 2), rat(-5, 2)), q5(int(0), int(-5)), q5(rat(-33, 2), rat(5, 2))]);
    let lag1 = poly(vec![
        q5(rat(279, 2), rat(-125, 2)),
        q5(rat(-363, 2), rat(165, 2)),
        q5(rat(119, 2), rat(-55, 2)),
    ]);
    let four: FieldValue = 4.into();
    let lag2 = poly(vec![alpha.mul(&four), alpha.mul(&four).neg(), alpha]);
    RecurrenceSpec {
        name: "t5".into(),
        lead: n_plus_one_squared(),
        lags: vec![lag0, lag1, lag2],
        initial: vec![1.into()],
    }
}

pub fn by_name(name: &str, abc: Option<(Rational, Rational, Rational)>) -> Result<RecurrenceSpec<FieldValue>, Error> {
    match name {
        "a5" => Ok(a5()),
        "b5" => Ok(b5()),
        "s5" => Ok(s5()),
        "t5" => Ok(t5()),
        "zagier" => {
            let (a, b, c) = abc.ok_or_else(|| Error::InvalidArgument("zagier needs alpha, beta, gamma".into()))?;
            Ok(zagier(a, b, c))
        }
        other => Err(Error::InvalidArgument(format!("unknown sequence {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<FieldValue> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn apery_zeta2_numbers() {
        let t = zagier(int(11), int(3), int(1)).run(6).unwrap();
        assert_eq!(t, ints(&[1, 3, 19, 147, 1251, 11253]));
    }

    #[test]
    fn apery_zeta2_by_binomial_sum() {
        // Σ_k C(n,k)^2 C(n+k,k)
        fn binom(n: i64, k: i64) -> i64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        let t = zagier(int(11), int(3), int(1)).run(15).unwrap();
        for (n, tn) in t.iter().enumerate() {
            let n = n as i64;
            let s: i64 = (0..=n).map(|k| binom(n, k).pow(2) * binom(n + k, k)).sum();
            assert_eq!(*tn, FieldValue::from(s));
        }
    }

    #[test]
    fn a5_first_terms() {
        let t = a5().run(2).unwrap();
        assert_eq!(t[1], q5(rat(-5, 2), rat(-5, 2)));
    }

    #[test]
    fn conjugate_sequences() {
        let a = a5().run(20).unwrap();
        let b = b5().run(20).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.conj() == *y));
        let s = s5().run(20).unwrap();
        let t = t5().run(20).unwrap();
        assert!(s.iter().zip(&t).all(|(x, y)| x.conj() == *y));
    }

    #[test]
    fn zero_leading_coefficient() {
        let spec = RecurrenceSpec {
            name: "bad".into(),
            lead: Poly::new(ints(&[-2, 1])),
            lags: vec![Poly::constant(1.into())],
            initial: ints(&[1]),
        };
        assert_eq!(spec.run(5), Err(Error::LeadingCoefficientZero(2)));
    }
}

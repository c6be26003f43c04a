//! Gauss hypergeometric series ₂F₁(a, b; c; z) composed with q-series.

use num_traits::Signed;

use crate::field::{Field, Rational};
use crate::series::Series;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeomParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HypergeomParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, Error> {
        if c.is_integer() && !c.is_positive() {
            return Err(Error::BadParams(format!("c = {c} is a non-positive integer")));
        }
        Ok(HypergeomParams { a, b, c })
    }

    /// Coefficients `(a)_n (b)_n / ((c)_n n!)`, generated by their term ratio.
    pub fn coeffs(&self) -> F21Coeffs {
        F21Coeffs { p: self.clone(), n: 0, term: <Rational as Field>::one() }
    }
}

impl std::fmt::Display for HypergeomParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "2F1({}, {}; {})", self.a, self.b, self.c)
    }
}

/// Infinite stream of ₂F₁ coefficients.
#[derive(Clone, Debug)]
pub struct F21Coeffs {
    p: HypergeomParams,
    n: u64,
    term: Rational,
}

impl Iterator for F21Coeffs {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let out = self.term.clone();
        if !Field::is_zero(&self.term) {
            let n = Rational::from_integer(self.n.into());
            let num = (&self.p.a + &n) * (&self.p.b + &n);
            let den = (&self.p.c + &n) * (n + <Rational as Field>::one());
            self.term = &self.term * num / den;
        }
        self.n += 1;
        Some(out)
    }
}

pub fn f21_coeffs(p: &HypergeomParams, count: usize) -> Vec<Rational> {
    p.coeffs().take(count).collect()
}

/// `prefactor · ₂F₁(a, b; c; z(q))`; `z` must have positive valuation.
pub fn f21_compose<F: Field>(
    p: &HypergeomParams,
    z: &Series<F>,
    prefactor: Option<&Series<F>>,
) -> Result<Series<F>, Error> {
    let f = Series::compose(p.coeffs().map(F::from_rational), z)?;
    Ok(match prefactor {
        Some(pre) => pre.mul(&f),
        None => f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    #[test]
    fn central_binomial_squares() {
        // 2F1(1/2, 1/2; 1; z) has coefficients binom(2n, n)^2 / 16^n
        let p = HypergeomParams::new(rat(1, 2), rat(1, 2), int(1)).unwrap();
        let c = f21_coeffs(&p, 5);
        assert_eq!(c, vec![int(1), rat(1, 4), rat(9, 64), rat(25, 256), rat(1225, 16384)]);
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, b; c; z) is a quadratic polynomial
        let p = HypergeomParams::new(int(-2), int(1), int(1)).unwrap();
        let c = f21_coeffs(&p, 5);
        assert_eq!(c, vec![int(1), int(-2), int(1), int(0), int(0)]);
    }

    #[test]
    fn bad_lower_parameter() {
        assert!(HypergeomParams::new(int(1), int(1), int(0)).is_err());
        assert!(HypergeomParams::new(int(1), int(1), int(-3)).is_err());
        assert!(HypergeomParams::new(int(1), int(1), rat(-1, 2)).is_ok());
    }

    #[test]
    fn geometric_special_case() {
        // 2F1(1, b; b; z) = 1/(1 - z)
        let p = HypergeomParams::new(int(1), rat(2, 7), rat(2, 7)).unwrap();
        let z: Series<Rational> = Series::monomial(int(1), &int(1), &int(12));
        let f = f21_compose(&p, &z, None).unwrap();
        let g = Series::constant(int(1), &int(12)).sub(&z).invert().unwrap();
        assert!(f.sub(&g).is_zero());
    }
}

//! q-derivatives, Schwarzians, chain-rule derivatives and rational functions of series.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::field::{int, Field, Rational};
use crate::series::Series;
use crate::Error;

/// The operator `D = q d/dq`, which equals `(1/2πi) d/dτ`.
pub fn dq<F: Field>(x: &Series<F>) -> Series<F> {
    x.dq()
}

/// `D³x/Dx − (3/2)(D²x/Dx)²`, the Schwarzian derivative in the variable `log q`.
pub fn schwarzian_q<F: Field>(x: &Series<F>) -> Result<Series<F>, Error> {
    let d1 = x.dq();
    if d1.is_zero() {
        return Err(Error::ZeroDerivative);
    }
    let inv = d1.invert()?;
    let d2 = d1.dq();
    let d3 = d2.dq();
    let r2 = d2.mul(&inv);
    let r3 = d3.mul(&inv);
    let three_halves = F::from_rational(Rational::new(3.into(), 2.into()));
    Ok(r3.sub(&r2.mul(&r2).scale(&three_halves)))
}

/// `dy/ds` for series `y`, `s` in q, computed as `Dy / Ds`.
pub fn chain_d<F: Field>(y: &Series<F>, s: &Series<F>) -> Result<Series<F>, Error> {
    let ds = s.dq();
    if ds.is_zero() {
        return Err(Error::ZeroDerivative);
    }
    Ok(y.dq().mul(&ds.invert()?))
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = F::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    fn negated(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(F::one()), |acc, _| acc.times(self))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("division by the zero polynomial").inv().unwrap();
        let dn = d.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dn {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + dn - 1].mul(&dl);
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(dj));
                }
            }
            q[k] = c;
        }
        r.truncate(dn - 1);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// `p(s)` by Horner's rule.
    pub fn eval_series(&self, s: &Series<F>) -> Series<F> {
        let bound = s.bound();
        let mut acc = Series::zero(&bound);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(s).add(&Series::constant(c.clone(), &bound));
        }
        acc
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})s")?,
                _ => write!(f, "({c})s^{i}")?,
            }
        }
        Ok(())
    }
}

/// A reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let l = den.lead().unwrap().inv().unwrap();
        RatFun { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn x() -> Self {
        Poly::x().into()
    }

    pub fn constant(c: F) -> Self {
        Poly::constant(c).into()
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    fn plus(&self, o: &Self) -> Self {
        Self::new(self.num.times(&o.den).plus(&o.num.times(&self.den)), self.den.times(&o.den))
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn negated(&self) -> Self {
        RatFun { num: self.num.negated(), den: self.den.clone() }
    }

    fn times(&self, o: &Self) -> Self {
        Self::new(self.num.times(&o.num), self.den.times(&o.den))
    }

    fn divided(&self, o: &Self) -> Self {
        Self::new(self.num.times(&o.den), self.den.times(&o.num))
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFun { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// `R(s)` as a series: numerator times the reciprocal of the denominator.
    pub fn eval_series(&self, s: &Series<F>) -> Result<Series<F>, Error> {
        let n = self.num.eval_series(s);
        if self.den.degree() == Some(0) {
            return Ok(n.scale(&self.den.coeffs[0].inv().unwrap()));
        }
        Ok(n.mul(&self.den.eval_series(s).invert()?))
    }
}

impl<F: Field> From<Poly<F>> for RatFun<F> {
    fn from(p: Poly<F>) -> Self {
        RatFun { num: p, den: Poly::constant(F::one()) }
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

/// `A(s) y'' + B(s) y' + C(s) y = 0` with derivatives taken in `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOde<F> {
    pub a: Poly<F>,
    pub b: Poly<F>,
    pub c: Poly<F>,
}

impl<F: Field> LinearOde<F> {
    /// Clear the denominators of `y'' + p1 y' + p0 y = 0` by their least common multiple.
    pub fn from_normal(p1: &RatFun<F>, p0: &RatFun<F>) -> Self {
        let g = p1.den.gcd(&p0.den);
        let (l, _) = p1.den.times(&p0.den).divrem(&g);
        let (m1, _) = l.divrem(&p1.den);
        let (m0, _) = l.divrem(&p0.den);
        LinearOde { b: p1.num.times(&m1), c: p0.num.times(&m0), a: l }
    }

    /// The left-hand side evaluated on series `y(q)` and `s(q)`.
    pub fn residual(&self, y: &Series<F>, s: &Series<F>) -> Result<Series<F>, Error> {
        let y1 = chain_d(y, s)?;
        let y2 = chain_d(&y1, s)?;
        let a = self.a.eval_series(s);
        let b = self.b.eval_series(s);
        let c = self.c.eval_series(s);
        Ok(a.mul(&y2).add(&b.mul(&y1)).add(&c.mul(y)))
    }
}

impl<F: Field> fmt::Display for LinearOde<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] y'' + [{}] y' + [{}] y = 0", self.a, self.b, self.c)
    }
}

macro_rules! algebra_ops {
    ($ty:ident) => {
        algebra_ops!(@bin $ty, Add, add, plus);
        algebra_ops!(@bin $ty, Sub, sub, minus);
        algebra_ops!(@bin $ty, Mul, mul, times);
        impl<F: Field> Neg for $ty<F> {
            type Output = $ty<F>;
            fn neg(self) -> Self {
                self.negated()
            }
        }
        impl<F: Field> Neg for &$ty<F> {
            type Output = $ty<F>;
            fn neg(self) -> $ty<F> {
                self.negated()
            }
        }
    };
    (@bin $ty:ident, $tr:ident, $m:ident, $h:ident) => {
        impl<F: Field> $tr for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: Self) -> Self {
                self.$h(&o)
            }
        }
        impl<F: Field> $tr<&$ty<F>> for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: &$ty<F>) -> $ty<F> {
                self.$h(o)
            }
        }
        impl<F: Field> $tr<$ty<F>> for &$ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: $ty<F>) -> $ty<F> {
                self.$h(&o)
            }
        }
        impl<F: Field> $tr<&$ty<F>> for &$ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: &$ty<F>) -> $ty<F> {
                self.$h(o)
            }
        }
        impl<F: Field> $tr<i64> for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: i64) -> $ty<F> {
                self.$h(&$ty::from_int(o))
            }
        }
        impl<F: Field> $tr<i64> for &$ty<F> {
            type Output = $ty<F>;
            fn $m(self, o: i64) -> $ty<F> {
                self.$h(&$ty::from_int(o))
            }
        }
        impl<F: Field> $tr<$ty<F>> for i64 {
            type Output = $ty<F>;
            fn $m(self, o: $ty<F>) -> $ty<F> {
                $ty::from_int(self).$h(&o)
            }
        }
        impl<F: Field> $tr<&$ty<F>> for i64 {
            type Output = $ty<F>;
            fn $m(self, o: &$ty<F>) -> $ty<F> {
                $ty::from_int(self).$h(o)
            }
        }
    };
}

impl<F: Field> Poly<F> {
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_rational(int(n)))
    }
}

impl<F: Field> RatFun<F> {
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_rational(int(n)))
    }
}

algebra_ops!(Poly);
algebra_ops!(RatFun);

algebra_ops!(@bin RatFun, Div, div, divided);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type S = Series<Rational>;
    type R = RatFun<Rational>;

    fn q_poly(cs: &[i64], bound: i64) -> S {
        S::from_terms(cs.iter().enumerate().map(|(i, &c)| (int(i as i64), int(c))).collect(), &int(bound))
    }

    #[test]
    fn schwarzian_of_q_is_minus_half() {
        let q = S::monomial(int(1), &int(1), &int(10));
        let s = schwarzian_q(&q).unwrap();
        let expect = S::constant(rat(-1, 2), &int(10));
        assert!(s.sub(&expect).is_zero());
        assert_eq!(schwarzian_q(&S::constant(int(3), &int(5))), Err(Error::ZeroDerivative));
    }

    #[test]
    fn schwarzian_mobius_invariant() {
        let x = q_poly(&[0, 1, 3, -2, 5], 12);
        let m = x.scale(&int(2)).add_scalar(&int(1)).div(&x.add_scalar(&int(3))).unwrap();
        let d = schwarzian_q(&x).unwrap().sub(&schwarzian_q(&m).unwrap());
        assert!(d.is_zero());
    }

    #[test]
    fn chain_rule_of_square() {
        let s = q_poly(&[0, 1, 1], 10);
        let y = s.mul(&s);
        let dy = chain_d(&y, &s).unwrap();
        assert!(dy.sub(&s.scale(&int(2))).is_zero());
    }

    #[test]
    fn poly_gcd_and_division() {
        let x = Poly::<Rational>::x();
        let p = (x.clone() - 1) * (x.clone() + 2);
        let q = (x.clone() - 1) * (x.clone() - 3);
        assert_eq!(p.gcd(&q), x.clone() - 1);
        let (quo, rem) = p.divrem(&(x.clone() + 2));
        assert_eq!(quo, x - 1);
        assert!(rem.is_zero());
    }

    #[test]
    fn ratfun_reduces() {
        let x = R::x();
        let r = (x.clone() * x.clone() - 1) / (x.clone() - 1);
        assert_eq!(r, x + 1);
    }

    #[test]
    fn from_normal_clears_denominators() {
        // y'' + (1/s + 1/(s-1)) y' + 1/(s(s-1)) y
        let s = R::x();
        let p1 = 1 / s.clone() + 1 / (s.clone() - 1);
        let p0 = 1 / (s.clone() * (s - 1));
        let ode = LinearOde::from_normal(&p1, &p0);
        let x = Poly::<Rational>::x();
        assert_eq!(ode.a, x.clone() * (x.clone() - 1));
        assert_eq!(ode.b, 2 * x - 1);
        assert_eq!(ode.c, Poly::constant(int(1)));
    }

    #[test]
    fn ode_residual_for_geometric() {
        // y = 1/(1-s) solves (1-s) y' - y = 0, written with a = 0
        let s = q_poly(&[0, 1, 2], 10);
        let y = S::constant(int(1), &int(10)).sub(&s).invert().unwrap();
        let x = Poly::<Rational>::x();
        let ode = LinearOde { a: Poly::zero(), b: 1 - x, c: Poly::constant(int(-1)) };
        assert!(ode.residual(&y, &s).unwrap().is_zero());
    }
}

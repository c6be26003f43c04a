//! Truncated Puiseux series in q with exact coefficients.
//!
//! A series stores coefficients on the exponent grid `shift + k/denom` for consecutive
//! integers `k`, together with a truncation index. Every exponent strictly below
//! `shift + trunc/denom` is known exactly; exponents off the grid are structurally zero.
//! The rational `shift` lets quantities like `q^(1/48) (1 + O(q^(1/2)))` stay dense on a
//! coarse grid.

use std::cmp::{max, min};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::field::{rat, Field, FieldTag, Rational};
use crate::Error;

pub(crate) fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("series index out of range")
}

pub(crate) fn ceil_i64(r: &Rational) -> i64 {
    r.ceil().to_integer().to_i64().expect("series index out of range")
}

fn den_i64(r: &Rational) -> i64 {
    r.denom().to_i64().expect("denominator out of range")
}

fn frac_index(n: i64, d: i64) -> Rational {
    rat(n, d)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<F> {
    denom: i64,
    shift: Rational,
    start: i64,
    coeffs: Vec<F>,
    trunc: i64,
}

impl<F: Field> Series<F> {
    fn raw(denom: i64, shift: Rational, start: i64, mut coeffs: Vec<F>, trunc: i64) -> Self {
        debug_assert!(denom > 0);
        let len = max(trunc - start, 0) as usize;
        coeffs.truncate(len);
        coeffs.resize(len, F::zero());
        let mut s = Series { denom, shift, start, coeffs, trunc: max(trunc, start) };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.start += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.start = self.trunc;
            }
        }
    }

    /// Grid position for exponent `e` on a grid of spacing `1/denom`: (index, shift).
    fn grid_of(e: &Rational, denom: i64) -> (i64, Rational) {
        let idx = floor_i64(&(e * BigInt::from(denom)));
        let shift = e - frac_index(idx, denom);
        (idx, shift)
    }

    fn bound_index(&self, bound: &Rational) -> i64 {
        ceil_i64(&((bound - &self.shift) * BigInt::from(self.denom)))
    }

    /// Series whose coefficient `rel[k]` sits at exponent `lead + k/denom`, exact below
    /// `lead + rel.len()/denom`.
    pub fn from_relative(denom: i64, lead: &Rational, rel: Vec<F>) -> Self {
        let (idx, shift) = Self::grid_of(lead, denom);
        let trunc = idx + rel.len() as i64;
        Self::raw(denom, shift, idx, rel, trunc)
    }

    /// Series from explicit `(exponent, coefficient)` terms, exact below `bound`.
    /// Terms at or above `bound` are dropped. The grid is the coarsest one holding every
    /// term and the bound itself.
    pub fn from_terms(terms: Vec<(Rational, F)>, bound: &Rational) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(e, c)| e < bound && !c.is_zero()).collect();
        let Some(e0) = terms.iter().map(|(e, _)| e.clone()).min() else {
            return Self::zero(bound);
        };
        let mut denom = den_i64(&(bound - &e0));
        for (e, _) in &terms {
            denom = denom.lcm(&den_i64(&(e - &e0)));
        }
        let (start, shift) = Self::grid_of(&e0, denom);
        let trunc = ceil_i64(&((bound - &shift) * BigInt::from(denom)));
        let mut coeffs = vec![F::zero(); (trunc - start) as usize];
        for (e, c) in terms {
            let k = ((&e - &shift) * BigInt::from(denom)).to_integer().to_i64().unwrap();
            let slot = &mut coeffs[(k - start) as usize];
            *slot = slot.add(&c);
        }
        Self::raw(denom, shift, start, coeffs, trunc)
    }

    /// The zero series, exact below `bound`.
    pub fn zero(bound: &Rational) -> Self {
        let (idx, shift) = Self::grid_of(bound, 1);
        Self::raw(1, shift, idx, Vec::new(), idx)
    }

    pub fn constant(c: F, bound: &Rational) -> Self {
        Self::from_terms(vec![(<Rational as Zero>::zero(), c)], bound)
    }

    pub fn monomial(c: F, e: &Rational, bound: &Rational) -> Self {
        Self::from_terms(vec![(e.clone(), c)], bound)
    }

    /// Grid denominator.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Exponents strictly below this bound are exact.
    pub fn bound(&self) -> Rational {
        &self.shift + frac_index(self.trunc, self.denom)
    }

    /// Exponent of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<Rational> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.exponent(self.start))
        }
    }

    /// Valuation, or the truncation bound for a series that is zero to its precision.
    fn val_or_bound(&self) -> Rational {
        self.valuation().unwrap_or_else(|| self.bound())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.coeffs.first()
    }

    fn exponent(&self, idx: i64) -> Rational {
        &self.shift + frac_index(idx, self.denom)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &F)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.exponent(self.start + i as i64), c))
    }

    pub fn first_nonzero(&self) -> Option<(Rational, F)> {
        self.terms().next().map(|(e, c)| (e, c.clone()))
    }

    /// Coefficient of `q^e`. Off-grid exponents below the bound are zero.
    pub fn coeff_at(&self, e: &Rational) -> Result<F, Error> {
        if *e >= self.bound() {
            return Err(Error::BeyondTruncation(e.to_string()));
        }
        let k = (e - &self.shift) * BigInt::from(self.denom);
        if !k.is_integer() {
            return Ok(F::zero());
        }
        let k = k.to_integer().to_i64().unwrap();
        if k < self.start {
            return Ok(F::zero());
        }
        Ok(self.coeffs[(k - self.start) as usize].clone())
    }

    /// Widest field any coefficient needs.
    pub fn tag(&self) -> FieldTag {
        self.coeffs.iter().map(|c| c.tag()).max().unwrap_or(FieldTag::Rational)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series<G> {
        Series::raw(
            self.denom,
            self.shift.clone(),
            self.start,
            self.coeffs.iter().map(f).collect(),
            self.trunc,
        )
    }

    /// Lower the truncation bound to `bound` if it is currently higher.
    pub fn truncate(&self, bound: &Rational) -> Self {
        let t = min(self.trunc, self.bound_index(bound));
        Self::raw(self.denom, self.shift.clone(), self.start, self.coeffs.clone(), t)
    }

    /// Re-express on the finer grid `(denom, shift)`, which must contain the current one.
    fn regrid(&self, denom: i64, shift: &Rational) -> Self {
        if denom == self.denom && *shift == self.shift {
            return self.clone();
        }
        let a = denom / self.denom;
        let m = ((&self.shift - shift) * BigInt::from(denom)).to_integer().to_i64().unwrap();
        let start = self.start * a + m;
        let trunc = self.trunc * a + m;
        let mut coeffs = vec![F::zero(); (trunc - start) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * a as usize] = c.clone();
        }
        Series { denom, shift: shift.clone(), start, coeffs, trunc }
    }

    fn common_grid(&self, other: &Self) -> (i64, Rational) {
        let mut d = self.denom.lcm(&other.denom);
        d = d.lcm(&den_i64(&(&self.shift - &other.shift)));
        let (_, shift) = Self::grid_of(&self.shift, d);
        (d, shift)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (d, s) = self.common_grid(other);
        let x = self.regrid(d, &s);
        let y = other.regrid(d, &s);
        let trunc = min(x.trunc, y.trunc);
        let start = min(x.start, y.start);
        let mut coeffs = vec![F::zero(); max(trunc - start, 0) as usize];
        for z in [&x, &y] {
            for (i, c) in z.coeffs.iter().enumerate() {
                let k = z.start + i as i64;
                if k >= trunc {
                    break;
                }
                let slot = &mut coeffs[(k - start) as usize];
                *slot = slot.add(c);
            }
        }
        Self::raw(d, s, start, coeffs, trunc)
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().for_each(|c| *c = c.neg());
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::raw(
            self.denom,
            self.shift.clone(),
            self.start,
            self.coeffs.iter().map(|x| x.mul(c)).collect(),
            self.trunc,
        )
    }

    pub fn add_scalar(&self, c: &F) -> Self {
        self.add(&Self::constant(c.clone(), &self.bound()))
    }

    /// Product, exact below `min(T_x + v_y, T_y + v_x)`.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.denom.lcm(&other.denom);
        let (ax, ay) = (d / self.denom, d / other.denom);
        let total = &self.shift + &other.shift;
        let (m, shift) = Self::grid_of(&total, d);
        let bound = min(
            self.bound() + other.val_or_bound(),
            other.bound() + self.val_or_bound(),
        );
        let trunc = ceil_i64(&((&bound - &shift) * BigInt::from(d)));
        let start = self.start * ax + other.start * ay + m;
        if trunc <= start || self.is_zero() || other.is_zero() {
            return Self::raw(d, shift, trunc, Vec::new(), trunc);
        }
        let coeffs = F::convolve(&self.coeffs, ax as usize, &other.coeffs, ay as usize, (trunc - start) as usize);
        Self::raw(d, shift, start, coeffs, trunc)
    }

    /// Multiply by `q^e` exactly.
    pub fn shifted(&self, e: &Rational) -> Self {
        let total = &self.shift + e;
        let (m, shift) = Self::grid_of(&total, self.denom);
        Series {
            denom: self.denom,
            shift,
            start: self.start + m,
            coeffs: self.coeffs.clone(),
            trunc: self.trunc + m,
        }
    }

    /// Reciprocal. A series known to relative precision `T - v` keeps that relative
    /// precision, so the result is exact below `T - 2v`.
    pub fn invert(&self) -> Result<Self, Error> {
        let c = self.coeffs.first().ok_or(Error::ZeroSeries)?;
        let cinv = c.inv().ok_or(Error::ZeroSeries)?;
        let n = self.coeffs.len();
        let mut y: Vec<F> = Vec::with_capacity(n);
        y.push(cinv.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                let xj = &self.coeffs[j];
                if !xj.is_zero() {
                    acc = acc.add(&xj.mul(&y[k - j]));
                }
            }
            y.push(acc.mul(&cinv).neg());
        }
        let v = self.valuation().unwrap();
        Ok(Self::from_relative(self.denom, &-v, y))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.invert()?))
    }

    /// `x^r` for rational `r`, taking the exact root of the leading coefficient.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self, Error> {
        let c = self.coeffs.first().ok_or(Error::ZeroSeries)?;
        let p = r.numer().to_i64().ok_or_else(|| Error::InvalidArgument(r.to_string()))?;
        let q = r.denom().to_u32().ok_or_else(|| Error::InvalidArgument(r.to_string()))?;
        let root = c.nth_root(q).ok_or_else(|| Error::RootNotInField(c.to_string(), q))?;
        let mut lead = root.pow(p.unsigned_abs());
        if p < 0 {
            lead = lead.inv().ok_or(Error::ZeroSeries)?;
        }
        let cinv = c.inv().unwrap();
        let z: Vec<F> = self.coeffs.iter().map(|x| x.mul(&cinv)).collect();
        let n = z.len();
        let mut y: Vec<F> = Vec::with_capacity(n);
        y.push(F::one());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                if z[j].is_zero() {
                    continue;
                }
                let w = r * BigInt::from(j) - Rational::from_integer(BigInt::from(k - j));
                acc = acc.add(&z[j].mul(&y[k - j]).mul_rational(&w));
            }
            y.push(acc.mul_rational(&rat(1, k as i64)));
        }
        let y: Vec<F> = y.iter().map(|x| x.mul(&lead)).collect();
        let v = self.valuation().unwrap();
        Ok(Self::from_relative(self.denom, &(v * r), y))
    }

    pub fn pow_int(&self, k: i64) -> Result<Self, Error> {
        if k >= 0 && self.is_zero() {
            return Ok(if k == 0 {
                Self::constant(F::one(), &self.bound())
            } else {
                self.clone()
            });
        }
        match k {
            1 => Ok(self.clone()),
            2 => Ok(self.mul(self)),
            _ => self.pow_rational(&Rational::from_integer(BigInt::from(k))),
        }
    }

    /// The operator `q d/dq`: the coefficient of `q^e` is multiplied by `e`.
    pub fn dq(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul_rational(&self.exponent(self.start + i as i64)))
            .collect();
        Self::raw(self.denom, self.shift.clone(), self.start, coeffs, self.trunc)
    }

    /// Substitute `q ↦ q^r` (τ ↦ rτ) for rational `r > 0`.
    pub fn rescale(&self, r: &Rational) -> Result<Self, Error> {
        if !r.is_positive() {
            return Err(Error::InvalidArgument(format!("rescale factor {r} must be positive")));
        }
        let step = r / BigInt::from(self.denom);
        let a = step.numer().to_i64().unwrap();
        let d = step.denom().to_i64().unwrap();
        let (m, shift) = Self::grid_of(&(&self.shift * r), d);
        let start = self.start * a + m;
        let trunc = self.trunc * a + m;
        let mut coeffs = vec![F::zero(); (trunc - start) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * a as usize] = c.clone();
        }
        Ok(Self::raw(d, shift, start, coeffs, trunc))
    }

    /// `Σ outer[n] · inner^n`, evaluated by Horner's rule. The inner series must have
    /// positive valuation; the outer stream is read only as far as precision allows and
    /// may end early (a polynomial).
    pub fn compose<I>(outer: I, inner: &Self) -> Result<Self, Error>
    where
        I: IntoIterator<Item = F>,
    {
        let bound = inner.bound();
        let mut it = outer.into_iter();
        let Some(w) = inner.valuation() else {
            let c0 = it.next().unwrap_or_else(F::zero);
            return Ok(Self::constant(c0, &bound));
        };
        if !w.is_positive() {
            return Err(Error::NonPositiveValuation);
        }
        let n_terms = ceil_i64(&(&bound / &w)).max(1) as usize;
        let coeffs: Vec<F> = it.by_ref().take(n_terms).collect();
        let mut acc = Self::zero(&bound);
        for c in coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone(), &bound));
        }
        Ok(acc)
    }

    /// Serialized form on the coarsest grid holding every stored term and the bound, so
    /// equal series give equal records.
    pub fn to_record(&self) -> SeriesRecord {
        let full = self.terms().fold(den_i64(&self.bound()), |d, (e, _)| d.lcm(&den_i64(&e)));
        let scale = BigInt::from(full);
        let num = |e: Rational| (e * &scale).to_integer().to_i64().unwrap();
        SeriesRecord {
            field: self.tag(),
            denom: full,
            terms: self.terms().map(|(e, c)| (num(e), c.to_string())).collect(),
            trunc: num(self.bound()),
        }
    }
}

impl<F: Field + FromStr> Series<F> {
    pub fn from_record(rec: &SeriesRecord) -> Result<Self, Error> {
        if rec.denom <= 0 {
            return Err(Error::Parse(format!("grid denominator {} must be positive", rec.denom)));
        }
        let mut terms = Vec::with_capacity(rec.terms.len());
        let mut last: Option<i64> = None;
        for (e, c) in &rec.terms {
            if last.is_some_and(|l| *e <= l) || *e >= rec.trunc {
                return Err(Error::Parse(format!("exponent numerator {e} out of order")));
            }
            last = Some(*e);
            let c: F = c.parse().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            terms.push((rat(*e, rec.denom), c));
        }
        Ok(Self::from_terms(terms, &rat(rec.trunc, rec.denom)))
    }
}

/// Serialized form: exponents are numerators over the common grid denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub field: FieldTag,
    pub denom: i64,
    pub terms: Vec<(i64, String)>,
    pub trunc: i64,
}

macro_rules! series_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<&Series<F>> for &Series<F> {
            type Output = Series<F>;
            fn $m(self, rhs: &Series<F>) -> Series<F> {
                Series::$m(self, rhs)
            }
        }
    };
}

series_binop!(Add, add);
series_binop!(Sub, sub);
series_binop!(Mul, mul);

impl<F: Field> Neg for &Series<F> {
    type Output = Series<F>;
    fn neg(self) -> Series<F> {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    type S = Series<Rational>;

    fn poly(cs: &[i64], bound: i64) -> S {
        S::from_terms(cs.iter().enumerate().map(|(i, &c)| (int(i as i64), int(c))).collect(), &int(bound))
    }

    #[test]
    fn monomial_with_fractional_exponent() {
        let m = S::monomial(int(3), &rat(1, 3), &int(5));
        assert_eq!(m.valuation(), Some(rat(1, 3)));
        assert_eq!(m.coeff_at(&rat(1, 3)).unwrap(), int(3));
        assert_eq!(m.coeff_at(&rat(1, 2)).unwrap(), int(0));
        assert!(m.coeff_at(&int(5)).is_err());
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = poly(&[1, -1], 10);
        let inv = one_minus_q.invert().unwrap();
        for k in 0..10 {
            assert_eq!(inv.coeff_at(&int(k)).unwrap(), int(1));
        }
        assert_eq!(inv.bound(), int(10));
    }

    #[test]
    fn laurent_truncation() {
        // q + q^2 known below q^6: its reciprocal is known below q^4
        let x = S::from_terms(vec![(int(1), int(1)), (int(2), int(1))], &int(6));
        let y = x.invert().unwrap();
        assert_eq!(y.valuation(), Some(int(-1)));
        assert_eq!(y.bound(), int(4));
        let p = x.mul(&y);
        assert_eq!(p.first_nonzero(), Some((int(0), int(1))));
        assert_eq!(p.bound(), int(5));
        assert!(p.sub(&S::constant(int(1), &int(5))).is_zero());
    }

    #[test]
    fn mixed_grids_add() {
        let a = S::monomial(int(1), &rat(1, 2), &int(3));
        let b = S::monomial(int(2), &rat(1, 3), &int(2));
        let s = a.add(&b);
        assert_eq!(s.bound(), int(2));
        assert_eq!(s.coeff_at(&rat(1, 3)).unwrap(), int(2));
        assert_eq!(s.coeff_at(&rat(1, 2)).unwrap(), int(1));
        assert_eq!(s.valuation(), Some(rat(1, 3)));
    }

    #[test]
    fn pow_rational_square_root() {
        // (1 + q)^2 then sqrt returns 1 + q
        let x = poly(&[1, 1], 8);
        let sq = x.mul(&x);
        let r = sq.pow_rational(&rat(1, 2)).unwrap();
        assert!(r.sub(&x).is_zero());
        // 27 q (1 + q)^3 cube root is 3 q^(1/3)(1 + q)
        let c = sq.mul(&x).scale(&int(27)).shifted(&int(1));
        let r = c.pow_rational(&rat(1, 3)).unwrap();
        assert_eq!(r.valuation(), Some(rat(1, 3)));
        assert_eq!(r.coeff_at(&rat(4, 3)).unwrap(), int(3));
        assert_eq!(r.coeff_at(&rat(7, 3)).unwrap(), int(0));
        assert!(poly(&[2, 1], 4).pow_rational(&rat(1, 2)).is_err());
    }

    #[test]
    fn rescale_and_dq() {
        let x = poly(&[1, 2, 3], 3);
        let y = x.rescale(&rat(1, 2)).unwrap();
        assert_eq!(y.coeff_at(&rat(1, 2)).unwrap(), int(2));
        assert_eq!(y.bound(), rat(3, 2));
        let d = y.dq();
        assert_eq!(d.coeff_at(&int(1)).unwrap(), int(3));
        assert_eq!(d.coeff_at(&int(0)).unwrap(), int(0));
    }

    #[test]
    fn compose_exp_like() {
        // 1/(1 - x) with x = q + q^2
        let inner = S::from_terms(vec![(int(1), int(1)), (int(2), int(1))], &int(8));
        let outer = std::iter::repeat(int(1));
        let c = S::compose(outer, &inner).unwrap();
        let direct = poly(&[1], 8).sub(&inner).invert().unwrap();
        assert!(c.sub(&direct).is_zero());
        assert_eq!(c.bound(), int(8));
        assert!(S::compose(std::iter::repeat(int(1)), &poly(&[1, 1], 4)).is_err());
    }

    #[test]
    fn record_roundtrip() {
        let a = S::monomial(int(3), &rat(1, 8), &int(2)).add(&S::monomial(rat(-1, 2), &rat(5, 8), &int(2)));
        let rec = a.to_record();
        assert_eq!(rec.denom, 8);
        assert_eq!(rec.terms, vec![(1, "3".to_string()), (5, "-1/2".to_string())]);
        assert_eq!(S::from_record(&rec).unwrap(), a);
    }
}

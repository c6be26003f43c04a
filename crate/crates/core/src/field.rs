//! Exact coefficient fields: the rationals and the quadratic extension ℚ(√5).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Which field a value or series lives in. `Rational` embeds into `Sqrt5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Q(sqrt5)")]
    Sqrt5,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => f.write_str("Q"),
            FieldTag::Sqrt5 => f.write_str("Q(sqrt5)"),
        }
    }
}

/// Operations the series kernel needs from a coefficient field.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;
    fn tag(&self) -> FieldTag;
    /// Exact `n`-th root inside the field, if one exists.
    fn nth_root(&self, n: u32) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn mul_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r.clone()))
    }

    /// `out[i·sx + j·sy] += x[i]·y[j]` for every index below `len`.
    fn convolve(x: &[Self], sx: usize, y: &[Self], sy: usize, len: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(); len];
        for (i, xi) in x.iter().enumerate() {
            if i * sx >= len {
                break;
            }
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let k = i * sx + j * sy;
                if k >= len {
                    break;
                }
                if !yj.is_zero() {
                    out[k] = out[k].add(&xi.mul(yj));
                }
            }
        }
        out
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Exact `n`-th root of a rational. Negative inputs have a root only for odd `n`.
pub fn nth_root_if_exact(x: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if Zero::is_zero(x) {
        return Some(Zero::zero());
    }
    if x.is_negative() {
        if n.is_multiple_of(2) {
            return None;
        }
        return nth_root_if_exact(&-x, n).map(|r| -r);
    }
    let num = x.numer().nth_root(n);
    let den = x.denom().nth_root(n);
    if num.pow(n) == *x.numer() && den.pow(n) == *x.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        nth_root_if_exact(self, n)
    }
}

/// An element `a + b√5` of ℚ(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    /// The Galois automorphism √5 ↦ −√5.
    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(5) * &self.b * &self.b
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        QuadExt::new(One::one(), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt::new(&self.a - &o.a, &self.b - &o.b)
    }
    fn mul(&self, o: &Self) -> Self {
        let a = &self.a * &o.a + int(5) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadExt::new(a, b)
    }
    fn neg(&self) -> Self {
        QuadExt::new(-&self.a, -&self.b)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(QuadExt::new(&self.a / &n, -&self.b / &n))
    }
    fn from_rational(r: Rational) -> Self {
        QuadExt::new(r, Zero::zero())
    }
    fn tag(&self) -> FieldTag {
        if Zero::is_zero(&self.b) {
            FieldTag::Rational
        } else {
            FieldTag::Sqrt5
        }
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        if Zero::is_zero(&self.b) {
            nth_root_if_exact(&self.a, n).map(Self::from_rational)
        } else if n == 1 {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", self.a);
        }
        if !Zero::is_zero(&self.a) {
            write!(f, "{}", self.a)?;
            if self.b.is_negative() {
                write!(f, "-{}*sqrt5", -&self.b)
            } else {
                write!(f, "+{}*sqrt5", self.b)
            }
        } else {
            write!(f, "{}*sqrt5", self.b)
        }
    }
}

/// A coefficient in ℚ or ℚ(√5). Values with zero √5-part are always stored as `Rat`,
/// so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rat(Rational),
    Sqrt5(QuadExt),
}

impl FieldValue {
    pub fn quad(a: Rational, b: Rational) -> Self {
        if Zero::is_zero(&b) {
            FieldValue::Rat(a)
        } else {
            FieldValue::Sqrt5(QuadExt::new(a, b))
        }
    }

    fn from_quad(q: QuadExt) -> Self {
        FieldValue::quad(q.a, q.b)
    }

    pub fn to_quad(&self) -> QuadExt {
        match self {
            FieldValue::Rat(r) => QuadExt::from_rational(r.clone()),
            FieldValue::Sqrt5(q) => q.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            FieldValue::Rat(_) => self.clone(),
            FieldValue::Sqrt5(q) => FieldValue::Sqrt5(q.conj()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldValue::Rat(r) => Some(r),
            FieldValue::Sqrt5(_) => None,
        }
    }

    pub fn sqrt5() -> Self {
        FieldValue::quad(Zero::zero(), One::one())
    }
}

impl From<Rational> for FieldValue {
    fn from(r: Rational) -> Self {
        FieldValue::Rat(r)
    }
}

impl From<i64> for FieldValue {
    fn from(n: i64) -> Self {
        FieldValue::Rat(int(n))
    }
}

impl From<QuadExt> for FieldValue {
    fn from(q: QuadExt) -> Self {
        FieldValue::from_quad(q)
    }
}

/// Integer numerators of `a + b√5` over one common denominator; `b` is `None` when every
/// value is rational.
fn common_denominator(v: &[FieldValue]) -> (BigInt, Vec<BigInt>, Option<Vec<BigInt>>) {
    use num_integer::Integer;
    let mut d = BigInt::one();
    let mut quad = false;
    for x in v {
        match x {
            FieldValue::Rat(r) => d = d.lcm(r.denom()),
            FieldValue::Sqrt5(q) => {
                quad = true;
                d = d.lcm(q.a.denom()).lcm(q.b.denom());
            }
        }
    }
    let scale = |r: &Rational| r.numer() * (&d / r.denom());
    let a = v
        .iter()
        .map(|x| match x {
            FieldValue::Rat(r) => scale(r),
            FieldValue::Sqrt5(q) => scale(&q.a),
        })
        .collect();
    let b = quad.then(|| {
        v.iter()
            .map(|x| match x {
                FieldValue::Rat(_) => BigInt::zero(),
                FieldValue::Sqrt5(q) => scale(&q.b),
            })
            .collect()
    });
    (d, a, b)
}

fn int_convolve(x: &[BigInt], sx: usize, y: &[BigInt], sy: usize, out: &mut [BigInt], factor: u32) {
    let len = out.len();
    for (i, xi) in x.iter().enumerate() {
        if i * sx >= len {
            break;
        }
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let k = i * sx + j * sy;
            if k >= len {
                break;
            }
            if !yj.is_zero() {
                let p = xi * yj;
                out[k] += if factor == 1 { p } else { p * factor };
            }
        }
    }
}

impl Field for FieldValue {
    fn convolve(x: &[Self], sx: usize, y: &[Self], sy: usize, len: usize) -> Vec<Self> {
        let (dx, xa, xb) = common_denominator(x);
        let (dy, ya, yb) = common_denominator(y);
        let d = dx * dy;
        let mut a = vec![BigInt::zero(); len];
        int_convolve(&xa, sx, &ya, sy, &mut a, 1);
        if let (Some(xb), Some(yb)) = (&xb, &yb) {
            int_convolve(xb, sx, yb, sy, &mut a, 5);
        }
        let mut b = vec![BigInt::zero(); len];
        if let Some(xb) = &xb {
            int_convolve(xb, sx, &ya, sy, &mut b, 1);
        }
        if let Some(yb) = &yb {
            int_convolve(&xa, sx, yb, sy, &mut b, 1);
        }
        a.into_iter()
            .zip(b)
            .map(|(a, b)| FieldValue::quad(Rational::new(a, d.clone()), Rational::new(b, d.clone())))
            .collect()
    }


    fn zero() -> Self {
        FieldValue::Rat(Zero::zero())
    }
    fn one() -> Self {
        FieldValue::Rat(One::one())
    }
    fn is_zero(&self) -> bool {
        matches!(self, FieldValue::Rat(r) if Zero::is_zero(r))
    }
    fn add(&self, o: &Self) -> Self {
        match (self, o) {
            (FieldValue::Rat(x), FieldValue::Rat(y)) => FieldValue::Rat(x + y),
            _ => FieldValue::from_quad(self.to_quad().add(&o.to_quad())),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        match (self, o) {
            (FieldValue::Rat(x), FieldValue::Rat(y)) => FieldValue::Rat(x - y),
            _ => FieldValue::from_quad(self.to_quad().sub(&o.to_quad())),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        match (self, o) {
            (FieldValue::Rat(x), FieldValue::Rat(y)) => FieldValue::Rat(x * y),
            (FieldValue::Rat(x), FieldValue::Sqrt5(q)) | (FieldValue::Sqrt5(q), FieldValue::Rat(x)) => {
                FieldValue::quad(x * &q.a, x * &q.b)
            }
            (FieldValue::Sqrt5(p), FieldValue::Sqrt5(q)) => FieldValue::from_quad(p.mul(q)),
        }
    }
    fn neg(&self) -> Self {
        match self {
            FieldValue::Rat(x) => FieldValue::Rat(-x),
            FieldValue::Sqrt5(q) => FieldValue::Sqrt5(Field::neg(q)),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            FieldValue::Rat(x) => Field::inv(x).map(FieldValue::Rat),
            FieldValue::Sqrt5(q) => Field::inv(q).map(FieldValue::from_quad),
        }
    }
    fn from_rational(r: Rational) -> Self {
        FieldValue::Rat(r)
    }
    fn tag(&self) -> FieldTag {
        match self {
            FieldValue::Rat(_) => FieldTag::Rational,
            FieldValue::Sqrt5(_) => FieldTag::Sqrt5,
        }
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        match self {
            FieldValue::Rat(x) => nth_root_if_exact(x, n).map(FieldValue::Rat),
            FieldValue::Sqrt5(q) => q.nth_root(n).map(FieldValue::from_quad),
        }
    }
    fn mul_rational(&self, r: &Rational) -> Self {
        match self {
            FieldValue::Rat(x) => FieldValue::Rat(x * r),
            FieldValue::Sqrt5(q) => FieldValue::quad(&q.a * r, &q.b * r),
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rat(r) => write!(f, "{r}"),
            FieldValue::Sqrt5(q) => write!(f, "{q}"),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let r = Rational::from_str(s).map_err(|_| bad())?;
    Ok(r)
}

impl FromStr for FieldValue {
    type Err = Error;

    /// Accepts `p`, `p/q`, `b*sqrt5`, `a+b*sqrt5`, `a-b*sqrt5`, and bare `sqrt5` multiples.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix("sqrt5") else {
            return parse_rational(&s).map(FieldValue::Rat);
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_str, b_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let b = match b_str {
            "" | "+" => int(1),
            "-" => int(-1),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(FieldValue::quad(parse_rational(a_str)?, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(s: &str) -> FieldValue {
        s.parse().unwrap()
    }

    #[test]
    fn quad_product_rule() {
        let x = fv("1+1*sqrt5");
        let y = fv("1-1*sqrt5");
        assert_eq!(x.mul(&y), FieldValue::from(-4));
        let phi = fv("1/2+1/2*sqrt5");
        assert_eq!(phi.mul(&phi), phi.add(&FieldValue::one()));
    }

    #[test]
    fn inverse_and_conjugate() {
        let x = fv("3/2-7/4*sqrt5");
        assert_eq!(x.mul(&x.inv().unwrap()), FieldValue::one());
        assert_eq!(x.conj(), fv("3/2+7/4*sqrt5"));
        assert!(FieldValue::zero().inv().is_none());
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["0", "-5/2", "5/2+5/2*sqrt5", "-11/2-5/2*sqrt5", "4/5*sqrt5", "-1*sqrt5"] {
            assert_eq!(fv(s).to_string(), s);
        }
        assert_eq!(fv("sqrt5"), FieldValue::sqrt5());
        assert_eq!(fv("2 - sqrt5"), FieldValue::quad(int(2), int(-1)));
        assert!("1/0".parse::<FieldValue>().is_err());
        assert!("abc".parse::<FieldValue>().is_err());
    }

    #[test]
    fn zero_sqrt5_part_is_rational() {
        let x = fv("1+1*sqrt5").add(&fv("-1*sqrt5"));
        assert_eq!(x.tag(), FieldTag::Rational);
        assert_eq!(x, FieldValue::one());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(nth_root_if_exact(&rat(27, 8), 3), Some(rat(3, 2)));
        assert_eq!(nth_root_if_exact(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(nth_root_if_exact(&int(2), 2), None);
        assert_eq!(nth_root_if_exact(&int(-4), 2), None);
        assert_eq!(nth_root_if_exact(&int(16), 4), Some(int(2)));
    }
}

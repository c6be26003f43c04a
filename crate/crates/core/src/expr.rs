//! Expressions over catalog forms, evaluated to q-series.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::field::{int, rat, Field, FieldValue, Rational};
use crate::forms::{Catalog, FormId};
use crate::{Error, QSeries};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Form(FormId),
    Const(FieldValue),
    Add(Expr, Expr),
    Sub(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Neg(Expr),
    Pow(Expr, Rational),
    /// τ ↦ rτ.
    Rescale(Expr, Rational),
    /// `q d/dq`.
    D(Expr),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr(Arc<Node>);

pub fn form(id: FormId) -> Expr {
    Expr(Arc::new(Node::Form(id)))
}

pub fn k(c: impl Into<FieldValue>) -> Expr {
    Expr(Arc::new(Node::Const(c.into())))
}

/// The constant `p/q`.
pub fn kr(p: i64, q: i64) -> Expr {
    k(rat(p, q))
}

/// The constant `a + b√5`.
pub fn kq(a: Rational, b: Rational) -> Expr {
    k(FieldValue::quad(a, b))
}

impl Expr {
    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn pow(&self, n: i64) -> Expr {
        Expr(Arc::new(Node::Pow(self.clone(), int(n))))
    }

    pub fn pow_rat(&self, r: Rational) -> Expr {
        Expr(Arc::new(Node::Pow(self.clone(), r)))
    }

    pub fn at(&self, r: Rational) -> Expr {
        Expr(Arc::new(Node::Rescale(self.clone(), r)))
    }

    pub fn d(&self) -> Expr {
        Expr(Arc::new(Node::D(self.clone())))
    }

    pub fn inv(&self) -> Expr {
        self.pow(-1)
    }

    /// Forms this expression reads, in first-use order.
    pub fn forms(&self) -> Vec<FormId> {
        let mut out = Vec::new();
        self.collect_forms(&mut out);
        out
    }

    fn collect_forms(&self, out: &mut Vec<FormId>) {
        match self.node() {
            Node::Form(id) => {
                if !out.contains(id) {
                    out.push(*id)
                }
            }
            Node::Const(_) => {}
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.collect_forms(out);
                b.collect_forms(out);
            }
            Node::Neg(a) | Node::Pow(a, _) | Node::Rescale(a, _) | Node::D(a) => a.collect_forms(out),
        }
    }

    fn precedence(&self) -> u8 {
        match self.node() {
            Node::Add(..) | Node::Sub(..) => 1,
            Node::Mul(..) | Node::Div(..) | Node::Neg(_) => 2,
            Node::Const(c) if c.to_string().contains(['/', '+', '-']) => 2,
            _ => 3,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Form(id) => write!(f, "{}", id.name()),
            Node::Const(c) => write!(f, "{c}"),
            Node::Add(a, b) => {
                write!(f, "{a} + ")?;
                wrap(f, b, 2)
            }
            Node::Sub(a, b) => {
                write!(f, "{a} - ")?;
                wrap(f, b, 2)
            }
            Node::Mul(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("*")?;
                wrap(f, b, 3)
            }
            Node::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("/")?;
                wrap(f, b, 3)
            }
            Node::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Node::Pow(a, r) => {
                wrap(f, a, 3)?;
                if r.is_integer() {
                    write!(f, "^{r}")
                } else {
                    write!(f, "^({r})")
                }
            }
            Node::Rescale(a, r) => {
                wrap(f, a, 3)?;
                write!(f, "@{r}")
            }
            Node::D(a) => write!(f, "D({a})"),
        }
    }
}

macro_rules! expr_binop {
    ($tr:ident, $m:ident, $node:ident) => {
        impl $tr<Expr> for Expr {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                Expr(Arc::new(Node::$node(self, o)))
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                Expr(Arc::new(Node::$node(self, o.clone())))
            }
        }
        impl $tr<Expr> for &Expr {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                Expr(Arc::new(Node::$node(self.clone(), o)))
            }
        }
        impl $tr<&Expr> for &Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                Expr(Arc::new(Node::$node(self.clone(), o.clone())))
            }
        }
        impl $tr<i64> for Expr {
            type Output = Expr;
            fn $m(self, o: i64) -> Expr {
                Expr(Arc::new(Node::$node(self, k(o))))
            }
        }
        impl $tr<i64> for &Expr {
            type Output = Expr;
            fn $m(self, o: i64) -> Expr {
                Expr(Arc::new(Node::$node(self.clone(), k(o))))
            }
        }
        impl $tr<Expr> for i64 {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                Expr(Arc::new(Node::$node(k(self), o)))
            }
        }
        impl $tr<&Expr> for i64 {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                Expr(Arc::new(Node::$node(k(self), o.clone())))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr(Arc::new(Node::Neg(self)))
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr(Arc::new(Node::Neg(self.clone())))
    }
}

/// Intermediate value: constants stay exact so they never limit precision.
enum Value {
    Const(FieldValue),
    Series(QSeries),
}

impl Value {
    fn into_series(self, bound: &Rational) -> QSeries {
        match self {
            Value::Const(c) => QSeries::constant(c, bound),
            Value::Series(s) => s,
        }
    }
}

/// One evaluation pass with every leaf form built to `order`.
pub fn eval(e: &Expr, cat: &Catalog, order: &Rational) -> Result<QSeries, Error> {
    Ok(eval_value(e, cat, order)?.into_series(order))
}

fn eval_value(e: &Expr, cat: &Catalog, order: &Rational) -> Result<Value, Error> {
    use Value::{Const, Series};
    Ok(match e.node() {
        Node::Form(id) => Series((*cat.build(*id, order)?).clone()),
        Node::Const(c) => Const(c.clone()),
        Node::Add(a, b) => match (eval_value(a, cat, order)?, eval_value(b, cat, order)?) {
            (Const(x), Const(y)) => Const(x.add(&y)),
            (Series(s), Const(c)) | (Const(c), Series(s)) => Series(s.add_scalar(&c)),
            (Series(x), Series(y)) => Series(x.add(&y)),
        },
        Node::Sub(a, b) => match (eval_value(a, cat, order)?, eval_value(b, cat, order)?) {
            (Const(x), Const(y)) => Const(x.sub(&y)),
            (Series(s), Const(c)) => Series(s.add_scalar(&c.neg())),
            (Const(c), Series(s)) => Series(s.neg().add_scalar(&c)),
            (Series(x), Series(y)) => Series(x.sub(&y)),
        },
        Node::Mul(a, b) => match (eval_value(a, cat, order)?, eval_value(b, cat, order)?) {
            (Const(x), Const(y)) => Const(x.mul(&y)),
            (Series(s), Const(c)) | (Const(c), Series(s)) => Series(s.scale(&c)),
            (Series(x), Series(y)) => Series(x.mul(&y)),
        },
        Node::Div(a, b) => match (eval_value(a, cat, order)?, eval_value(b, cat, order)?) {
            (x, Const(y)) => {
                let yi = y.inv().ok_or(Error::ZeroSeries)?;
                match x {
                    Const(x) => Const(x.mul(&yi)),
                    Series(s) => Series(s.scale(&yi)),
                }
            }
            (Const(c), Series(s)) => Series(s.invert()?.scale(&c)),
            (Series(x), Series(y)) => Series(x.div(&y)?),
        },
        Node::Neg(a) => match eval_value(a, cat, order)? {
            Const(c) => Const(c.neg()),
            Series(s) => Series(s.neg()),
        },
        Node::Pow(a, r) => match eval_value(a, cat, order)? {
            Const(c) => {
                if !r.is_integer() {
                    return Err(Error::InvalidArgument("fractional power of a constant".into()));
                }
                let n = r.to_integer().to_i64().unwrap();
                let p = c.pow(n.unsigned_abs());
                Const(if n < 0 { p.inv().ok_or(Error::ZeroSeries)? } else { p })
            }
            Series(s) => {
                if r.is_integer() {
                    Series(s.pow_int(r.to_integer().to_i64().unwrap())?)
                } else {
                    Series(s.pow_rational(r)?)
                }
            }
        },
        Node::Rescale(a, r) => {
            let inner = order / r;
            match eval_value(a, cat, &inner)? {
                Const(c) => Const(c),
                Series(s) => Series(s.rescale(r)?),
            }
        }
        Node::D(a) => match eval_value(a, cat, order)? {
            Const(_) => Const(FieldValue::zero()),
            Series(s) => Series(s.dq()),
        },
    })
}

/// Repeatedly raise the working order until `f(order)` yields a result exact below
/// `target`. Precision lost by inversions and derivatives is an additive offset, so one
/// correction usually suffices.
pub fn adaptive<T>(
    target: &Rational,
    mut f: impl FnMut(&Rational) -> Result<(T, Rational), Error>,
) -> Result<T, Error> {
    let mut order = target.clone();
    let mut best = None;
    for _ in 0..6 {
        let (v, reached) = f(&order)?;
        if reached >= *target {
            return Ok(v);
        }
        let deficit = target - &reached;
        order = &order + deficit.ceil() + <Rational as Field>::one();
        best = Some(reached);
    }
    Err(Error::InsufficientPrecision {
        wanted: target.to_string(),
        reached: best.map(|b| b.to_string()).unwrap_or_default(),
    })
}

/// Evaluate `e` exactly below `target`, raising the working order as needed.
pub fn eval_to(e: &Expr, cat: &Catalog, target: &Rational) -> Result<QSeries, Error> {
    adaptive(target, |order| {
        let s = eval(e, cat, order)?;
        let b = s.bound();
        Ok((s, b))
    })
    .map(|s| s.truncate(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::FormId::*;

    #[test]
    fn display_is_readable() {
        let e = 3 * form(E2) * form(E4) - form(E6).at(int(2)) / 12;
        assert_eq!(e.to_string(), "3*E2*E4 - E6@2/12");
        let e = (form(E4).pow(3) - form(E6).pow(2)) / 1728;
        assert_eq!(e.to_string(), "(E4^3 - E6^2)/1728");
        assert_eq!(form(E4).pow_rat(rat(1, 4)).to_string(), "E4^(1/4)");
    }

    #[test]
    fn constants_do_not_limit_precision() {
        let cat = Catalog::new();
        let s = eval_to(&(form(E4) * 2 + 1), &cat, &int(10)).unwrap();
        assert_eq!(s.bound(), int(10));
        assert_eq!(s.coeff_at(&int(0)).unwrap(), FieldValue::from(3));
    }

    #[test]
    fn adaptive_order_recovers_lost_precision() {
        let cat = Catalog::new();
        let j = form(E4).pow(3) * 1728 / (form(E4).pow(3) - form(E6).pow(2));
        let s = eval_to(&j, &cat, &int(6)).unwrap();
        assert!(s.bound() >= int(6));
        assert_eq!(s.coeff_at(&int(-1)).unwrap(), FieldValue::from(1));
        assert_eq!(s.coeff_at(&int(0)).unwrap(), FieldValue::from(744));
        assert_eq!(s.coeff_at(&int(1)).unwrap(), FieldValue::from(196884));
    }
}

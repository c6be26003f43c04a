//! The closed catalog of named forms and Hauptmoduln, with their construction routes.
//!
//! Most forms have a second, independent construction (divisor sum against eta product,
//! lattice sum against product, quotient against eta quotient). Both routes are exposed so
//! their agreement can be certified.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use crate::arith::{d, d_star, sigma};
use crate::expr::{eval_to, form, k, kq, Expr};
use crate::field::{int, rat, Field, FieldValue, Rational};
use crate::series::ceil_i64;
use crate::{Error, QSeries};

macro_rules! catalog {
    ($($id:ident = $name:literal : $desc:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FormId { $($id),* }

        impl FormId {
            pub const ALL: &'static [FormId] = &[$(FormId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(FormId::$id => $name),* }
            }

            pub fn description(self) -> &'static str {
                match self { $(FormId::$id => $desc),* }
            }
        }
    };
}

catalog! {
    E2 = "E2": "Eisenstein series of weight 2, 1 - 24 sum sigma_1(n) q^n";
    E4 = "E4": "Eisenstein series of weight 4, 1 + 240 sum sigma_3(n) q^n";
    E6 = "E6": "Eisenstein series of weight 6, 1 - 504 sum sigma_5(n) q^n";
    Delta = "Delta": "discriminant eta(tau)^24";
    SmallJ = "j": "modular invariant 1728 J";
    BigJ = "J": "normalized invariant E4^3/(E4^3 - E6^2)";
    InvJ = "InvJ": "reciprocal 1/J";
    InvOneMinusJ = "InvOneMinusJ": "1/(1 - J)";
    Theta00Sq = "Theta00Sq": "theta[0;0]^2 with theta[0;0] = sum q^(n^2/2)";
    Theta10Sq = "Theta10Sq": "theta[1;0]^2 with theta[1;0] = sum q^((2n+1)^2/8)";
    Theta01Sq = "Theta01Sq": "theta[0;1]^2 with theta[0;1] = sum (-1)^n q^(n^2/2)";
    Lambda = "Lambda": "modular lambda function theta[1;0]^4/theta[0;0]^4";
    Psi = "Psi": "Ramanujan psi(q) = sum_{n>=0} q^(n(n+1)/2)";
    Phi = "Phi": "Ramanujan phi(q) = sum q^(n^2)";
    BerndtX = "BerndtX": "16 q prod (1+q^(2n))^8/(1+q^(2n-1))^8";
    BorweinA = "a": "cubic theta a(q) = sum q^(m^2+mn+n^2)";
    BorweinB = "b": "cubic theta b(q) = prod (1-q^n)^3/(1-q^(3n))";
    BorweinC = "c": "cubic theta c(q) = 3 q^(1/3) prod (1-q^(3n))^3/(1-q^n)";
    XLevel3 = "XLevel3": "level-3 Hauptmodul c^3/a^3";
    V5 = "V5": "weight-one level-5 form with the (1-sqrt5)/2 product";
    W5 = "W5": "weight-one level-5 form with the (1+sqrt5)/2 product, conjugate of V5";
    FLevel5 = "FLevel5": "level-5 Hauptmodul f = ((11+5sqrt5)/2) W5/V5";
    FTilde5 = "FTilde5": "reciprocal Hauptmodul 1/f";
    VHaupt5 = "VHaupt5": "v = (W5 - V5)/(5 sqrt5 V5)";
    WHaupt5 = "WHaupt5": "w = (V5 - W5)/(-5 sqrt5 W5)";
    GLevel5 = "GLevel5": "level-5 Hauptmodul g = q prod (1-q^n)^(5 (n/5))";
    GLevel5b = "GLevel5b": "the same g written as S5b/T5b";
    BigG5 = "BigG5": "rescaled Hauptmodul 2g/(-11+5sqrt5)";
    S5b = "S5b": "weight-one level-5 form q prod (1-q^n)^2/((1-q^(5n-2))^5 (1-q^(5n-3))^5)";
    T5b = "T5b": "weight-one level-5 form prod (1-q^n)^2/((1-q^(5n-1))^5 (1-q^(5n-4))^5)";
    P5b = "P5b": "1 + 10 sum (d_{2,5} - d_{3,5})(n) q^n";
    Q5b = "Q5b": "3 + 10 sum (d_{1,5} - d_{4,5})(n) q^n";
    P6a = "P6a": "eta(2t) eta(3t)^6/(eta(t)^2 eta(6t)^3)";
    Q6a = "Q6a": "eta(t)^6 eta(6t)/(eta(2t)^3 eta(3t)^2)";
    F6a = "F6a": "Hauptmodul P6a/Q6a";
    F6aTilde = "F6aTilde": "Hauptmodul Q6a/P6a";
    U6a = "U6a": "(P6a - Q6a)/(8 P6a)";
    V6a = "V6a": "(F6a - 1)/8";
    P6b = "P6b": "eta(2t)^6 eta(3t)/(eta(t)^3 eta(6t)^2)";
    Q6b = "Q6b": "eta(t) eta(6t)^6/(eta(2t)^2 eta(3t)^3)";
    G6b = "G6b": "Hauptmodul Q6b/P6b";
    Q6c = "Q6c": "eta(t/2) eta(3t)^6/(eta(t)^2 eta(3t/2)^3)";
    T6c = "T6c": "eta(t)^6 eta(3t/2)/(eta(t/2)^3 eta(3t)^2)";
    T6cHaupt = "T6cHaupt": "Hauptmodul Q6c/T6c";
    R6d = "R6d": "eta(t) eta(3t/2)^3 eta(6t)^3/(eta(t/2) eta(2t) eta(3t)^3)";
    U6d = "U6d": "eta(t/2)^3 eta(2t)^3 eta(3t)/(eta(t)^3 eta(3t/2) eta(6t))";
    U6dHaupt = "U6dHaupt": "Hauptmodul R6d/U6d";
    P6e = "P6e": "a(q) in the four-form level-6 system";
    Q6e = "Q6e": "Q6c in the four-form level-6 system";
    R6e = "R6e": "R6d in the four-form level-6 system";
    X6e = "X6e": "Hauptmodul R6d/Q6c";
    Y6e = "Y6e": "reciprocal Hauptmodul Q6c/R6d";
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        FormId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .or_else(|| FormId::ALL.iter().copied().find(|id| id.name().eq_ignore_ascii_case(s)))
            .ok_or_else(|| Error::UnknownForm(s.to_string()))
    }
}

/// How a form is built.
#[derive(Clone)]
pub enum Route {
    Direct(&'static str, fn(&Rational) -> QSeries),
    Derived(Expr),
}

impl Route {
    pub fn label(&self) -> String {
        match self {
            Route::Direct(label, _) => label.to_string(),
            Route::Derived(e) => e.to_string(),
        }
    }
}

fn fv(n: i64) -> FieldValue {
    FieldValue::from(n)
}

fn q5(a: Rational, b: Rational) -> FieldValue {
    FieldValue::quad(a, b)
}

/// `(1 + sqrt5)/2` and its conjugate.
fn golden() -> FieldValue {
    q5(rat(1, 2), rat(1, 2))
}

fn golden_conj() -> FieldValue {
    q5(rat(1, 2), rat(-1, 2))
}

/// `(11 + 5 sqrt5)/2`.
pub fn alpha5() -> FieldValue {
    q5(rat(11, 2), rat(5, 2))
}

impl FormId {
    pub fn primary(self) -> Route {
        use FormId::*;
        let quot = |a: FormId, b: FormId| Route::Derived(form(a) / form(b));
        match self {
            E2 => Route::Direct("divisor sum", build_e2),
            E4 => Route::Direct("divisor sum", build_e4),
            E6 => Route::Direct("divisor sum", build_e6),
            Delta => Route::Direct("eta product", |o| eta_quotient(&[(1, 1, 24)], o)),
            SmallJ => Route::Derived(1728 * j_expr()),
            BigJ => Route::Derived(j_expr()),
            InvJ => Route::Derived((form(E4).pow(3) - form(E6).pow(2)) / form(E4).pow(3)),
            InvOneMinusJ => Route::Derived((form(E6).pow(2) - form(E4).pow(3)) / form(E6).pow(2)),
            Theta00Sq => Route::Direct("theta sum", |o| theta_sq(o, 0)),
            Theta10Sq => Route::Direct("theta sum", |o| theta_sq(o, 1)),
            Theta01Sq => Route::Direct("theta sum", |o| theta_sq(o, 2)),
            Lambda => Route::Derived((form(Theta10Sq) / form(Theta00Sq)).pow(2)),
            Psi => Route::Direct("theta sum", build_psi),
            Phi => Route::Direct("theta sum", build_phi),
            BerndtX => Route::Direct("product", build_berndt_x),
            BorweinA => Route::Direct("divisor sum", build_a_divisor),
            BorweinB => Route::Direct("product", build_b_product),
            BorweinC => Route::Direct("product", build_c_product),
            XLevel3 => Route::Derived(form(BorweinC).pow(3) / form(BorweinA).pow(3)),
            V5 => Route::Direct("product", |o| build_level5_weight_one(o, golden_conj())),
            W5 => Route::Direct("product", |o| build_level5_weight_one(o, golden())),
            FLevel5 => Route::Direct("product", build_f5_product),
            FTilde5 => Route::Derived(form(FLevel5).inv()),
            VHaupt5 => Route::Derived((form(W5) - form(V5)) / (k(q5(int(0), int(5))) * form(V5))),
            WHaupt5 => Route::Derived((form(V5) - form(W5)) / (k(q5(int(0), int(-5))) * form(W5))),
            GLevel5 => Route::Direct("product", build_g5_product),
            GLevel5b => quot(S5b, T5b),
            BigG5 => Route::Derived(2 * form(GLevel5) / kq(int(-11), int(5))),
            S5b => Route::Direct("product", |o| build_s5b_t5b_product(o, true)),
            T5b => Route::Direct("product", |o| build_s5b_t5b_product(o, false)),
            P5b => Route::Direct("divisor sum", |o| build_p5b_q5b(o, true)),
            Q5b => Route::Direct("divisor sum", |o| build_p5b_q5b(o, false)),
            P6a => Route::Direct("eta quotient", |o| eta_quotient(&[(2, 1, 1), (3, 1, 6), (1, 1, -2), (6, 1, -3)], o)),
            Q6a => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 1, 6), (6, 1, 1), (2, 1, -3), (3, 1, -2)], o)),
            F6a => Route::Direct("eta quotient", |o| eta_quotient(&[(2, 1, 4), (3, 1, 8), (1, 1, -8), (6, 1, -4)], o)),
            F6aTilde => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 1, 8), (6, 1, 4), (2, 1, -4), (3, 1, -8)], o)),
            U6a => Route::Derived((form(P6a) - form(Q6a)) / (8 * form(P6a))),
            V6a => Route::Derived((form(F6a) - 1) / 8),
            P6b => Route::Direct("eta quotient", |o| eta_quotient(&[(2, 1, 6), (3, 1, 1), (1, 1, -3), (6, 1, -2)], o)),
            Q6b => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 1, 1), (6, 1, 6), (2, 1, -2), (3, 1, -3)], o)),
            G6b => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 1, 4), (6, 1, 8), (2, 1, -8), (3, 1, -4)], o)),
            Q6c => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 2, 1), (3, 1, 6), (1, 1, -2), (3, 2, -3)], o)),
            T6c => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 1, 6), (3, 2, 1), (1, 2, -3), (3, 1, -2)], o)),
            T6cHaupt => Route::Direct("eta quotient", |o| eta_quotient(&[(1, 2, 4), (3, 1, 8), (1, 1, -8), (3, 2, -4)], o)),
            R6d => Route::Direct("eta quotient", |o| {
                eta_quotient(&[(1, 1, 1), (3, 2, 3), (6, 1, 3), (1, 2, -1), (2, 1, -1), (3, 1, -3)], o)
            }),
            U6d => Route::Direct("eta quotient", |o| {
                eta_quotient(&[(1, 2, 3), (2, 1, 3), (3, 1, 1), (1, 1, -3), (3, 2, -1), (6, 1, -1)], o)
            }),
            U6dHaupt => Route::Direct("eta quotient", |o| {
                eta_quotient(&[(1, 1, 4), (3, 2, 4), (6, 1, 4), (1, 2, -4), (2, 1, -4), (3, 1, -4)], o)
            }),
            P6e => Route::Derived(form(BorweinA)),
            Q6e => Route::Derived(form(Q6c)),
            R6e => Route::Derived(form(R6d)),
            X6e => Route::Direct("eta quotient", |o| {
                eta_quotient(&[(1, 1, 3), (3, 2, 6), (6, 1, 3), (1, 2, -2), (2, 1, -1), (3, 1, -9)], o)
            }),
            Y6e => Route::Derived(form(X6e).inv()),
        }
    }

    /// An independent second construction, where one exists.
    pub fn alternative(self) -> Option<Route> {
        use FormId::*;
        let quot = |a: FormId, b: FormId| Some(Route::Derived(form(a) / form(b)));
        match self {
            Delta => Some(Route::Derived((form(E4).pow(3) - form(E6).pow(2)) / 1728)),
            BorweinA => Some(Route::Direct("lattice sum", build_a_lattice)),
            BorweinB => Some(Route::Direct("lattice sum", build_b_lattice)),
            BorweinC => Some(Route::Direct("lattice sum", build_c_lattice)),
            V5 => Some(Route::Direct("divisor sum", |o| build_level5_weight_one_divisor(o, false))),
            W5 => Some(Route::Direct("divisor sum", |o| build_level5_weight_one_divisor(o, true))),
            FLevel5 => Some(Route::Derived(k(alpha5()) * form(W5) / form(V5))),
            GLevel5 => quot(S5b, T5b),
            GLevel5b => Some(Route::Direct("product", build_g5_product)),
            S5b => Some(Route::Direct("divisor sum", |o| build_s5b_t5b_divisor(o, true))),
            T5b => Some(Route::Direct("divisor sum", |o| build_s5b_t5b_divisor(o, false))),
            P5b => Some(Route::Derived(form(T5b) - 3 * form(S5b))),
            Q5b => Some(Route::Derived(form(S5b) + 3 * form(T5b))),
            P6a => Some(Route::Direct("divisor sum", build_p6a_divisor)),
            Q6a => Some(Route::Direct("divisor sum", build_q6a_divisor)),
            F6a => quot(P6a, Q6a),
            F6aTilde => quot(Q6a, P6a),
            P6b => Some(Route::Direct("divisor sum", build_p6b_divisor)),
            Q6b => Some(Route::Direct("divisor sum", build_q6b_divisor)),
            G6b => quot(Q6b, P6b),
            Q6c => Some(Route::Direct("divisor sum", build_q6c_divisor)),
            T6c => Some(Route::Direct("divisor sum", build_t6c_divisor)),
            T6cHaupt => quot(Q6c, T6c),
            R6d => Some(Route::Direct("divisor sum", build_r6d_divisor)),
            U6d => Some(Route::Direct("divisor sum", build_u6d_divisor)),
            U6dHaupt => quot(R6d, U6d),
            X6e => quot(R6d, Q6c),
            _ => None,
        }
    }
}

fn j_expr() -> Expr {
    use FormId::*;
    form(E4).pow(3) / (form(E4).pow(3) - form(E6).pow(2))
}

/// Concurrent cache of built forms keyed by form and order.
#[derive(Default)]
pub struct Catalog {
    cache: RwLock<HashMap<(FormId, Rational), Arc<QSeries>>>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// The form exact below `order`, via its primary route.
    pub fn build(&self, id: FormId, order: &Rational) -> Result<Arc<QSeries>, Error> {
        let key = (id, order.clone());
        if let Some(s) = self.cache.read().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(self.build_route(&id.primary(), order)?);
        if s.is_zero() {
            return Err(Error::InsufficientOrder(order.to_string(), id.name().to_string()));
        }
        self.cache.write().unwrap().insert(key, s.clone());
        Ok(s)
    }

    pub fn build_route(&self, route: &Route, order: &Rational) -> Result<QSeries, Error> {
        match route {
            Route::Direct(_, f) => Ok(f(order).truncate(order)),
            Route::Derived(e) => eval_to(e, self, order),
        }
    }

    /// Both constructions of a form that has two.
    pub fn build_dual_route(&self, id: FormId, order: &Rational) -> Result<(QSeries, QSeries), Error> {
        let alt = id
            .alternative()
            .ok_or_else(|| Error::InvalidArgument(format!("{} has a single construction", id.name())))?;
        Ok((self.build_route(&id.primary(), order)?, self.build_route(&alt, order)?))
    }
}

/// Number of `k >= 0` with `lead + k*step < order`.
fn count_below(order: &Rational, lead: &Rational, step: &Rational) -> usize {
    if order <= lead {
        0
    } else {
        ceil_i64(&((order - lead) / step)) as usize
    }
}

/// `constant + Σ_{n>=1} f(n) q^(n*step)`.
fn divisor_sum(order: &Rational, step: Rational, constant: FieldValue, f: impl Fn(u64) -> FieldValue) -> QSeries {
    let n_max = count_below(order, &int(0), &step);
    let mut terms = vec![(int(0), constant)];
    for n in 1..n_max {
        terms.push((&step * int(n as i64), f(n as u64)));
    }
    QSeries::from_terms(terms, order)
}

fn eisenstein(order: &Rational, c: i64, k: u32) -> QSeries {
    divisor_sum(order, int(1), fv(1), |n| FieldValue::from(Rational::from_integer(sigma(n, k) * c)))
}

fn build_e2(o: &Rational) -> QSeries {
    eisenstein(o, -24, 1)
}

fn build_e4(o: &Rational) -> QSeries {
    eisenstein(o, 240, 3)
}

fn build_e6(o: &Rational) -> QSeries {
    eisenstein(o, -504, 5)
}

/// Coefficients of `∏_{n>=1} (1 - t^n)` below `t^len`, by the pentagonal number theorem.
pub fn euler_product(len: usize) -> Vec<FieldValue> {
    let mut c = vec![FieldValue::zero(); len];
    let mut place = |e: i64, sign: i64| {
        if (e as usize) < len {
            c[e as usize] = fv(sign);
        }
    };
    for m in 0i64.. {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let p1 = m * (3 * m - 1) / 2;
        let p2 = m * (3 * m + 1) / 2;
        if p1 as usize >= len {
            break;
        }
        place(p1, sign);
        place(p2, sign);
    }
    c
}

/// `∏ η(r_i τ)^{e_i}` for factors `(num, den, e)` with `r = num/den`, exact below `order`.
pub fn eta_quotient(factors: &[(i64, i64, i64)], order: &Rational) -> QSeries {
    let v: Rational = factors.iter().map(|&(n, dd, e)| rat(n * e, dd * 24)).sum();
    let rel = order - &v;
    let mut acc = QSeries::constant(fv(1), &rel);
    for &(n, dd, e) in factors {
        let r = rat(n, dd);
        let len = count_below(&rel, &int(0), &r).max(1);
        let base = QSeries::from_relative(1, &int(0), euler_product(len)).rescale(&r).unwrap();
        acc = acc.mul(&base.pow_int(e).unwrap());
    }
    acc.shifted(&v)
}

/// In-place dense products of factors `1 + a t^s + b t^(2s)` over integer exponents.
struct Dense {
    c: Vec<FieldValue>,
}

impl Dense {
    fn one(len: usize) -> Self {
        let mut c = vec![FieldValue::zero(); len];
        if len > 0 {
            c[0] = fv(1);
        }
        Dense { c }
    }

    fn factor(&mut self, s: usize, a: &FieldValue, b: &FieldValue, power: i64) {
        let n = self.c.len();
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                for i in (s..n).rev() {
                    let mut add = self.c[i - s].mul(a);
                    if i >= 2 * s {
                        add = add.add(&self.c[i - 2 * s].mul(b));
                    }
                    self.c[i] = self.c[i].add(&add);
                }
            } else {
                for i in s..n {
                    let mut sub = self.c[i - s].mul(a);
                    if i >= 2 * s {
                        sub = sub.add(&self.c[i - 2 * s].mul(b));
                    }
                    self.c[i] = self.c[i].sub(&sub);
                }
            }
        }
    }

    fn binomial(&mut self, s: usize, sign: i64, power: i64) {
        self.factor(s, &fv(sign), &fv(0), power);
    }

    fn into_series(self, lead: &Rational, scale: FieldValue) -> QSeries {
        QSeries::from_relative(1, lead, self.c.into_iter().map(|x| x.mul(&scale)).collect())
    }
}

fn dense_len(order: &Rational, lead: &Rational) -> usize {
    count_below(order, lead, &int(1))
}

fn theta_sq(order: &Rational, kind: u8) -> QSeries {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    loop {
        let (e, c) = match kind {
            0 => (rat(n * n, 2), 1),
            1 => (rat((2 * n + 1) * (2 * n + 1), 8), 1),
            _ => (rat(n * n, 2), if n % 2 == 0 { 1 } else { -1 }),
        };
        if e >= *order {
            break;
        }
        terms.push((e, fv(c)));
        if kind == 1 {
            terms.push((rat((2 * n + 1) * (2 * n + 1), 8), fv(c)));
        } else if n != 0 {
            terms.push((rat(n * n, 2), fv(c)));
        }
        n += 1;
    }
    let theta = QSeries::from_terms(terms, order);
    theta.mul(&theta)
}

fn build_psi(order: &Rational) -> QSeries {
    let terms = (0i64..)
        .map(|n| rat(n * (n + 1), 2))
        .take_while(|e| e < order)
        .map(|e| (e, fv(1)))
        .collect();
    QSeries::from_terms(terms, order)
}

fn build_phi(order: &Rational) -> QSeries {
    let mut terms = Vec::new();
    for n in 0i64.. {
        if int(n * n) >= *order {
            break;
        }
        terms.push((int(n * n), fv(if n == 0 { 1 } else { 2 })));
    }
    QSeries::from_terms(terms, order)
}

fn build_berndt_x(order: &Rational) -> QSeries {
    let len = dense_len(order, &int(1));
    let mut p = Dense::one(len);
    for m in 1..len.max(1) {
        p.binomial(m, 1, if m % 2 == 0 { 8 } else { -8 });
    }
    p.into_series(&int(1), fv(16))
}

/// Coefficient table of a binary-quadratic lattice sum, by exponent numerator over `den`.
fn lattice(order: &Rational, den: i64, weight: impl Fn(i64, i64) -> Option<(i64, Rational)>) -> QSeries {
    let limit = ceil_i64(&(order * int(den)));
    let r = (((4 * limit) as f64 / 3.0).sqrt() as i64) + 3;
    let mut acc: HashMap<i64, Rational> = HashMap::new();
    for m in -r..=r {
        for n in -r..=r {
            if let Some((e, w)) = weight(m, n) {
                if e < limit {
                    *acc.entry(e).or_insert_with(|| int(0)) += w;
                }
            }
        }
    }
    let terms = acc.into_iter().map(|(e, w)| (rat(e, den), FieldValue::from(w))).collect();
    QSeries::from_terms(terms, order)
}

fn build_a_lattice(order: &Rational) -> QSeries {
    lattice(order, 1, |m, n| Some((m * m + m * n + n * n, int(1))))
}

fn build_b_lattice(order: &Rational) -> QSeries {
    // Σ ω^(n−m) q^(m²+mn+n²); the imaginary parts cancel under m ↔ n
    lattice(order, 1, |m, n| {
        let w = if (n - m).rem_euclid(3) == 0 { int(1) } else { rat(-1, 2) };
        Some((m * m + m * n + n * n, w))
    })
}

fn build_c_lattice(order: &Rational) -> QSeries {
    // exponent (m+1/3)² + (m+1/3)(n+1/3) + (n+1/3)², in ninths
    lattice(order, 9, |m, n| {
        let (x, y) = (3 * m + 1, 3 * n + 1);
        Some((x * x + x * y + y * y, int(1)))
    })
}

fn build_a_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, int(1), fv(1), |n| fv(6 * (d(n, 1, 3) - d(n, 2, 3))))
}

fn build_b_product(order: &Rational) -> QSeries {
    let len = dense_len(order, &int(0));
    let mut p = Dense::one(len);
    for m in 1..len {
        p.binomial(m, -1, 3);
        if 3 * m < len {
            p.binomial(3 * m, -1, -1);
        }
    }
    p.into_series(&int(0), fv(1))
}

fn build_c_product(order: &Rational) -> QSeries {
    let lead = rat(1, 3);
    let len = dense_len(order, &lead);
    let mut p = Dense::one(len);
    for m in 1..len {
        p.binomial(m, -1, -1);
        if 3 * m < len {
            p.binomial(3 * m, -1, 3);
        }
    }
    p.into_series(&lead, fv(3))
}

/// `∏ (1-q^n)^5/(1-q^(5n))^3 (1 + φ q^n + q^(2n))^5` for `φ` one of the golden ratios.
fn build_level5_weight_one(order: &Rational, phi: FieldValue) -> QSeries {
    let len = dense_len(order, &int(0));
    let mut p = Dense::one(len);
    for m in 1..len {
        p.binomial(m, -1, 5);
        if 5 * m < len {
            p.binomial(5 * m, -1, -3);
        }
        p.factor(m, &phi, &fv(1), 5);
    }
    p.into_series(&int(0), fv(1))
}

fn build_level5_weight_one_divisor(order: &Rational, conj: bool) -> QSeries {
    let mut c1 = q5(rat(-5, 2), rat(-5, 2));
    let mut c2 = q5(rat(35, 2), rat(15, 2));
    if conj {
        c1 = c1.conj();
        c2 = c2.conj();
    }
    divisor_sum(order, int(1), fv(1), |n| {
        c1.mul(&fv(d(n, 1, 5) - d(n, 4, 5))).add(&c2.mul(&fv(d(n, 2, 5) - d(n, 3, 5))))
    })
}

fn build_f5_product(order: &Rational) -> QSeries {
    let len = dense_len(order, &int(0));
    let mut p = Dense::one(len);
    for m in 1..len {
        p.factor(m, &golden(), &fv(1), 5);
        p.factor(m, &golden_conj(), &fv(1), -5);
    }
    p.into_series(&int(0), alpha5())
}

fn build_g5_product(order: &Rational) -> QSeries {
    let len = dense_len(order, &int(1));
    let mut p = Dense::one(len);
    for m in 1..len {
        match m % 5 {
            1 | 4 => p.binomial(m, -1, 5),
            2 | 3 => p.binomial(m, -1, -5),
            _ => {}
        }
    }
    p.into_series(&int(1), fv(1))
}

fn build_s5b_t5b_product(order: &Rational, s: bool) -> QSeries {
    let lead = if s { int(1) } else { int(0) };
    let len = dense_len(order, &lead);
    let mut p = Dense::one(len);
    let skip: [usize; 2] = if s { [2, 3] } else { [1, 4] };
    for m in 1..len {
        p.binomial(m, -1, 2);
        if skip.contains(&(m % 5)) {
            p.binomial(m, -1, -5);
        }
    }
    p.into_series(&lead, fv(1))
}

fn chi5(n: u64) -> (i64, i64) {
    (d(n, 1, 5) - d(n, 4, 5), d(n, 2, 5) - d(n, 3, 5))
}

fn build_s5b_t5b_divisor(order: &Rational, s: bool) -> QSeries {
    if s {
        divisor_sum(order, int(1), fv(0), |n| {
            let (a, b) = chi5(n);
            fv(a - 3 * b)
        })
    } else {
        divisor_sum(order, int(1), fv(1), |n| {
            let (a, b) = chi5(n);
            fv(3 * a + b)
        })
    }
}

fn build_p5b_q5b(order: &Rational, p: bool) -> QSeries {
    if p {
        divisor_sum(order, int(1), fv(1), |n| fv(10 * chi5(n).1))
    } else {
        divisor_sum(order, int(1), fv(3), |n| fv(10 * chi5(n).0))
    }
}

fn d6(n: u64, j: u64) -> i64 {
    d(n, j, 6)
}

fn build_p6a_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, int(1), fv(1), |n| fv(2 * (d6(n, 1) + d6(n, 2) - d6(n, 4) - d6(n, 5))))
}

fn build_q6a_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, int(1), fv(1), |n| fv(-6 * (d6(n, 1) - d6(n, 5)) + 18 * (d6(n, 2) - d6(n, 4))))
}

fn build_p6b_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, int(1), fv(1), |n| fv(3 * (d6(n, 1) - d6(n, 5))))
}

fn chi3(n: u64) -> i64 {
    d(n, 1, 3) - d(n, 2, 3)
}

fn build_q6b_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, int(1), fv(0), |n| {
        let half = if n % 2 == 0 { chi3(n / 2) } else { 0 };
        fv(d6(n, 1) - d6(n, 5) - 2 * half)
    })
}

fn chi3_star(n: u64) -> i64 {
    d_star(n, 1, 3) - d_star(n, 2, 3)
}

fn chi6_star(n: u64) -> i64 {
    d_star(n, 1, 6) + d_star(n, 2, 6) - d_star(n, 4, 6) - d_star(n, 5, 6)
}

/// Coefficient of `q^(m/2)` in `Σ χ(n) q^n`, zero for odd `m`.
fn at_integer(m: u64, f: impl Fn(u64) -> i64) -> i64 {
    if m.is_multiple_of(2) {
        f(m / 2)
    } else {
        0
    }
}

fn build_q6c_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, rat(1, 2), fv(0), |m| fv(chi3_star(m)))
}

fn build_t6c_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, rat(1, 2), fv(1), |m| fv(3 * chi3_star(m) + 6 * at_integer(m, chi3)))
}

fn build_r6d_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, rat(1, 2), fv(0), |m| fv(chi6_star(m)))
}

fn build_u6d_divisor(order: &Rational) -> QSeries {
    divisor_sum(order, rat(1, 2), fv(1), |m| fv(-3 * chi6_star(m) + 6 * at_integer(m, chi3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use FormId::*;

    fn coeffs(s: &QSeries, upto: i64) -> Vec<FieldValue> {
        (0..upto).map(|n| s.coeff_at(&int(n)).unwrap()).collect()
    }

    fn ints(v: &[i64]) -> Vec<FieldValue> {
        v.iter().map(|&x| fv(x)).collect()
    }

    #[test]
    fn eisenstein_leading_terms() {
        let cat = Catalog::new();
        let e4 = cat.build(E4, &int(4)).unwrap();
        assert_eq!(coeffs(&e4, 4), ints(&[1, 240, 2160, 6720]));
        let e6 = cat.build(E6, &int(3)).unwrap();
        assert_eq!(coeffs(&e6, 3), ints(&[1, -504, -16632]));
    }

    #[test]
    fn euler_product_matches_direct_expansion() {
        let len = 40;
        let mut direct = Dense::one(len);
        for m in 1..len {
            direct.binomial(m, -1, 1);
        }
        assert_eq!(euler_product(len), direct.c);
    }

    #[test]
    fn delta_is_tau_function() {
        let cat = Catalog::new();
        let delta = cat.build(Delta, &int(6)).unwrap();
        assert_eq!(delta.valuation(), Some(int(1)));
        assert_eq!(coeffs(&delta, 6), ints(&[0, 1, -24, 252, -1472, 4830]));
    }

    #[test]
    fn half_integral_eta_quotient_grid() {
        let cat = Catalog::new();
        let q = cat.build(Q6c, &int(3)).unwrap();
        assert_eq!(q.valuation(), Some(rat(1, 2)));
        assert_eq!(q.denom(), 2);
        assert_eq!(q.bound(), int(3));
    }

    #[test]
    fn theta_conventions() {
        let cat = Catalog::new();
        let t10 = cat.build(Theta10Sq, &int(3)).unwrap();
        assert_eq!(t10.valuation(), Some(rat(1, 4)));
        assert_eq!(t10.coeff_at(&rat(1, 4)).unwrap(), fv(4));
        let lam = cat.build(Lambda, &int(2)).unwrap();
        assert_eq!(lam.coeff_at(&rat(1, 2)).unwrap(), fv(16));
        assert_eq!(lam.coeff_at(&int(1)).unwrap(), fv(-128));
        assert_eq!(lam.coeff_at(&rat(3, 2)).unwrap(), fv(704));
    }

    #[test]
    fn cubic_theta_leading_terms() {
        let cat = Catalog::new();
        let a = cat.build(BorweinA, &int(5)).unwrap();
        assert_eq!(coeffs(&a, 5), ints(&[1, 6, 0, 6, 6]));
        let c = cat.build(BorweinC, &int(2)).unwrap();
        assert_eq!(c.valuation(), Some(rat(1, 3)));
        assert_eq!(c.coeff_at(&rat(1, 3)).unwrap(), fv(3));
        assert_eq!(c.coeff_at(&rat(4, 3)).unwrap(), fv(3));
    }

    #[test]
    fn level5_first_coefficient() {
        let cat = Catalog::new();
        let v = cat.build(V5, &int(3)).unwrap();
        assert_eq!(v.coeff_at(&int(1)).unwrap(), q5(rat(-5, 2), rat(-5, 2)));
        let w = cat.build(W5, &int(3)).unwrap();
        assert_eq!(w.coeff_at(&int(1)).unwrap(), v.coeff_at(&int(1)).unwrap().conj());
    }

    #[test]
    fn names_roundtrip() {
        for id in FormId::ALL {
            assert_eq!(id.name().parse::<FormId>().unwrap(), *id);
        }
        assert!("nope".parse::<FormId>().is_err());
        assert_eq!("e4".parse::<FormId>().unwrap(), E4);
    }

    #[test]
    fn order_below_valuation_is_rejected() {
        let cat = Catalog::new();
        assert!(matches!(cat.build(Q6b, &int(1)), Err(Error::InsufficientOrder(..))));
    }
}

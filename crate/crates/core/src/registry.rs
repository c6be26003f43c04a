//! The embedded registry: every certified identity, grouped by the family of forms it is
//! about.
//!
//! Groups: G0 level-2 inversion and the Apéry-like recurrence, G1 Klein's J, G2 E4 and E6,
//! G3 the lambda function, G4 theta constants, G5 cubic theta functions, G6 level 5 with
//! the golden-ratio forms V and W, G7 level 5 with the Rogers-Ramanujan type forms, G8-G12
//! level 6, NC negative controls.

use crate::calculus::{LinearOde, Poly, RatFun};
use crate::expr::{form, k, kq, Expr};
use crate::field::{int, rat, FieldValue, Rational};
use crate::forms::{alpha5, FormId::*};
use crate::hypergeom::HypergeomParams;
use crate::sequences::{a5, b5, s5, t5, zagier};
use crate::verifier::{CheckKind, CheckSpec, NEGATIVE_CONTROL_GROUP};

type Rf = RatFun<FieldValue>;

const VW_NOTE: &str = "verified via V/W representative: S and T differ from V and W by constant \
                       factors outside Q(sqrt5), and a homogeneous linear ODE is invariant under \
                       constant rescaling";

fn x() -> Rf {
    RatFun::x()
}

fn c(p: i64, q: i64) -> Rf {
    RatFun::constant(rat(p, q).into())
}

/// The constant `(a + b√5)/d`.
fn c5(a: i64, b: i64, d: i64) -> Rf {
    RatFun::constant(FieldValue::quad(rat(a, d), rat(b, d)))
}

/// `1/(x − a)`.
fn pole(a: Rf) -> Rf {
    c(1, 1) / (x() - a)
}

fn ode(p1: Rf, p0: Rf) -> LinearOde<FieldValue> {
    LinearOde::from_normal(&p1, &p0)
}

/// `x(1−x) y'' + (γ − δx) y' − ε y = 0`.
fn gauss_ode(gamma: Rational, delta: Rational, eps: Rational) -> LinearOde<FieldValue> {
    let p = |v: Vec<Rational>| Poly::new(v.into_iter().map(FieldValue::from).collect());
    LinearOde { a: p(vec![int(0), int(1), int(-1)]), b: p(vec![gamma, -delta]), c: p(vec![-eps]) }
}

fn params(a: Rational, b: Rational, c: Rational) -> HypergeomParams {
    HypergeomParams::new(a, b, c).expect("valid hypergeometric parameters")
}

fn half() -> Rational {
    rat(1, 2)
}

fn third() -> Rational {
    rat(1, 3)
}

fn spec(id: &str, group: &'static str, reference: &str, anchor: &str, kind: CheckKind) -> CheckSpec {
    CheckSpec {
        id: id.to_string(),
        group,
        reference: reference.to_string(),
        anchor: anchor.to_string(),
        note: None,
        kind,
    }
}

impl CheckSpec {
    fn note(mut self, n: &str) -> Self {
        self.note = Some(n.to_string());
        self
    }
}

fn system(eqs: Vec<(Expr, Expr)>) -> CheckKind {
    CheckKind::NonlinearSystem(eqs)
}

fn identity(eqs: Vec<(Expr, Expr)>) -> CheckKind {
    CheckKind::SeriesIdentity(eqs)
}

fn schwarz(xe: Expr, r: Rf) -> CheckKind {
    CheckKind::Schwarzian { x: xe, r }
}

fn linear(y: Expr, s: Expr, o: LinearOde<FieldValue>) -> CheckKind {
    CheckKind::LinearOde { y, s, ode: o }
}

fn inversion(target: Expr, p: HypergeomParams, inner: Expr, prefactor: Option<Expr>) -> CheckKind {
    CheckKind::Inversion { target, params: p, inner, prefactor }
}

fn jid(haupt: Expr, r: Rf) -> CheckKind {
    CheckKind::JIdentity { haupt, r, jform: form(SmallJ) }
}

/// The whole registry, in a fixed order.
pub fn registry() -> Vec<CheckSpec> {
    let mut v = Vec::new();
    v.extend(group0());
    v.extend(group1());
    v.extend(group2());
    v.extend(group3());
    v.extend(group4());
    v.extend(group5());
    v.extend(group6());
    v.extend(group7());
    v.extend(group8());
    v.extend(group9());
    v.extend(group10());
    v.extend(group11());
    v.extend(group12());
    v.extend(negative_controls());
    v
}

pub fn groups() -> Vec<&'static str> {
    let mut g: Vec<&'static str> = Vec::new();
    for c in registry() {
        if !g.contains(&c.group) {
            g.push(c.group);
        }
    }
    g
}

fn group0() -> Vec<CheckSpec> {
    vec![
        spec(
            "berndt-level2-inversion",
            "G0",
            "Jacobi inversion in Ramanujan's form",
            r"x=16 q \prod_{n=1}^{\infty} \frac{ (1+q^{2n})^8 }{(1+q^{2n-1})^8  }",
            inversion(form(Phi).pow(2), params(half(), half(), int(1)), form(BerndtX), None),
        ),
        spec(
            "zagier-apery-expansion",
            "G0",
            "Zagier recurrence (11, 3, 1) as the expansion of T in g",
            r"(n+1)^2t(n+1)=(\alpha n^2+\alpha n+\beta)t(n)+\gamma n^2 t(n-1)",
            CheckKind::RecurrenceExpansion {
                target: form(T5b),
                recurrence: zagier(int(11), int(3), int(1)),
                inner: form(GLevel5),
            },
        )
        .note("the generic recurrence engine driven with (alpha, beta, gamma) = (11, 3, 1), whose terms are the Taylor coefficients of the Heun solution T(g)"),
    ]
}

fn group1() -> Vec<CheckSpec> {
    let (e2, e4, e6) = (form(E2), form(E4), form(E6));
    vec![
        spec(
            "ramanujan-system",
            "G1",
            "Ramanujan system for E2, E4, E6",
            r"DE_2(\tau)=\frac{E_2(\tau)^2-E_4(\tau)  }{12  }",
            system(vec![
                (e2.clone(), (e2.pow(2) - &e4) / 12),
                (e4.clone(), (&e2 * &e4 - &e6) / 3),
                (e6.clone(), (&e2 * &e6 - e4.pow(2)) / 2),
            ]),
        ),
        spec(
            "schwarzian-J",
            "G1",
            "Dedekind's Schwarzian equation for J",
            r"\frac{36 J^2-41 J+32}{72  J^2 (J-1)^2}",
            schwarz(
                form(BigJ),
                (36 * x().pow(2) - 41 * x() + 32) / (72 * x().pow(2) * (x() - 1).pow(2)),
            ),
        ),
        spec(
            "schwarzian-j",
            "G1",
            "Schwarzian equation for j",
            r"j^2-2^4\cdot 3 \cdot 41 j+2^{15}\cdot 3^4",
            schwarz(
                form(SmallJ),
                (x().pow(2) - 1968 * x() + 2654208) / (2 * x().pow(2) * (x() - 1728).pow(2)),
            ),
        ),
    ]
}

fn group2() -> Vec<CheckSpec> {
    let e4r = form(E4).pow_rat(rat(1, 4));
    let e6r = form(E6).pow_rat(rat(1, 6));
    vec![
        spec(
            "e4-linear-J",
            "G2",
            "Second-order equation for E4^(1/4) in J",
            r"\frac{5}{144J^2(J-1)}",
            linear(
                e4r.clone(),
                form(BigJ),
                ode(c(1, 2) * pole(c(0, 1)) + c(1, 2) * pole(c(1, 1)), -5 / (144 * x().pow(2) * (x() - 1))),
            ),
        ),
        spec(
            "e4-hypergeometric-ode",
            "G2",
            "Hypergeometric equation for E4^(1/4) in x = 1/J",
            r"x(1-x) \frac{d^2 Q}{dx^2} + \left(1-\frac32x \right) \frac{dQ}{dx} - \frac{5}{144} Q =0",
            linear(e4r.clone(), form(InvJ), gauss_ode(int(1), rat(3, 2), rat(5, 144))),
        ),
        spec(
            "e6-linear-J",
            "G2",
            "Second-order equation for E6^(1/6) in J",
            r"\frac{7}{144J(J-1)^2}",
            linear(
                e6r.clone(),
                form(BigJ),
                ode(c(2, 3) * pole(c(0, 1)) + c(1, 3) * pole(c(1, 1)), 7 / (144 * x() * (x() - 1).pow(2))),
            ),
        )
        .note("the anchor multiplies Q in the zeroth-order term; the unknown R is used"),
        spec(
            "e6-hypergeometric-ode",
            "G2",
            "Hypergeometric equation for E6^(1/6) in y = 1/(1-J)",
            r"y(1-y) \frac{d^2 R}{dy^2} + \left(1-\frac53 y \right) \frac{dR}{dy} - \frac{7}{144} R =0",
            linear(e6r.clone(), form(InvOneMinusJ), gauss_ode(int(1), rat(5, 3), rat(7, 144))),
        ),
        spec(
            "e4-inversion",
            "G2",
            "Inversion formula for E4",
            r"\sqrt[4]{ E_4(\tau) } = { }_2 F_1 \left( \frac{1}{12}, \frac{5}{12}  ; 1; \frac{ 1}{ J(\tau) } \right)",
            inversion(e4r, params(rat(1, 12), rat(5, 12), int(1)), form(InvJ), None),
        ),
        spec(
            "e6-inversion",
            "G2",
            "Inversion formula for E6",
            r"\sqrt[6]{ E_6(\tau) } = { }_2 F_1 \left( \frac{1}{12}, \frac{7}{12}  ; 1; \frac{ 1}{ 1-J(\tau) } \right)",
            inversion(e6r, params(rat(1, 12), rat(7, 12), int(1)), form(InvOneMinusJ), None),
        ),
    ]
}

fn halphen(p: Expr, q: Expr) -> CheckKind {
    let r = form(E2);
    system(vec![
        (p.clone(), (-p.pow(2) + 2 * &p * &q + &p * &r) / 6),
        (q.clone(), (-q.pow(2) + 2 * &p * &q + &q * &r) / 6),
        (r.clone(), (-p.pow(2) + &p * &q - q.pow(2) + r.pow(2)) / 12),
    ])
}

fn group3() -> Vec<CheckSpec> {
    let t00 = form(Theta00Sq).pow(2);
    let t10 = form(Theta10Sq).pow(2);
    let t01 = form(Theta01Sq).pow(2);
    let anchor = r"DP= \frac{-P^2 + 2 P Q + P R}{6}";
    vec![
        spec("halphen-system-1", "G3", "Halphen system, first triple", anchor, halphen(t00.clone(), t10.clone())),
        spec("halphen-system-2", "G3", "Halphen system, second triple", anchor, halphen(-&t10, t01.clone())),
        spec("halphen-system-3", "G3", "Halphen system, third triple", anchor, halphen(-&t01, -&t00)),
        spec(
            "schwarzian-lambda",
            "G3",
            "Schwarzian equation for lambda",
            r"\frac{ \lambda^2-\lambda+1 }{ 2\lambda^2(\lambda-1)^2 }",
            schwarz(form(Lambda), (x().pow(2) - x() + 1) / (2 * x().pow(2) * (x() - 1).pow(2))),
        ),
        spec(
            "j-lambda",
            "G3",
            "j as a rational function of lambda",
            r"j=2^8 \frac{ (\lambda^2-\lambda+1)^3 }{ \lambda^2(\lambda-1)^2 }",
            jid(form(Lambda), 256 * (x().pow(2) - x() + 1).pow(3) / (x().pow(2) * (x() - 1).pow(2))),
        ),
        spec(
            "j-half-lambda",
            "G3",
            "j(tau/2) as a rational function of lambda",
            r"j\left(  \frac{\tau}{2} \right) = 2^4 \frac{ (\lambda^2+14\lambda+1)^3 }{ \lambda (\lambda-1)^4 }",
            CheckKind::JIdentity {
                haupt: form(Lambda),
                r: 16 * (x().pow(2) + 14 * x() + 1).pow(3) / (x() * (x() - 1).pow(4)),
                jform: form(SmallJ).at(half()),
            },
        ),
        spec(
            "j-double-lambda",
            "G3",
            "j(2 tau) as a rational function of lambda",
            r"j(2\tau) = 2^{16} \frac{ \left(1-\lambda+\frac{1}{16}\lambda^2\right)^3 }{ \lambda^4 (1-\lambda) }",
            CheckKind::JIdentity {
                haupt: form(Lambda),
                r: 65536 * (1 - x() + c(1, 16) * x().pow(2)).pow(3) / (x().pow(4) * (1 - x())),
                jform: form(SmallJ).at(int(2)),
            },
        ),
    ]
}

fn group4() -> Vec<CheckSpec> {
    let lam = form(Lambda);
    let g = || gauss_ode(int(1), int(2), rat(1, 4));
    let p = || params(half(), half(), int(1));
    vec![
        spec(
            "theta00-lambda-ode",
            "G4",
            "Hypergeometric equation for theta[0;0]^2 in lambda",
            r"\lambda(1-\lambda) \frac{d^2 P}{d\lambda^2} +(1-2\lambda) \frac{dP}{d\lambda} - \frac14 P =0",
            linear(form(Theta00Sq), lam.clone(), g()),
        ),
        spec(
            "theta10-lambda-ode",
            "G4",
            "Second-order equation for theta[1;0]^2 in lambda",
            r"\frac{1}{4 \lambda^2(\lambda-1)}",
            linear(form(Theta10Sq), lam.clone(), ode(pole(c(1, 1)), -1 / (4 * x().pow(2) * (x() - 1)))),
        ),
        spec(
            "theta10-inverse-lambda-ode",
            "G4",
            "Hypergeometric equation for theta[1;0]^2 in x = 1/lambda",
            r"x(1-x) \frac{d^2Q}{dx^2} +(1-2x) \frac{dQ}{dx} - \frac14 Q =0",
            linear(form(Theta10Sq), lam.inv(), g()),
        )
        .note("the unknown is theta[1;0]^2, written Q(x)=P(tau(x)) in the statement"),
        spec(
            "theta01-ode",
            "G4",
            "Hypergeometric equation for theta[0;1]^2 in y = 1/(1-lambda)",
            r"y(1-y) \frac{d^2 Q}{d  y^2} +(1-2 y) \frac{dQ}{d y } - \frac14 Q =0",
            linear(form(Theta01Sq), (1 - &lam).inv(), g()),
        ),
        spec(
            "theta00-inversion",
            "G4",
            "Inversion formula for theta[0;0]^2",
            r"{ }_2 F_1 \left( \frac12, \frac12; 1; \lambda(\tau) \right)",
            inversion(form(Theta00Sq), p(), lam.clone(), None),
        ),
        spec(
            "theta10-inversion",
            "G4",
            "Inversion formula for theta[1;0]^2",
            r"\left( \frac{1}{\lambda} \right)^{-\frac12} { }_2 F_1 \left( \frac12, \frac12; 1; \frac{1}{1/\lambda(\tau)} \right)",
            inversion(form(Theta10Sq), p(), lam.clone(), Some(lam.pow_rat(half()))),
        )
        .note("checked in the simplified form lambda^(1/2) 2F1(1/2, 1/2; 1; lambda)"),
        spec(
            "theta01-inversion",
            "G4",
            "Inversion formula for theta[0;1]^2",
            r"\frac{\lambda(\tau)}{\lambda(\tau)-1}",
            inversion(form(Theta01Sq), p(), &lam / (&lam - 1), None),
        ),
    ]
}

fn group5() -> Vec<CheckSpec> {
    let (a, b, cc, e2) = (form(BorweinA), form(BorweinB), form(BorweinC), form(E2));
    let e23 = form(E2).at(int(3));
    let b3 = b.pow(3);
    let c3 = cc.pow(3);
    let xl = form(XLevel3);
    vec![
        spec(
            "cubic-system-b",
            "G5",
            "Nonlinear system for a, E2, b^3",
            r"Da(\tau)=\frac{3a^3(\tau)+a(\tau)E_2(\tau)-4b^3(\tau)}{12}",
            system(vec![
                (a.clone(), (3 * a.pow(3) + &a * &e2 - 4 * &b3) / 12),
                (e2.clone(), (-9 * a.pow(4) + 8 * &a * &b3 + e2.pow(2)) / 12),
                (b3.clone(), (-a.pow(2) * &b3 + &e2 * &b3) / 4),
            ]),
        ),
        spec(
            "cubic-system-c",
            "G5",
            "Nonlinear system for a, E2(3 tau), c^3",
            r"Da(\tau)= \frac { -3 a^3(\tau)+3 a(\tau) E_2(3\tau)+4 c^3(\tau) } { 12 }",
            system(vec![
                (a.clone(), (-3 * a.pow(3) + 3 * &a * &e23 + 4 * &c3) / 12),
                (e23.clone(), (-9 * a.pow(4) + 8 * &a * &c3 + 9 * e23.pow(2)) / 36),
                (c3.clone(), (a.pow(2) * &c3 + 3 * &e23 * &c3) / 4),
            ]),
        ),
        spec(
            "dual-a",
            "G5",
            "a(q) as divisor sum and lattice sum",
            r"\sum_{m,n\in\mathbb{Z}} q^{m^2+mn+n^2} =1+6\sum_{n=1}^{\infty} (d_{1,3}(n)-d_{2,3}(n)) q^n",
            CheckKind::DualRoute(BorweinA),
        ),
        spec(
            "dual-b",
            "G5",
            "b(q) as product and lattice sum",
            r"\sum_{m,n\in\mathbb{Z}} \omega^{n-m} q^{m^2+mn+n^2}=\prod_{n=1}^{\infty} \frac{ (1-q^n)^3  }{  (1-q^{3n})  }",
            CheckKind::DualRoute(BorweinB),
        ),
        spec(
            "dual-c",
            "G5",
            "c(q) as product and lattice sum",
            r"3q^{\frac13} \prod_{n=1}^{\infty} \frac{ (1-q^{3n})^3  }{  (1-q^{n})  }",
            CheckKind::DualRoute(BorweinC),
        ),
        spec(
            "schwarzian-x3",
            "G5",
            "Schwarzian equation for x = c^3/a^3",
            r"\frac{8 x^2-8 x+9}{18  x^2  (x-1)^2}",
            schwarz(xl.clone(), (8 * x().pow(2) - 8 * x() + 9) / (18 * x().pow(2) * (x() - 1).pow(2))),
        ),
        spec(
            "a-x-ode",
            "G5",
            "Hypergeometric equation for a in x",
            r"x(1-x) \frac{d^2 a}{dx^2} +(1-2x) \frac{da}{dx} - \frac29 a =0",
            linear(a.clone(), xl.clone(), gauss_ode(int(1), int(2), rat(2, 9))),
        ),
        spec(
            "b-x-ode",
            "G5",
            "Second-order equation for b in x",
            r"\frac{1}{9x(x-1)^2}",
            linear(b.clone(), xl.clone(), ode(pole(c(0, 1)) + c(1, 3) * pole(c(1, 1)), 1 / (9 * x() * (x() - 1).pow(2)))),
        ),
        spec(
            "b-y-ode",
            "G5",
            "Hypergeometric equation for b in y = a^3/b^3",
            r"y(1-y) \frac{d^2 b}{dy^2} + \left( \frac23-\frac53 y \right) \frac{db}{dy} - \frac19 b =0",
            linear(b.clone(), a.pow(3) / &b3, gauss_ode(rat(2, 3), rat(5, 3), rat(1, 9))),
        ),
        spec(
            "c-x-ode",
            "G5",
            "Second-order equation for c in x",
            r"\frac{1}{9x^2(x-1)}",
            linear(cc.clone(), xl.clone(), ode(c(1, 3) * pole(c(0, 1)) + pole(c(1, 1)), -1 / (9 * x().pow(2) * (x() - 1)))),
        ),
        spec(
            "c-z-ode",
            "G5",
            "Hypergeometric equation for c in z = a^3/c^3",
            r"z(1-z) \frac{d^2 c}{dz^2} + \left( \frac23-\frac53 z \right) \frac{dc}{dz} - \frac{1}{9} c =0",
            linear(cc.clone(), xl.inv(), gauss_ode(rat(2, 3), rat(5, 3), rat(1, 9))),
        ),
        spec(
            "a-inversion",
            "G5",
            "Inversion formula for a",
            r"a(\tau) = { }_2 F_1 \left( \frac13, \frac23; 1; \frac{ c^3(\tau)}{ a^3(\tau) } \right)",
            inversion(a.clone(), params(third(), rat(2, 3), int(1)), xl.clone(), None),
        ),
        spec(
            "b-inversion",
            "G5",
            "Inversion formula for b",
            r"b(\tau) = { }_2 F_1 \left( \frac13, \frac13; 1; 1- \frac { a^3(\tau) } { b^3(\tau) } \right)",
            inversion(b.clone(), params(third(), third(), int(1)), 1 - a.pow(3) / &b3, None),
        ),
        spec(
            "c-inversion",
            "G5",
            "Inversion formula for c",
            r"c(\tau) = \left( \frac { a^3(\tau) } { c^3(\tau) } \right)^{-\frac13}",
            inversion(cc.clone(), params(third(), rat(2, 3), int(1)), xl.clone(), Some(xl.inv().pow_rat(-third()))),
        ),
        spec(
            "j-x3",
            "G5",
            "j as a rational function of x = c^3/a^3",
            r"j= 27 \frac { \left( 1+8 x \right)^3 } { x (1-x)^3 }",
            jid(xl, 27 * (1 + 8 * x()).pow(3) / (x() * (1 - x()).pow(3))),
        ),
    ]
}

fn group6() -> Vec<CheckSpec> {
    let (v, w, u) = (form(V5), form(W5), form(E2));
    let sqrt5 = kq(int(0), int(1));
    let vw_system = system(vec![
        (
            v.clone(),
            (kq(int(125), int(-55)) * v.pow(3) + kq(int(0), int(132)) * v.pow(2) * &w
                - kq(int(175), int(77)) * &v * w.pow(2)
                + 50 * &v * &u)
                / 600,
        ),
        (
            w.clone(),
            (kq(int(-175), int(77)) * v.pow(2) * &w - kq(int(0), int(132)) * &v * w.pow(2)
                + kq(int(125), int(55)) * w.pow(3)
                + 50 * &u * &w)
                / 600,
        ),
        (
            u.clone(),
            (kq(int(-123), int(55)) * v.pow(4) + kq(int(132), int(-60)) * v.pow(3) * &w - 28 * v.pow(2) * w.pow(2)
                + kq(int(132), int(60)) * &v * w.pow(3)
                - kq(int(123), int(55)) * w.pow(4)
                + 10 * u.pow(2))
                / 120,
        ),
    ]);
    // S = κ_S V, T = κ_T W
    let ks2 = kq(int(10), rat(-22, 5));
    let kt2 = kq(int(10), rat(22, 5));
    let kst = kq(int(0), rat(4, 5));
    let st_system = system(vec![
        (
            v.clone(),
            (5 * &ks2 * v.pow(3) + 66 * &kst * v.pow(2) * &w - 7 * &kt2 * &v * w.pow(2) + 20 * &v * &u) / 240,
        ),
        (
            w.clone(),
            (-7 * &ks2 * v.pow(2) * &w - 66 * &kst * &v * w.pow(2) + 5 * &kt2 * w.pow(3) + 20 * &w * &u) / 240,
        ),
        (
            u.clone(),
            (-(ks2.pow(2)) * v.pow(4) - 12 * &ks2 * &kst * v.pow(3) * &w - 14 * kst.pow(2) * v.pow(2) * w.pow(2)
                + 12 * &kst * &kt2 * &v * w.pow(3)
                - kt2.pow(2) * w.pow(4)
                + 16 * u.pow(2))
                / 192,
        ),
    ]);
    let f = form(FLevel5);
    let quad = || x().pow(2) - 11 * x() - 1;
    let quad_t = || x().pow(2) + 11 * x() - 1;
    let g = form(GLevel5);
    vec![
        spec(
            "level5-vwu-system",
            "G6",
            "Nonlinear system for V, W, U = E2",
            r"5\left(25-11 \sqrt{5}\right) V^3+132 \sqrt{5} V^2 W",
            vw_system,
        ),
        spec(
            "level5-stu-system",
            "G6",
            "Nonlinear system for S, T, U = E2",
            r"D S= \frac{5 S^3+66 S^2 T-7 S T^2+20 S U}{240}",
            st_system,
        )
        .note("verified via V/W representative: S = kS V, T = kT W with kS^2 = (50-22sqrt5)/5, kS kT = 4sqrt5/5, kT^2 = (50+22sqrt5)/5 substituted into each equation"),
        spec(
            "dual-V5",
            "G6",
            "V as product and divisor sum",
            r"1 - \frac52(1+\sqrt{5}) \sum_{n=1}^{\infty} (d_{1,5}(n)-d_{4,5}(n)) q^n",
            CheckKind::DualRoute(V5),
        )
        .note(VW_NOTE),
        spec(
            "dual-W5",
            "G6",
            "W as product and divisor sum",
            r"1 + \frac52(-1+\sqrt{5}) \sum_{n=1}^{\infty} (d_{1,5}(n)-d_{4,5}(n)) q^n",
            CheckKind::DualRoute(W5),
        )
        .note(VW_NOTE),
        spec(
            "f5-quotient",
            "G6",
            "f as the quotient T/S",
            r"f(\tau) = \frac{1}{\tilde{f}(\tau)} = \frac{T}{S}",
            identity(vec![(f.clone(), k(alpha5()) * &w / &v)]),
        )
        .note("verified via V/W representative: T/S = ((11+5sqrt5)/2) W/V"),
        spec(
            "schwarzian-f5",
            "G6",
            "Schwarzian equation for the level-5 Hauptmodul f",
            r"\frac{f^4-12 f^3+134 f^2+12 f+1}{2 f^2 \left(f^2-11 f-1\right)^2}",
            schwarz(
                f.clone(),
                (x().pow(4) - 12 * x().pow(3) + 134 * x().pow(2) + 12 * x() + 1) / (2 * x().pow(2) * quad().pow(2)),
            ),
        ),
        spec(
            "s-heun-f",
            "G6",
            "Heun equation for S in f",
            r"\frac { f-3 } { f(f-  \frac{11+5 \sqrt{5}}{2})(f-\frac{11-5 \sqrt{5}}{2}   ) }",
            linear(
                v.clone(),
                f.clone(),
                ode(pole(c(0, 1)) + (2 * x() - 11) / quad(), (x() - 3) / (x() * quad())),
            ),
        )
        .note(VW_NOTE),
        spec(
            "t-heun-f",
            "G6",
            "Second-order equation for T in f",
            r"\frac { 3f+1 } { f^2(f-  \frac{11+5 \sqrt{5}}{2})(f-\frac{11-5 \sqrt{5}}{2}   ) }",
            linear(
                w.clone(),
                f.clone(),
                ode(-pole(c(0, 1)) + (2 * x() - 11) / quad(), -(3 * x() + 1) / (x().pow(2) * quad())),
            ),
        )
        .note(VW_NOTE),
        spec(
            "t-heun-ftilde",
            "G6",
            "Heun equation for T in 1/f",
            r"\frac { \tilde{f}+3 } { \tilde{f}( \tilde{f}-  \frac{-11+5 \sqrt{5}}{2})( \tilde{f}-\frac{-11-5 \sqrt{5}}{2}   ) }",
            linear(
                w.clone(),
                form(FTilde5),
                ode(pole(c(0, 1)) + (2 * x() + 11) / quad_t(), (x() + 3) / (x() * quad_t())),
            ),
        )
        .note(VW_NOTE),
        spec(
            "v-heun-v",
            "G6",
            "Heun equation for V in v",
            r"v+\frac{ \sqrt{5}  }{25}",
            linear(
                v.clone(),
                form(VHaupt5),
                ode(
                    pole(c(0, 1)) + pole(c5(0, -1, 25)) + pole(c5(11, -5, 2)),
                    (x() - c5(15, -7, 10)) / (x() * (x() + c5(0, 1, 25)) * (x() - c5(11, -5, 2))),
                ),
            ),
        ),
        spec(
            "v-heun-g",
            "G6",
            "Heun equation for V in g",
            r"\frac { 5(1-\sqrt{5}) } { 2 }",
            linear(
                v.clone(),
                g.clone(),
                ode(
                    pole(c(0, 1)) + pole(c5(-11, -5, 2)) - pole(c5(-11, 5, 2)),
                    -c5(5, -5, 2) * (x() + c5(-2, 1, 1))
                        / (x() * (x() + c5(11, 5, 2)) * (x() + c5(11, -5, 2)).pow(2)),
                ),
            ),
        ),
        spec(
            "w-heun-w",
            "G6",
            "Heun equation for W in w",
            r"w-\frac{ \sqrt{5} }{25}",
            linear(
                w.clone(),
                form(WHaupt5),
                ode(
                    pole(c(0, 1)) + pole(c5(0, 1, 25)) + pole(c5(11, 5, 2)),
                    (x() - c5(15, 7, 10)) / (x() * (x() - c5(0, 1, 25)) * (x() - c5(11, 5, 2))),
                ),
            ),
        ),
        spec(
            "w-heun-g",
            "G6",
            "Heun equation for W in g",
            r"\frac { 5(1+\sqrt{5}) } { 2 }",
            linear(
                w.clone(),
                g.clone(),
                ode(
                    pole(c(0, 1)) + pole(c5(-11, 5, 2)) - pole(c5(-11, -5, 2)),
                    -c5(5, 5, 2) * (x() - c5(2, 1, 1))
                        / (x() * (x() + c5(11, -5, 2)) * (x() + c5(11, 5, 2)).pow(2)),
                ),
            ),
        ),
        spec(
            "a5-expansion",
            "G6",
            "V as the generating function of a5 in v",
            r"(n+1)^2 a_5(n+1)",
            CheckKind::RecurrenceExpansion { target: v.clone(), recurrence: a5(), inner: form(VHaupt5) },
        ),
        spec(
            "s5-expansion",
            "G6",
            "V as the generating function of s5 in g",
            r"(n+1)^2 s_5(n+1)",
            CheckKind::RecurrenceExpansion { target: v.clone(), recurrence: s5(), inner: g.clone() },
        ),
        spec(
            "b5-expansion",
            "G6",
            "W as the generating function of b5 in w",
            r"(n+1)^2 b_5(n+1)",
            CheckKind::RecurrenceExpansion { target: w.clone(), recurrence: b5(), inner: form(WHaupt5) },
        ),
        spec(
            "t5-expansion",
            "G6",
            "W as the generating function of t5 in g",
            r"(n+1)^2 t_5(n+1)",
            CheckKind::RecurrenceExpansion { target: w.clone(), recurrence: t5(), inner: g },
        )
        .note("initial condition t5(0) = 1"),
        spec(
            "j-f5",
            "G6",
            "j as a rational function of f",
            r"j= \frac { \left(f^4-12 f^3+14 f^2 +12f+1\right)^3 } { f^5 (f^2-11f-1) }",
            jid(f, (x().pow(4) - 12 * x().pow(3) + 14 * x().pow(2) + 12 * x() + 1).pow(3) / (x().pow(5) * quad())),
        ),
    ]
    .into_iter()
    .map(|c| match &c.note {
        None => c.note(VW_NOTE),
        Some(n) if !n.starts_with("verified via V/W representative") => {
            let n = format!("{VW_NOTE}; {n}");
            c.note(&n)
        }
        Some(_) => c,
    })
    .chain(std::iter::once(
        spec(
            "vhaupt-leading",
            "G6",
            "v = (W - V)/(5 sqrt5 V) begins with q",
            r"\frac{1}{5 \sqrt{5}} \left( \frac{W-V}{V} \right)",
            identity(vec![(
                (form(W5) - form(V5)) / (5 * sqrt5 * form(V5)),
                form(VHaupt5),
            )]),
        )
        .note(VW_NOTE),
    ))
    .collect()
}

fn group7() -> Vec<CheckSpec> {
    let (p, q, r) = (form(P5b), form(Q5b), form(E2).at(int(5)));
    let (s, t) = (form(S5b), form(T5b));
    let g = form(GLevel5);
    let quad = || x().pow(2) + 11 * x() - 1;
    vec![
        spec(
            "level5b-pqr-system",
            "G7",
            "Nonlinear system for P, Q, R = E2(5 tau)",
            r"DP=\frac{13P^3+39P^2Q-47PQ^2+9Q^3+50PR}{120}",
            system(vec![
                (p.clone(), (13 * p.pow(3) + 39 * p.pow(2) * &q - 47 * &p * q.pow(2) + 9 * q.pow(3) + 50 * &p * &r) / 120),
                (q.clone(), (-9 * p.pow(3) - 47 * p.pow(2) * &q - 39 * &p * q.pow(2) + 13 * q.pow(3) + 50 * &q * &r) / 120),
                (
                    r.clone(),
                    (p.pow(4) - 3 * p.pow(3) * &q - 31 * p.pow(2) * q.pow(2) + 3 * &p * q.pow(3) + q.pow(4) + 125 * r.pow(2))
                        / 300,
                ),
            ]),
        ),
        spec(
            "level5b-stu-system",
            "G7",
            "Nonlinear system for S, T, U = E2(5 tau)",
            r"DS=\frac{-5 S^3-66 S^2 T+7 S T^2+5 S U}{12}",
            system(vec![
                (s.clone(), (-5 * s.pow(3) - 66 * s.pow(2) * &t + 7 * &s * t.pow(2) + 5 * &s * &r) / 12),
                (t.clone(), (7 * s.pow(2) * &t + 66 * &s * t.pow(2) - 5 * t.pow(3) + 5 * &t * &r) / 12),
                (
                    r.clone(),
                    (-5 * s.pow(4) - 60 * s.pow(3) * &t - 70 * s.pow(2) * t.pow(2) + 60 * &s * t.pow(3) - 5 * t.pow(4)
                        + 5 * r.pow(2))
                        / 12,
                ),
            ]),
        ),
        spec(
            "level5b-st-combination",
            "G7",
            "S and T as combinations of P and Q",
            r"=-\frac{3}{10}P+\frac{1}{10} Q",
            identity(vec![
                (s.clone(), (-3 * &p + &q) / 10),
                (t.clone(), (&p + 3 * &q) / 10),
            ]),
        ),
        spec("dual-S5b", "G7", "S as product and divisor sum", r"q \prod_{n=1}^{\infty} \frac { (1-q^n)^2 } { (1-q^{5n-2})^5(1-q^{5n-3})^5 }", CheckKind::DualRoute(S5b)),
        spec("dual-T5b", "G7", "T as product and divisor sum", r"\prod_{n=1}^{\infty} \frac { (1-q^n)^2 } { (1-q^{5n-1})^5(1-q^{5n-4})^5 }", CheckKind::DualRoute(T5b)),
        spec("dual-P5b", "G7", "P as divisor sum and as T - 3S", r"P(\tau)=&1+ 10 \sum_{n=1}^{\infty} (d_{2,5}(n)-d_{3,5}(n)) q^n", CheckKind::DualRoute(P5b)),
        spec("dual-Q5b", "G7", "Q as divisor sum and as S + 3T", r"Q(\tau)=3 + 10  \sum_{n=1}^{\infty} (d_{1,5}(n)-d_{4,5}(n)) q^n", CheckKind::DualRoute(Q5b)),
        spec("dual-g5", "G7", "g as product and as S/T", r"(1-q^{5n-1})^5 (1-q^{5n-4})^5", CheckKind::DualRoute(GLevel5)),
        spec(
            "schwarzian-g5",
            "G7",
            "Schwarzian equation for the level-5 Hauptmodul g",
            r"\frac{g^4+12 g^3+134 g^2-12 g+1}{2 g^2 \left(g^2+11 g-1\right)^2}",
            schwarz(
                g.clone(),
                (x().pow(4) + 12 * x().pow(3) + 134 * x().pow(2) - 12 * x() + 1) / (2 * x().pow(2) * quad().pow(2)),
            ),
        ),
        spec(
            "t-heun-g",
            "G7",
            "Beukers' Heun equation for T in g",
            r"\frac { g+3 } { g( g-  \frac{-11+5 \sqrt{5}}{2})( g-\frac{-11-5 \sqrt{5}}{2}   ) }",
            linear(t.clone(), g.clone(), ode(pole(c(0, 1)) + (2 * x() + 11) / quad(), (x() + 3) / (x() * quad()))),
        ),
        spec(
            "t-heun-bigG",
            "G7",
            "Heun equation for T in G = 2g/(-11+5sqrt5)",
            r"\frac{1}{G-  \frac{-123-55 \sqrt{5}}{2}  }",
            linear(
                t.clone(),
                form(BigG5),
                ode(
                    pole(c(0, 1)) + pole(c(1, 1)) + pole(c5(-123, -55, 2)),
                    (x() + c5(33, 15, 2)) / (x() * (x() - 1) * (x() - c5(-123, -55, 2))),
                ),
            ),
        ),
        spec(
            "j-g5",
            "G7",
            "j as a rational function of g",
            r"\frac{\left(g^4-228 g^3+494 g^2+228 g+1\right)^3}{g \left(-g^2-11 g+1\right)^5}",
            jid(
                g,
                (x().pow(4) - 228 * x().pow(3) + 494 * x().pow(2) + 228 * x() + 1).pow(3) / (x() * (-quad()).pow(5)),
            ),
        ),
    ]
}

/// `1/(x − p/q)`.
fn pl(p: i64, q: i64) -> Rf {
    pole(c(p, q))
}

fn xm(p: i64, q: i64) -> Rf {
    x() - c(p, q)
}

fn group8() -> Vec<CheckSpec> {
    let (p, q, r) = (form(P6a), form(Q6a), form(E2));
    let f = form(F6a);
    let (a, b, cc) = (form(BorweinA), form(BorweinB), form(BorweinC));
    let two = || int(2);
    vec![
        spec(
            "level6a-system",
            "G8",
            "Nonlinear system for P, Q, R = E2",
            r"DP=\frac{27 P^3-36P^2 Q+5P Q^2+4 P R}{48}",
            system(vec![
                (p.clone(), (27 * p.pow(3) - 36 * p.pow(2) * &q + 5 * &p * q.pow(2) + 4 * &p * &r) / 48),
                (q.clone(), (-27 * p.pow(2) * &q + 24 * &p * q.pow(2) - q.pow(3) + 4 * &q * &r) / 48),
                (
                    r.clone(),
                    (-729 * p.pow(4) + 972 * p.pow(3) * &q - 270 * p.pow(2) * q.pow(2) + 12 * &p * q.pow(3) - q.pow(4)
                        + 16 * r.pow(2))
                        / 192,
                ),
            ]),
        ),
        spec("dual-P6a", "G8", "P as eta quotient and divisor sum", r"1+2\sum_{n=1}^{\infty} (d_{1,6}(n)+d_{2,6}(n)-d_{4,6}(n)-d_{5,6}(n)) q^n", CheckKind::DualRoute(P6a)),
        spec("dual-Q6a", "G8", "Q as eta quotient and divisor sum", r"1-6\sum_{n=1}^{\infty} (d_{1,6}(n)-d_{5,6}(n)) q^n+18 \sum_{n=1}^{\infty} ( d_{2,6}(n)-d_{4,6}(n) )q^n", CheckKind::DualRoute(Q6a)),
        spec("dual-f6a", "G8", "f as eta quotient and as P/Q", r"f(\tau)=\frac{P(\tau)}{Q(\tau)}", CheckKind::DualRoute(F6a)),
        spec(
            "schwarzian-f6a",
            "G8",
            "Schwarzian equation for f",
            r"\frac{81 f^4-108 f^3+102 f^2-12 f+1}{2 (1-9 f)^2 (f-1)^2 f^2}",
            schwarz(
                f.clone(),
                (81 * x().pow(4) - 108 * x().pow(3) + 102 * x().pow(2) - 12 * x() + 1)
                    / (2 * (1 - 9 * x()).pow(2) * (x() - 1).pow(2) * x().pow(2)),
            ),
        ),
        spec(
            "p-f-ode",
            "G8",
            "Second-order equation for P in f",
            r"\frac { f-\frac13 } { 3 f^2(f-1)(f-\frac19) }",
            linear(p.clone(), f.clone(), ode(-pl(0, 1) + pl(1, 1) + pl(1, 9), -xm(1, 3) / (3 * x().pow(2) * xm(1, 1) * xm(1, 9)))),
        ),
        spec(
            "p-ftilde-heun",
            "G8",
            "Cooper's Heun equation for P in 1/f",
            r"\frac { \tilde{f}-3 } { \tilde{f} (\tilde{f}-1)(\tilde{f}- 9) }",
            linear(p.clone(), form(F6aTilde), ode(pl(0, 1) + pl(1, 1) + pl(9, 1), xm(3, 1) / (x() * xm(1, 1) * xm(9, 1)))),
        ),
        spec(
            "p-u-heun",
            "G8",
            "Heun equation for P in u = (P - Q)/(8P)",
            r"\frac { u+\frac14 } { u (u+1)(u-\frac18) }",
            linear(p.clone(), form(U6a), ode(pl(0, 1) + pl(-1, 1) + pl(1, 8), xm(-1, 4) / (x() * xm(-1, 1) * xm(1, 8)))),
        ),
        spec(
            "q-f-heun",
            "G8",
            "Cooper's Heun equation for Q in f",
            r"\frac { f-\frac13 } { f(f-1)(f-\frac19) }",
            linear(q.clone(), f.clone(), ode(pl(0, 1) + pl(1, 1) + pl(1, 9), xm(1, 3) / (x() * xm(1, 1) * xm(1, 9)))),
        ),
        spec(
            "q-v-heun",
            "G8",
            "Heun equation for Q in v = (f - 1)/8",
            r"\frac { v+\frac{1}{12} } { v(v+\frac18)(v+\frac19) }",
            linear(q.clone(), form(V6a), ode(pl(0, 1) + pl(-1, 8) + pl(-1, 9), xm(-1, 12) / (x() * xm(-1, 8) * xm(-1, 9)))),
        ),
        spec(
            "a-f-ode",
            "G8",
            "Second-order equation for a(tau) in f",
            r"\frac { 8 } { 27 (f-1)(f-\frac19) (f-\frac13)^2 }",
            linear(a.clone(), f.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(1, 3) + pl(1, 9), -8 / (27 * xm(1, 1) * xm(1, 9) * xm(1, 3).pow(2)))),
        ),
        spec(
            "a2-f-ode",
            "G8",
            "Second-order equation for a(2 tau) in f",
            r"\frac { 2 } { 3 f (f+\frac13)^2 }",
            linear(a.at(two()), f.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(-1, 3) + pl(1, 9), -2 / (3 * x() * xm(-1, 3).pow(2)))),
        ),
        spec(
            "b-f-ode",
            "G8",
            "Second-order equation for b(tau) in f",
            r"\frac { 4 (f-\frac13) } { 9 (f-1)(f-\frac19)^2 }",
            linear(b.clone(), f.clone(), ode(pl(0, 1) + pl(1, 1) + c(1, 3) * pl(1, 9), 4 * xm(1, 3) / (9 * xm(1, 1) * xm(1, 9).pow(2)))),
        ),
        spec(
            "b2-f-ode",
            "G8",
            "Second-order equation for b(2 tau) in f",
            r"\frac { f+\frac13 } { 9 f (f-\frac19)^2 }",
            linear(b.at(two()), f.clone(), ode(pl(0, 1) + pl(1, 1) - c(1, 3) * pl(1, 9), xm(-1, 3) / (9 * x() * xm(1, 9).pow(2)))),
        )
        .note("first-order coefficient taken with -(1/3)/(f-1/9); with +(1/3) the equation fails at q^2"),
        spec(
            "c-f-ode",
            "G8",
            "Second-order equation for c(tau) in f",
            r"\frac { 4 (f-\frac13) } { 27 f^2(f-1)^2(f-\frac19) }",
            linear(cc.clone(), f.clone(), ode(-c(1, 3) * pl(0, 1) + c(1, 3) * pl(1, 1) + pl(1, 9), 4 * xm(1, 3) / (27 * x().pow(2) * xm(1, 1).pow(2) * xm(1, 9)))),
        ),
        spec(
            "c2-f-ode",
            "G8",
            "Second-order equation for c(2 tau) in f",
            r"\frac { (f+\frac13) } { 3 f^2(f-1)^2 }",
            linear(cc.at(two()), f.clone(), ode(c(1, 3) * pl(0, 1) - c(1, 3) * pl(1, 1) + pl(1, 9), xm(-1, 3) / (3 * x().pow(2) * xm(1, 1).pow(2)))),
        ),
        spec("a-pq-6a", "G8", "a(tau) in terms of P and Q", r"a(\tau)=\frac32 P-\frac12 Q", identity(vec![(a.clone(), (3 * &p - &q) / 2)])),
        spec("a2-pq-6a", "G8", "a(2 tau) in terms of P and Q", r"a(2\tau)=\frac34 P+\frac14 Q", identity(vec![(a.at(two()), (3 * &p + &q) / 4)])),
        spec("b3-pq-6a", "G8", "b^3(tau) in terms of P and Q", r"b^3(\tau)=\frac{1}{8} (9P Q^2-Q^3)", identity(vec![(b.pow(3), (9 * &p * q.pow(2) - q.pow(3)) / 8)])),
        spec("b32-pq-6a", "G8", "b^3(2 tau) in terms of P and Q", r"b^3(2\tau)=\frac{1}{64} (81 P^2 Q-18 P Q^2+Q^3)", identity(vec![(b.at(two()).pow(3), (81 * p.pow(2) * &q - 18 * &p * q.pow(2) + q.pow(3)) / 64)])),
        spec("c3-pq-6a", "G8", "c^3(tau) in terms of P and Q", r"c^3(\tau)=\frac{27}{8}(P^3-P^2 Q)", identity(vec![(cc.pow(3), 27 * (p.pow(3) - p.pow(2) * &q) / 8)])),
        spec("c32-pq-6a", "G8", "c^3(2 tau) in terms of P and Q", r"c^3(2\tau)=\frac{27}{64}(P^3-2P^2 Q+P Q^2)", identity(vec![(cc.at(two()).pow(3), 27 * (p.pow(3) - 2 * p.pow(2) * &q + &p * q.pow(2)) / 64)])),
        spec(
            "j-f6a",
            "G8",
            "j as a rational function of f",
            r"\frac{(3 f-1)^3 \left(243 f^3-243 f^2+9 f-1\right)^3}{ f^2  (f-1)  (9 f-1)^3}",
            jid(
                f,
                (3 * x() - 1).pow(3) * (243 * x().pow(3) - 243 * x().pow(2) + 9 * x() - 1).pow(3)
                    / (x().pow(2) * (x() - 1) * (9 * x() - 1).pow(3)),
            ),
        ),
    ]
}

fn group9() -> Vec<CheckSpec> {
    let (p, q, r) = (form(P6b), form(Q6b), form(E2).at(int(6)));
    let g = form(G6b);
    let (a, b, cc) = (form(BorweinA), form(BorweinB), form(BorweinC));
    let two = || int(2);
    vec![
        spec(
            "level6b-system",
            "G9",
            "Nonlinear system for P, Q, R = E2(6 tau)",
            r"DP=\frac{-P^3+12P^2Q-15PQ^2+PR}{2}",
            system(vec![
                (p.clone(), (-p.pow(3) + 12 * p.pow(2) * &q - 15 * &p * q.pow(2) + &p * &r) / 2),
                (q.clone(), (p.pow(2) * &q - 8 * &p * q.pow(2) + 3 * q.pow(3) + &q * &r) / 2),
                (
                    r.clone(),
                    (-p.pow(4) + 12 * p.pow(3) * &q - 30 * p.pow(2) * q.pow(2) + 12 * &p * q.pow(3) - 9 * q.pow(4) + r.pow(2)) / 2,
                ),
            ]),
        ),
        spec("dual-P6b", "G9", "P as eta quotient and divisor sum", r"1+3\sum_{n=1}^{\infty} (d_{1,6}(n)-d_{5,6}(n)) q^n", CheckKind::DualRoute(P6b)),
        spec("dual-Q6b", "G9", "Q as eta quotient and divisor sum", r"\sum_{n=1}^{\infty} (d_{1,6}(n)-d_{5,6}(n)) q^n-2 \sum_{n=1}^{\infty} ( d_{1,3}(n)-d_{2,3}(n) )q^{2n}", CheckKind::DualRoute(Q6b)),
        spec("dual-g6b", "G9", "g as eta quotient and as Q/P", r"g(\tau)=\frac{Q(\tau)}{P(\tau)}", CheckKind::DualRoute(G6b)),
        spec(
            "schwarzian-g6b",
            "G9",
            "Schwarzian equation for g",
            r"\frac{81 g^4-108 g^3+102 g^2-12 g+1}{2 (9 g-1)^2 (g-1)^2 g^2}",
            schwarz(
                g.clone(),
                (81 * x().pow(4) - 108 * x().pow(3) + 102 * x().pow(2) - 12 * x() + 1)
                    / (2 * (9 * x() - 1).pow(2) * (x() - 1).pow(2) * x().pow(2)),
            ),
        ),
        spec(
            "p-g-heun",
            "G9",
            "Cooper's Heun equation for P in g",
            r"\frac { g-\frac13 } { g(g-1)(g-\frac19) }",
            linear(p.clone(), g.clone(), ode(pl(0, 1) + pl(1, 1) + pl(1, 9), xm(1, 3) / (x() * xm(1, 1) * xm(1, 9)))),
        ),
        spec(
            "a-g-ode",
            "G9",
            "Second-order equation for a(tau) in g",
            r"\frac { 2 } { 3 g(g+\frac13)^2 }",
            linear(a.clone(), g.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(-1, 3) + pl(1, 9), -2 / (3 * x() * xm(-1, 3).pow(2)))),
        ),
        spec(
            "a2-g-ode",
            "G9",
            "Second-order equation for a(2 tau) in g",
            r"\frac { 8 } { 27 (g-1) (g-\frac19) (g-\frac13)^2 }",
            linear(a.at(two()), g.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(1, 3) + pl(1, 9), -8 / (27 * xm(1, 1) * xm(1, 9) * xm(1, 3).pow(2)))),
        )
        .note("first-order coefficient taken in g, with the pole at g = 1/3"),
        spec(
            "b-g-ode",
            "G9",
            "Second-order equation for b(tau) in g",
            r"\frac { (g+\frac13) } { 9 g(g-\frac19)^2 }",
            linear(b.clone(), g.clone(), ode(pl(0, 1) + pl(1, 1) - c(1, 3) * pl(1, 9), xm(-1, 3) / (9 * x() * xm(1, 9).pow(2)))),
        )
        .note("first-order coefficient taken in g"),
        spec(
            "b2-g-ode",
            "G9",
            "Second-order equation for b(2 tau) in g",
            r"\frac { 4 ( g-\frac13 ) } { 9 (g-1) (g-\frac19)^2 }",
            linear(b.at(two()), g.clone(), ode(pl(0, 1) + pl(1, 1) + c(1, 3) * pl(1, 9), 4 * xm(1, 3) / (9 * xm(1, 1) * xm(1, 9).pow(2)))),
        ),
        spec(
            "c-g-ode",
            "G9",
            "Second-order equation for c(tau) in g",
            r"\frac { g+\frac13 } { 3 g^2(g-1)^2 }",
            linear(cc.clone(), g.clone(), ode(c(1, 3) * pl(0, 1) - c(1, 3) * pl(1, 1) + pl(1, 9), xm(-1, 3) / (3 * x().pow(2) * xm(1, 1).pow(2)))),
        ),
        spec(
            "c2-g-ode",
            "G9",
            "Second-order equation for c(2 tau) in g",
            r"\frac { 4 (g-\frac13) } { 27 g^2(g-1)^2 (g-\frac19) }",
            linear(cc.at(two()), g.clone(), ode(-c(1, 3) * pl(0, 1) + c(1, 3) * pl(1, 1) + pl(1, 9), 4 * xm(1, 3) / (27 * x().pow(2) * xm(1, 1).pow(2) * xm(1, 9)))),
        ),
        spec("a-pq-6b", "G9", "a(tau) in terms of P and Q", r"a(\tau)=P+3 Q", identity(vec![(a.clone(), &p + 3 * &q)])),
        spec("a2-pq-6b", "G9", "a(2 tau) in terms of P and Q", r"a(2\tau)=P-3 Q", identity(vec![(a.at(two()), &p - 3 * &q)])),
        spec("b3-pq-6b", "G9", "b^3(tau) in terms of P and Q", r"b^3(\tau)=P^3-18 P^2 Q+81 P Q^2", identity(vec![(b.pow(3), p.pow(3) - 18 * p.pow(2) * &q + 81 * &p * q.pow(2))])),
        spec("b32-pq-6b", "G9", "b^3(2 tau) in terms of P and Q", r"b^3(2\tau)=P^3-9 P^2 Q", identity(vec![(b.at(two()).pow(3), p.pow(3) - 9 * p.pow(2) * &q)])),
        spec("c3-pq-6b", "G9", "c^3(tau) in terms of P and Q", r"c^3(\tau)=27 P^2 Q-54 P Q^2+27 Q^3", identity(vec![(cc.pow(3), 27 * p.pow(2) * &q - 54 * &p * q.pow(2) + 27 * q.pow(3))])),
        spec("c32-pq-6b", "G9", "c^3(2 tau) in terms of P and Q", r"c^3(2\tau)=27 P Q^2-27 Q^3", identity(vec![(cc.at(two()).pow(3), 27 * &p * q.pow(2) - 27 * q.pow(3))])),
        spec(
            "j-g6b",
            "G9",
            "j as a rational function of g",
            r"\frac { (3g+1)^3 (243 g^3-405 g^2+225 g+1)^3 } { g(g-1)^2(9g-1)^6 }",
            jid(
                g,
                (3 * x() + 1).pow(3) * (243 * x().pow(3) - 405 * x().pow(2) + 225 * x() + 1).pow(3)
                    / (x() * (x() - 1).pow(2) * (9 * x() - 1).pow(6)),
            ),
        ),
    ]
}

fn group10() -> Vec<CheckSpec> {
    let (q, t, s) = (form(Q6c), form(T6c), form(E2));
    let th = form(T6cHaupt);
    let (a, b, cc) = (form(BorweinA), form(BorweinB), form(BorweinC));
    let h = half;
    vec![
        spec(
            "level6c-system",
            "G10",
            "Nonlinear system for Q, T, S = E2",
            r"\frac{ 27 Q^3-36 Q^2 T+5 Q T^2 +Q S }{12}",
            system(vec![
                (q.clone(), (27 * q.pow(3) - 36 * q.pow(2) * &t + 5 * &q * t.pow(2) + &q * &s) / 12),
                (t.clone(), (-27 * q.pow(2) * &t + 24 * &q * t.pow(2) - t.pow(3) + &s * &t) / 12),
                (
                    s.clone(),
                    (-729 * q.pow(4) + 972 * q.pow(3) * &t - 270 * q.pow(2) * t.pow(2) + 12 * &q * t.pow(3) - t.pow(4)
                        + s.pow(2))
                        / 12,
                ),
            ]),
        ),
        spec("dual-Q6c", "G10", "Q as eta quotient and starred divisor sum", r"\sum_{n=1}^{\infty}(d_{1,3}^{*}(n)-d_{2,3}^{*}(n)) q^{\frac{n}{2}}", CheckKind::DualRoute(Q6c)),
        spec("dual-T6c", "G10", "T as eta quotient and starred divisor sum", r"1+3\sum_{n=1}^{\infty} (d_{1,3}^{*}(n)-d_{2,3}^{*}(n)) q^{\frac{n}{2}}+6 \sum_{n=1}^{\infty} ( d_{1,3}(n)-d_{2,3}(n) )q^n", CheckKind::DualRoute(T6c)),
        spec("dual-t6c", "G10", "t as eta quotient and as Q/T", r"t=t(\tau)=\frac{Q(\tau)}{T(\tau)}", CheckKind::DualRoute(T6cHaupt)),
        spec(
            "schwarzian-t6c",
            "G10",
            "Schwarzian equation for t",
            r"\frac{81 t^4-108 t^3+102 t^2-12 t+1}{2 t^2 (9 t-1)^2 (t-1)^2 }",
            schwarz(
                th.clone(),
                (81 * x().pow(4) - 108 * x().pow(3) + 102 * x().pow(2) - 12 * x() + 1)
                    / (2 * x().pow(2) * (9 * x() - 1).pow(2) * (x() - 1).pow(2)),
            ),
        ),
        spec(
            "t-t-heun",
            "G10",
            "Heun equation for T in t",
            r"\frac { t-\frac13 } { t(t-1)(t-\frac19) }",
            linear(t.clone(), th.clone(), ode(pl(0, 1) + pl(1, 1) + pl(1, 9), xm(1, 3) / (x() * xm(1, 1) * xm(1, 9)))),
        ),
        spec(
            "a-half-t-ode",
            "G10",
            "Second-order equation for a(tau/2) in t",
            r"\frac { 2 } { 3 t (t+\frac13)^2 }",
            linear(a.at(h()), th.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(-1, 3) + pl(1, 9), -2 / (3 * x() * xm(-1, 3).pow(2)))),
        ),
        spec(
            "a-t-ode",
            "G10",
            "Second-order equation for a(tau) in t",
            r"\frac { 8 } { 27 (t-1)(t-\frac19) (t-\frac13)^2 }",
            linear(a.clone(), th.clone(), ode(pl(0, 1) + pl(1, 1) - 2 * pl(1, 3) + pl(1, 9), -8 / (27 * xm(1, 1) * xm(1, 9) * xm(1, 3).pow(2)))),
        )
        .note("first-order coefficient taken in t, with the pole at t = 1/3 matching the zeroth-order term"),
        spec(
            "b-half-t-ode",
            "G10",
            "Second-order equation for b(tau/2) in t",
            r"\frac { (t+\frac13) } { 9 t(t-\frac19)^2 }",
            linear(b.at(h()), th.clone(), ode(pl(0, 1) + pl(1, 1) - c(1, 3) * pl(1, 9), xm(-1, 3) / (9 * x() * xm(1, 9).pow(2)))),
        ),
        spec(
            "b-t-ode",
            "G10",
            "Second-order equation for b(tau) in t",
            r"\frac { 4 ( t-\frac13 ) } { 9 (t-1) (t-\frac19)^2 }",
            linear(b.clone(), th.clone(), ode(pl(0, 1) + pl(1, 1) + c(1, 3) * pl(1, 9), 4 * xm(1, 3) / (9 * xm(1, 1) * xm(1, 9).pow(2)))),
        ),
        spec(
            "c-half-t-ode",
            "G10",
            "Second-order equation for c(tau/2) in t",
            r"\frac { t+\frac13 } { 3 t^2(t-1)^2 }",
            linear(cc.at(h()), th.clone(), ode(c(1, 3) * pl(0, 1) - c(1, 3) * pl(1, 1) + pl(1, 9), xm(-1, 3) / (3 * x().pow(2) * xm(1, 1).pow(2)))),
        ),
        spec(
            "c-t-ode",
            "G10",
            "Second-order equation for c(tau) in t",
            r"\frac { 4 (t-\frac13) } { 27 t^2(t-1)^2 (t-\frac19) }",
            linear(cc.clone(), th.clone(), ode(-c(1, 3) * pl(0, 1) + c(1, 3) * pl(1, 1) + pl(1, 9), 4 * xm(1, 3) / (27 * x().pow(2) * xm(1, 1).pow(2) * xm(1, 9)))),
        ),
        spec("a-half-qt", "G10", "a(tau/2) in terms of Q and T", r"a(\tau/2)=P+6 Q=T+3 Q", identity(vec![(a.at(h()), &t + 3 * &q), (a.at(h()), &a + 6 * &q)])),
        spec("a-qt", "G10", "a(tau) in terms of Q and T", r"P=a(\tau)=T-3 Q", identity(vec![(a.clone(), &t - 3 * &q)])),
        spec("b3-half-qt", "G10", "b^3(tau/2) in terms of Q and T", r"b^3(\tau/2)=P^3-9 P^2 Q+108 Q^3=81 Q^2 T-18 Q T^2+T^3", identity(vec![(b.at(h()).pow(3), 81 * q.pow(2) * &t - 18 * &q * t.pow(2) + t.pow(3)), (b.at(h()).pow(3), a.pow(3) - 9 * a.pow(2) * &q + 108 * q.pow(3))])),
        spec("b3-qt", "G10", "b^3(tau) in terms of Q and T", r"b^3(\tau)=P^3-27 P Q^2 - 54 Q^3 =T^3-9 Q T^2", identity(vec![(b.pow(3), t.pow(3) - 9 * &q * t.pow(2)), (b.pow(3), a.pow(3) - 27 * &a * q.pow(2) - 54 * q.pow(3))])),
        spec("c3-half-qt", "G10", "c^3(tau/2) in terms of Q and T", r"c^3(\tau/2)=27 P^2 Q+108 P Q^2+108 Q^3=27 Q^3-54 Q^2T+27 Q T^2", identity(vec![(cc.at(h()).pow(3), 27 * q.pow(3) - 54 * q.pow(2) * &t + 27 * &q * t.pow(2)), (cc.at(h()).pow(3), 27 * a.pow(2) * &q + 108 * &a * q.pow(2) + 108 * q.pow(3))])),
        spec("c3-qt", "G10", "c^3(tau) in terms of Q and T", r"c^3(\tau)=27P Q^2+54 Q^3=-27Q^3+27 Q^2 T", identity(vec![(cc.pow(3), -27 * q.pow(3) + 27 * q.pow(2) * &t), (cc.pow(3), 27 * &a * q.pow(2) + 54 * q.pow(3))])),
        spec(
            "j-t6c",
            "G10",
            "j as a rational function of t",
            r"\frac{(3 t-1)^3 \left(243 t^3-243 t^2+9 t-1\right)^3}{ t^2 (t-1)  (9 t-1)^3}",
            jid(
                th,
                (3 * x() - 1).pow(3) * (243 * x().pow(3) - 243 * x().pow(2) + 9 * x() - 1).pow(3)
                    / (x().pow(2) * (x() - 1) * (9 * x() - 1).pow(3)),
            ),
        ),
    ]
}

fn group11() -> Vec<CheckSpec> {
    let (r, u, s) = (form(R6d), form(U6d), form(E2));
    let uh = form(U6dHaupt);
    let (a, b, cc) = (form(BorweinA), form(BorweinB), form(BorweinC));
    vec![
        spec(
            "level6d-system",
            "G11",
            "Nonlinear system for R, U, S = E2",
            r"\frac{27 R^3+36 R^2 U+5 R U^2  +R S }{12}",
            system(vec![
                (r.clone(), (27 * r.pow(3) + 36 * r.pow(2) * &u + 5 * &r * u.pow(2) + &r * &s) / 12),
                (u.clone(), (-27 * r.pow(2) * &u - 24 * &r * u.pow(2) - u.pow(3) + &s * &u) / 12),
                (
                    s.clone(),
                    (-729 * r.pow(4) - 972 * r.pow(3) * &u - 270 * r.pow(2) * u.pow(2) - 12 * &r * u.pow(3) - u.pow(4)
                        + s.pow(2))
                        / 12,
                ),
            ]),
        ),
        spec("dual-R6d", "G11", "R as eta quotient and starred divisor sum", r"\sum_{n=1}^{\infty}(d_{1,6}^{*}(n)+ d_{2,6}^{*}(n)   -d_{4,6}^{*}(n) -  d_{5,6}^{*}(n) ) q^{\frac{n}{2}}", CheckKind::DualRoute(R6d)),
        spec("dual-U6d", "G11", "U as eta quotient and starred divisor sum", r"1-3  \sum_{n=1}^{\infty}(d_{1,6}^{*}(n)+d_{2,6}^{*}(n)  -d_{4,6}^{*}(n)-d_{5,6}^{*}(n))q^{\frac{n}{2}}", CheckKind::DualRoute(U6d)),
        spec("dual-u6d", "G11", "u as eta quotient and as R/U", r"u=u(\tau)=\frac{R(\tau)}{U(\tau)}", CheckKind::DualRoute(U6dHaupt)),
        spec(
            "schwarzian-u6d",
            "G11",
            "Schwarzian equation for u",
            r"\frac{81 u^4+108 u^3+102 u^2+12 u+1}{2 u^2 (u+1)^2 (9 u+1)^2}",
            schwarz(
                uh.clone(),
                (81 * x().pow(4) + 108 * x().pow(3) + 102 * x().pow(2) + 12 * x() + 1)
                    / (2 * x().pow(2) * (x() + 1).pow(2) * (9 * x() + 1).pow(2)),
            ),
        ),
        spec(
            "u-u-heun",
            "G11",
            "Heun equation for U in u",
            r"\frac { u+\frac13 } { u(u+1)(u+\frac19) }",
            linear(u.clone(), uh.clone(), ode(pl(0, 1) + pl(-1, 1) + pl(-1, 9), xm(-1, 3) / (x() * xm(-1, 1) * xm(-1, 9)))),
        ),
        spec(
            "a-u-ode",
            "G11",
            "Second-order equation for a(tau) in u",
            r"\frac { 8 } { 27 (u+1) (u+\frac19) (u+\frac13)^2 }",
            linear(a.clone(), uh.clone(), ode(pl(0, 1) + pl(-1, 1) - 2 * pl(-1, 3) + pl(-1, 9), -8 / (27 * xm(-1, 1) * xm(-1, 9) * xm(-1, 3).pow(2)))),
        ),
        spec(
            "b-u-ode",
            "G11",
            "Second-order equation for b(tau) in u",
            r"\frac { 4 ( u+\frac13 ) } { 9 (u+1) (u+\frac19)^2 }",
            linear(b.clone(), uh.clone(), ode(pl(0, 1) + pl(-1, 1) + c(1, 3) * pl(-1, 9), 4 * xm(-1, 3) / (9 * xm(-1, 1) * xm(-1, 9).pow(2)))),
        ),
        spec(
            "c-u-ode",
            "G11",
            "Second-order equation for c(tau) in u",
            r"\frac { 4 (u+\frac13) } { 27 u^2(u+1)^2 (u+\frac19) }",
            linear(cc.clone(), uh.clone(), ode(-c(1, 3) * pl(0, 1) + c(1, 3) * pl(-1, 1) + pl(-1, 9), 4 * xm(-1, 3) / (27 * x().pow(2) * xm(-1, 1).pow(2) * xm(-1, 9)))),
        ),
        spec("a-ru", "G11", "a(tau) in terms of R and U", r"P=a(\tau)=U+3 R", identity(vec![(a.clone(), &u + 3 * &r)])),
        spec("b3-ru", "G11", "b^3(tau) in terms of R and U", r"b^3(\tau)=P^3 - 27 P R^2 + 54 R^3 =9 R U^2+U^3", identity(vec![(b.pow(3), 9 * &r * u.pow(2) + u.pow(3)), (b.pow(3), a.pow(3) - 27 * &a * r.pow(2) + 54 * r.pow(3))])),
        spec("c3-ru", "G11", "c^3(tau) in terms of R and U", r"c^3(\tau)=27 P R^2 - 54 R^3=27 R^3+27 R^2 U", identity(vec![(cc.pow(3), 27 * r.pow(3) + 27 * r.pow(2) * &u), (cc.pow(3), 27 * &a * r.pow(2) - 54 * r.pow(3))])),
        spec(
            "j-u6d",
            "G11",
            "j as a rational function of u",
            r"\frac{(3 u+1)^3 \left(243 u^3+243 u^2+9 u+1\right)^3}{u^2 (u+1) (9 u+1)^3}",
            jid(
                uh,
                (3 * x() + 1).pow(3) * (243 * x().pow(3) + 243 * x().pow(2) + 9 * x() + 1).pow(3)
                    / (x().pow(2) * (x() + 1) * (9 * x() + 1).pow(3)),
            ),
        ),
    ]
}

fn group12() -> Vec<CheckSpec> {
    let (p, q, r, s) = (form(P6e), form(Q6e), form(R6e), form(E2));
    let xh = form(X6e);
    let qr2 = (&q - &r).pow(2);
    let p1 = || pl(0, 1) - pl(1, 1) + pl(-1, 1) + pl(2, 1) + pl(1, 2);
    let p0 = || 2 * (x().pow(2) - x() + 1) / (xm(1, 1).pow(2) * xm(-1, 1) * (2 * x() - 1));
    vec![
        spec(
            "level6e-relation",
            "G12",
            "Algebraic relation between P, Q, R",
            r"P(Q-R)+2(Q^2-QR+R^2)=0",
            identity(vec![(&p * (&q - &r) + 2 * (q.pow(2) - &q * &r + r.pow(2)), k(0))]),
        ),
        spec(
            "level6e-system",
            "G12",
            "Nonlinear system for P, Q, R, S = E2",
            r"D P=\frac{-P^3+108 P Q^2+216 Q^3+P S  }{12   }",
            system(vec![
                (p.clone(), (-p.pow(3) + 108 * &p * q.pow(2) + 216 * q.pow(3) + &p * &s) / 12),
                (p.clone(), (-p.pow(3) + 108 * &p * r.pow(2) - 216 * r.pow(3) + &p * &s) / 12),
                (q.clone(), (5 * p.pow(2) * &q - 6 * &p * q.pow(2) - 36 * q.pow(3) + &q * &s) / 12),
                (r.clone(), (5 * p.pow(2) * &r + 6 * &p * r.pow(2) - 36 * r.pow(3) + &r * &s) / 12),
                (s.clone(), (-p.pow(4) - 216 * p.pow(2) * q.pow(2) - 432 * &p * q.pow(3) + s.pow(2)) / 12),
                (s.clone(), (-p.pow(4) - 216 * p.pow(2) * r.pow(2) + 432 * &p * r.pow(3) + s.pow(2)) / 12),
            ]),
        ),
        spec(
            "level6e-qrs-system",
            "G12",
            "Nonlinear system for Q, R, S after eliminating P",
            r"4 Q^4-8 Q^3 R-48 Q^2 R^2",
            system(vec![
                (
                    q.clone(),
                    -&q * (4 * q.pow(4) - 8 * q.pow(3) * &r - 48 * q.pow(2) * r.pow(2) + 52 * &q * r.pow(3) - 20 * r.pow(4)
                        - q.pow(2) * &s
                        + 2 * &q * &r * &s
                        - r.pow(2) * &s)
                        / (12 * &qr2),
                ),
                (
                    r.clone(),
                    -&r * (-20 * q.pow(4) + 52 * q.pow(3) * &r - 48 * q.pow(2) * r.pow(2) - 8 * &q * r.pow(3) + 4 * r.pow(4)
                        - q.pow(2) * &s
                        + 2 * &q * &r * &s
                        - r.pow(2) * &s)
                        / (12 * &qr2),
                ),
                (
                    s.clone(),
                    -(16 * q.pow(8) - 64 * q.pow(7) * &r + 1024 * q.pow(6) * r.pow(2) - 2848 * q.pow(5) * r.pow(3)
                        + 3760 * q.pow(4) * r.pow(4)
                        - 2848 * q.pow(3) * r.pow(5)
                        + 1024 * q.pow(2) * r.pow(6)
                        - 64 * &q * r.pow(7)
                        + 16 * r.pow(8)
                        - q.pow(4) * s.pow(2)
                        + 4 * q.pow(3) * &r * s.pow(2)
                        - 6 * q.pow(2) * r.pow(2) * s.pow(2)
                        + 4 * &q * r.pow(3) * s.pow(2)
                        - r.pow(4) * s.pow(2))
                        / (12 * qr2.pow(2)),
                ),
            ]),
        ),
        spec(
            "schwarzian-x6e",
            "G12",
            "Schwarzian equation for x = R/Q",
            r"\frac{2 \left(x^2-x+1\right)^4}{ x^2 (x-1)^2  (x+1)^2  (x-2)^2(2 x-1)^2  }",
            schwarz(
                xh.clone(),
                2 * (x().pow(2) - x() + 1).pow(4)
                    / (x().pow(2) * xm(1, 1).pow(2) * xm(-1, 1).pow(2) * xm(2, 1).pow(2) * (2 * x() - 1).pow(2)),
            ),
        ),
        spec(
            "q-x-ode",
            "G12",
            "Five-singular-point equation for Q in x",
            r"\frac{2  \left(x^2-x+1\right)}{(x-1)^2 (x+1) (2 x-1)} Q",
            linear(q.clone(), xh.clone(), ode(p1(), p0())),
        ),
        spec(
            "r-y-ode",
            "G12",
            "Five-singular-point equation for R in y = 1/x",
            r"\frac{2  \left(y^2-y+1\right)}{(y-1)^2 (y+1) (2 y-1)} R",
            linear(r.clone(), form(Y6e), ode(p1(), p0())),
        ),
        spec(
            "j-x6e",
            "G12",
            "j as a rational function of x",
            r"\frac{256 \left(x^2-x+1\right)^3 \left(x^6-3 x^5+60 x^4-115 x^3+60 x^2-3 x+1\right)^3}{(1-2 x)^6 (1-x)^2 (x-2)^6 x^2 (x+1)^6}",
            jid(
                xh,
                256 * (x().pow(2) - x() + 1).pow(3)
                    * (x().pow(6) - 3 * x().pow(5) + 60 * x().pow(4) - 115 * x().pow(3) + 60 * x().pow(2) - 3 * x() + 1)
                        .pow(3)
                    / ((1 - 2 * x()).pow(6) * (1 - x()).pow(2) * xm(2, 1).pow(6) * x().pow(2) * xm(-1, 1).pow(6)),
            ),
        ),
    ]
}

fn negative_controls() -> Vec<CheckSpec> {
    let (e2, e4) = (form(E2), form(E4));
    vec![
        spec(
            "negative-control-ramanujan-perturbed",
            NEGATIVE_CONTROL_GROUP,
            "Ramanujan's first equation with 12 replaced by 11",
            r"DE_2(\tau)=\frac{E_2(\tau)^2-E_4(\tau)  }{12  }",
            system(vec![(e2.clone(), (e2.pow(2) - e4) / 11)]),
        ),
        spec(
            "negative-control-lambda-schwarzian-perturbed",
            NEGATIVE_CONTROL_GROUP,
            "lambda Schwarzian with numerator lambda^2 - lambda + 2",
            r"\frac{ \lambda^2-\lambda+1 }{ 2\lambda^2(\lambda-1)^2 }",
            schwarz(form(Lambda), (x().pow(2) - x() + 2) / (2 * x().pow(2) * (x() - 1).pow(2))),
        ),
        spec(
            "negative-control-a-hypergeometric-perturbed",
            NEGATIVE_CONTROL_GROUP,
            "a(q) inversion with lower parameter 2",
            r"a(\tau) = { }_2 F_1 \left( \frac13, \frac23; 1; \frac{ c^3(\tau)}{ a^3(\tau) } \right)",
            inversion(form(BorweinA), params(third(), rat(2, 3), int(2)), form(XLevel3), None),
        ),
    ]
}


//! Check kinds, their residual series, and the concurrent runner.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::calculus::{schwarzian_q, LinearOde, RatFun};
use crate::expr::{eval, Expr};
use crate::field::{int, Field, FieldValue, Rational};
use crate::forms::{Catalog, FormId};
use crate::hypergeom::{f21_compose, HypergeomParams};
use crate::sequences::RecurrenceSpec;
use crate::series::ceil_i64;
use crate::{Error, QSeries};

/// Default certification order, in whole powers of q.
pub const DEFAULT_ORDER: i64 = 24;

/// Maximum number of working-order increases before giving up.
const MAX_ATTEMPTS: usize = 6;

#[derive(Clone, Debug)]
pub enum CheckKind {
    /// Each pair `(lhs, rhs)` must agree.
    SeriesIdentity(Vec<(Expr, Expr)>),
    /// Each pair `(form, rhs)` asserts `D form = rhs`.
    NonlinearSystem(Vec<(Expr, Expr)>),
    /// `schwarzian_q(x) + R(x) (D x)^2 = 0`.
    Schwarzian { x: Expr, r: RatFun<FieldValue> },
    /// `A(s) y'' + B(s) y' + C(s) y = 0` with `' = d/ds`.
    LinearOde { y: Expr, s: Expr, ode: LinearOde<FieldValue> },
    /// `target = prefactor · 2F1(params; inner)`.
    Inversion { target: Expr, params: HypergeomParams, inner: Expr, prefactor: Option<Expr> },
    /// `jform = R(haupt)`.
    JIdentity { haupt: Expr, r: RatFun<FieldValue>, jform: Expr },
    /// `target = Σ t(n) inner^n` with `t` from the recurrence.
    RecurrenceExpansion { target: Expr, recurrence: RecurrenceSpec<FieldValue>, inner: Expr },
    /// Both constructions of a form agree.
    DualRoute(FormId),
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::SeriesIdentity(_) => "SeriesIdentity",
            CheckKind::NonlinearSystem(_) => "NonlinearSystem",
            CheckKind::Schwarzian { .. } => "SchwarzianODE",
            CheckKind::LinearOde { .. } => "LinearODE",
            CheckKind::Inversion { .. } => "InversionFormula",
            CheckKind::JIdentity { .. } => "JIdentity",
            CheckKind::RecurrenceExpansion { .. } => "RecurrenceExpansion",
            CheckKind::DualRoute(_) => "DualRoute",
        }
    }

    /// One-line description of the operands.
    pub fn summary(&self) -> String {
        let pairs = |v: &[(Expr, Expr)], d: bool| {
            v.iter()
                .map(|(l, r)| if d { format!("D({l}) = {r}") } else { format!("{l} = {r}") })
                .collect::<Vec<_>>()
                .join("; ")
        };
        match self {
            CheckKind::SeriesIdentity(v) => pairs(v, false),
            CheckKind::NonlinearSystem(v) => pairs(v, true),
            CheckKind::Schwarzian { x, r } => format!("x = {x}, R(x) = {r}"),
            CheckKind::LinearOde { y, s, ode } => format!("y = {y}, s = {s}: {ode}"),
            CheckKind::Inversion { target, params, inner, prefactor } => match prefactor {
                Some(p) => format!("{target} = ({p}) * {params}({inner})"),
                None => format!("{target} = {params}({inner})"),
            },
            CheckKind::JIdentity { haupt, r, jform } => format!("{jform} = R({haupt}), R = {r}"),
            CheckKind::RecurrenceExpansion { target, recurrence, inner } => {
                format!("{target} = sum {}(n) ({inner})^n", recurrence.name)
            }
            CheckKind::DualRoute(id) => {
                let alt = id.alternative().map(|r| r.label()).unwrap_or_default();
                format!("{id}: {} vs {}", id.primary().label(), alt)
            }
        }
    }

    /// Residual series at working order `w`; all must vanish.
    pub fn residuals(&self, cat: &Catalog, w: &Rational) -> Result<Vec<QSeries>, Error> {
        let ev = |e: &Expr| eval(e, cat, w);
        Ok(match self {
            CheckKind::SeriesIdentity(v) => {
                v.iter().map(|(l, r)| Ok(ev(l)?.sub(&ev(r)?))).collect::<Result<_, Error>>()?
            }
            CheckKind::NonlinearSystem(v) => {
                v.iter().map(|(l, r)| Ok(ev(l)?.dq().sub(&ev(r)?))).collect::<Result<_, Error>>()?
            }
            CheckKind::Schwarzian { x, r } => {
                let x = ev(x)?;
                let dx = x.dq();
                vec![schwarzian_q(&x)?.add(&r.eval_series(&x)?.mul(&dx.mul(&dx)))]
            }
            CheckKind::LinearOde { y, s, ode } => vec![ode.residual(&ev(y)?, &ev(s)?)?],
            CheckKind::Inversion { target, params, inner, prefactor } => {
                let pre = prefactor.as_ref().map(ev).transpose()?;
                let rhs = f21_compose(params, &ev(inner)?, pre.as_ref())?;
                vec![ev(target)?.sub(&rhs)]
            }
            CheckKind::JIdentity { haupt, r, jform } => vec![ev(jform)?.sub(&r.eval_series(&ev(haupt)?)?)],
            CheckKind::RecurrenceExpansion { target, recurrence, inner } => {
                let inner = ev(inner)?;
                let v = inner.valuation().ok_or(Error::ZeroSeries)?;
                let count = ceil_i64(&(inner.bound() / v)).max(1) as usize + 1;
                let terms = recurrence.run(count)?;
                vec![ev(target)?.sub(&QSeries::compose(terms, &inner)?)]
            }
            CheckKind::DualRoute(id) => {
                let (a, b) = cat.build_dual_route(*id, w)?;
                vec![a.sub(&b)]
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub id: String,
    pub group: &'static str,
    /// Name of the theorem or formula being certified.
    pub reference: String,
    /// The formula as typeset, for searching the literature.
    pub anchor: String,
    /// Verification strategy, where it is not the direct one.
    pub note: Option<String>,
    pub kind: CheckKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    InsufficientPrecision,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::InsufficientPrecision => "INSUFFICIENT_PRECISION",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub exponent: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub group: String,
    pub reference: String,
    pub verdict: Verdict,
    pub certified_order: String,
    pub first_failure: Option<Failure>,
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn first_failure_exponent(&self) -> Option<Rational> {
        self.first_failure.as_ref().map(|f| f.exponent.parse().unwrap())
    }
}

/// Smallest exponent with a nonzero stored coefficient over all residuals.
fn first_failure(rs: &[QSeries]) -> Option<(Rational, FieldValue)> {
    rs.iter().filter_map(|r| r.first_nonzero()).min_by(|a, b| a.0.cmp(&b.0))
}

impl CheckSpec {
    /// Certify the check below `target`, raising the working order as precision demands.
    pub fn run(&self, cat: &Catalog, target: &Rational) -> CheckResult {
        let start = Instant::now();
        let mut result = CheckResult {
            id: self.id.clone(),
            group: self.group.to_string(),
            reference: self.reference.clone(),
            verdict: Verdict::InsufficientPrecision,
            certified_order: "0".into(),
            first_failure: None,
            error: None,
            elapsed_ms: 0.0,
        };
        let mut w = target.clone();
        for _ in 0..MAX_ATTEMPTS {
            let rs = match self.kind.residuals(cat, &w) {
                Ok(rs) => rs,
                Err(Error::InsufficientPrecision { .. }) => {
                    w = &w + int(DEFAULT_ORDER / 2);
                    continue;
                }
                Err(e) => {
                    result.verdict = Verdict::Fail;
                    result.error = Some(e.to_string());
                    break;
                }
            };
            let reached = rs.iter().map(|r| r.bound()).min().unwrap_or_else(|| w.clone());
            result.certified_order = reached.to_string();
            if let Some((e, c)) = first_failure(&rs) {
                result.verdict = Verdict::Fail;
                result.first_failure = Some(Failure { exponent: e.to_string(), coefficient: c.to_string() });
                break;
            }
            if reached >= *target {
                result.verdict = Verdict::Pass;
                break;
            }
            w = &w + (target - &reached).ceil() + <Rational as Field>::one();
        }
        result.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        result
    }
}

/// Which registry entries to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Every entry outside the negative-control group.
    All,
    Group(String),
    Id(String),
}

pub const NEGATIVE_CONTROL_GROUP: &str = "NC";

/// The entries matching `sel`, in registry order. An unknown id selects nothing; an
/// unknown group is an error.
pub fn select<'a>(registry: &'a [CheckSpec], sel: &Selection) -> Result<Vec<&'a CheckSpec>, Error> {
    Ok(match sel {
        Selection::All => registry.iter().filter(|c| c.group != NEGATIVE_CONTROL_GROUP).collect(),
        Selection::Group(g) => {
            let v: Vec<_> = registry.iter().filter(|c| c.group.eq_ignore_ascii_case(g)).collect();
            if v.is_empty() {
                return Err(Error::UnknownGroup(g.clone()));
            }
            v
        }
        Selection::Id(id) => registry.iter().filter(|c| c.id == *id).collect(),
    })
}

/// Run checks concurrently on `jobs` threads (all available processors when `None`).
/// Results come back in the order of `checks`, whatever the scheduling.
pub fn run_checks(checks: &[&CheckSpec], order: &Rational, jobs: Option<usize>) -> Vec<CheckResult> {
    let cat = Catalog::new();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| checks.par_iter().map(|c| c.run(&cat, order)).collect())
}

/// Filter the registry and run the selection.
pub fn run_registry(
    registry: &[CheckSpec],
    sel: &Selection,
    order: &Rational,
    jobs: Option<usize>,
) -> Result<Vec<CheckResult>, Error> {
    let checks = select(registry, sel)?;
    Ok(run_checks(&checks, order, jobs))
}

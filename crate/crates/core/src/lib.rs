//! Exact certification of modular-form identities through truncated Puiseux q-series.
//!
//! Every form is built as an exact series over ℚ or ℚ(√5), every claimed identity is
//! turned into a residual series, and a claim passes when its residual vanishes up to
//! the requested order.

pub mod arith;
pub mod calculus;
pub mod docs_map;
pub mod expr;
pub mod field;
pub mod forms;
pub mod hypergeom;
pub mod registry;
pub mod report;
pub mod sequences;
pub mod series;
pub mod verifier;

pub use field::{rat, FieldTag, FieldValue, QuadExt, Rational};
pub use series::Series;

/// Series over the widest coefficient field in use.
pub type QSeries = Series<FieldValue>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("operation needs a nonzero series")]
    ZeroSeries,
    #[error("leading coefficient {0} has no exact root of order {1} in the field")]
    RootNotInField(String, u32),
    #[error("inner series must have positive valuation")]
    NonPositiveValuation,
    #[error("exponent {0} is beyond the truncation order")]
    BeyondTruncation(String),
    #[error("derivative vanishes identically to the available precision")]
    ZeroDerivative,
    #[error("bad hypergeometric parameters: {0}")]
    BadParams(String),
    #[error("recurrence leading coefficient vanishes at n = {0}")]
    LeadingCoefficientZero(i64),
    #[error("order {0} does not reach the valuation of {1}")]
    InsufficientOrder(String, String),
    #[error("could not reach order {wanted}, best was {reached}")]
    InsufficientPrecision { wanted: String, reached: String },
    #[error("unknown form: {0}")]
    UnknownForm(String),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

//! JSON report of a verification run.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::verifier::{CheckResult, Verdict};
use crate::Rational;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub insufficient_precision: usize,
}

/// Everything outside `timings` is a pure function of the inputs, so two runs with the
/// same arguments produce the same bytes there.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub requested_order: String,
    pub records: Vec<CheckResult>,
    pub summary: Summary,
    /// Elapsed milliseconds per check id.
    pub timings: BTreeMap<String, f64>,
}

impl ReportDocument {
    pub fn new(order: &Rational, records: Vec<CheckResult>) -> Self {
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::InsufficientPrecision => summary.insufficient_precision += 1,
            }
        }
        let timings = records.iter().map(|r| (r.id.clone(), r.elapsed_ms)).collect();
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            requested_order: order.to_string(),
            records,
            summary,
            timings,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without `timings`, for byte comparison between runs.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        let mut doc: ReportDocument = serde_json::from_str(s)?;
        for r in &mut doc.records {
            r.elapsed_ms = doc.timings.get(&r.id).copied().unwrap_or(0.0);
        }
        Ok(doc)
    }
}

/// Plain-text table, one line per check.
pub fn table(records: &[CheckResult]) -> String {
    let w = records.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!("{:<w$}  {:<5}  {:<22}  {:>9}  {}\n", "id", "group", "verdict", "order", "first failure");
    for r in records {
        let ff = match (&r.first_failure, &r.error) {
            (Some(f), _) => format!("q^{}: {}", f.exponent, f.coefficient),
            (None, Some(e)) => e.clone(),
            _ => String::new(),
        };
        out.push_str(&format!(
            "{:<w$}  {:<5}  {:<22}  {:>9}  {}\n",
            r.id,
            r.group,
            r.verdict.to_string(),
            r.certified_order,
            ff
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::registry;
    use crate::verifier::{run_registry, Selection};
    use crate::rat;

    #[test]
    fn counts_and_roundtrip() {
        let reg = registry();
        let rs = run_registry(&reg, &Selection::Group("NC".into()), &rat(8, 1), Some(2)).unwrap();
        let doc = ReportDocument::new(&rat(8, 1), rs);
        assert_eq!(doc.summary.total, 3);
        assert_eq!(doc.summary.fail, 3);
        assert!(!doc.all_passed());
        let back = ReportDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn stable_json_ignores_timings() {
        let reg = registry();
        let sel = Selection::Id("ramanujan-system".into());
        let a = ReportDocument::new(&rat(10, 1), run_registry(&reg, &sel, &rat(10, 1), Some(1)).unwrap());
        let b = ReportDocument::new(&rat(10, 1), run_registry(&reg, &sel, &rat(10, 1), Some(4)).unwrap());
        assert_eq!(a.stable_json(), b.stable_json());
        assert!(!a.stable_json().contains("timings"));
    }
}

use std::collections::HashSet;

use qcert_core::rat;
use qcert_core::registry::{groups, registry};
use qcert_core::verifier::{run_checks, run_registry, select, Selection, Verdict, NEGATIVE_CONTROL_GROUP};
use qcert_core::Error;

#[test]
fn ids_are_unique() {
    let reg = registry();
    let ids: HashSet<_> = reg.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), reg.len());
}

#[test]
fn every_group_is_present() {
    let g = groups();
    for name in ["G0", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "NC"] {
        assert!(g.contains(&name), "{name}");
    }
}

#[test]
fn group_g1_passes_at_order_20() {
    let rs = run_registry(&registry(), &Selection::Group("G1".into()), &rat(20, 1), None).unwrap();
    assert_eq!(rs.len(), 3);
    assert!(rs.iter().all(|r| r.passed()));
}

#[test]
fn unknown_id_selects_nothing() {
    let rs = run_registry(&registry(), &Selection::Id("no-such-check".into()), &rat(8, 1), None).unwrap();
    assert!(rs.is_empty());
}

#[test]
fn unknown_group_is_an_error() {
    let e = run_registry(&registry(), &Selection::Group("G99".into()), &rat(8, 1), None).unwrap_err();
    assert_eq!(e, Error::UnknownGroup("G99".into()));
}

#[test]
fn all_excludes_negative_controls() {
    let reg = registry();
    let sel = select(&reg, &Selection::All).unwrap();
    assert!(sel.iter().all(|c| c.group != NEGATIVE_CONTROL_GROUP));
    assert_eq!(sel.len() + 3, reg.len());
}

#[test]
fn verdicts_do_not_depend_on_thread_count() {
    let reg = registry();
    let sel: Vec<_> = reg.iter().filter(|c| matches!(c.group, "G3" | "G5" | "NC")).collect();
    let strip = |v: Vec<qcert_core::verifier::CheckResult>| {
        v.into_iter().map(|mut r| {
            r.elapsed_ms = 0.0;
            r
        }).collect::<Vec<_>>()
    };
    let one = strip(run_checks(&sel, &rat(12, 1), Some(1)));
    let four = strip(run_checks(&sel, &rat(12, 1), Some(4)));
    assert_eq!(one, four);
    let ids: Vec<_> = sel.iter().map(|c| c.id.clone()).collect();
    assert_eq!(one.iter().map(|r| r.id.clone()).collect::<Vec<_>>(), ids);
}

#[test]
fn negative_controls_fail_early() {
    let rs = run_registry(&registry(), &Selection::Group(NEGATIVE_CONTROL_GROUP.into()), &rat(24, 1), None).unwrap();
    assert_eq!(rs.len(), 3);
    for r in rs {
        assert_eq!(r.verdict, Verdict::Fail, "{}", r.id);
        assert!(r.first_failure_exponent().unwrap() <= rat(3, 1));
    }
}

#[test]
fn sign_flipped_b2_f_coefficient_fails() {
    // b(2τ) in f with +(1/3)/(f − 1/9) in the first-order coefficient.
    use qcert_core::calculus::{LinearOde, RatFun};
    use qcert_core::expr::form;
    use qcert_core::forms::FormId;
    use qcert_core::verifier::{CheckKind, CheckSpec};
    use qcert_core::FieldValue;
    let x = || RatFun::<FieldValue>::x();
    let c = |p, q| RatFun::constant(FieldValue::from(rat(p, q)));
    let pole = |a: RatFun<FieldValue>| c(1, 1) / (x() - a);
    let p1 = pole(c(0, 1)) + pole(c(1, 1)) + c(1, 3) * pole(c(1, 9));
    let p0 = (x() + c(1, 3)) / (9 * x() * (x() - c(1, 9)).pow(2));
    let spec = CheckSpec {
        id: "b2-f-plus".into(),
        group: "T",
        reference: String::new(),
        anchor: String::new(),
        note: None,
        kind: CheckKind::LinearOde {
            y: form(FormId::BorweinB).at(rat(2, 1)),
            s: form(FormId::F6a),
            ode: LinearOde::from_normal(&p1, &p0),
        },
    };
    let r = run_checks(&[&spec], &rat(12, 1), None).remove(0);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.first_failure_exponent(), Some(rat(2, 1)));
}

use std::process::{Command, Output};

fn qcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcert")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// `(exponent, coefficient)` rows of `expand --format table`.
fn rows(o: &Output) -> Vec<(String, String)> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (e, c) = l.split_once('\t').unwrap();
            (e.to_string(), c.to_string())
        })
        .collect()
}

fn sigma3(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

#[test]
fn expand_e4_matches_divisor_sums() {
    let o = qcert(&["expand", "--form", "E4", "--order", "4"]);
    assert_eq!(code(&o), 0);
    let expect: Vec<_> = (0..4)
        .map(|n| (n.to_string(), if n == 0 { 1 } else { 240 * sigma3(n) }.to_string()))
        .collect();
    assert_eq!(rows(&o), expect);
}

#[test]
fn expand_lambda_has_half_integral_exponents() {
    let o = qcert(&["expand", "--form", "Lambda", "--order", "2"]);
    assert_eq!(code(&o), 0);
    let r = rows(&o);
    let want = [("1/2", "16"), ("1", "-128"), ("3/2", "704")];
    assert_eq!(r.len(), 3);
    for ((e, c), (we, wc)) in r.iter().zip(want) {
        assert_eq!((e.as_str(), c.as_str()), (we, wc));
    }
}

#[test]
fn expand_b_matches_euler_product() {
    // ∏ (1 − qⁿ)³ / (1 − q³ⁿ) with integer polynomial arithmetic below q⁶.
    const N: usize = 6;
    let mul = |a: &[i64], b: &[i64]| {
        let mut c = vec![0i64; N];
        for i in 0..N {
            for j in 0..N - i {
                c[i + j] += a[i] * b[j];
            }
        }
        c
    };
    let mut p = vec![0i64; N];
    p[0] = 1;
    for n in 1..N {
        let mut f = vec![0i64; N];
        f[0] = 1;
        f[n] = -1;
        for _ in 0..3 {
            p = mul(&p, &f);
        }
        if 3 * n < N {
            let mut g = vec![0i64; N];
            for k in (0..N).step_by(3 * n) {
                g[k] = 1;
            }
            p = mul(&p, &g);
        }
    }
    let o = qcert(&["expand", "--form", "b", "--order", "6"]);
    let got: Vec<(String, String)> = rows(&o);
    let want: Vec<(String, String)> =
        p.iter().enumerate().filter(|(_, c)| **c != 0).map(|(e, c)| (e.to_string(), c.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn expand_json_is_a_series_record() {
    let o = qcert(&["expand", "--form", "V5", "--order", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rec: qcert_core::series::SeriesRecord = serde_json::from_value(v["series"].clone()).unwrap();
    assert_eq!(rec.terms[1], (1, "-5/2-5/2*sqrt5".to_string()));
}

#[test]
fn expand_rescaled_form() {
    let o = qcert(&["expand", "--form", "E4@2", "--order", "5"]);
    let r = rows(&o);
    assert_eq!(r[1], ("2".to_string(), "240".to_string()));
}

#[test]
fn expand_unknown_form_is_usage_error() {
    assert_eq!(code(&qcert(&["expand", "--form", "NoSuchForm"])), 2);
}

#[test]
fn sequences() {
    let o = qcert(&["sequence", "--name", "a5", "--count", "2"]);
    assert_eq!(stdout(&o), "1\n-5/2-5/2*sqrt5\n");
    let o = qcert(&["sequence", "--name", "b5", "--count", "2"]);
    assert_eq!(stdout(&o), "1\n-5/2+5/2*sqrt5\n");
    let o = qcert(&["sequence", "--name", "zagier", "--alpha", "0", "--beta", "0", "--gamma", "0", "--count", "3"]);
    assert_eq!(stdout(&o), "1\n0\n0\n");
    let o = qcert(&["sequence", "--name", "zagier", "--alpha", "11", "--beta", "3", "--gamma", "1", "--count", "5"]);
    assert_eq!(stdout(&o), "1\n3\n19\n147\n1251\n");
    assert_eq!(code(&qcert(&["sequence", "--name", "nope", "--count", "2"])), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&qcert(&["verify", "--group", "G1", "--order", "16"])), 0);
    assert_eq!(code(&qcert(&["verify", "--id", "no-such-check"])), 2);
    assert_eq!(code(&qcert(&["verify", "--group", "G99"])), 2);
    assert_eq!(code(&qcert(&["verify", "--id", "negative-control-ramanujan-perturbed"])), 1);
    assert_eq!(code(&qcert(&["verify", "--group", "G1", "--order", "0"])), 2);
    assert_eq!(code(&qcert(&["verify"])), 2);
}

#[test]
fn report_is_valid_and_byte_stable() {
    let dir = std::env::temp_dir().join(format!("qcert-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str, jobs: &str| {
        let path = dir.join(name);
        let o = qcert(&["verify", "--group", "G5", "--order", "10", "--jobs", jobs, "--report", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = qcert_core::report::ReportDocument::from_json(&text).unwrap();
        assert_eq!(doc.summary.total, doc.records.len());
        assert_eq!(doc.summary.pass, doc.summary.total);
        doc.stable_json()
    };
    let a = run("a.json", "1");
    let b = run("b.json", "3");
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn docs_map_covers_registry() {
    let json = qcert(&["docs-map", "--format", "json"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&json)).unwrap();
    let list = qcert(&["list"]);
    assert_eq!(v.len(), stdout(&list).lines().count());
    let md = stdout(&qcert(&["docs-map"]));
    assert!(md.contains("verified via V/W representative"));
}

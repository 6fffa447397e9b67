use lndext::report::Status;
use lndext::suites::{run_suite, SuiteParams, SUITES};

#[test]
fn every_suite_passes_with_defaults() {
    for name in SUITES {
        let r = run_suite(name, &SuiteParams::default()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.exit_code(), 0);
    }
}

#[test]
fn reports_are_deterministic() {
    for name in ["family2", "properties", "sequence-axioms"] {
        let a = run_suite(name, &SuiteParams::default()).unwrap().to_text();
        let b = run_suite(name, &SuiteParams::default()).unwrap().to_text();
        assert_eq!(a, b);
    }
}

#[test]
fn short_words_miss_higher_powers() {
    let p = SuiteParams {
        trunc_len: Some(1),
        ..SuiteParams::default()
    };
    let r = run_suite("sl2", &p).unwrap();
    assert!(r.find("m_nu[1]").unwrap().passed());
    let c = r.find("m_nu[2]").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.witness, "x^2");
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn scaled_truncation_still_passes() {
    let p = SuiteParams {
        scale: 1.5,
        nu_max: Some(2),
        ..SuiteParams::default()
    };
    for name in ["sl2", "family1", "cross-family"] {
        let r = run_suite(name, &p).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}

#[test]
fn family2_report_records_x_cubed() {
    let r = run_suite("family2", &SuiteParams::default()).unwrap();
    let c = r.find("degree_one[2]").unwrap();
    assert!(c.passed());
    assert_eq!(c.witness, "x^3");
    assert_eq!(c.params, "equal=false");
}

#[test]
fn other_instances() {
    let p = SuiteParams {
        n: Some(2),
        ..SuiteParams::default()
    };
    assert!(run_suite("family1", &p).unwrap().passed());
    let p = SuiteParams {
        p: Some(3),
        q: Some(2),
        ..SuiteParams::default()
    };
    assert!(run_suite("family2", &p).unwrap().passed());
    let p = SuiteParams {
        p: Some(2),
        q: Some(2),
        ..SuiteParams::default()
    };
    assert!(run_suite("family2", &p).is_err());
}

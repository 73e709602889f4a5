use trdeg::{run_experiment, ExperimentReport, ExperimentSpec};

#[test]
fn hundred_trials_all_dependent_and_repeatable() {
    let spec = ExperimentSpec { trials: 100, ..ExperimentSpec::default() };
    let first = run_experiment(&spec).unwrap();
    assert_eq!(first.trials.len(), 100);
    assert_eq!(first.dependent, 100);
    assert!(first.unresolved().is_empty());
    assert!(first.all_certificates_verify());

    let json = first.to_json(false);
    assert_eq!(run_experiment(&spec).unwrap().to_json(false), json);
    let back = ExperimentReport::from_json(&json).unwrap();
    assert_eq!(back.to_json(false), json);
}

#[test]
fn tampered_report_is_rejected() {
    let spec = ExperimentSpec { trials: 3, max_degree: 4, ..ExperimentSpec::default() };
    let json = run_experiment(&spec).unwrap().to_json(false);
    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    v["summary"]["dependent"] = serde_json::json!(2);
    assert!(ExperimentReport::from_json(&v.to_string()).is_err());
}

use lascoux::verify::{run_all, Bounds, Fault};

#[test]
fn default_bounds_agree() {
    for report in run_all(&Bounds::default(), Fault::None) {
        println!("{} {} checks", report.name, report.checks);
        assert!(report.checks > 0, "{} ran nothing", report.name);
        assert!(report.passed(), "{}: {:?}", report.name, report.samples);
    }
}

#[test]
fn fault_is_reported() {
    let reports = run_all(&Bounds::default(), Fault::FirstRightForm);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.name)
        .collect();
    assert!(failed.contains(&"svt-generation"), "{failed:?}");
    assert!(failed.contains(&"crystal-axioms"), "{failed:?}");
}

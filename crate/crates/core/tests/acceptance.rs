//! Acceptance criteria, one line each. Every comparison is exact.

use cuemom::suite::{report, run_suite, SuiteKind, SuiteOptions};

#[test]
fn acceptance() {
    let opts = SuiteOptions { kind: SuiteKind::Full, ..SuiteOptions::default() };
    let checks = run_suite(&opts);
    print!("{}", report(&checks));
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}

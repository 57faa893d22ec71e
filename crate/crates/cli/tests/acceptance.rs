use std::io::Write;

use onecrit_cli::verify::verify_paper;

/// Every acceptance criterion, one line each; written to the stderr handle so the lines show
/// even when test output is captured.
#[test]
fn acceptance() {
    let report = verify_paper();
    let mut err = std::io::stderr().lock();
    for c in &report.criteria {
        writeln!(err, "{c}").unwrap();
    }
    let failed: Vec<u8> = report.criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

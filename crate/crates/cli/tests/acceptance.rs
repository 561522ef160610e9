//! One line per acceptance criterion. Criteria 1 to 9 are the agreement
//! suites; criterion 10 drives the binary.

use std::path::Path;
use std::process::{Command, ExitCode, Output};

use infgon_core::suites;

fn infgon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infgon"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")))
        .output()
        .expect("binary runs")
}

/// `classify`, `hom` and `render` twice each, compared byte for byte, then
/// `check` over every suite.
fn cli_criterion() -> (bool, String) {
    let runs: [&[&str]; 4] = [
        &["classify", "--config", "tests/fixtures/fan0_inf0.json"],
        &["classify", "--config", "tests/fixtures/zigzag0.json", "--json"],
        &["hom", "--from", "0,2", "--to", "-2,inf", "--json"],
        &["render", "--config", "tests/fixtures/fan0_inf0.json", "--window", "-5:5", "--highlight"],
    ];
    for args in runs {
        let (first, second) = (infgon(args), infgon(args));
        if !first.status.success() || first.stdout.is_empty() || first.stdout != second.stdout {
            return (false, format!("`infgon {}` is not stable across runs", args.join(" ")));
        }
    }
    let check = infgon(&["check"]);
    let text = String::from_utf8_lossy(&check.stdout);
    let passes = text.lines().filter(|l| l.starts_with("PASS [")).count();
    if check.status.code() != Some(0) || passes != suites::SUITE_IDS.len() {
        return (false, format!("check exited {:?} with {passes} passing suites", check.status.code()));
    }
    (true, format!("{} commands byte-identical over two runs; check passed {passes} suites", runs.len()))
}

fn main() -> ExitCode {
    let mut failed = 0;
    for id in suites::SUITE_IDS {
        let report = suites::run(id).expect("known suite");
        if !report.passed() {
            failed += 1;
        }
        println!("criterion {id:>2}: {}", report.summary_line());
    }
    let (ok, detail) = cli_criterion();
    if !ok {
        failed += 1;
    }
    println!("criterion 10: {} [10] CLI golden stability: {detail}", if ok { "PASS" } else { "FAIL" });

    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}

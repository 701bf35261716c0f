//! The nine acceptance criteria at their pinned tolerances. Each prints one
//! PASS/FAIL line (written past the test harness capture) with its runtime.

use std::io::Write;
use std::time::{Duration, Instant};
use tricomi_core::exec::Execution;
use tricomi_core::verify::{run_suite, VerificationReport};

struct Criterion {
    id: usize,
    title: &'static str,
    suites: &'static [&'static str],
    budget: Duration,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "Airy constants and Wronskian", suites: &["airy"], budget: Duration::from_secs(1) },
    Criterion { id: 2, title: "Watson sweep", suites: &["watson"], budget: Duration::from_secs(10) },
    Criterion {
        id: 3,
        title: "closed vs numeric inverse transforms",
        suites: &["ft-closed-vs-numeric"],
        budget: Duration::from_secs(180),
    },
    Criterion { id: 4, title: "damped-integral limits", suites: &["limits"], budget: Duration::from_secs(60) },
    Criterion { id: 5, title: "spectral jump conditions", suites: &["jump"], budget: Duration::from_secs(5) },
    Criterion { id: 6, title: "constant identities", suites: &["constants"], budget: Duration::from_secs(1) },
    Criterion { id: 7, title: "delta pairing", suites: &["pairing"], budget: Duration::from_secs(300) },
    Criterion {
        id: 8,
        title: "PDE residual and dilation covariance",
        suites: &["pde-residual", "dilation"],
        budget: Duration::from_secs(30),
    },
    Criterion { id: 9, title: "n = 1 combination identity", suites: &["combination"], budget: Duration::from_secs(60) },
];

fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

fn worst(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed)
        .take(3)
        .map(|r| format!("{} (computed {:e}, target {:e}, tol {:e})", r.name, r.computed, r.target, r.tol))
        .collect::<Vec<_>>()
        .join("; ")
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let t = Instant::now();
        let reports = run_suite(c.suites, Execution::default()).expect("known suites");
        let elapsed = t.elapsed();
        let ok_checks = reports.iter().filter(|r| r.passed).count();
        let in_time = elapsed <= c.budget;
        let pass = ok_checks == reports.len() && !reports.is_empty() && in_time;
        let mut line = format!(
            "criterion {}: {} [{}] {}/{} checks, {:.2?} (budget {:?})",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            ok_checks,
            reports.len(),
            elapsed,
            c.budget
        );
        if !pass {
            if !in_time {
                line.push_str(" over budget;");
            }
            line.push(' ');
            line.push_str(&worst(&reports));
            failed.push(c.id);
        }
        emit(&line);
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

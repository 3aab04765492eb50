//! Library side of the `fuzzalg` command: script reports, surface export and
//! the reproduction suite.

pub mod grid;
pub mod suite;

use std::fmt::Write as _;

use fuzzalg_dsl::{run_source, DslError, ExecOptions};

/// Exit status for a run where every check passed.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs a script and renders its report. Returns the report text and whether
/// every check passed.
pub fn run_report(text: &str, opts: &ExecOptions) -> Result<(String, bool), DslError> {
    let outcomes = run_source(text, opts)?;
    let mut out = String::new();
    let mut failed = 0;
    for o in &outcomes {
        for line in &o.lines {
            writeln!(out, "{line}").unwrap();
        }
        writeln!(out, "# {} at {} took {:.3}s", o.name, o.span, o.elapsed.as_secs_f64()).unwrap();
        failed += usize::from(!o.passed());
    }
    writeln!(out, "{} checks, {} passed, {} failed", outcomes.len(), outcomes.len() - failed, failed).unwrap();
    Ok((out, failed == 0))
}

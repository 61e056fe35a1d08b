//! Runs every acceptance check and writes a JSON report.

use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use crate::criteria::{run_all, CheckResult, Options};
use crate::error::{AppError, AppResult};
use crate::output::write_json;

pub fn report(results: &[CheckResult], total_ms: f64) -> Value {
    let checks: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "tolerance": r.tolerance,
                "observed": r.observed,
                "runtime_ms": r.runtime.as_millis() as u64,
            })
        })
        .collect();
    json!({
        "passed": results.iter().all(|r| r.passed),
        "checks": checks,
        "total_runtime_ms": total_ms.round() as u64,
    })
}

pub fn run(opts: &Options, dest: Option<&Path>) -> AppResult<()> {
    let start = Instant::now();
    let results = run_all(opts);
    let total_ms = start.elapsed().as_secs_f64() * 1e3;
    write_json(&report(&results, total_ms), dest)?;
    for r in &results {
        eprintln!("{} [{}] {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.observed);
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(AppError::VerificationFailed(format!("checks {} failed", failed.join(", "))))
    }
}

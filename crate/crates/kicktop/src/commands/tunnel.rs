//! Tunneling between the two fixed points for four qubits.

use kicktop_core::exact4::{ghz_peak, tunnel_overlaps, tunneling_condition, tunneling_peak, tunneling_time};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::{AppError, AppResult};
use crate::output::{num, write_json};

/// Rejects anything but the four-qubit kicked top.
pub fn gate(two_j: u32, p: f64) -> AppResult<()> {
    if !tunneling_condition(two_j, p) {
        return Err(AppError::Validation(format!(
            "no tunneling between the fixed points for two_j = {two_j}, p = {p}: \
             the number of qubits times p must be a multiple of 2 pi"
        )));
    }
    if two_j != 4 {
        return Err(AppError::Validation(format!(
            "tunneling closed forms cover two_j = 4 only (two_j = {two_j} satisfies the multiple-of-2pi/p rule \
             but has no closed form here)"
        )));
    }
    Ok(())
}

pub fn report(cfg: &RunConfig) -> AppResult<Value> {
    let two_j = cfg.two_j()?;
    let p = cfg.p()?;
    gate(two_j, p)?;
    let kappa0 = cfg.kappa_scalar()?;
    let est = tunneling_time(kappa0)?;
    let n_star = est.n_star_exact.round() as u64;
    let samples: Vec<Value> = [0, n_star / 4, n_star / 2, 3 * n_star / 4, n_star]
        .into_iter()
        .map(|n| {
            let o = tunnel_overlaps(kappa0, n);
            json!({ "n": n, "p_plus": num(o.p_plus), "p_minus": num(o.p_minus), "p_ghz": num(o.p_ghz) })
        })
        .collect();
    let peak = tunneling_peak(kappa0)?;
    let ghz = ghz_peak(kappa0)?;
    Ok(json!({
        "two_j": two_j,
        "kappa0": num(kappa0),
        "gamma_minus": num(est.gamma_minus),
        "n_star_exact": num(est.n_star_exact),
        "n_star_approx": num(est.n_star_approx),
        "samples": samples,
        "tunneling_peak": { "n": peak.n, "p_minus": num(peak.value) },
        "ghz_time": { "n": ghz.n, "p_ghz": num(ghz.value) },
    }))
}

pub fn run(cfg: &RunConfig) -> AppResult<()> {
    write_json(&report(cfg)?, cfg.out.as_deref())
}

//! Long-time average entropy as a function of the torsion.

use kicktop_core::ensembles::s_rmt;
use rayon::prelude::*;

use super::{numeric_average, ClosedForm};
use crate::config::RunConfig;
use crate::error::AppResult;
use crate::output::{Cell, Table};

pub const DEFAULT_HORIZON: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub kappa0: f64,
    pub avg_entropy_numeric: f64,
    pub avg_entropy_analytic: Option<f64>,
    pub abs_difference: Option<f64>,
}

/// One row per torsion value, computed in parallel and returned in input order.
/// With `normalize` both averages are divided by the random-state baseline.
pub fn rows(cfg: &RunConfig, normalize: bool) -> AppResult<Vec<ScanRow>> {
    let two_j = cfg.two_j()?;
    let pt = cfg.point()?;
    let horizon = cfg.horizon(DEFAULT_HORIZON)?;
    let scale = if normalize { 1.0 / s_rmt(two_j)? } else { 1.0 };
    let kappas = cfg.kappa_values()?;
    let params = kappas.iter().map(|&k| cfg.top_params(k)).collect::<AppResult<Vec<_>>>()?;
    params
        .par_iter()
        .map(|p| {
            let numeric = numeric_average(p, pt, horizon)? * scale;
            let analytic = match ClosedForm::new(p, pt).and_then(|e| e.average()) {
                Some(avg) => Some(avg?.value * scale),
                None => None,
            };
            Ok(ScanRow {
                kappa0: p.kappa0,
                avg_entropy_numeric: numeric,
                avg_entropy_analytic: analytic,
                abs_difference: analytic.map(|a| (numeric - a).abs()),
            })
        })
        .collect()
}

pub fn table(cfg: &RunConfig, normalize: bool) -> AppResult<Table> {
    let mut t = Table::new(vec!["kappa0", "avg_entropy_numeric", "avg_entropy_analytic", "abs_difference"]);
    for r in rows(cfg, normalize)? {
        t.push(vec![
            Cell::Real(r.kappa0),
            r.avg_entropy_numeric.into(),
            r.avg_entropy_analytic.into(),
            r.abs_difference.into(),
        ]);
    }
    Ok(t)
}

pub fn run(cfg: &RunConfig, normalize: bool) -> AppResult<()> {
    table(cfg, normalize)?.write(cfg.format(), cfg.out.as_deref())
}

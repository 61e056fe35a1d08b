//! Long-time average entropy over a grid of initial coherent states.

use std::f64::consts::{FRAC_PI_2, PI};

use kicktop_core::exact3::avg_entropy3_special;
use kicktop_core::kicked_top::{CoherentPoint, TopParams};
use rayon::prelude::*;

use super::numeric_average;
use crate::config::RunConfig;
use crate::error::AppResult;
use crate::output::{Cell, Table};

/// A multiple of 12, so the average is exact when the three-qubit Floquet operator has period 12.
pub const DEFAULT_HORIZON: u64 = 1200;
pub const DEFAULT_GRID: (usize, usize) = (181, 361);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub theta0: f64,
    pub phi0: f64,
    pub avg_entropy: f64,
    /// Closed form, for three qubits at `kappa0 = 3 pi/2`.
    pub analytic: Option<f64>,
}

/// Whether the three-qubit closed-form surface applies.
pub fn has_closed_form(params: &TopParams) -> bool {
    params.two_j == 3 && (params.kappa0 - 1.5 * PI).abs() < 1e-12 && (params.p - FRAC_PI_2).abs() < 1e-12
}

/// Grid over `theta0 in [0, pi]` (outer) and `phi0 in [-pi, pi]`, endpoints included.
pub fn grid(params: &TopParams, n_theta: usize, n_phi: usize, horizon: u64) -> AppResult<Vec<SurfacePoint>> {
    let closed = has_closed_form(params);
    (0..n_theta * n_phi)
        .into_par_iter()
        .map(|idx| {
            let theta0 = PI * (idx / n_phi) as f64 / (n_theta - 1) as f64;
            let phi0 = -PI + 2.0 * PI * (idx % n_phi) as f64 / (n_phi - 1) as f64;
            let pt = CoherentPoint::new(theta0, phi0)?;
            let avg_entropy = numeric_average(params, pt, horizon)?;
            Ok(SurfacePoint { theta0, phi0, avg_entropy, analytic: closed.then(|| avg_entropy3_special(pt)) })
        })
        .collect()
}

pub fn table(cfg: &RunConfig) -> AppResult<Table> {
    let params = cfg.top_params(cfg.kappa_scalar()?)?;
    let (nt, np) = cfg.grid(DEFAULT_GRID)?;
    let points = grid(&params, nt, np, cfg.horizon(DEFAULT_HORIZON)?)?;
    let closed = has_closed_form(&params);
    let mut headers = vec!["theta0", "phi0", "avg_entropy"];
    if closed {
        headers.push("avg_entropy_analytic");
    }
    let mut t = Table::new(headers);
    for p in points {
        let mut row = vec![Cell::Real(p.theta0), Cell::Real(p.phi0), Cell::Real(p.avg_entropy)];
        if closed {
            row.push(p.analytic.into());
        }
        t.push(row);
    }
    Ok(t)
}

pub fn run(cfg: &RunConfig) -> AppResult<()> {
    table(cfg)?.write(cfg.format(), cfg.out.as_deref())
}

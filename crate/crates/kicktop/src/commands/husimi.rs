//! Husimi distributions of the evolved state, one file per requested step.

use std::path::PathBuf;

use kicktop_core::kicked_top::{coherent_state, evolve, floquet_unitary, husimi_grid, DickeState};

use super::ClosedForm;
use crate::config::{OutputFormat, RunConfig};
use crate::error::{AppError, AppResult};
use crate::output::{Cell, Table};

pub const DEFAULT_GRID: (usize, usize) = (91, 181);

/// The state after `n` steps, through block powers when available.
pub fn state_at(cfg: &RunConfig, n: u64) -> AppResult<DickeState> {
    let params = cfg.top_params(cfg.kappa_scalar()?)?;
    let pt = cfg.point()?;
    if let Some(e) = ClosedForm::new(&params, pt) {
        return Ok(e.state(n));
    }
    let u = floquet_unitary(&params)?;
    Ok(evolve(&coherent_state(params.two_j, pt)?, &u, n)?)
}

pub fn table(state: &DickeState, n_theta: usize, n_phi: usize) -> AppResult<Table> {
    let mut t = Table::new(vec!["theta", "phi", "q"]);
    for s in husimi_grid(state, n_theta, n_phi)? {
        t.push(vec![Cell::Real(s.theta), Cell::Real(s.phi), Cell::Real(s.q)]);
    }
    Ok(t)
}

/// Writes `husimi_n<step>.csv` (or `.json`) into the `out` directory; returns the paths.
pub fn run(cfg: &RunConfig) -> AppResult<Vec<PathBuf>> {
    let dir = cfg
        .out
        .clone()
        .ok_or_else(|| AppError::Validation("husimi writes one file per step: --out DIR is required".into()))?;
    let (nt, np) = cfg.grid(DEFAULT_GRID)?;
    let ext = match cfg.format() {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    std::fs::create_dir_all(&dir).map_err(|e| AppError::io(&dir, e))?;
    let mut written = Vec::new();
    for n in cfg.times()? {
        let path = dir.join(format!("husimi_n{n}.{ext}"));
        table(&state_at(cfg, n)?, nt, np)?.write(cfg.format(), Some(&path))?;
        written.push(path);
    }
    Ok(written)
}

//! Per-step entanglement of an evolving coherent state.

use kicktop_core::entanglement::{concurrence_general, rdm2, single_qubit_entropy};
use kicktop_core::kicked_top::{coherent_state, floquet_unitary, Evolution};

use super::ClosedForm;
use crate::config::RunConfig;
use crate::error::AppResult;
use crate::output::{Cell, Table};

pub const DEFAULT_HORIZON: u64 = 100;

/// Rows for `n = 0..=horizon`; analytic columns are empty outside closed-form coverage.
pub fn table(cfg: &RunConfig) -> AppResult<Table> {
    let params = cfg.top_params(cfg.kappa_scalar()?)?;
    let pt = cfg.point()?;
    let horizon = cfg.horizon(DEFAULT_HORIZON)?;
    let u = floquet_unitary(&params)?;
    let psi0 = coherent_state(params.two_j, pt)?;
    let exact = ClosedForm::new(&params, pt);
    let mut t = Table::new(vec!["n", "linear_entropy", "concurrence", "analytic_entropy", "analytic_concurrence"]);
    for (n, state) in Evolution::new(&psi0, &u)?.take(horizon as usize + 1) {
        let c = if params.two_j >= 2 { Some(concurrence_general(&rdm2(&state)?)?) } else { None };
        let (sa, ca) = match &exact {
            Some(e) => (Some(e.entropy(n)), Some(e.concurrence(n)?)),
            None => (None, None),
        };
        t.push(vec![Cell::Int(n), single_qubit_entropy(&state).into(), c.into(), sa.into(), ca.into()]);
    }
    Ok(t)
}

pub fn run(cfg: &RunConfig) -> AppResult<()> {
    table(cfg)?.write(cfg.format(), cfg.out.as_deref())
}

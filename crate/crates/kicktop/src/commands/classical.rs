//! Classical limit: orbits, fixed-point stability and Lyapunov exponents.

use kicktop_core::classical::{fixed_point_stability, lyapunov, orbit, SpherePoint};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::AppResult;
use crate::output::{Cell, Table};

pub const LYAPUNOV_STEPS: usize = 10_000;
pub const LYAPUNOV_TRANSIENT: usize = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Iterates of the initial point: n, x, y, z.
    Orbit,
    /// Stability of (0, 1, 0) for each torsion value.
    Stability,
    /// Largest Lyapunov exponent from the initial point for each torsion value.
    Lyapunov,
}

pub fn table(cfg: &RunConfig, mode: Mode) -> AppResult<Table> {
    let start = SpherePoint::from_coherent(cfg.point()?);
    match mode {
        Mode::Orbit => {
            let k = cfg.kappa_scalar()?;
            let mut t = Table::new(vec!["n", "x", "y", "z"]);
            t.push(vec![Cell::Int(0), start.x.into(), start.y.into(), start.z.into()]);
            for (i, p) in orbit(start, k, cfg.horizon(100)? as usize).into_iter().enumerate() {
                t.push(vec![Cell::Int(i as u64 + 1), p.x.into(), p.y.into(), p.z.into()]);
            }
            Ok(t)
        }
        Mode::Stability => {
            let mut t = Table::new(vec!["kappa0", "trace", "stable", "multiplier_abs_1", "multiplier_abs_2"]);
            for k in cfg.kappa_values()? {
                let s = fixed_point_stability(k);
                t.push(vec![
                    k.into(),
                    s.trace.into(),
                    Cell::Bool(s.stable),
                    s.multipliers[0].norm().into(),
                    s.multipliers[1].norm().into(),
                ]);
            }
            Ok(t)
        }
        Mode::Lyapunov => {
            let ks = cfg.kappa_values()?;
            let vals = ks
                .par_iter()
                .map(|&k| lyapunov(start, k, LYAPUNOV_STEPS, LYAPUNOV_TRANSIENT))
                .collect::<Result<Vec<_>, _>>()?;
            let mut t = Table::new(vec!["kappa0", "lyapunov"]);
            for (k, l) in ks.into_iter().zip(vals) {
                t.push(vec![k.into(), l.into()]);
            }
            Ok(t)
        }
    }
}

pub fn run(cfg: &RunConfig, mode: Mode) -> AppResult<()> {
    table(cfg, mode)?.write(cfg.format(), cfg.out.as_deref())
}

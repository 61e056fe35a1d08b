//! Random symmetric-state baseline.

use kicktop_core::ensembles::{chunk_count, combine_chunks, sample_chunk, RmtBaseline};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::AppResult;
use crate::output::{Cell, Table};

pub const DEFAULT_SAMPLES: u64 = 100_000;

/// Chunks run in parallel; the reduction is in chunk order, so the result
/// does not depend on the thread count.
pub fn baseline(num_qubits: u32, n_samples: u64, seed: u64) -> AppResult<RmtBaseline> {
    let chunks: Vec<_> =
        (0..chunk_count(n_samples)).into_par_iter().map(|c| sample_chunk(num_qubits, n_samples, seed, c)).collect();
    Ok(combine_chunks(num_qubits, &chunks)?)
}

pub fn table(cfg: &RunConfig) -> AppResult<Table> {
    let b = baseline(cfg.two_j()?, cfg.samples(DEFAULT_SAMPLES)?, cfg.seed())?;
    let mut t = Table::new(vec!["num_qubits", "s_rmt", "sample_mean", "sample_sem", "n_samples"]);
    t.push(vec![
        Cell::Int(b.num_qubits.into()),
        b.s_rmt.into(),
        b.sample_mean.into(),
        b.sample_sem.into(),
        Cell::Int(b.n_samples),
    ]);
    Ok(t)
}

pub fn run(cfg: &RunConfig) -> AppResult<()> {
    table(cfg)?.write(cfg.format(), cfg.out.as_deref())
}

//! Random permutation-symmetric states: the thermalization baseline.
//!
//! Haar-random states of the `N + 1` dimensional Dicke space are drawn as
//! normalized complex Gaussian vectors. Samples are split into fixed-size
//! chunks, each with its own ChaCha8 stream derived from `(seed, chunk)`, so
//! the result does not depend on how chunks are scheduled. Chunk sums are
//! combined in chunk order.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::entanglement::single_qubit_entropy;
use crate::kicked_top::DickeState;
use crate::{Error, Result, C64};

/// Samples per independent random stream.
pub const CHUNK_SIZE: u64 = 4096;

/// Ensemble average `(N - 1) / (2N)` of the single-qubit linear entropy.
pub fn s_rmt(num_qubits: u32) -> Result<f64> {
    if num_qubits < 2 {
        return Err(Error::InvalidParameter("ensemble baseline needs at least 2 qubits".into()));
    }
    let n = num_qubits as f64;
    Ok((n - 1.0) / (2.0 * n))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RmtBaseline {
    pub num_qubits: u32,
    pub s_rmt: f64,
    pub sample_mean: f64,
    /// Standard error of `sample_mean`.
    pub sample_sem: f64,
    pub n_samples: u64,
}

/// Partial sums from one chunk of samples.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChunkSums {
    pub count: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

/// Number of chunks needed for `n_samples`.
pub fn chunk_count(n_samples: u64) -> u64 {
    n_samples.div_ceil(CHUNK_SIZE)
}

/// A single Haar-random symmetric state.
pub fn random_symmetric_state<R: Rng + ?Sized>(num_qubits: u32, rng: &mut R) -> DickeState {
    let d = num_qubits as usize + 1;
    loop {
        let amps: Vec<C64> = (0..d).map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
        if let Ok(s) = DickeState::normalized(amps) {
            return s;
        }
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn chunk_with(
    num_qubits: u32,
    n_samples: u64,
    seed: u64,
    chunk: u64,
    mut entropy: impl FnMut(DickeState) -> f64,
) -> ChunkSums {
    let start = chunk * CHUNK_SIZE;
    let count = CHUNK_SIZE.min(n_samples.saturating_sub(start));
    let mut rng = chunk_rng(seed, chunk);
    let mut out = ChunkSums { count, ..ChunkSums::default() };
    for _ in 0..count {
        let s = entropy(random_symmetric_state(num_qubits, &mut rng));
        out.sum += s;
        out.sum_sq += s * s;
    }
    out
}

/// Sums for chunk `chunk` of an `n_samples` run. Chunks may be evaluated in
/// any order or in parallel.
pub fn sample_chunk(num_qubits: u32, n_samples: u64, seed: u64, chunk: u64) -> ChunkSums {
    chunk_with(num_qubits, n_samples, seed, chunk, |s| single_qubit_entropy(&s))
}

/// Combines chunk sums, which must be given in chunk order.
pub fn combine_chunks(num_qubits: u32, chunks: &[ChunkSums]) -> Result<RmtBaseline> {
    let s_rmt = s_rmt(num_qubits)?;
    let (mut n, mut sum, mut sum_sq) = (0u64, 0.0, 0.0);
    for c in chunks {
        n += c.count;
        sum += c.sum;
        sum_sq += c.sum_sq;
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n_samples must be at least 1".into()));
    }
    let nf = n as f64;
    let mean = sum / nf;
    let sem = if n > 1 {
        let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
        libm::sqrt(var / nf)
    } else {
        0.0
    };
    Ok(RmtBaseline { num_qubits, s_rmt, sample_mean: mean, sample_sem: sem, n_samples: n })
}

/// Mean single-qubit linear entropy over `n_samples` random symmetric states.
pub fn sample_random_symmetric(num_qubits: u32, n_samples: u64, seed: u64) -> Result<RmtBaseline> {
    s_rmt(num_qubits)?;
    if n_samples == 0 {
        return Err(Error::InvalidParameter("n_samples must be at least 1".into()));
    }
    let chunks: Vec<ChunkSums> =
        (0..chunk_count(n_samples)).map(|c| sample_chunk(num_qubits, n_samples, seed, c)).collect();
    combine_chunks(num_qubits, &chunks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{expm_hermitian, CMatrix};

    #[test]
    fn closed_form_baseline() {
        assert_eq!(s_rmt(3).unwrap(), 1.0 / 3.0);
        assert_eq!(s_rmt(4).unwrap(), 3.0 / 8.0);
        assert!((0.5 - s_rmt(1_000_000).unwrap()) < 1e-6);
        assert!(s_rmt(1).is_err());
    }

    #[test]
    fn monte_carlo_matches_baseline() {
        for n in [3, 4] {
            let b = sample_random_symmetric(n, 100_000, 7).unwrap();
            assert!((b.sample_mean - b.s_rmt).abs() < 3.0 * b.sample_sem, "{b:?}");
            assert_eq!(b.n_samples, 100_000);
        }
    }

    #[test]
    fn deterministic_and_order_independent() {
        let a = sample_random_symmetric(5, 10_000, 42).unwrap();
        let b = sample_random_symmetric(5, 10_000, 42).unwrap();
        assert_eq!(a.sample_mean.to_bits(), b.sample_mean.to_bits());
        assert_eq!(a.sample_sem.to_bits(), b.sample_sem.to_bits());
        let mut chunks: Vec<_> = (0..chunk_count(10_000)).rev().map(|c| sample_chunk(5, 10_000, 42, c)).collect();
        chunks.reverse();
        assert_eq!(combine_chunks(5, &chunks).unwrap(), a);
        assert_ne!(sample_random_symmetric(5, 10_000, 43).unwrap().sample_mean, a.sample_mean);
    }

    #[test]
    fn standard_error_halving() {
        let full = sample_random_symmetric(4, 40_000, 3).unwrap();
        let half = sample_random_symmetric(4, 20_000, 3).unwrap();
        let ratio = half.sample_sem / full.sample_sem;
        assert!((ratio - core::f64::consts::SQRT_2).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn unitary_invariance() {
        // a fixed random unitary on the 4-qubit Dicke space
        let mut rng = chunk_rng(99, 0);
        let g = CMatrix::from_fn(5, 5, |_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let h = (&g + &g.adjoint()).scale(C64::new(0.5, 0.0));
        let u = expm_hermitian(&h, 1.0).unwrap();
        let n = 50_000;
        let chunks: Vec<_> = (0..chunk_count(n))
            .map(|c| {
                chunk_with(4, n, 11, c, |s| {
                    let moved = DickeState::normalized(u.apply(s.amps()).unwrap()).unwrap();
                    single_qubit_entropy(&moved)
                })
            })
            .collect();
        let rotated = combine_chunks(4, &chunks).unwrap();
        let plain = sample_random_symmetric(4, n, 11).unwrap();
        let tol = 3.0 * libm::sqrt(rotated.sample_sem.powi(2) + plain.sample_sem.powi(2));
        assert!((rotated.sample_mean - plain.sample_mean).abs() < tol);
        assert!((rotated.sample_mean - rotated.s_rmt).abs() < 3.0 * rotated.sample_sem);
    }
}

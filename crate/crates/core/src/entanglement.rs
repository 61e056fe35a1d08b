//! Reduced density matrices of symmetric states and the entanglement
//! measures built from them.
//!
//! Both reductions work directly on Dicke amplitudes. Splitting one qubit off
//! `|D^N_k>` gives `sqrt((N-k)/N) |0>|D^{N-1}_k> + sqrt(k/N) |1>|D^{N-1}_{k-1}>`;
//! applying that twice yields the two-qubit block.

use alloc::vec::Vec;

use crate::kicked_top::DickeState;
use crate::numerics::{herm_eig, CMatrix};
use crate::{Error, Result, C64};

/// A one- or two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Rdm {
    rho: CMatrix,
}

impl Rdm {
    /// Validates a 2x2 or 4x4 matrix: Hermitian and unit trace within `1e-10`,
    /// eigenvalues no lower than `-1e-9`.
    pub fn new(rho: CMatrix) -> Result<Self> {
        if !rho.is_square() || !(rho.rows() == 2 || rho.rows() == 4) {
            return Err(Error::DimensionMismatch { expected: 4, found: rho.rows() });
        }
        let dev = rho.hermiticity_deviation();
        if !(dev <= 1e-10) {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let tr = rho.trace().re;
        if !((tr - 1.0).abs() <= 1e-10) {
            return Err(Error::InvalidParameter(alloc::format!("density matrix trace {tr} differs from 1")));
        }
        let min = herm_eig(&rho)?.values[0];
        if min < -1e-9 {
            return Err(Error::NotPsd { min_eigenvalue: min });
        }
        Ok(Rdm { rho })
    }

    pub fn dim(&self) -> usize {
        self.rho.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.rho
    }

    pub fn into_matrix(self) -> CMatrix {
        self.rho
    }
}

/// One qubit's reduced state. All qubits give the same matrix.
pub fn rdm1(state: &DickeState) -> Rdm {
    let c = state.amps();
    let n = (c.len() - 1) as f64;
    let mut p00 = 0.0;
    let mut p11 = 0.0;
    let mut coh = C64::new(0.0, 0.0);
    for (k, z) in c.iter().enumerate() {
        let kf = k as f64;
        p00 += z.norm_sqr() * (n - kf) / n;
        p11 += z.norm_sqr() * kf / n;
        if k + 1 < c.len() {
            coh += z * c[k + 1].conj() * (libm::sqrt((n - kf) * (kf + 1.0)) / n);
        }
    }
    let rho = CMatrix::from_rows([[C64::new(p00, 0.0), coh], [coh.conj(), C64::new(p11, 0.0)]]);
    debug_assert!(rho.hermiticity_deviation() <= 1e-12);
    Rdm { rho }
}

/// Two qubits' reduced state in the basis `|00>, |01>, |10>, |11>`.
pub fn rdm2(state: &DickeState) -> Result<Rdm> {
    let c = state.amps();
    let n = c.len() - 1;
    if n < 2 {
        return Err(Error::DimensionMismatch { expected: 3, found: c.len() });
    }
    let nf = n as f64;
    let norm = nf * (nf - 1.0);
    // Component of (a, b) on the remaining |D^{N-2}_m>: c_{m+a+b} sqrt(C(N-2,m) / C(N,m+a+b)).
    let weight = |s: usize, m: f64| -> f64 {
        let r = match s {
            0 => (nf - m) * (nf - m - 1.0),
            1 => (m + 1.0) * (nf - m - 1.0),
            _ => (m + 1.0) * (m + 2.0),
        };
        libm::sqrt(r / norm)
    };
    let mut rho = CMatrix::zeros(4, 4);
    for m in 0..=n - 2 {
        let mf = m as f64;
        let psi: [C64; 4] = core::array::from_fn(|ab| {
            let s = (ab >> 1) + (ab & 1);
            c[m + s] * weight(s, mf)
        });
        for i in 0..4 {
            for j in 0..4 {
                rho[(i, j)] += psi[i] * psi[j].conj();
            }
        }
    }
    Ok(Rdm { rho })
}

/// `1 - Tr rho^2`.
pub fn linear_entropy(rho: &Rdm) -> f64 {
    let purity: f64 = rho.rho.as_slice().iter().map(|z| z.norm_sqr()).sum();
    (1.0 - purity).max(0.0)
}

/// Single-qubit linear entropy of a symmetric state.
pub fn single_qubit_entropy(state: &DickeState) -> f64 {
    linear_entropy(&rdm1(state))
}

fn sigma_yy() -> CMatrix {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    CMatrix::from_rows([[z, z, z, -one], [z, z, one, z], [z, one, z, z], [-one, z, z, z]])
}

/// Wootters concurrence of a two-qubit state.
///
/// The square roots of the eigenvalues of `rho (Y(x)Y) rho* (Y(x)Y)` are the
/// singular values of `X^T (Y(x)Y) X` for any factorization `rho = X X^dagger`.
/// Working with the factor avoids square roots of nearly-zero, slightly
/// complex eigenvalues.
pub fn concurrence_general(rho: &Rdm) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let eig = herm_eig(&rho.rho)?;
    let tr: f64 = eig.values.iter().sum();
    let keep: Vec<usize> = (0..4).filter(|&i| eig.values[i] > 1e-14 * tr).collect();
    if keep.is_empty() {
        return Ok(0.0);
    }
    let r = keep.len();
    let x = CMatrix::from_fn(4, r, |i, a| {
        let k = keep[a];
        eig.vectors[(i, k)] * libm::sqrt(eig.values[k])
    });
    let tau = &(&x.transpose() * &sigma_yy()) * &x;
    let tau_h = tau.adjoint();
    let dilation = CMatrix::from_fn(2 * r, 2 * r, |i, j| match (i < r, j < r) {
        (true, false) => tau[(i, j - r)],
        (false, true) => tau_h[(i - r, j)],
        _ => C64::new(0.0, 0.0),
    });
    let mut sv: Vec<f64> = herm_eig(&dilation)?.values.into_iter().rev().take(r).collect();
    sv.resize(4, 0.0);
    Ok((sv[0] - sv[1] - sv[2] - sv[3]).max(0.0))
}

/// Concurrence of an X-shaped state, `2 max(0, |r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33))`
/// (1-based indices). Entries off the diagonal and anti-diagonal must be below `1e-9`.
pub fn concurrence_xstate(rho: &Rdm) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let m = &rho.rho;
    let mut off: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                off = off.max(m[(i, j)].norm());
            }
        }
    }
    if off > 1e-9 {
        return Err(Error::NotXState { magnitude: off });
    }
    let d = |i: usize| m[(i, i)].re.max(0.0);
    let a = m[(1, 2)].norm() - libm::sqrt(d(0) * d(3));
    let b = m[(0, 3)].norm() - libm::sqrt(d(1) * d(2));
    Ok(2.0 * a.max(b).max(0.0))
}

/// Entanglement of one evolution step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementSample {
    pub n: u64,
    pub linear_entropy: f64,
    pub concurrence: Option<f64>,
}

/// Measures a state, optionally including the two-qubit concurrence.
pub fn sample(n: u64, state: &DickeState, with_concurrence: bool) -> Result<EntanglementSample> {
    let concurrence = if with_concurrence { Some(concurrence_general(&rdm2(state)?)?) } else { None };
    Ok(EntanglementSample { n, linear_entropy: single_qubit_entropy(state), concurrence })
}

/// A closed-form long-time average. `limiting` marks parameter values where
/// the formula is only the limit from nearby values, not the average of the
/// actual (degenerate) dynamics there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongTimeAverage {
    pub value: f64,
    pub limiting: bool,
}

/// Arithmetic mean of a non-empty series.
pub fn time_average(series: &[f64]) -> Result<f64> {
    if series.is_empty() {
        return Err(Error::InvalidParameter("cannot average an empty series".into()));
    }
    let mut acc = RunningMean::default();
    series.iter().for_each(|&x| {
        acc.push(x);
    });
    Ok(acc.mean())
}

/// Running means `mean(series[..=i])` for every prefix.
pub fn running_means(series: &[f64]) -> Vec<f64> {
    let mut acc = RunningMean::default();
    series.iter().map(|&x| acc.push(x)).collect()
}

/// Streaming mean with compensated summation, for horizons too long to store.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunningMean {
    sum: f64,
    comp: f64,
    count: u64,
}

impl RunningMean {
    /// Adds a value and returns the updated mean.
    pub fn push(&mut self, x: f64) -> f64 {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
        self.count += 1;
        self.mean()
    }

    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            f64::NAN
        } else {
            self.sum / self.count as f64
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

//! Three-qubit state tomography post-processing.
//!
//! Measured populations are corrected for readout error with the inverse of
//! `F = F_1 ⊗ F_2 ⊗ F_3`, `F_i = [[f0, 1 - f1], [1 - f0, f1]]`, turned into
//! Pauli expectation values, summed into a linear-inversion estimate and
//! projected onto the nearest density matrix.
//!
//! Qubit 0 is the most significant bit of an outcome index. Outcome bit 0
//! corresponds to eigenvalue +1 of the measured Pauli. A slot labelled `I` is
//! read out in the Z basis and its outcome is ignored (marginalized).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use crate::numerics::{herm_eig, CMatrix};
use crate::{Error, Result, C64};

pub const NUM_QUBITS: usize = 3;
pub const DIM: usize = 8;
pub const NUM_SETTINGS: usize = 64;

/// Tolerance below which a corrected population is rejected rather than clamped.
pub const NEGATIVE_POPULATION_LIMIT: f64 = -0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn matrix(self) -> CMatrix {
        let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
        match self {
            Pauli::I => CMatrix::identity(2),
            Pauli::X => CMatrix::from_rows([[o, l], [l, o]]),
            Pauli::Y => CMatrix::from_rows([[o, -i], [i, o]]),
            Pauli::Z => CMatrix::from_rows([[l, o], [o, -l]]),
        }
    }

    /// Unitary taking the +1/-1 eigenvectors of this Pauli to |0>/|1>.
    fn readout_rotation(self) -> CMatrix {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let (r, ri) = (C64::new(h, 0.0), C64::new(0.0, h));
        match self {
            Pauli::I | Pauli::Z => CMatrix::identity(2),
            Pauli::X => CMatrix::from_rows([[r, r], [r, -r]]),
            Pauli::Y => CMatrix::from_rows([[r, -ri], [r, ri]]),
        }
    }
}

/// One of the 64 measurement settings, e.g. `XIZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Setting(pub [Pauli; NUM_QUBITS]);

impl Setting {
    /// All settings in lexicographic `I < X < Y < Z` order.
    pub fn all() -> impl Iterator<Item = Setting> {
        (0..NUM_SETTINGS).map(Setting::from_index)
    }

    pub fn from_index(idx: usize) -> Setting {
        Setting(core::array::from_fn(|q| Pauli::ALL[(idx >> (2 * (NUM_QUBITS - 1 - q))) & 3]))
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, p| acc * 4 + *p as usize)
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|p| p.symbol()).collect()
    }

    /// The Pauli string as an 8x8 matrix.
    pub fn operator(&self) -> CMatrix {
        self.0.iter().skip(1).fold(self.0[0].matrix(), |acc, p| acc.kron(&p.matrix()))
    }

    fn rotation(&self) -> CMatrix {
        let r = self.0.map(Pauli::readout_rotation);
        r[0].kron(&r[1]).kron(&r[2])
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.0 {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Setting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let chars: Vec<char> = t.chars().collect();
        if chars.len() != NUM_QUBITS {
            return Err(Error::InvalidSetting(t.into()));
        }
        let mut out = [Pauli::I; NUM_QUBITS];
        for (slot, c) in out.iter_mut().zip(chars) {
            *slot = match c.to_ascii_uppercase() {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                _ => return Err(Error::InvalidSetting(t.into())),
            };
        }
        Ok(Setting(out))
    }
}

/// Per-qubit probabilities of reading 0 given 0 (`f0`) and 1 given 1 (`f1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReadoutFidelities {
    f0: [f64; NUM_QUBITS],
    f1: [f64; NUM_QUBITS],
}

impl ReadoutFidelities {
    /// Calibration reported for a three-transmon device.
    pub const CALIBRATED_EXAMPLE: ReadoutFidelities =
        ReadoutFidelities { f0: [0.98, 0.98, 0.96], f1: [0.92, 0.94, 0.87] };

    pub const IDEAL: ReadoutFidelities = ReadoutFidelities { f0: [1.0; 3], f1: [1.0; 3] };

    pub fn new(f0: [f64; NUM_QUBITS], f1: [f64; NUM_QUBITS]) -> Result<Self> {
        for &v in f0.iter().chain(f1.iter()) {
            if !(v > 0.5 && v <= 1.0) {
                return Err(Error::SingularCorrection { value: v });
            }
        }
        Ok(ReadoutFidelities { f0, f1 })
    }

    pub fn f0(&self) -> [f64; NUM_QUBITS] {
        self.f0
    }

    pub fn f1(&self) -> [f64; NUM_QUBITS] {
        self.f1
    }

    fn pairs(&self) -> [(f64, f64); NUM_QUBITS] {
        core::array::from_fn(|q| (self.f0[q], self.f1[q]))
    }
}

pub type RealMatrix8 = [[f64; DIM]; DIM];

fn confusion(f0: f64, f1: f64) -> [[f64; 2]; 2] {
    [[f0, 1.0 - f1], [1.0 - f0, f1]]
}

fn confusion_inverse(f0: f64, f1: f64) -> Result<[[f64; 2]; 2]> {
    let det = f0 + f1 - 1.0;
    if !(det > 0.0) {
        return Err(Error::SingularCorrection { value: f0.min(f1) });
    }
    Ok([[f1 / det, -(1.0 - f1) / det], [-(1.0 - f0) / det, f0 / det]])
}

/// Applies `⊗_q m_q` to a vector over `2^len` outcomes, qubit 0 most significant.
fn apply_local(mats: &[[[f64; 2]; 2]], p: &[f64]) -> Vec<f64> {
    let n = mats.len();
    let mut v = p.to_vec();
    for (q, m) in mats.iter().enumerate() {
        let bit = 1 << (n - 1 - q);
        for idx in 0..v.len() {
            if idx & bit == 0 {
                let (a, b) = (v[idx], v[idx | bit]);
                v[idx] = m[0][0] * a + m[0][1] * b;
                v[idx | bit] = m[1][0] * a + m[1][1] * b;
            }
        }
    }
    v
}

/// The full 8x8 column-stochastic readout matrix.
pub fn correction_matrix(f: &ReadoutFidelities) -> RealMatrix8 {
    let mats = f.pairs().map(|(a, b)| confusion(a, b));
    let mut out = [[0.0; DIM]; DIM];
    for col in 0..DIM {
        let mut e = [0.0; DIM];
        e[col] = 1.0;
        for (row, v) in apply_local(&mats, &e).into_iter().enumerate() {
            out[row][col] = v;
        }
    }
    out
}

/// Undoes readout error on populations of any number of qubits, one
/// `(f0, f1)` pair per qubit. No clamping is applied.
pub fn invert_readout(fidelities: &[(f64, f64)], measured: &[f64]) -> Result<Vec<f64>> {
    let d = 1usize << fidelities.len();
    if measured.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: measured.len() });
    }
    let inv = fidelities.iter().map(|&(a, b)| confusion_inverse(a, b)).collect::<Result<Vec<_>>>()?;
    Ok(apply_local(&inv, measured))
}

/// Relative populations for one measurement setting.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    setting: Setting,
    populations: [f64; DIM],
}

impl MeasurementRecord {
    /// Populations must be non-negative and sum to one within `1e-6`.
    pub fn new(setting: Setting, populations: [f64; DIM]) -> Result<Self> {
        let bad = |reason: String| Error::InconsistentPopulations { setting: setting.label(), reason };
        if let Some((i, v)) = populations.iter().enumerate().find(|(_, v)| !(**v >= 0.0)) {
            return Err(bad(format!("population {v} at outcome {i} is negative or not a number")));
        }
        let sum: f64 = populations.iter().sum();
        if (sum - 1.0).abs() > 1e-6 {
            return Err(bad(format!("populations sum to {sum}")));
        }
        Ok(MeasurementRecord { setting, populations })
    }

    pub fn setting(&self) -> Setting {
        self.setting
    }

    pub fn populations(&self) -> &[f64; DIM] {
        &self.populations
    }
}

/// `F^{-1} p_m` for one record. Components between -0.02 and 0 are clamped
/// and the vector renormalized; anything lower is an error.
pub fn intrinsic_populations(rec: &MeasurementRecord, f: &ReadoutFidelities) -> Result<[f64; DIM]> {
    let raw = invert_readout(&f.pairs(), &rec.populations)?;
    let mut out = [0.0; DIM];
    let mut clamped = false;
    for (i, v) in raw.into_iter().enumerate() {
        if v < NEGATIVE_POPULATION_LIMIT {
            log::warn!("setting {}: corrected population {v:.4} at outcome {i}", rec.setting);
            return Err(Error::NegativePopulation { index: i, value: v });
        }
        clamped |= v < 0.0;
        out[i] = v.max(0.0);
    }
    if clamped {
        let s: f64 = out.iter().sum();
        out.iter_mut().for_each(|v| *v /= s);
    }
    Ok(out)
}

/// Expectation of the setting's Pauli string from intrinsic populations.
pub fn pauli_expectation(setting: Setting, populations: &[f64; DIM]) -> f64 {
    let mask = setting
        .0
        .iter()
        .enumerate()
        .filter(|(_, p)| **p != Pauli::I)
        .fold(0usize, |m, (q, _)| m | 1 << (NUM_QUBITS - 1 - q));
    populations.iter().enumerate().map(|(b, p)| if (b & mask).count_ones() % 2 == 0 { *p } else { -*p }).sum()
}

/// Maps a Hermitian, trace-one estimate to a density matrix.
pub trait Projector {
    fn project(&self, rho: &CMatrix) -> Result<CMatrix>;
}

/// Nearest density matrix in the 2-norm: negative eigenvalues are zeroed and
/// their weight is taken uniformly from the remaining ones.
#[derive(Debug, Clone, Copy, Default)]
pub struct EigenClip;

impl Projector for EigenClip {
    fn project(&self, rho: &CMatrix) -> Result<CMatrix> {
        let eig = herm_eig(rho)?;
        let trace: f64 = eig.values.iter().sum();
        let mut mu: Vec<f64> = eig.values.iter().map(|v| v / trace).collect();
        // eigenvalues come sorted ascending
        let d = mu.len();
        let mut acc = 0.0;
        let mut keep = d;
        for m in mu.iter_mut() {
            if *m + acc / keep as f64 >= 0.0 {
                break;
            }
            acc += *m;
            *m = 0.0;
            keep -= 1;
        }
        let shift = acc / keep as f64;
        mu.iter_mut().skip(d - keep).for_each(|v| *v += shift);
        let v = &eig.vectors;
        Ok(CMatrix::from_fn(d, d, |i, j| (0..d).map(|k| v[(i, k)] * mu[k] * v[(j, k)].conj()).sum()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructedState {
    pub rho: CMatrix,
    pub fidelity_vs_target: Option<f64>,
}

/// Linear inversion over the 64 Pauli strings followed by [`EigenClip`].
pub fn reconstruct_density(records: &[MeasurementRecord], f: &ReadoutFidelities) -> Result<ReconstructedState> {
    reconstruct_density_with(records, f, &EigenClip)
}

pub fn reconstruct_density_with(
    records: &[MeasurementRecord],
    f: &ReadoutFidelities,
    projector: &dyn Projector,
) -> Result<ReconstructedState> {
    let mut slots: [Option<&MeasurementRecord>; NUM_SETTINGS] = [None; NUM_SETTINGS];
    for r in records {
        let slot = &mut slots[r.setting.index()];
        if slot.is_some() {
            return Err(Error::DuplicateSetting(r.setting.label()));
        }
        *slot = Some(r);
    }
    let mut rho = CMatrix::zeros(DIM, DIM);
    for (idx, slot) in slots.iter().enumerate() {
        let rec = slot.ok_or_else(|| Error::MissingSetting(Setting::from_index(idx).label()))?;
        let p = intrinsic_populations(rec, f)?;
        let e = if idx == 0 { 1.0 } else { pauli_expectation(rec.setting, &p) };
        rho = &rho + &rec.setting.operator().scale(C64::new(e / DIM as f64, 0.0));
    }
    let rho = projector.project(&rho)?;
    Ok(ReconstructedState { rho, fidelity_vs_target: None })
}

/// `Tr sqrt(sqrt(rho_t) rho_e sqrt(rho_t))`, clamped to `[0, 1]`.
///
/// Evaluated as `sum sqrt(eig(A^† rho A))` where `rho_t = A A^†` is a
/// rank-revealing factor of whichever argument has lower numerical rank, so
/// square roots of round-off eigenvalues never enter the sum.
pub fn uhlmann_fidelity(rho_t: &CMatrix, rho_e: &CMatrix) -> Result<f64> {
    if rho_t.rows() != rho_e.rows() || rho_t.cols() != rho_e.cols() {
        return Err(Error::DimensionMismatch { expected: rho_t.rows(), found: rho_e.rows() });
    }
    let (ft, fe) = (DensityFactor::new(rho_t)?, DensityFactor::new(rho_e)?);
    let (a, other) = if ft.a.cols() <= fe.a.cols() { (&ft.a, rho_e) } else { (&fe.a, rho_t) };
    let m = &(&a.adjoint() * other) * a;
    // symmetrize away rounding so the eigensolver sees a Hermitian input
    let m = (&m + &m.adjoint()).scale(C64::new(0.5, 0.0));
    let eig = herm_eig(&m)?;
    let f: f64 = eig.values.iter().map(|v| libm::sqrt(v.max(0.0))).sum();
    Ok(f.clamp(0.0, 1.0))
}

/// `rho = A A^†` with `A = V_r sqrt(D_r)` over the numerically nonzero eigenvalues.
struct DensityFactor {
    a: CMatrix,
}

impl DensityFactor {
    fn new(rho: &CMatrix) -> Result<Self> {
        let eig = herm_eig(rho)?;
        let trace: f64 = eig.values.iter().sum();
        let max = eig.values.last().copied().unwrap_or(0.0);
        let min = eig.values.first().copied().unwrap_or(0.0);
        if min < -1e-6 * trace.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::NotPsd { min_eigenvalue: min });
        }
        let cut = 1e-14 * max.max(f64::MIN_POSITIVE);
        let kept: Vec<usize> = (0..eig.values.len()).filter(|&k| eig.values[k] > cut).collect();
        let a = CMatrix::from_fn(rho.rows(), kept.len().max(1), |i, c| match kept.get(c) {
            Some(&k) => eig.vectors[(i, k)] * libm::sqrt(eig.values[k]),
            None => C64::new(0.0, 0.0),
        });
        Ok(DensityFactor { a })
    }
}

/// Expected measured populations for every setting, in [`Setting::all`] order.
///
/// With `noise = Some((amplitude, rng))` each population gets an independent
/// uniform perturbation in `[-amplitude, amplitude]`, then is clipped at zero
/// and the record renormalized.
pub fn forward_simulate<R: Rng + ?Sized>(
    rho: &CMatrix,
    f: &ReadoutFidelities,
    mut noise: Option<(f64, &mut R)>,
) -> Result<Vec<MeasurementRecord>> {
    if rho.rows() != DIM || rho.cols() != DIM {
        return Err(Error::DimensionMismatch { expected: DIM, found: rho.rows() });
    }
    let mats = f.pairs().map(|(a, b)| confusion(a, b));
    Setting::all()
        .map(|s| {
            let r = s.rotation();
            let rotated = &(&r * rho) * &r.adjoint();
            let intrinsic: Vec<f64> = (0..DIM).map(|b| rotated[(b, b)].re.max(0.0)).collect();
            let mut p: [f64; DIM] = apply_local(&mats, &intrinsic).try_into().expect("length 8");
            if let Some((amp, rng)) = noise.as_mut() {
                for v in p.iter_mut() {
                    *v = (*v + rng.random_range(-*amp..=*amp)).max(0.0);
                }
            }
            let sum: f64 = p.iter().sum();
            p.iter_mut().for_each(|v| *v /= sum);
            MeasurementRecord::new(s, p)
        })
        .collect()
}

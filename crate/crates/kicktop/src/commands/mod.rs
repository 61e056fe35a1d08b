pub mod classical;
pub mod evolve;
pub mod husimi;
pub mod rmt;
pub mod scan;
pub mod surface;
pub mod tomo;
pub mod tunnel;
pub mod verify;

use std::f64::consts::FRAC_PI_2;

use kicktop_core::entanglement::{concurrence_general, rdm2, single_qubit_entropy, LongTimeAverage, RunningMean};
use kicktop_core::kicked_top::{coherent_state, floquet_unitary, CoherentPoint, DickeState, SpecialState, TopParams};
use kicktop_core::{exact3, exact4, Result};

/// Closed-form dynamics, available for three and four qubits at `p = pi/2`.
#[derive(Debug, Clone, Copy)]
pub struct ClosedForm {
    two_j: u32,
    pt: CoherentPoint,
    kappa0: f64,
    special: Option<SpecialState>,
}

impl ClosedForm {
    pub fn new(params: &TopParams, pt: CoherentPoint) -> Option<Self> {
        let covered = matches!(params.two_j, 3 | 4) && (params.p - FRAC_PI_2).abs() < 1e-12;
        covered.then(|| ClosedForm {
            two_j: params.two_j,
            pt,
            kappa0: params.kappa0,
            special: SpecialState::from_point(pt),
        })
    }

    pub fn state(&self, n: u64) -> DickeState {
        match self.two_j {
            3 => exact3::evolved_state(self.pt, n, self.kappa0),
            _ => exact4::evolved_state(self.pt, n, self.kappa0),
        }
    }

    pub fn entropy(&self, n: u64) -> f64 {
        match (self.two_j, self.special) {
            (3, Some(s)) => exact3::entropy3_special(s, n, self.kappa0),
            (3, None) => exact3::entropy3_general(self.pt, n, self.kappa0),
            (_, Some(s)) => exact4::entropy4_special(s, n, self.kappa0),
            (_, None) => single_qubit_entropy(&self.state(n)),
        }
    }

    pub fn concurrence(&self, n: u64) -> Result<f64> {
        if self.two_j == 3 && self.special == Some(SpecialState::Zero) {
            return Ok(exact3::concurrence3_000(n, self.kappa0));
        }
        concurrence_general(&rdm2(&self.state(n))?)
    }

    /// Long-time average, known for the two special initial states.
    pub fn average(&self) -> Option<Result<LongTimeAverage>> {
        let s = self.special?;
        Some(match self.two_j {
            3 => exact3::avg_entropy3(s, self.kappa0),
            _ => exact4::avg_entropy4(s, self.kappa0),
        })
    }
}

/// Mean single-qubit linear entropy over steps `1..=horizon`, by direct evolution.
pub fn numeric_average(params: &TopParams, pt: CoherentPoint, horizon: u64) -> Result<f64> {
    let u = floquet_unitary(params)?;
    let mut amps = coherent_state(params.two_j, pt)?.into_amps();
    let mut mean = RunningMean::default();
    for _ in 0..horizon {
        amps = u.apply(&amps)?;
        mean.push(entropy_of(&amps));
    }
    Ok(mean.mean())
}

/// Entropy of raw amplitudes produced by unitary evolution of a normalized state.
pub(crate) fn entropy_of(amps: &[kicktop_core::C64]) -> f64 {
    single_qubit_entropy(&DickeState::normalized(amps.to_vec()).expect("nonzero amplitudes"))
}

/// Installs a global worker pool of the given size; later calls are ignored.
pub fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        if rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_err() {
            log::debug!("worker pool already initialized");
        }
    }
}

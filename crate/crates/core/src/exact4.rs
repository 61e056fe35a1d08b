//! Closed-form dynamics of four qubits (`j = 2`) and the dynamical tunneling
//! between the two classical fixed points.
//!
//! In the eigenbasis of `Y(x)Y(x)Y(x)Y` the five-dimensional symmetric space
//! splits as `1 + 2 + 2`: a frozen state with eigenvalue `-1`, a positive
//! parity block that is a rotation with `chi = sin(kappa)/2`, `kappa = kappa0/2`,
//! and a negative parity block of period four.
//!
//! Phases follow the qubit (Ising) form of the Floquet operator.

use core::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::entanglement::{single_qubit_entropy, LongTimeAverage};
use crate::kicked_top::{coherent_state, CoherentPoint, DickeState, SpecialState};
use crate::numerics::{chebyshev_pair, inner, CMatrix};
use crate::{Error, Result, C64};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `|phi_1^+-> = (|W> -+ |W~>)/sqrt2`, `|phi_2^+-> = (|0000> +- |1111>)/sqrt2`
/// and `|phi_3^+>` the two-excitation Dicke state.
#[derive(Debug, Clone)]
pub struct ParityBasis4 {
    pub phi1_plus: DickeState,
    pub phi2_plus: DickeState,
    pub phi3_plus: DickeState,
    pub phi1_minus: DickeState,
    pub phi2_minus: DickeState,
}

impl ParityBasis4 {
    pub fn new() -> Self {
        let h = FRAC_1_SQRT_2;
        let z = c(0.0, 0.0);
        let v = |a: [C64; 5]| DickeState::from_raw(a.to_vec());
        ParityBasis4 {
            phi1_plus: v([z, c(h, 0.0), z, c(-h, 0.0), z]),
            phi2_plus: v([c(h, 0.0), z, z, z, c(h, 0.0)]),
            phi3_plus: v([z, z, c(1.0, 0.0), z, z]),
            phi1_minus: v([z, c(h, 0.0), z, c(h, 0.0), z]),
            phi2_minus: v([c(h, 0.0), z, z, z, c(-h, 0.0)]),
        }
    }

    /// Columns `phi1+, phi2+, phi3+, phi1-, phi2-`.
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_columns(&[
            self.phi1_plus.amps(),
            self.phi2_plus.amps(),
            self.phi3_plus.amps(),
            self.phi1_minus.amps(),
            self.phi2_minus.amps(),
        ])
    }
}

impl Default for ParityBasis4 {
    fn default() -> Self {
        Self::new()
    }
}

/// The three blocks of the Floquet operator.
#[derive(Debug, Clone)]
pub struct Blocks4 {
    /// Eigenvalue on `|phi_1^+>`; always `-1`.
    pub u0: C64,
    /// Positive block in the basis `{phi2+, phi3+}`.
    pub plus: CMatrix,
    /// Negative block in the basis `{phi1-, phi2-}`.
    pub minus: CMatrix,
}

pub fn u4_blocks(kappa0: f64) -> Blocks4 {
    let k = kappa0 / 2.0;
    let pre = c(0.0, -1.0) * C64::from_polar(1.0, -k / 2.0);
    let em = C64::from_polar(1.0, -k);
    let ep = C64::from_polar(1.0, k);
    let plus = CMatrix::from_rows([
        [pre * c(0.0, 0.5) * em, pre * c(0.0, SQRT3_2) * em],
        [pre * c(0.0, SQRT3_2) * ep, pre * c(0.0, -0.5) * ep],
    ]);
    let q = C64::from_polar(1.0, 0.75 * k);
    let pm = C64::from_polar(1.0, -0.75 * k);
    let minus = CMatrix::from_rows([[c(0.0, 0.0), pm * q], [-pm * q.conj(), c(0.0, 0.0)]]);
    Blocks4 { u0: c(-1.0, 0.0), plus, minus }
}

/// Closed-form n-th powers of all three blocks.
///
/// `U_+^n = e^{-in(pi+kappa)/2} [[alpha, i beta*], [i beta, alpha*]]` and
/// `U_-^n = e^{-3in kappa/4} [[cos(n pi/2), e^{3i kappa/4} sin(n pi/2)], [-e^{-3i kappa/4} sin(n pi/2), cos(n pi/2)]]`.
#[derive(Debug, Clone)]
pub struct BlockPower4 {
    pub kappa: f64,
    pub n: u64,
    pub alpha: C64,
    pub beta: C64,
    pub minus_block: CMatrix,
    plus_phase: C64,
}

impl BlockPower4 {
    pub fn u0(&self) -> C64 {
        if self.n.is_multiple_of(2) {
            c(1.0, 0.0)
        } else {
            c(-1.0, 0.0)
        }
    }

    pub fn plus_block(&self) -> CMatrix {
        let p = self.plus_phase;
        let i = c(0.0, 1.0);
        CMatrix::from_rows([[p * self.alpha, p * i * self.beta.conj()], [p * i * self.beta, p * self.alpha.conj()]])
    }

    /// `U^n` in the Dicke basis.
    pub fn propagator(&self) -> CMatrix {
        let b = ParityBasis4::new().matrix();
        let plus = self.plus_block();
        let mut d = CMatrix::zeros(5, 5);
        d[(0, 0)] = self.u0();
        for i in 0..2 {
            for j in 0..2 {
                d[(1 + i, 1 + j)] = plus[(i, j)];
                d[(3 + i, 3 + j)] = self.minus_block[(i, j)];
            }
        }
        &(&b * &d) * &b.adjoint()
    }
}

#[derive(Debug, Clone, Copy)]
struct Cheb {
    kappa: f64,
    t: f64,
    u: f64,
}

impl Cheb {
    fn new(kappa0: f64, n: u64) -> Self {
        let kappa = kappa0 / 2.0;
        let (t, u) = chebyshev_pair(libm::sin(kappa) / 2.0, n).expect("|sin(x)/2| <= 1/2");
        Cheb { kappa, t, u }
    }

    fn alpha(&self) -> C64 {
        c(self.t, 0.5 * self.u * libm::cos(self.kappa))
    }

    fn beta(&self) -> C64 {
        C64::from_polar(SQRT3_2 * self.u, self.kappa)
    }
}

/// `(cos(n pi/2), sin(n pi/2))` without rounding error.
fn quarter_turns(n: u64) -> (f64, f64) {
    match n % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    }
}

pub fn u4_block_pow(kappa0: f64, n: u64) -> BlockPower4 {
    let ch = Cheb::new(kappa0, n);
    let nf = n as f64;
    // Reduce the phases modulo 2 pi before scaling so huge n keeps precision.
    let plus_phase = C64::from_polar(1.0, -(nf * PI / 2.0 % (2.0 * PI)) - nf * ch.kappa / 2.0);
    let (cs, sn) = quarter_turns(n);
    let q = C64::from_polar(1.0, 0.75 * ch.kappa);
    let mp = C64::from_polar(1.0, -0.75 * nf * ch.kappa);
    let minus_block = CMatrix::from_rows([[mp * cs, mp * q * sn], [-mp * q.conj() * sn, mp * cs]]);
    BlockPower4 { kappa: ch.kappa, n, alpha: ch.alpha(), beta: ch.beta(), minus_block, plus_phase }
}

/// `U^n |pt>` for any coherent initial state, through the block powers.
pub fn evolved_state(pt: CoherentPoint, n: u64, kappa0: f64) -> DickeState {
    let psi0 = coherent_state(4, pt).expect("two_j = 4");
    let amps = u4_block_pow(kappa0, n).propagator().apply(psi0.amps()).expect("dimension 5");
    DickeState::from_raw(amps)
}

/// Single-qubit linear entropy of `U^n |0000>`.
///
/// For even `n` the reduced state is diagonal and `S = [1 - Re(alpha e^{i n kappa0/8})^2]/2`.
/// Odd steps populate both parity sectors and are evaluated from the full
/// closed-form state.
pub fn entropy4_0000(n: u64, kappa0: f64) -> f64 {
    if n % 2 == 1 {
        return single_qubit_entropy(&evolved_state(CoherentPoint::NORTH, n, kappa0));
    }
    let ch = Cheb::new(kappa0, n);
    let x = (ch.alpha() * C64::from_polar(1.0, n as f64 * kappa0 / 8.0)).re;
    0.5 * (1.0 - x * x)
}

/// Single-qubit linear entropy of `U^n (x)|+>_y`: `1/2 - (T cos d + U cos(kappa0/2) sin d)^2 / 2`
/// with `d = -n(2 pi + kappa0)/4`.
pub fn entropy4_plus(n: u64, kappa0: f64) -> f64 {
    let ch = Cheb::new(kappa0, n);
    let nf = n as f64;
    let delta = -(nf * PI / 2.0 % (2.0 * PI)) - nf * kappa0 / 4.0;
    let x = ch.t * libm::cos(delta) + ch.u * libm::cos(kappa0 / 2.0) * libm::sin(delta);
    0.5 - 0.5 * x * x
}

pub fn entropy4_special(state: SpecialState, n: u64, kappa0: f64) -> f64 {
    match state {
        SpecialState::Zero => entropy4_0000(n, kappa0),
        SpecialState::PlusY => entropy4_plus(n, kappa0),
    }
}

/// Long-time average entropy, with `s0 = cos^2(kappa0/2)`:
/// `(9 + 2 s0) / (8 (3 + s0))` from `|0000>` and `(9 - s0) / (8 (3 + s0))` from `(x)|+>_y`.
///
/// At `kappa0` a multiple of `2 pi` the positive block stops rotating and the
/// formula only gives the limit from nearby values; the result is flagged.
pub fn avg_entropy4(initial: SpecialState, kappa0: f64) -> Result<LongTimeAverage> {
    if !kappa0.is_finite() || kappa0 < 0.0 {
        return Err(Error::Domain { what: "long-time average (kappa0 >= 0)", value: kappa0 });
    }
    let cs = libm::cos(kappa0 / 2.0);
    let s0 = cs * cs;
    let limiting = libm::sin(kappa0 / 2.0).abs() < 1e-12;
    let value = match initial {
        SpecialState::Zero => (9.0 + 2.0 * s0) / (8.0 * (3.0 + s0)),
        SpecialState::PlusY => (9.0 - s0) / (8.0 * (3.0 + s0)),
    };
    Ok(LongTimeAverage { value, limiting })
}

/// Eigenphase of the positive block that approaches `pi` as `kappa0 -> 0`:
/// `pi - kappa0/4 + asin(sin(kappa0/2)/2)`, which is `pi - kappa0^3/128` to leading order.
pub fn gamma_minus(kappa0: f64) -> f64 {
    PI - kappa0 / 4.0 + libm::asin(0.5 * libm::sin(kappa0 / 2.0))
}

/// Tunneling time scales at a given torsion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TunnelingEstimate {
    pub kappa0: f64,
    pub gamma_minus: f64,
    /// `pi / |pi - gamma_minus|`: steps for the near-degenerate pair to dephase by `pi`.
    pub n_star_exact: f64,
    /// `128 pi / kappa0^3`.
    pub n_star_approx: f64,
}

pub fn tunneling_time(kappa0: f64) -> Result<TunnelingEstimate> {
    if !kappa0.is_finite() || kappa0 < 0.0 {
        return Err(Error::Domain { what: "tunneling time (kappa0 > 0)", value: kappa0 });
    }
    if kappa0 == 0.0 {
        return Err(Error::InfiniteTunnelingTime);
    }
    if kappa0 > 1.0 {
        log::warn!("tunneling estimate at kappa0 = {kappa0} is outside the small-kappa0 regime (> 1)");
    }
    let g = gamma_minus(kappa0);
    let split = (PI - g).abs();
    if split == 0.0 {
        return Err(Error::InfiniteTunnelingTime);
    }
    Ok(TunnelingEstimate {
        kappa0,
        gamma_minus: g,
        n_star_exact: PI / split,
        n_star_approx: 128.0 * PI / (kappa0 * kappa0 * kappa0),
    })
}

/// Squared overlaps of `U^n (x)|+>_y` with `(x)|+>_y`, `(x)|->_y` and
/// `(  (x)|+>_y - i (x)|->_y ) / sqrt2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TunnelOverlaps {
    pub n: u64,
    pub p_plus: f64,
    pub p_minus: f64,
    pub p_ghz: f64,
}

/// Evolved `(x)|+>_y` from its parity decomposition
/// `(i/sqrt2) phi1+ + (1/sqrt8) phi2+ - sqrt(3/8) phi3+`.
fn plus_state_at(kappa0: f64, n: u64) -> [C64; 5] {
    let bp = u4_block_pow(kappa0, n);
    let frozen = c(0.0, FRAC_1_SQRT_2) * bp.u0();
    let v = bp.plus_block().apply(&[c(libm::sqrt(0.125), 0.0), c(-libm::sqrt(0.375), 0.0)]).expect("2x2");
    let basis = ParityBasis4::new();
    core::array::from_fn(|k| {
        frozen * basis.phi1_plus.amps()[k] + v[0] * basis.phi2_plus.amps()[k] + v[1] * basis.phi3_plus.amps()[k]
    })
}

/// Overlaps at step `n`, `O(log n)` via the block powers.
pub fn tunnel_overlaps(kappa0: f64, n: u64) -> TunnelOverlaps {
    let psi = plus_state_at(kappa0, n);
    let plus = coherent_state(4, CoherentPoint::PLUS_Y).expect("two_j = 4");
    let minus = coherent_state(4, CoherentPoint::MINUS_Y).expect("two_j = 4");
    let op = inner(plus.amps(), &psi);
    let om = inner(minus.amps(), &psi);
    // <GHZ| = (<+| + i <-|) / sqrt2
    let og = (op + c(0.0, 1.0) * om) * FRAC_1_SQRT_2;
    TunnelOverlaps { n, p_plus: op.norm_sqr(), p_minus: om.norm_sqr(), p_ghz: og.norm_sqr() }
}

/// Whether tunneling between the fixed points is possible: `num_qubits * p`
/// must be a multiple of `2 pi`.
pub fn tunneling_condition(num_qubits: u32, p: f64) -> bool {
    let turns = f64::from(num_qubits) * p / (2.0 * PI);
    (turns - libm::round(turns)).abs() < 1e-12 * turns.abs().max(1.0) && p.is_finite() && p != 0.0
}

/// Step of largest `p_minus` (or `p_ghz`) within `+-5%` of a target step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapPeak {
    pub n: u64,
    pub value: f64,
}

fn scan(lo: u64, hi: u64, f: impl Fn(u64) -> f64) -> OverlapPeak {
    let mut best = OverlapPeak { n: lo, value: f(lo) };
    for n in lo + 1..=hi {
        let v = f(n);
        if v > best.value {
            best = OverlapPeak { n, value: v };
        }
    }
    best
}

fn window(center: f64) -> (u64, u64) {
    let lo = libm::floor(center * 0.95).max(0.0) as u64;
    let hi = libm::ceil(center * 1.05) as u64;
    (lo, hi)
}

/// Maximum of `p_minus` over `n` within 5% of `n_star_exact`.
pub fn tunneling_peak(kappa0: f64) -> Result<OverlapPeak> {
    let est = tunneling_time(kappa0)?;
    let (lo, hi) = window(est.n_star_exact);
    Ok(scan(lo, hi, |n| tunnel_overlaps(kappa0, n).p_minus))
}

/// Maximum of `p_ghz` over `n` within 5% of `n_star_exact / 2`.
pub fn ghz_peak(kappa0: f64) -> Result<OverlapPeak> {
    let est = tunneling_time(kappa0)?;
    let (lo, hi) = window(est.n_star_exact / 2.0);
    Ok(scan(lo, hi, |n| tunnel_overlaps(kappa0, n).p_ghz))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::time_average;
    use crate::kicked_top::{evolve, ising_floquet_unitary, TopParams};
    use crate::numerics::unitary_power;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn ising(kappa0: f64) -> CMatrix {
        ising_floquet_unitary(&TopParams { two_j: 4, kappa0, p: PI / 2.0 }).unwrap()
    }

    fn from_blocks(kappa0: f64) -> CMatrix {
        let b = u4_blocks(kappa0);
        let mut d = CMatrix::zeros(5, 5);
        d[(0, 0)] = b.u0;
        for i in 0..2 {
            for j in 0..2 {
                d[(1 + i, 1 + j)] = b.plus[(i, j)];
                d[(3 + i, 3 + j)] = b.minus[(i, j)];
            }
        }
        let bm = ParityBasis4::new().matrix();
        &(&bm * &d) * &bm.adjoint()
    }

    #[test]
    fn blocks_rebuild_floquet() {
        assert!(ParityBasis4::new().matrix().unitarity_deviation() < 1e-15);
        for &k0 in &[0.0, 0.1, 0.7, PI, 2.5, 5.0] {
            assert!(from_blocks(k0).approx_eq(&ising(k0), 1e-12), "k0={k0}");
            let phi = ParityBasis4::new().phi1_plus;
            let out = ising(k0).apply(phi.amps()).unwrap();
            assert!(out.iter().zip(phi.amps()).all(|(a, b)| (a + b).norm() < 1e-12));
        }
    }

    #[test]
    fn minus_block_period_four() {
        for &k0 in &[0.3, 1.9] {
            let m4 = unitary_power(&u4_blocks(k0).minus, 4).unwrap();
            let ph = m4[(0, 0)];
            assert!(m4.approx_eq(&CMatrix::identity(2).scale(ph), 1e-13));
        }
    }

    #[test]
    fn block_powers_match_repeated_squaring() {
        let bp0 = u4_block_pow(0.9, 0);
        assert!(bp0.propagator().approx_eq(&CMatrix::identity(5), 1e-15));
        let bp1 = u4_block_pow(0.9, 1);
        assert!(bp1.plus_block().approx_eq(&u4_blocks(0.9).plus, 1e-15));
        assert!(bp1.minus_block.approx_eq(&u4_blocks(0.9).minus, 1e-15));
        let n = 1_000_000;
        let b = u4_blocks(0.1);
        let bp = u4_block_pow(0.1, n);
        assert!(bp.plus_block().approx_eq(&unitary_power(&b.plus, n).unwrap(), 1e-7));
        assert!(bp.minus_block.approx_eq(&unitary_power(&b.minus, n).unwrap(), 1e-7));
        assert!((bp.alpha.norm_sqr() + bp.beta.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_entropies_match_evolution() {
        for &k0 in &[0.1, 0.7, 1.0, PI, 2.5] {
            let u = ising(k0);
            let mut zero = DickeState::basis(4, 0).unwrap();
            let mut plus = coherent_state(4, CoherentPoint::PLUS_Y).unwrap();
            for n in 0..200u64 {
                assert!((entropy4_0000(n, k0) - single_qubit_entropy(&zero)).abs() < 1e-10, "n={n} k0={k0}");
                assert!((entropy4_plus(n, k0) - single_qubit_entropy(&plus)).abs() < 1e-10, "n={n} k0={k0}");
                zero = evolve(&zero, &u, 1).unwrap();
                plus = evolve(&plus, &u, 1).unwrap();
            }
        }
        assert_eq!(entropy4_0000(0, 0.3), 0.0);
        assert!(entropy4_plus(0, 0.3).abs() < 1e-15);
    }

    #[test]
    fn averages() {
        for st in [SpecialState::Zero, SpecialState::PlusY] {
            assert!((avg_entropy4(st, PI).unwrap().value - 0.375).abs() < 1e-15);
            assert!(avg_entropy4(st, 0.0).unwrap().limiting);
            assert!(avg_entropy4(st, 2.0 * PI).unwrap().limiting);
        }
        assert!((avg_entropy4(SpecialState::PlusY, 0.0).unwrap().value - 0.25).abs() < 1e-15);
        assert!((avg_entropy4(SpecialState::Zero, 0.0).unwrap().value - 11.0 / 32.0).abs() < 1e-15);
        let series: Vec<f64> = (1..=100_000).map(|n| entropy4_0000(n, PI)).collect();
        assert!((time_average(&series).unwrap() - 0.375).abs() < 2e-3);
    }

    #[test]
    fn gamma_minus_is_block_eigenphase() {
        assert_eq!(gamma_minus(0.0), PI);
        let g = gamma_minus(0.1);
        assert!(((PI - g).abs() - 0.001 / 128.0).abs() / (0.001 / 128.0) < 0.05);
        assert!(((PI - g).abs() - 7.81e-6).abs() < 1e-8);
        for &k0 in &[0.1, 0.5, 1.0] {
            // eigenvalues of the 2x2 block from its characteristic polynomial
            let u = u4_blocks(k0).plus;
            let tr = u.trace();
            let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
            let disc = (tr * tr - det * 4.0).sqrt();
            let roots = [(tr + disc) / 2.0, (tr - disc) / 2.0];
            let best = roots
                .iter()
                .map(|z| {
                    let mut ph = z.arg();
                    if ph < 0.0 {
                        ph += 2.0 * PI;
                    }
                    ph
                })
                .min_by(|a, b| (a - PI).abs().total_cmp(&(b - PI).abs()))
                .unwrap();
            assert!((best - gamma_minus(k0)).abs() < 1e-12, "k0={k0}");
        }
    }

    #[test]
    fn tunneling_times() {
        let est = tunneling_time(0.1).unwrap();
        assert!((est.n_star_approx - 402_124.0).abs() <= 1.0);
        assert!((tunneling_time(0.2).unwrap().n_star_approx - 50_265.0).abs() <= 1.0);
        assert!(matches!(tunneling_time(0.0), Err(Error::InfiniteTunnelingTime)));
        let rel = |k: f64| {
            let e = tunneling_time(k).unwrap();
            (e.n_star_exact - e.n_star_approx).abs() / e.n_star_exact
        };
        assert!(rel(0.05) < rel(0.2) && rel(0.2) < rel(0.5));
    }

    #[test]
    fn overlaps_and_conditions() {
        let o = tunnel_overlaps(0.1, 0);
        assert!((o.p_plus - 1.0).abs() < 1e-14);
        assert!(o.p_minus < 1e-14);
        assert!((o.p_ghz - 0.5).abs() < 1e-14);
        let peak = tunneling_peak(0.1).unwrap();
        assert!(peak.value > 0.99, "{peak:?}");
        assert!(ghz_peak(0.1).unwrap().value > 0.99);
        assert!(tunneling_condition(4, PI / 2.0));
        assert!(tunneling_condition(8, PI / 2.0));
        assert!(!tunneling_condition(3, PI / 2.0));
    }

    #[test]
    fn overlaps_match_evolution() {
        let k0 = 0.7;
        let plus = coherent_state(4, CoherentPoint::PLUS_Y).unwrap();
        let minus = coherent_state(4, CoherentPoint::MINUS_Y).unwrap();
        let u = ising(k0);
        for n in [0u64, 1, 5, 17, 64] {
            let s = evolve(&plus, &u, n).unwrap();
            let o = tunnel_overlaps(k0, n);
            assert!((o.p_plus - plus.fidelity(&s)).abs() < 1e-12);
            assert!((o.p_minus - minus.fidelity(&s)).abs() < 1e-12);
            assert!((s.overlap(&ParityBasis4::new().phi1_plus).norm() - FRAC_1_SQRT_2).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn block_reconstruction_random_kappa(k0 in 0.0f64..20.0) {
            prop_assert!(from_blocks(k0).approx_eq(&ising(k0), 1e-10));
        }

        #[test]
        fn general_state_matches_evolution(t in 0.0f64..PI, p in -PI..PI, n in 0u64..300, k0 in 0.0f64..9.0) {
            let pt = CoherentPoint::new(t, p).unwrap();
            let s = evolve(&coherent_state(4, pt).unwrap(), &ising(k0), n).unwrap();
            prop_assert!(evolved_state(pt, n, k0).amps().iter().zip(s.amps()).all(|(a, b)| (a - b).norm() < 1e-10));
        }

        #[test]
        fn overlap_probabilities_bounded(k0 in 0.01f64..3.0, n in 0u64..1_000_000) {
            let o = tunnel_overlaps(k0, n);
            prop_assert!(o.p_plus + o.p_minus <= 1.0 + 1e-12);
        }
    }
}

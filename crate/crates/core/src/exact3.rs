//! Closed-form dynamics of three qubits (`j = 3/2`).
//!
//! The Floquet operator commutes with `Y(x)Y(x)Y`, so in the basis of its
//! eigenvectors it splits into two 2x2 blocks. Each block is a rotation, and
//! its n-th power follows from Chebyshev polynomials of `chi = sin(2 kappa)/2`
//! with `kappa = kappa0 / 6`.
//!
//! Everything here is in the qubit (Ising) phase convention of
//! [`ising_floquet_unitary`](crate::kicked_top::ising_floquet_unitary).

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use crate::entanglement::LongTimeAverage;
use crate::kicked_top::{coherent_state, rotation, CoherentPoint, DickeState, SpecialState};
use crate::numerics::{chebyshev_pair, CMatrix};
use crate::{Error, Result, C64};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Sector of the `Y(x)Y(x)Y` symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }
}

/// `|phi_1^+-> = (|000> -+ i|111>)/sqrt2` and `|phi_2^+-> = (|W> +- i|W~>)/sqrt2`,
/// where `|W>` and `|W~>` are the one- and two-excitation Dicke states.
#[derive(Debug, Clone)]
pub struct ParityBasis3 {
    pub phi1_plus: DickeState,
    pub phi2_plus: DickeState,
    pub phi1_minus: DickeState,
    pub phi2_minus: DickeState,
}

impl ParityBasis3 {
    pub fn new() -> Self {
        let h = FRAC_1_SQRT_2;
        let v = |a: [C64; 4]| DickeState::from_raw(a.to_vec());
        let z = c(0.0, 0.0);
        ParityBasis3 {
            phi1_plus: v([c(h, 0.0), z, z, c(0.0, -h)]),
            phi2_plus: v([z, c(h, 0.0), c(0.0, h), z]),
            phi1_minus: v([c(h, 0.0), z, z, c(0.0, h)]),
            phi2_minus: v([z, c(h, 0.0), c(0.0, -h), z]),
        }
    }

    /// Columns `phi1+, phi2+, phi1-, phi2-`.
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_columns(&[
            self.phi1_plus.amps(),
            self.phi2_plus.amps(),
            self.phi1_minus.amps(),
            self.phi2_minus.amps(),
        ])
    }
}

impl Default for ParityBasis3 {
    fn default() -> Self {
        Self::new()
    }
}

/// One parity block of the Floquet operator, in the basis `{phi1, phi2}` of that sector.
pub fn u3_block(parity: Parity, kappa0: f64) -> CMatrix {
    let s = parity.sign();
    let k = kappa0 / 6.0;
    let pre = C64::from_polar(s, -s * FRAC_PI_4 - k);
    let em = C64::from_polar(1.0, -2.0 * k);
    let ep = C64::from_polar(1.0, 2.0 * k);
    CMatrix::from_rows([
        [pre * c(0.0, 0.5) * em, pre * em * (-s * SQRT3_2)],
        [pre * ep * (s * SQRT3_2), pre * c(0.0, -0.5) * ep],
    ])
}

/// `U_+-^n = (+-1)^n e^{-in(+-pi/4 + kappa)} [[alpha, -+beta*], [+-beta, alpha*]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockPower3 {
    pub kappa: f64,
    pub n: u64,
    pub alpha: C64,
    pub beta: C64,
    pub parity: Parity,
    pub prefactor: C64,
}

impl BlockPower3 {
    pub fn matrix(&self) -> CMatrix {
        let s = self.parity.sign();
        let p = self.prefactor;
        CMatrix::from_rows([[p * self.alpha, p * self.beta.conj() * (-s)], [p * self.beta * s, p * self.alpha.conj()]])
    }
}

/// Chebyshev data shared by all three-qubit closed forms.
#[derive(Debug, Clone, Copy)]
struct Cheb {
    kappa: f64,
    chi: f64,
    t: f64,
    u: f64,
}

impl Cheb {
    fn new(kappa0: f64, n: u64) -> Self {
        let kappa = kappa0 / 6.0;
        let chi = libm::sin(2.0 * kappa) / 2.0;
        let (t, u) = chebyshev_pair(chi, n).expect("|sin(x)/2| <= 1/2");
        Cheb { kappa, chi, t, u }
    }

    fn alpha(&self) -> C64 {
        c(self.t, 0.5 * self.u * libm::cos(2.0 * self.kappa))
    }

    fn beta(&self) -> C64 {
        C64::from_polar(SQRT3_2 * self.u, 2.0 * self.kappa)
    }
}

/// Closed-form n-th power of a parity block.
pub fn u3_block_pow(parity: Parity, kappa0: f64, n: u64) -> BlockPower3 {
    u3_block_pow_with(parity, kappa0, n, 1.0)
}

/// Block power with the sign of `beta` scaled by `beta_sign`; used to check
/// that verification detects a corrupted formula.
#[doc(hidden)]
pub fn u3_block_pow_with(parity: Parity, kappa0: f64, n: u64, beta_sign: f64) -> BlockPower3 {
    let ch = Cheb::new(kappa0, n);
    let s = parity.sign();
    let nf = n as f64;
    let sign_n = if parity == Parity::Minus && n % 2 == 1 { -1.0 } else { 1.0 };
    let prefactor = C64::from_polar(sign_n, -nf * (s * FRAC_PI_4 + ch.kappa));
    BlockPower3 { kappa: ch.kappa, n, alpha: ch.alpha(), beta: ch.beta() * beta_sign, parity, prefactor }
}

/// The qubit-form Floquet operator rebuilt from its parity blocks, in the Dicke basis.
pub fn floquet_from_blocks(kappa0: f64) -> CMatrix {
    propagator(&u3_block(Parity::Plus, kappa0), &u3_block(Parity::Minus, kappa0))
}

fn propagator(plus: &CMatrix, minus: &CMatrix) -> CMatrix {
    let b = ParityBasis3::new().matrix();
    let mut blocks = CMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            blocks[(i, j)] = plus[(i, j)];
            blocks[(i + 2, j + 2)] = minus[(i, j)];
        }
    }
    &(&b * &blocks) * &b.adjoint()
}

/// `U^n` in the Dicke basis from the closed-form block powers.
pub fn floquet_power(kappa0: f64, n: u64) -> CMatrix {
    propagator(&u3_block_pow(Parity::Plus, kappa0, n).matrix(), &u3_block_pow(Parity::Minus, kappa0, n).matrix())
}

/// `U^n |pt>` for any coherent initial state, through the block powers.
pub fn evolved_state(pt: CoherentPoint, n: u64, kappa0: f64) -> DickeState {
    let psi0 = coherent_state(3, pt).expect("two_j = 3");
    let amps = floquet_power(kappa0, n).apply(psi0.amps()).expect("dimension 4");
    DickeState::from_raw(amps)
}

/// `U^n |000>` written out:
/// `1/2 e^{-in(3pi/4+kappa)} [(1+i^n)(alpha|000> + i beta|W~>) + (1-i^n)(i alpha|111> - beta|W>)]`.
pub fn state_000(n: u64, kappa0: f64) -> DickeState {
    let ch = Cheb::new(kappa0, n);
    let (a, b) = (ch.alpha(), ch.beta());
    let i_n = match n % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    };
    let p = C64::from_polar(0.5, -(n as f64) * (3.0 * FRAC_PI_4 + ch.kappa));
    let even = c(1.0, 0.0) + i_n;
    let odd = c(1.0, 0.0) - i_n;
    let i = c(0.0, 1.0);
    DickeState::from_raw(alloc::vec![p * even * a, -p * odd * b, p * even * i * b, p * odd * i * a])
}

/// `n` for even steps, `n + 1` for odd ones: `|psi_{2m-1}>` and `|psi_{2m}>`
/// differ only by local unitaries when starting from `|000>`.
fn even_neighbour(n: u64) -> u64 {
    n + n % 2
}

/// Single-qubit linear entropy of `U^n |000>`: `2 lambda (1 - lambda)` with
/// `lambda = U_{n-1}(chi)^2 / 2`, evaluated at the even neighbour of `n`.
pub fn entropy3_000(n: u64, kappa0: f64) -> f64 {
    let u = Cheb::new(kappa0, even_neighbour(n)).u;
    let lambda = 0.5 * u * u;
    2.0 * lambda * (1.0 - lambda)
}

/// Two-qubit concurrence of `U^n |000>`:
/// `|U| * | |U|/2 - sqrt(1 - 3U^2/4) |` with `U = U_{n-1}(chi)` at the even neighbour of `n`.
pub fn concurrence3_000(n: u64, kappa0: f64) -> f64 {
    let u = Cheb::new(kappa0, even_neighbour(n)).u;
    let a = u.abs();
    a * (0.5 * a - libm::sqrt((1.0 - 0.75 * u * u).max(0.0))).abs()
}

/// Single-qubit linear entropy of `U^n (x)|+>_y`: `4 chi^2 U^2 (1 - 2 chi^2 U^2)`.
/// The initial state lies wholly in the positive sector, so every step counts.
pub fn entropy3_plus(n: u64, kappa0: f64) -> f64 {
    let ch = Cheb::new(kappa0, n);
    let x = ch.chi * ch.chi * ch.u * ch.u;
    4.0 * x * (1.0 - 2.0 * x)
}

/// Closed-form entropy for the two special initial states.
pub fn entropy3_special(state: SpecialState, n: u64, kappa0: f64) -> f64 {
    match state {
        SpecialState::Zero => entropy3_000(n, kappa0),
        SpecialState::PlusY => entropy3_plus(n, kappa0),
    }
}

/// Long-time average entropy, with `s0 = sin^2(kappa0/3)`:
/// `(5 - 2 s0)/(4 - s0)^2` from `|000>` and `s0 (8 - 5 s0)/(4 - s0)^2` from `(x)|+>_y`.
///
/// The averages treat `sin^2(n theta)` and `sin^4(n theta)` as 1/2 and 3/8.
/// Where `chi = 0` the `|000>` dynamics are a bare rotation with zero entropy;
/// the value returned there is the limit from nearby `kappa0` and is flagged.
pub fn avg_entropy3(initial: SpecialState, kappa0: f64) -> Result<LongTimeAverage> {
    if !kappa0.is_finite() || kappa0 < 0.0 {
        return Err(Error::Domain { what: "long-time average (kappa0 >= 0)", value: kappa0 });
    }
    let sn = libm::sin(kappa0 / 3.0);
    let s0 = sn * sn;
    let d = (4.0 - s0) * (4.0 - s0);
    Ok(match initial {
        SpecialState::Zero => LongTimeAverage { value: (5.0 - 2.0 * s0) / d, limiting: sn.abs() < 1e-12 },
        SpecialState::PlusY => LongTimeAverage { value: s0 * (8.0 - 5.0 * s0) / d, limiting: false },
    })
}

/// Long-time average entropy at `kappa0 = 3 pi/2` for any coherent initial state:
/// `[15 + cos 4t + (1 + 3 cos 2t) sin^4 t sin^2 2p] / 48`.
pub fn avg_entropy3_special(pt: CoherentPoint) -> f64 {
    let (t, p) = (pt.theta0, pt.phi0);
    let (st, s2p) = (libm::sin(t), libm::sin(2.0 * p));
    let s2 = st * st * st * st * s2p * s2p;
    (15.0 + libm::cos(4.0 * t) + (1.0 + 3.0 * libm::cos(2.0 * t)) * s2) / 48.0
}

/// Single-qubit linear entropy `2 [r(1-r) - |s|^2]` of `U^n |pt>` for any
/// coherent state, propagating its parity-basis coefficients.
pub fn entropy3_general(pt: CoherentPoint, n: u64, kappa0: f64) -> f64 {
    let psi0 = coherent_state(3, pt).expect("two_j = 3");
    let basis = ParityBasis3::new();
    let a1 = basis.phi1_plus.overlap(&psi0);
    let a2 = basis.phi2_plus.overlap(&psi0);
    let b1 = basis.phi1_minus.overlap(&psi0);
    let b2 = basis.phi2_minus.overlap(&psi0);
    let ch = Cheb::new(kappa0, n);
    let (al, be) = (ch.alpha(), ch.beta());
    // Relative phase of the minus sector after n steps.
    let ph = match n % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, -1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, 1.0),
    };
    let a1n = a1 * al - a2 * be.conj();
    let a2n = a1 * be + a2 * al.conj();
    let b1n = ph * (b1 * al + b2 * be.conj());
    let b2n = ph * (b2 * al.conj() - b1 * be);
    let sq3 = libm::sqrt(3.0);
    let r = 0.5 + (a1n * b1n.conj() + a2n * b2n.conj() / 3.0).re;
    let s = c((a1n * b2n.conj() + b1n * a2n.conj()).re / sq3, (a1n * a2n.conj() + b1n * b2n.conj()).im / sq3)
        - c(0.0, 1.0 / 3.0) * (a2n + b2n) * (a2n.conj() - b2n.conj());
    2.0 * (r * (1.0 - r) - s.norm_sqr())
}

/// Checks that `|psi_{2m-1}>` equals `R^{-1} (x)V |psi_{2m}>` up to a global
/// phase, where `R = exp(-i pi/2 Jy)` and `V = e^{i kappa sigma_z}` for even
/// `m`, `e^{-i kappa sigma_z}` for odd `m`. Both states come from step-by-step
/// evolution with the qubit-form Floquet operator.
pub fn local_equivalence_check(n_even: u64, kappa0: f64) -> Result<bool> {
    if n_even == 0 || n_even % 2 == 1 {
        return Err(Error::InvalidParameter(alloc::format!("expected a positive even step, got {n_even}")));
    }
    let params = crate::kicked_top::TopParams { two_j: 3, kappa0, p: PI / 2.0 };
    let u = crate::kicked_top::ising_floquet_unitary(&params)?;
    let psi0 = DickeState::basis(3, 0)?;
    let prev = crate::kicked_top::evolve(&psi0, &u, n_even - 1)?;
    let cur = DickeState::from_raw(u.apply(prev.amps())?);
    let m = n_even / 2;
    let kappa = kappa0 / 6.0;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    // (x)V is diagonal in the Dicke basis: e^{i sign kappa (N - 2k)}.
    let local: alloc::vec::Vec<C64> = cur
        .amps()
        .iter()
        .enumerate()
        .map(|(k, z)| z * C64::from_polar(1.0, sign * kappa * (3.0 - 2.0 * k as f64)))
        .collect();
    let back = rotation(3, -PI / 2.0)?.apply(&local)?;
    let candidate = DickeState::from_raw(back);
    Ok((prev.fidelity(&candidate) - 1.0).abs() < 1e-10)
}

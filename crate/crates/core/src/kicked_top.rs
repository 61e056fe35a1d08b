//! Spin operators, the Floquet map, coherent states and time evolution in
//! the symmetric subspace of `N = 2j` qubits.
//!
//! Basis index `k` counts excitations (`|1>` qubits), so `m = j - k` runs
//! from `j` down to `-j`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::numerics::{binomial, expm_hermitian, inner, norm_sqr, unitary_power, CMatrix};
use crate::{Error, Result, C64};

/// Parameters of the Floquet map `exp(-i kappa0 Jz^2 / 2j) exp(-i p Jy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TopParams {
    /// Number of qubits, `N = 2j`.
    pub two_j: u32,
    pub kappa0: f64,
    /// Rotation angle per period, radians.
    pub p: f64,
}

impl TopParams {
    /// Parameters with the standard quarter-turn rotation `p = pi/2`.
    pub fn new(two_j: u32, kappa0: f64) -> Result<Self> {
        Self::with_rotation(two_j, kappa0, FRAC_PI_2)
    }

    pub fn with_rotation(two_j: u32, kappa0: f64, p: f64) -> Result<Self> {
        let params = TopParams { two_j, kappa0, p };
        params.validate()?;
        if !params.in_recommended_range() {
            log::warn!("kappa0 = {kappa0} lies outside the recommended interval [0, pi j] = [0, {}]", PI * params.j());
        }
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.two_j == 0 {
            return Err(Error::InvalidParameter("two_j must be at least 1".into()));
        }
        if !self.kappa0.is_finite() || self.kappa0 < 0.0 {
            return Err(Error::InvalidParameter(alloc::format!(
                "kappa0 must be finite and non-negative, got {}",
                self.kappa0
            )));
        }
        if !self.p.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!("p must be finite, got {}", self.p)));
        }
        Ok(())
    }

    /// Whether `kappa0` lies in `[0, pi j]`, beyond which the map repeats up to local phases.
    pub fn in_recommended_range(&self) -> bool {
        self.kappa0 >= 0.0 && self.kappa0 <= PI * self.j() + 1e-12
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }
}

/// Normalized amplitude vector over the symmetric basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeState {
    amps: Vec<C64>,
}

impl DickeState {
    /// Wraps amplitudes that are normalized to within `1e-10`.
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: amps.len() });
        }
        let n2 = norm_sqr(&amps);
        if !((n2 - 1.0).abs() <= 1e-10) {
            return Err(Error::NotNormalized { norm_sqr: n2 });
        }
        Ok(DickeState { amps })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(mut amps: Vec<C64>) -> Result<Self> {
        let n2 = norm_sqr(&amps);
        if !(n2 > 0.0) || !n2.is_finite() {
            return Err(Error::NotNormalized { norm_sqr: n2 });
        }
        let s = 1.0 / libm::sqrt(n2);
        amps.iter_mut().for_each(|z| *z *= s);
        Self::new(amps)
    }

    /// The Dicke state with `k` excitations.
    pub fn basis(two_j: u32, k: usize) -> Result<Self> {
        let d = two_j as usize + 1;
        if k >= d {
            return Err(Error::DimensionMismatch { expected: d, found: k + 1 });
        }
        let mut amps = alloc::vec![C64::new(0.0, 0.0); d];
        amps[k] = C64::new(1.0, 0.0);
        Self::new(amps)
    }

    pub(crate) fn from_raw(amps: Vec<C64>) -> Self {
        DickeState { amps }
    }

    pub fn two_j(&self) -> u32 {
        (self.amps.len() - 1) as u32
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<C64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amps)
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &DickeState) -> C64 {
        inner(&self.amps, &other.amps)
    }

    /// Phase-insensitive fidelity `|<self|other>|^2`.
    pub fn fidelity(&self, other: &DickeState) -> f64 {
        self.overlap(other).norm_sqr()
    }
}

/// A direction on the unit sphere labelling a spin coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentPoint {
    /// Polar angle in `[0, pi]`.
    pub theta0: f64,
    /// Azimuth in `[-pi, pi]`.
    pub phi0: f64,
}

impl CoherentPoint {
    pub fn new(theta0: f64, phi0: f64) -> Result<Self> {
        const SLACK: f64 = 1e-12;
        if !(-SLACK..=PI + SLACK).contains(&theta0) {
            return Err(Error::Domain { what: "theta0 in [0, pi]", value: theta0 });
        }
        if !(-PI - SLACK..=PI + SLACK).contains(&phi0) {
            return Err(Error::Domain { what: "phi0 in [-pi, pi]", value: phi0 });
        }
        Ok(CoherentPoint { theta0, phi0 })
    }

    /// `|0...0>`, the north pole.
    pub const NORTH: CoherentPoint = CoherentPoint { theta0: 0.0, phi0: 0.0 };

    /// The `+1` eigenstate of every `sigma_y`, i.e. `Jy = +j`.
    ///
    /// Single-qubit amplitudes are `cos(theta/2) |0> + e^{-i phi} sin(theta/2) |1>`,
    /// so `phi0 = -pi/2` gives `(|0> + i|1>)/sqrt 2`.
    pub const PLUS_Y: CoherentPoint = CoherentPoint { theta0: FRAC_PI_2, phi0: -FRAC_PI_2 };

    /// The `-1` eigenstate of every `sigma_y`.
    pub const MINUS_Y: CoherentPoint = CoherentPoint { theta0: FRAC_PI_2, phi0: FRAC_PI_2 };

    /// Spin expectation direction `(<Jx>, <Jy>, <Jz>)/j` of the coherent state.
    ///
    /// The minus sign on `y` follows from the `e^{-i phi}` amplitude convention.
    pub fn bloch_vector(&self) -> [f64; 3] {
        let (st, ct) = (libm::sin(self.theta0), libm::cos(self.theta0));
        [st * libm::cos(self.phi0), -st * libm::sin(self.phi0), ct]
    }
}

/// The two initial states with closed-form solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialState {
    /// `|0...0>`, the coherent state at `(0, 0)`.
    Zero,
    /// `(x) |+>_y`, the coherent state at `(pi/2, -pi/2)` on the classical fixed point.
    PlusY,
}

impl SpecialState {
    pub fn point(self) -> CoherentPoint {
        match self {
            SpecialState::Zero => CoherentPoint::NORTH,
            SpecialState::PlusY => CoherentPoint::PLUS_Y,
        }
    }

    /// Recognizes the two special points (within `1e-12`).
    pub fn from_point(pt: CoherentPoint) -> Option<Self> {
        let close = |a: f64, b: f64| (a - b).abs() < 1e-12;
        if close(pt.theta0, 0.0) {
            Some(SpecialState::Zero)
        } else if close(pt.theta0, FRAC_PI_2) && close(pt.phi0, -FRAC_PI_2) {
            Some(SpecialState::PlusY)
        } else {
            None
        }
    }
}

/// `Jx`, `Jy`, `Jz` in the symmetric basis.
#[derive(Debug, Clone)]
pub struct SpinOperators {
    pub jx: CMatrix,
    pub jy: CMatrix,
    pub jz: CMatrix,
}

/// Angular momentum matrices for spin `j = two_j / 2`.
pub fn build_j_ops(two_j: u32) -> Result<SpinOperators> {
    if two_j == 0 {
        return Err(Error::InvalidParameter("two_j must be at least 1".into()));
    }
    let d = two_j as usize + 1;
    let j = f64::from(two_j) / 2.0;
    let mut jplus = CMatrix::zeros(d, d);
    for k in 1..d {
        // J+ |k> = sqrt(j(j+1) - m(m+1)) |k-1>, m = j - k
        let m = j - k as f64;
        jplus[(k - 1, k)] = C64::new(libm::sqrt(j * (j + 1.0) - m * (m + 1.0)), 0.0);
    }
    let jminus = jplus.adjoint();
    let jx = (&jplus + &jminus).scale(C64::new(0.5, 0.0));
    let jy = (&jplus - &jminus).scale(C64::new(0.0, -0.5));
    let jz = CMatrix::diag_real(&(0..d).map(|k| j - k as f64).collect::<Vec<_>>());
    Ok(SpinOperators { jx, jy, jz })
}

/// The rotation `exp(-i p Jy)`.
pub fn rotation(two_j: u32, p: f64) -> Result<CMatrix> {
    expm_hermitian(&build_j_ops(two_j)?.jy, p)
}

/// Diagonal phases `exp(-i kappa0 m^2 / 2j)` of the torsion factor.
pub fn torsion_phases(two_j: u32, kappa0: f64) -> Vec<C64> {
    let j = f64::from(two_j) / 2.0;
    (0..=two_j as usize)
        .map(|k| {
            let m = j - k as f64;
            C64::from_polar(1.0, -kappa0 * m * m / (2.0 * j))
        })
        .collect()
}

/// Floquet operator `exp(-i kappa0 Jz^2 / 2j) exp(-i p Jy)` in spin form.
pub fn floquet_unitary(params: &TopParams) -> Result<CMatrix> {
    params.validate()?;
    let rot = rotation(params.two_j, params.p)?;
    let phases = torsion_phases(params.two_j, params.kappa0);
    Ok(CMatrix::from_fn(rot.rows(), rot.cols(), |r, c| phases[r] * rot[(r, c)]))
}

/// Floquet operator in the qubit (Ising) form, which drops the constant part
/// `kappa0 / 4` of `kappa0 Jz^2 / 2j`. The closed-form block solutions are
/// written in this phase convention.
pub fn ising_floquet_unitary(params: &TopParams) -> Result<CMatrix> {
    Ok(floquet_unitary(params)?.scale(C64::from_polar(1.0, params.kappa0 / 4.0)))
}

/// The spin coherent state `(cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1>)^{(x) N}`.
pub fn coherent_state(two_j: u32, pt: CoherentPoint) -> Result<DickeState> {
    if two_j == 0 {
        return Err(Error::InvalidParameter("two_j must be at least 1".into()));
    }
    Ok(DickeState::from_raw(coherent_amps(two_j, pt.theta0, pt.phi0)))
}

fn coherent_amps(two_j: u32, theta: f64, phi: f64) -> Vec<C64> {
    let c = libm::cos(theta / 2.0);
    let s = C64::from_polar(libm::sin(theta / 2.0), -phi);
    (0..=two_j).map(|k| s.powu(k) * (libm::sqrt(binomial(two_j, k)) * powu(c, two_j - k))).collect()
}

fn powu(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * x)
}

fn check_dims(state: &DickeState, u: &CMatrix) -> Result<()> {
    if !u.is_square() || u.rows() != state.amps.len() {
        return Err(Error::DimensionMismatch { expected: state.amps.len(), found: u.rows() });
    }
    Ok(())
}

/// `u^n |state>` via one matrix power and a single application.
pub fn evolve(state: &DickeState, u: &CMatrix, n: u64) -> Result<DickeState> {
    check_dims(state, u)?;
    let un = unitary_power(u, n)?;
    Ok(DickeState::from_raw(un.apply(&state.amps)?))
}

/// Step-by-step evolution yielding `(n, u^n |state>)` for `n = 0, 1, 2, ...`.
#[derive(Debug, Clone)]
pub struct Evolution {
    u: CMatrix,
    current: Vec<C64>,
    n: u64,
}

impl Evolution {
    pub fn new(state: &DickeState, u: &CMatrix) -> Result<Self> {
        check_dims(state, u)?;
        Ok(Evolution { u: u.clone(), current: state.amps.clone(), n: 0 })
    }
}

impl Iterator for Evolution {
    type Item = (u64, DickeState);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.n, DickeState::from_raw(self.current.clone()));
        self.current = self.u.apply(&self.current).ok()?;
        self.n += 1;
        Some(out)
    }
}

/// One point of a Husimi distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HusimiSample {
    pub theta: f64,
    pub phi: f64,
    pub q: f64,
}

/// `Q(theta, phi) = |<theta, phi|state>|^2` on a uniform grid covering
/// `theta in [0, pi]` and `phi in [-pi, pi]`, both endpoints included.
/// Samples are ordered with `theta` outermost.
pub fn husimi_grid(state: &DickeState, n_theta: usize, n_phi: usize) -> Result<Vec<HusimiSample>> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::InvalidParameter("Husimi grid needs at least 2 points per axis".into()));
    }
    let two_j = state.two_j();
    let mut out = Vec::with_capacity(n_theta * n_phi);
    for a in 0..n_theta {
        let theta = PI * a as f64 / (n_theta - 1) as f64;
        for b in 0..n_phi {
            let phi = -PI + 2.0 * PI * b as f64 / (n_phi - 1) as f64;
            let q = husimi_at(state, two_j, theta, phi);
            out.push(HusimiSample { theta, phi, q });
        }
    }
    Ok(out)
}

/// `Q` at a single point.
pub fn husimi(state: &DickeState, pt: CoherentPoint) -> f64 {
    husimi_at(state, state.two_j(), pt.theta0, pt.phi0)
}

fn husimi_at(state: &DickeState, two_j: u32, theta: f64, phi: f64) -> f64 {
    inner(&coherent_amps(two_j, theta, phi), &state.amps).norm_sqr().min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn spin_half_operators() {
        let ops = build_j_ops(1).unwrap();
        assert!(ops.jz.approx_eq(&CMatrix::diag_real(&[0.5, -0.5]), 1e-15));
        let jy = CMatrix::from_rows([[c(0.0, 0.0), c(0.0, -0.5)], [c(0.0, 0.5), c(0.0, 0.0)]]);
        assert!(ops.jy.approx_eq(&jy, 1e-15));
    }

    #[test]
    fn su2_commutator() {
        for two_j in 1..=8 {
            let o = build_j_ops(two_j).unwrap();
            let comm = &(&o.jy * &o.jz) - &(&o.jz * &o.jy);
            assert!(comm.approx_eq(&o.jx.scale(c(0.0, 1.0)), 1e-12));
            // Casimir j(j+1)
            let j = f64::from(two_j) / 2.0;
            let cas = &(&(&o.jx * &o.jx) + &(&o.jy * &o.jy)) + &(&o.jz * &o.jz);
            assert!(cas.approx_eq(&CMatrix::identity(two_j as usize + 1).scale(c(j * (j + 1.0), 0.0)), 1e-12));
        }
    }

    #[test]
    fn rotation_matches_wigner_d() {
        for two_j in 1..=9 {
            for &beta in &[0.3, FRAC_PI_2, 2.1] {
                let r = rotation(two_j, beta).unwrap();
                assert!(r.approx_eq(&oracle::wigner_d(two_j, beta), 1e-11), "two_j={two_j} beta={beta}");
            }
        }
    }

    #[test]
    fn free_rotation_four_periods() {
        for two_j in 1..=6u32 {
            let u = floquet_unitary(&TopParams::new(two_j, 0.0).unwrap()).unwrap();
            let sign = if two_j % 2 == 0 { 1.0 } else { -1.0 };
            let u4 = unitary_power(&u, 4).unwrap();
            assert!(u4.approx_eq(&CMatrix::identity(two_j as usize + 1).scale(c(sign, 0.0)), 1e-12));
        }
    }

    #[test]
    fn three_qubit_period_twelve() {
        let params = TopParams::new(3, 1.5 * PI).unwrap();
        let u = ising_floquet_unitary(&params).unwrap();
        assert!(unitary_power(&u, 12).unwrap().approx_eq(&CMatrix::identity(4), 1e-10));
        let s = coherent_state(3, CoherentPoint::new(0.7, 0.2).unwrap()).unwrap();
        let s12 = evolve(&s, &floquet_unitary(&params).unwrap(), 12).unwrap();
        assert!((s.fidelity(&s12) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn spin_form_matches_qubit_operator() {
        for n in 1..=5u32 {
            for &k0 in &[0.0, 0.4, 2.5, 5.0] {
                let params = TopParams::new(n, k0).unwrap();
                let ising = ising_floquet_unitary(&params).unwrap();
                let full = oracle::qubit_floquet(n as usize, k0, FRAC_PI_2);
                for k in 0..=n as usize {
                    let col = full.apply(&oracle::expand(DickeState::basis(n, k).unwrap().amps())).unwrap();
                    let proj = oracle::project(&col, n as usize);
                    for r in 0..=n as usize {
                        assert!((proj[r] - ising[(r, k)]).norm() < 1e-10, "n={n} k0={k0}");
                    }
                }
            }
        }
    }

    #[test]
    fn parity_commutes() {
        for two_j in 1..=7 {
            let u = floquet_unitary(&TopParams::new(two_j, 1.9).unwrap()).unwrap();
            let par = rotation(two_j, PI).unwrap();
            assert!((&u * &par).approx_eq(&(&par * &u), 1e-10));
        }
    }

    #[test]
    fn torsion_at_full_period() {
        for two_j in 1..=6u32 {
            let j = f64::from(two_j) / 2.0;
            let phases = torsion_phases(two_j, 2.0 * PI * j);
            for (k, z) in phases.iter().enumerate() {
                let m = j - k as f64;
                assert!((z - C64::from_polar(1.0, -PI * m * m)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn coherent_state_poles_and_y_eigenstate() {
        let north = coherent_state(5, CoherentPoint::NORTH).unwrap();
        assert_eq!(north.amps()[0], c(1.0, 0.0));
        assert!(north.amps()[1..].iter().all(|z| z.norm() == 0.0));
        let south = coherent_state(5, CoherentPoint::new(PI, 0.3).unwrap()).unwrap();
        assert!((south.amps()[5].norm() - 1.0).abs() < 1e-15);
        assert!(south.amps()[..5].iter().all(|z| z.norm() < 1e-15));

        let plus = coherent_state(3, CoherentPoint::PLUS_Y).unwrap();
        let jy = build_j_ops(3).unwrap().jy;
        let v = jy.apply(plus.amps()).unwrap();
        for (a, b) in v.iter().zip(plus.amps()) {
            assert!((a - b * 1.5).norm() < 1e-12);
        }
    }

    #[test]
    fn coherent_state_matches_product_expansion() {
        let (th, ph) = (1.1, -2.3);
        let st = coherent_state(4, CoherentPoint::new(th, ph).unwrap()).unwrap();
        let one = [c(libm::cos(th / 2.0), 0.0), C64::from_polar(libm::sin(th / 2.0), -ph)];
        let full = oracle::expand(st.amps());
        for (idx, z) in full.iter().enumerate() {
            let expect: C64 = (0..4).map(|q| one[(idx >> (3 - q)) & 1]).product();
            assert!((z - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn bloch_vector_matches_expectations() {
        let pt = CoherentPoint::new(0.9, 2.2).unwrap();
        let st = coherent_state(4, pt).unwrap();
        let ops = build_j_ops(4).unwrap();
        let b = pt.bloch_vector();
        for (op, want) in [(&ops.jx, b[0]), (&ops.jy, b[1]), (&ops.jz, b[2])] {
            let e = inner(st.amps(), &op.apply(st.amps()).unwrap());
            assert!((e.re / 2.0 - want).abs() < 1e-12);
        }
    }

    #[test]
    fn streaming_and_jump_agree() {
        let params = TopParams::new(6, 2.7).unwrap();
        let u = floquet_unitary(&params).unwrap();
        let s = coherent_state(6, CoherentPoint::new(0.4, 1.0).unwrap()).unwrap();
        let (n, streamed) = Evolution::new(&s, &u).unwrap().nth(137).unwrap();
        assert_eq!(n, 137);
        let jumped = evolve(&s, &u, 137).unwrap();
        for (a, b) in streamed.amps().iter().zip(jumped.amps()) {
            assert!((a - b).norm() < 1e-9);
        }
        assert_eq!(evolve(&s, &u, 0).unwrap(), s);
        assert!(evolve(&s, &CMatrix::identity(3), 1).is_err());
    }

    #[test]
    fn husimi_self_overlap_and_antipode() {
        let pt = CoherentPoint::new(0.8, -1.2).unwrap();
        let st = coherent_state(5, pt).unwrap();
        assert!((husimi(&st, pt) - 1.0).abs() < 1e-12);
        let north = coherent_state(5, CoherentPoint::NORTH).unwrap();
        let grid = husimi_grid(&north, 5, 7).unwrap();
        assert_eq!(grid.len(), 35);
        for s in grid.iter().filter(|s| (s.theta - PI).abs() < 1e-12) {
            assert!(s.q < 1e-20);
        }
        assert!(grid.iter().all(|s| (0.0..=1.0).contains(&s.q)));
        assert!(husimi_grid(&north, 1, 4).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(TopParams::new(0, 1.0).is_err());
        assert!(TopParams::new(3, -0.1).is_err());
        assert!(TopParams::new(3, f64::NAN).is_err());
        assert!(!TopParams::new(2, 4.0).unwrap().in_recommended_range());
        assert!(CoherentPoint::new(3.5, 0.0).is_err());
        assert!(DickeState::new(alloc::vec![c(1.0, 0.0), c(1.0, 0.0)]).is_err());
    }

    proptest! {
        #[test]
        fn evolution_preserves_norm(two_j in 1u32..=12, k0 in 0.0f64..10.0, th in 0.0f64..PI, ph in -PI..PI, n in 0u64..5000) {
            let u = floquet_unitary(&TopParams { two_j, kappa0: k0, p: FRAC_PI_2 }).unwrap();
            let s = coherent_state(two_j, CoherentPoint::new(th, ph).unwrap()).unwrap();
            prop_assert!((evolve(&s, &u, n).unwrap().norm_sqr() - 1.0).abs() < 1e-8);
        }

        #[test]
        fn floquet_is_unitary(two_j in 1u32..=20, k0 in 0.0f64..20.0, p in -4.0f64..4.0) {
            let u = floquet_unitary(&TopParams { two_j, kappa0: k0, p }).unwrap();
            prop_assert!(u.unitarity_deviation() < 1e-12);
        }
    }
}

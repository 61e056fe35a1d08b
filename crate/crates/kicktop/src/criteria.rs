//! Analytic-versus-numeric acceptance checks, shared by `kicktop verify` and
//! the acceptance test target.
//!
//! Every closed form is compared against direct evolution with the Floquet
//! matrix built from spin operators, or against another independent route.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::{Duration, Instant};

use kicktop_core::classical::{
    classical_step, fixed_point_stability, lyapunov, orbit, stability_boundary, SpherePoint,
};
use kicktop_core::ensembles::{s_rmt, sample_random_symmetric};
use kicktop_core::entanglement::{concurrence_general, rdm2, single_qubit_entropy, RunningMean};
use kicktop_core::exact3::{avg_entropy3, local_equivalence_check, u3_block_pow_with, Parity, ParityBasis3};
use kicktop_core::exact4::{avg_entropy4, entropy4_plus, tunnel_overlaps, tunneling_peak, tunneling_time};
use kicktop_core::kicked_top::{
    coherent_state, floquet_unitary, ising_floquet_unitary, CoherentPoint, Evolution, SpecialState, TopParams,
};
use kicktop_core::numerics::{herm_eig, unitary_power, CMatrix};
use kicktop_core::tomography::{
    forward_simulate, invert_readout, reconstruct_density, uhlmann_fidelity, ReadoutFidelities,
};
use kicktop_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::commands::{numeric_average, rmt, surface, ClosedForm};
use crate::error::AppResult;

const THREE_HALVES_PI: f64 = 1.5 * PI;

/// Deliberate corruption of a closed form, to show the suite notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Flip the sign of beta in the three-qubit block powers.
    BetaSign,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub tolerance: String,
    pub observed: String,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub tolerance: String,
    pub observed: String,
    pub runtime: Duration,
}

pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    /// Wall-clock budget; exceeding it fails the check.
    pub budget: Option<Duration>,
    pub run: fn(&Options) -> AppResult<Outcome>,
}

impl Check {
    pub fn execute(&self, opts: &Options) -> CheckResult {
        let start = Instant::now();
        let result = (self.run)(opts);
        let runtime = start.elapsed();
        let (mut passed, tolerance, mut observed) = match result {
            Ok(o) => (o.passed, o.tolerance, o.observed),
            Err(e) => (false, String::new(), format!("error: {e}")),
        };
        if let Some(b) = self.budget {
            if runtime > b {
                passed = false;
                observed.push_str(&format!("; over time budget {:.1}s", b.as_secs_f64()));
            }
        }
        CheckResult { id: self.id, name: self.name, passed, tolerance, observed, runtime }
    }
}

pub fn checks() -> Vec<Check> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Check { id: "1", name: "closed forms match direct evolution", budget: secs(5), run: closed_forms_vs_evolution },
        Check { id: "2", name: "three-qubit long-time averages", budget: secs(10), run: three_qubit_averages },
        Check { id: "3", name: "average-entropy surface at 3pi/2", budget: secs(30), run: average_surface },
        Check { id: "4", name: "four-qubit long-time averages", budget: None, run: four_qubit_averages },
        Check { id: "5", name: "four-qubit tunneling", budget: secs(2), run: tunneling },
        Check { id: "6", name: "spectrum and periodicity at 3pi/2", budget: None, run: spectrum_and_period },
        Check { id: "7", name: "staircase and local equivalence", budget: None, run: staircase },
        Check { id: "8", name: "random-state baselines", budget: None, run: rmt_baselines },
        Check { id: "9", name: "classical limit", budget: None, run: classical_limit },
        Check { id: "10", name: "large-spin entanglement trend", budget: secs(60), run: large_spin_trend },
        Check { id: "11", name: "tomography round trip", budget: None, run: tomography_round_trip },
        Check { id: "block_power", name: "three-qubit block powers match U^n", budget: None, run: block_powers },
        Check { id: "mutation", name: "corrupted block power is detected", budget: None, run: mutation_detected },
    ]
}

pub fn run_all(opts: &Options) -> Vec<CheckResult> {
    checks().iter().map(|c| c.execute(opts)).collect()
}

fn outcome(passed: bool, tolerance: impl Into<String>, observed: impl Into<String>) -> AppResult<Outcome> {
    Ok(Outcome { passed, tolerance: tolerance.into(), observed: observed.into() })
}

fn special_points() -> [(SpecialState, CoherentPoint); 2] {
    [(SpecialState::Zero, CoherentPoint::NORTH), (SpecialState::PlusY, CoherentPoint::PLUS_Y)]
}

fn params(two_j: u32, kappa0: f64) -> AppResult<TopParams> {
    Ok(TopParams::new(two_j, kappa0)?)
}

/// Entropies `S(0..=horizon)` by direct evolution.
fn evolved_entropies(p: &TopParams, pt: CoherentPoint, horizon: usize) -> AppResult<Vec<f64>> {
    let u = floquet_unitary(p)?;
    let psi0 = coherent_state(p.two_j, pt)?;
    Ok(Evolution::new(&psi0, &u)?.take(horizon + 1).map(|(_, s)| single_qubit_entropy(&s)).collect())
}

fn closed_forms_vs_evolution(_: &Options) -> AppResult<Outcome> {
    let kappas = [0.1, 0.5, 1.0, 2.5, THREE_HALVES_PI];
    let mut cases = Vec::new();
    for two_j in [3, 4] {
        for k in kappas {
            for (_, pt) in special_points() {
                cases.push((two_j, k, pt));
            }
        }
    }
    let devs = cases
        .par_iter()
        .map(|&(two_j, k, pt)| -> AppResult<(f64, f64)> {
            let p = params(two_j, k)?;
            let exact = ClosedForm::new(&p, pt).expect("covered");
            let u = floquet_unitary(&p)?;
            let (mut ds, mut dc) = (0.0f64, 0.0f64);
            for (n, s) in Evolution::new(&coherent_state(two_j, pt)?, &u)?.take(1001) {
                ds = ds.max((single_qubit_entropy(&s) - exact.entropy(n)).abs());
                dc = dc.max((concurrence_general(&rdm2(&s)?)? - exact.concurrence(n)?).abs());
            }
            Ok((ds, dc))
        })
        .collect::<AppResult<Vec<_>>>()?;
    let ds = devs.iter().map(|d| d.0).fold(0.0, f64::max);
    let dc = devs.iter().map(|d| d.1).fold(0.0, f64::max);
    outcome(
        ds < 1e-9 && dc < 1e-9,
        "|dS| < 1e-9, |dC| < 1e-9 for n <= 1000",
        format!("max |dS| = {ds:.2e}, max |dC| = {dc:.2e} over {} runs", cases.len()),
    )
}

fn three_qubit_averages(_: &Options) -> AppResult<Outcome> {
    let kappas = [0.3, 0.7, 1.1, 1.6, 2.2, 2.6, 2.9, 3.7, 4.1, 4.6];
    let mut cases = Vec::new();
    for k in kappas {
        for sp in special_points() {
            cases.push((k, sp));
        }
    }
    let dev = cases
        .par_iter()
        .map(|&(k, (s, pt))| -> AppResult<f64> {
            let numeric = numeric_average(&params(3, k)?, pt, 100_000)?;
            Ok((numeric - avg_entropy3(s, k)?.value).abs())
        })
        .collect::<AppResult<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let mut exact_dev = 0.0f64;
    for (_, pt) in special_points() {
        exact_dev = exact_dev.max((numeric_average(&params(3, THREE_HALVES_PI)?, pt, 12)? - 1.0 / 3.0).abs());
    }
    outcome(
        dev < 2e-3 && exact_dev < 1e-12,
        "|avg - closed form| < 2e-3 (horizon 1e5); period-12 average = 1/3 within 1e-12",
        format!("max deviation {dev:.2e} over 10 kappa0 x 2 states; period-12 deviation {exact_dev:.1e}"),
    )
}

fn average_surface(_: &Options) -> AppResult<Outcome> {
    let p = params(3, THREE_HALVES_PI)?;
    let grid = surface::grid(&p, 181, 361, 12)?;
    let dev = grid.iter().map(|g| (g.avg_entropy - g.analytic.unwrap_or(f64::NAN)).abs()).fold(0.0, f64::max);
    let min = grid.iter().map(|g| g.avg_entropy).fold(f64::INFINITY, f64::min);
    let max = grid.iter().map(|g| g.avg_entropy).fold(f64::NEG_INFINITY, f64::max);
    let at = |t: f64, ph: f64| {
        grid.iter()
            .find(|g| (g.theta0 - t).abs() < 1e-12 && (g.phi0 - ph).abs() < 1e-12)
            .map(|g| g.avg_entropy)
            .unwrap_or(f64::NAN)
    };
    let minimum_at_quarter = [FRAC_PI_2, -FRAC_PI_2].iter().all(|&ph| (at(FRAC_PI_4, ph) - min).abs() < 1e-9);
    let (lo, hi) = (7.0 / 24.0, 1.0 / 3.0);
    let range_ok = (min - lo).abs() < 1e-9 && (max - hi).abs() < 1e-9;
    outcome(
        dev < 1e-9 && range_ok && minimum_at_quarter && !dev.is_nan(),
        "|numeric - closed form| < 1e-9; range [7/24, 1/3] within 1e-9; minimum at (pi/4, +-pi/2)",
        format!(
            "max deviation {dev:.2e}; range [{min:.12}, {max:.12}]; value at (pi/4, pi/2) {:.12}",
            at(FRAC_PI_4, FRAC_PI_2)
        ),
    )
}

fn four_qubit_averages(_: &Options) -> AppResult<Outcome> {
    let zero_pi = avg_entropy4(SpecialState::Zero, PI)?.value;
    let plus_pi = avg_entropy4(SpecialState::PlusY, PI)?.value;
    let plus_small = avg_entropy4(SpecialState::PlusY, 1e-9)?.value;
    let closed_ok =
        (zero_pi - 0.375).abs() < 1e-12 && (plus_pi - 0.375).abs() < 1e-12 && (plus_small - 0.25).abs() < 1e-12;
    let mut dev = 0.0f64;
    for (s, pt) in special_points() {
        let numeric = numeric_average(&params(4, PI)?, pt, 100_000)?;
        dev = dev.max((numeric - avg_entropy4(s, PI)?.value).abs());
    }
    outcome(
        closed_ok && dev < 2e-3,
        "closed forms 3/8 at pi and 1/4 as kappa0 -> 0+; numeric average at pi within 2e-3 (horizon 1e5)",
        format!("closed forms {zero_pi:.12}, {plus_pi:.12}, {plus_small:.12}; numeric deviation {dev:.2e}"),
    )
}

fn tunneling(_: &Options) -> AppResult<Outcome> {
    let est = tunneling_time(0.1)?;
    let approx_ok = (est.n_star_approx - 402124.0).abs() <= 1.0;
    let peak = tunneling_peak(0.1)?;
    let half = (est.n_star_exact / 2.0).round() as u64;
    let ghz = tunnel_overlaps(0.1, half).p_ghz;

    // running mean of the plus-state entropy at kappa0 = 0.4
    let k = 0.4;
    let n_star = tunneling_time(k)?.n_star_exact;
    let target = avg_entropy4(SpecialState::PlusY, k)?.value;
    let (early_end, late_end) = ((3.0 * n_star) as u64, (10.0 * n_star) as u64);
    let mut mean = RunningMean::default();
    let (mut early_dev, mut late_dev, mut settled) = (0.0f64, 0.0f64, 1u64);
    for n in 1..=late_end {
        let d = (mean.push(entropy4_plus(n, k)) - target).abs();
        if n <= early_end {
            early_dev = early_dev.max(d);
        } else {
            late_dev = late_dev.max(d);
        }
        if d >= 5e-3 {
            settled = n + 1;
        }
    }
    let windowed_ok = early_dev >= 5e-3 && late_dev < 5e-3;
    outcome(
        approx_ok && peak.value > 0.99 && ghz > 0.99 && windowed_ok,
        "n*_approx = 402124 +- 1; p_minus peak > 0.99; p_ghz(n*/2) > 0.99; \
         running mean at kappa0 = 0.4 within 5e-3 of the average for all horizons > 3 n* but not before",
        format!(
            "n*_approx = {:.2}; p_minus = {:.6} at n = {}; p_ghz = {ghz:.6} at n = {half}; \
             kappa0 = 0.4: max deviation {early_dev:.4} up to 3 n*, {late_dev:.4} on (3 n*, 10 n*], \
             within 5e-3 from n = {settled} ({:.2} n*)",
            est.n_star_approx,
            peak.value,
            peak.n,
            settled as f64 / n_star
        ),
    )
}

/// Eigenvalues of a unitary matrix, from the eigenvectors of a generic
/// Hermitian combination of it.
fn unitary_eigenvalues(u: &CMatrix) -> AppResult<Vec<C64>> {
    let w = C64::from_polar(1.0, 0.37);
    let h = (&u.scale(w) + &u.adjoint().scale(w.conj())).scale(C64::new(0.5, 0.0));
    let eig = herm_eig(&h)?;
    let n = u.rows();
    Ok((0..n)
        .map(|k| {
            let v = eig.vectors.column(k);
            let uv = u.apply(&v).expect("square");
            v.iter().zip(&uv).map(|(a, b)| a.conj() * b).sum()
        })
        .collect())
}

fn spectrum_and_period(_: &Options) -> AppResult<Outcome> {
    let p = params(3, THREE_HALVES_PI)?;
    let u = ising_floquet_unitary(&p)?;
    let allowed: Vec<C64> = [2.0 / 3.0, -2.0 / 3.0, 1.0 / 6.0, -1.0 / 6.0, 5.0 / 6.0, -5.0 / 6.0]
        .iter()
        .map(|&a| C64::from_polar(1.0, a * PI))
        .collect();
    let eigs = unitary_eigenvalues(&u)?;
    let spec_dev =
        eigs.iter().map(|z| allowed.iter().map(|a| (z - a).norm()).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max);
    let mut min_gap = f64::INFINITY;
    for i in 0..eigs.len() {
        for j in i + 1..eigs.len() {
            min_gap = min_gap.min((eigs[i] - eigs[j]).norm());
        }
    }
    let u12 = unitary_power(&u, 12)?;
    let phase = C64::from_polar(1.0, u12.trace().arg());
    let period_dev = (&u12 - &CMatrix::identity(4).scale(phase)).frobenius_norm();
    let mut ent_dev = 0.0f64;
    for pt in [CoherentPoint::NORTH, CoherentPoint::PLUS_Y, CoherentPoint::new(1.1, 0.4)?] {
        let s = evolved_entropies(&p, pt, 60)?;
        for n in 6..=60 {
            ent_dev = ent_dev.max((s[n] - s[n - 6]).abs());
        }
    }
    let eig_list: Vec<String> = eigs.iter().map(|z| format!("{:.4}pi", z.arg() / PI)).collect();
    outcome(
        spec_dev < 1e-10 && min_gap > 1e-6 && period_dev < 1e-9 && ent_dev < 1e-10,
        "eigenvalues in {e^(+-2pi i/3), +-e^(+-pi i/6)} within 1e-10; ||U^12 - e^(i phi) I|| < 1e-9; S(n+6) = S(n) over 60 steps",
        format!(
            "eigenphases [{}], set deviation {spec_dev:.1e}; U^12 deviation {period_dev:.1e}; period-6 deviation {ent_dev:.1e}",
            eig_list.join(", ")
        ),
    )
}

fn staircase(_: &Options) -> AppResult<Outcome> {
    let mut step_dev = 0.0f64;
    let mut all_equivalent = true;
    for k in [0.5, 2.5] {
        let s = evolved_entropies(&params(3, k)?, CoherentPoint::NORTH, 1000)?;
        for n in 1..=500 {
            step_dev = step_dev.max((s[2 * n] - s[2 * n - 1]).abs());
        }
        let eq =
            (1..=500u64).into_par_iter().map(|m| local_equivalence_check(2 * m, k)).collect::<Result<Vec<_>, _>>()?;
        all_equivalent &= eq.iter().all(|&b| b);
    }
    outcome(
        step_dev < 1e-10 && all_equivalent,
        "|S(2n) - S(2n-1)| < 1e-10 for n <= 500; odd steps locally equivalent to even ones",
        format!(
            "max step deviation {step_dev:.1e}; local equivalence {}",
            if all_equivalent { "holds" } else { "broken" }
        ),
    )
}

fn rmt_baselines(_: &Options) -> AppResult<Outcome> {
    let exact_ok = s_rmt(3)? == 1.0 / 3.0 && s_rmt(4)? == 3.0 / 8.0;
    let mut z = Vec::new();
    for n in [3, 4] {
        let b = rmt::baseline(n, 100_000, 2024)?;
        z.push((b.sample_mean - b.s_rmt).abs() / b.sample_sem);
    }
    let a = rmt::baseline(4, 20_000, 7)?;
    let b = rmt::baseline(4, 20_000, 7)?;
    let serial = sample_random_symmetric(4, 20_000, 7)?;
    let deterministic = a.sample_mean.to_bits() == b.sample_mean.to_bits()
        && a.sample_sem.to_bits() == b.sample_sem.to_bits()
        && a.sample_mean.to_bits() == serial.sample_mean.to_bits();
    outcome(
        exact_ok && z.iter().all(|&x| x < 3.0) && deterministic,
        "s_rmt(3) = 1/3, s_rmt(4) = 3/8 exactly; 1e5-sample means within 3 SEM; identical bits for a fixed seed",
        format!("deviations {:.2} SEM (N = 3), {:.2} SEM (N = 4); deterministic: {deterministic}", z[0], z[1]),
    )
}

fn classical_limit(_: &Options) -> AppResult<Outcome> {
    let mut fixed_dev = 0.0f64;
    for k in [0.0, 1.0, 2.0, 3.0, 7.0, 12.0] {
        for y in [1.0, -1.0] {
            let q = classical_step(SpherePoint::new(0.0, y, 0.0)?, k);
            fixed_dev = fixed_dev.max(q.x.abs()).max((q.y - y).abs()).max(q.z.abs());
        }
    }
    let pole = SpherePoint::new(0.0, 0.0, 1.0)?;
    let cycle = orbit(pole, 3.0, 4);
    let expected = [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
    let period_ok =
        cycle.iter().zip(expected).all(|(p, e)| p.as_array().iter().zip(e).all(|(a, b)| (a - b).abs() == 0.0));
    let (lo, hi) = stability_boundary(1.0, 3.0, 1e-6)?;
    let bracket_ok = hi - lo <= 1e-6 && lo <= 2.0 && 2.0 <= hi + 1e-12;
    let marginal = (fixed_point_stability(2.0).trace.abs() - 2.0).abs();
    let generic = SpherePoint::from_coherent(CoherentPoint::new(1.0, 0.7)?);
    let lyap = lyapunov(generic, 7.0, 10_000, 1_000)?;
    outcome(
        fixed_dev < 1e-14 && period_ok && bracket_ok && marginal < 1e-9 && lyap > 0.3,
        "fixed points invariant to 1e-14; exact period-4 orbit; boundary at kappa0 = 2 bracketed to 1e-6; Lyapunov at 7 > 0.3",
        format!(
            "fixed-point drift {fixed_dev:.1e}; period 4 exact: {period_ok}; bracket [{lo:.8}, {hi:.8}]; Lyapunov {lyap:.4}"
        ),
    )
}

fn large_spin_trend(_: &Options) -> AppResult<Outcome> {
    let spins = [6u32, 10, 14];
    let kappas = [1.0, 1.5, 2.5, 4.0];
    let mut cases = Vec::new();
    for &j in &spins {
        for &k in &kappas {
            cases.push((j, k));
        }
    }
    let vals = cases
        .par_iter()
        .map(|&(j, k)| -> AppResult<f64> {
            Ok(numeric_average(&params(j, k)?, CoherentPoint::PLUS_Y, 1000)? / s_rmt(j)?)
        })
        .collect::<AppResult<Vec<_>>>()?;
    let get = |si: usize, ki: usize| vals[si * kappas.len() + ki];
    let low_ok = (0..spins.len()).all(|s| get(s, 0) < 0.5);
    let high_ok = (0..spins.len()).all(|s| get(s, 3) > 0.9);
    let slopes: Vec<f64> = (0..spins.len()).map(|s| get(s, 2) - get(s, 1)).collect();
    let steepening = slopes.windows(2).all(|w| w[1] > w[0]);
    let row = |ki: usize| {
        spins.iter().enumerate().map(|(s, j)| format!("{j}: {:.3}", get(s, ki))).collect::<Vec<_>>().join(", ")
    };
    outcome(
        low_ok && high_ok && steepening,
        "normalized average (horizon 1000, plus-y state) < 0.5 at kappa0 = 1, > 0.9 at 4; rise over [1.5, 2.5] grows with two_j",
        format!(
            "kappa0 = 1 [{}]; kappa0 = 4 [{}]; rise over [1.5, 2.5] [{}]",
            row(0),
            row(3),
            slopes.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>().join(", ")
        ),
    )
}

fn random_density(rng: &mut ChaCha8Rng, rank: usize) -> CMatrix {
    let g = CMatrix::from_fn(8, rank, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let m = &g * &g.adjoint();
    let t = m.trace().re;
    m.scale(C64::new(1.0 / t, 0.0))
}

fn tomography_round_trip(_: &Options) -> AppResult<Outcome> {
    let f = ReadoutFidelities::CALIBRATED_EXAMPLE;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 1.0f64;
    for i in 0..20 {
        let rho = random_density(&mut rng, 1 + i % 8);
        let records = forward_simulate::<ChaCha8Rng>(&rho, &f, None)?;
        let rec = reconstruct_density(&records, &f)?;
        worst = worst.min(uhlmann_fidelity(&rho, &rec.rho)?);
    }
    let p = invert_readout(&[(0.98, 0.92)], &[0.98, 0.02])?;
    let example_dev = (p[0] - 1.0).abs().max(p[1].abs());
    outcome(
        worst > 0.999 && example_dev < 1e-12,
        "fidelity > 0.999 for 20 random states; F^-1 (0.98, 0.02) = (1, 0) within 1e-12",
        format!("worst fidelity {worst:.12}; worked example deviation {example_dev:.1e}"),
    )
}

/// Max deviation of the block-power reconstruction of `U^n` from repeated squaring.
fn block_power_deviation(beta_sign: f64) -> AppResult<f64> {
    let b = ParityBasis3::new().matrix();
    let mut worst = 0.0f64;
    for k in [0.5, 2.5, THREE_HALVES_PI] {
        let u = ising_floquet_unitary(&params(3, k)?)?;
        for n in [1u64, 2, 7, 100, 1001] {
            let plus = u3_block_pow_with(Parity::Plus, k, n, beta_sign).matrix();
            let minus = u3_block_pow_with(Parity::Minus, k, n, beta_sign).matrix();
            let mut blocks = CMatrix::zeros(4, 4);
            for i in 0..2 {
                for j in 0..2 {
                    blocks[(i, j)] = plus[(i, j)];
                    blocks[(i + 2, j + 2)] = minus[(i, j)];
                }
            }
            let full = &(&b * &blocks) * &b.adjoint();
            worst = worst.max(full.max_abs_diff(&unitary_power(&u, n)?));
        }
    }
    Ok(worst)
}

fn block_powers(opts: &Options) -> AppResult<Outcome> {
    let sign = if opts.fault == Some(Fault::BetaSign) { -1.0 } else { 1.0 };
    let dev = block_power_deviation(sign)?;
    let observed = if dev < 1e-9 {
        format!("max deviation {dev:.1e}")
    } else {
        format!("exact3 block-power mismatch: max deviation {dev:.3e}")
    };
    outcome(dev < 1e-9, "max |entry difference| < 1e-9", observed)
}

fn mutation_detected(_: &Options) -> AppResult<Outcome> {
    let dev = block_power_deviation(-1.0)?;
    outcome(dev > 1e-3, "flipped beta sign gives deviation > 1e-3", format!("deviation with flipped sign {dev:.3e}"))
}

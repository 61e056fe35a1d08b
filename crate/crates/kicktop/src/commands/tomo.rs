//! Tomography reconstruction from a populations file, and synthetic data generation.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use kicktop_core::numerics::{herm_eig, CMatrix};
use kicktop_core::tomography::{forward_simulate, reconstruct_density, uhlmann_fidelity, ReconstructedState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::ClosedForm;
use crate::config::RunConfig;
use crate::error::{AppError, AppResult};
use crate::output::num;
use crate::qubits::{expand_dicke, named_state, projector};
use crate::tomo_csv::{read_records, write_records};

/// Target density matrix: `zero`, `ghz`, `w`, or `kicked` (the closed-form
/// three-qubit state after `step` kicks from the configured coherent state).
pub fn target_density(cfg: &RunConfig, name: &str, step: Option<u64>) -> AppResult<CMatrix> {
    if name.eq_ignore_ascii_case("kicked") {
        let n = step.ok_or_else(|| AppError::Validation("target `kicked` needs --step".into()))?;
        let params = cfg.top_params(cfg.kappa_scalar()?)?;
        if params.two_j != 3 {
            return Err(AppError::Validation(format!("target `kicked` needs two_j = 3, got {}", params.two_j)));
        }
        let exact = ClosedForm::new(&params, cfg.point()?)
            .ok_or_else(|| AppError::Validation("target `kicked` needs p = pi/2".into()))?;
        return Ok(projector(&expand_dicke(&exact.state(n))));
    }
    named_state(name)
        .map(|v| projector(&v))
        .ok_or_else(|| AppError::Validation(format!("unknown target {name:?} (expected zero, ghz, w or kicked)")))
}

fn target_name(cfg: &RunConfig, flag: Option<&str>) -> Option<String> {
    flag.map(str::to_string).or_else(|| cfg.tomo.as_ref().and_then(|t| t.target.clone()))
}

pub fn reconstruct(cfg: &RunConfig, input: &Path, target: Option<&str>, step: Option<u64>) -> AppResult<Value> {
    let file = File::open(input).map_err(|e| AppError::io(input, e))?;
    let records =
        read_records(BufReader::new(file)).map_err(|e| AppError::Validation(format!("{}: {e}", input.display())))?;
    let f = cfg.fidelities()?;
    let mut state: ReconstructedState = reconstruct_density(&records, &f)?;
    let name = target_name(cfg, target);
    if let Some(n) = &name {
        let t = target_density(cfg, n, step)?;
        state.fidelity_vs_target = Some(uhlmann_fidelity(&t, &state.rho)?);
    }
    report(&state, name.as_deref())
}

fn report(state: &ReconstructedState, target: Option<&str>) -> AppResult<Value> {
    let rho = &state.rho;
    let part = |f: fn(kicktop_core::C64) -> f64| -> Vec<Vec<Value>> {
        (0..rho.rows()).map(|i| (0..rho.cols()).map(|j| num(f(rho[(i, j)]))).collect()).collect()
    };
    let min_eig = herm_eig(rho)?.values[0];
    Ok(json!({
        "rho_re": part(|z| z.re),
        "rho_im": part(|z| z.im),
        "trace": num(rho.trace().re),
        "min_eigenvalue": num(min_eig),
        "target": target,
        "fidelity_vs_target": state.fidelity_vs_target.map(num),
    }))
}

/// Forward-simulated populations file for a target state.
pub fn simulate(cfg: &RunConfig, target: Option<&str>, step: Option<u64>, dest: Option<&Path>) -> AppResult<()> {
    let name = target_name(cfg, target)
        .ok_or_else(|| AppError::Validation("--simulate needs a target (--target or tomo.target)".into()))?;
    let rho = target_density(cfg, &name, step)?;
    let f = cfg.fidelities()?;
    let noise = cfg.tomo_noise()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed());
    let records = forward_simulate(&rho, &f, (noise > 0.0).then_some((noise, &mut rng)))?;
    match dest {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| AppError::io(dir, e))?;
            }
            write_records(&records, File::create(path).map_err(|e| AppError::io(path, e))?)
        }
        None => write_records(&records, std::io::stdout().lock()),
    }
}

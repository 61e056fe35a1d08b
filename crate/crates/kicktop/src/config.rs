//! Run configuration: a TOML file whose keys can be overridden by flags.
//!
//! ```toml
//! two_j = 3
//! kappa0 = 1.5                                   # or { start = 0.1, stop = 4.7, step = 0.1 }
//! p = 1.5707963267948966
//! state = "zero"                                 # or theta0 / phi0
//! horizon = 1000
//! n_theta = 181
//! n_phi = 361
//! times = [0, 100, 200]
//! samples = 100000
//! seed = 1
//! format = "csv"                                 # or "json"
//! out = "results.csv"
//!
//! [tomo]
//! f0 = [0.98, 0.98, 0.96]
//! f1 = [0.92, 0.94, 0.87]
//! target = "ghz"
//! noise = 0.0
//! ```

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use kicktop_core::kicked_top::{CoherentPoint, TopParams};
use kicktop_core::tomography::ReadoutFidelities;
use serde::Deserialize;

use crate::error::{AppError, AppResult};

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum KappaGrid {
    Scalar(f64),
    Range { start: f64, stop: f64, step: f64 },
}

impl KappaGrid {
    /// Grid values, `stop` included when it lies on the grid.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            KappaGrid::Scalar(k) => vec![k],
            KappaGrid::Range { start, stop, step } => {
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                (0..count).map(|i| start + i as f64 * step).collect()
            }
        }
    }

    fn validate(&self) -> AppResult<()> {
        let bad = |msg: String| Err(AppError::Validation(format!("config key `kappa0`: {msg}")));
        match *self {
            KappaGrid::Scalar(k) if !(k >= 0.0 && k.is_finite()) => bad(format!("{k} must be finite and >= 0")),
            KappaGrid::Range { start, stop, step } => {
                if !(start >= 0.0 && start.is_finite() && stop.is_finite()) {
                    bad(format!("range {start}..{stop} must be finite and start at >= 0"))
                } else if !(step > 0.0) {
                    bad(format!("step {step} must be > 0"))
                } else if stop < start {
                    bad(format!("stop {stop} is below start {start}"))
                } else if (stop - start) / step > 1e6 {
                    bad("range has more than 10^6 points".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl FromStr for KappaGrid {
    type Err = String;

    /// `0.5` or `start:stop:step`.
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        match parts.as_slice() {
            [k] => Ok(KappaGrid::Scalar(num(k)?)),
            [a, b, c] => Ok(KappaGrid::Range { start: num(a)?, stop: num(b)?, step: num(c)? }),
            _ => Err(format!("expected a number or start:stop:step, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum StateName {
    /// All spins up, (theta0, phi0) = (0, 0).
    Zero,
    /// Fixed point (pi/2, -pi/2).
    PlusY,
    /// Fixed point (pi/2, pi/2).
    MinusY,
}

impl StateName {
    pub fn point(self) -> CoherentPoint {
        match self {
            StateName::Zero => CoherentPoint::NORTH,
            StateName::PlusY => CoherentPoint::PLUS_Y,
            StateName::MinusY => CoherentPoint::MINUS_Y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TomoConfig {
    pub f0: Option<[f64; 3]>,
    pub f1: Option<[f64; 3]>,
    pub target: Option<String>,
    pub noise: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub two_j: Option<u32>,
    pub kappa0: Option<KappaGrid>,
    pub p: Option<f64>,
    pub theta0: Option<f64>,
    pub phi0: Option<f64>,
    pub state: Option<StateName>,
    pub horizon: Option<u64>,
    pub n_theta: Option<usize>,
    pub n_phi: Option<usize>,
    pub times: Option<Vec<u64>>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub tomo: Option<TomoConfig>,
}

impl RunConfig {
    pub fn load(path: &Path) -> AppResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        Self::parse(&text).map_err(|e| AppError::Validation(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> AppResult<Self> {
        toml::from_str(text).map_err(|e| AppError::Validation(e.to_string().trim_end().to_string()))
    }

    /// Keys set in `other` replace those in `self`.
    pub fn merge(mut self, other: RunConfig) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(two_j, kappa0, p, theta0, phi0, state, horizon, n_theta, n_phi, times, samples, seed, out, format);
        if let Some(t) = other.tomo {
            let mine = self.tomo.get_or_insert_with(TomoConfig::default);
            if t.f0.is_some() {
                mine.f0 = t.f0;
            }
            if t.f1.is_some() {
                mine.f1 = t.f1;
            }
            if t.target.is_some() {
                mine.target = t.target;
            }
            if t.noise.is_some() {
                mine.noise = t.noise;
            }
        }
        self
    }

    pub fn two_j(&self) -> AppResult<u32> {
        let v = self.two_j.ok_or_else(|| missing("two_j"))?;
        if v == 0 || v > 400 {
            return Err(key_err("two_j", format!("{v} must be in 1..=400")));
        }
        Ok(v)
    }

    pub fn kappa_grid(&self) -> AppResult<KappaGrid> {
        let k = self.kappa0.ok_or_else(|| missing("kappa0"))?;
        k.validate()?;
        Ok(k)
    }

    pub fn kappa_values(&self) -> AppResult<Vec<f64>> {
        Ok(self.kappa_grid()?.values())
    }

    pub fn kappa_scalar(&self) -> AppResult<f64> {
        match self.kappa_grid()? {
            KappaGrid::Scalar(k) => Ok(k),
            KappaGrid::Range { .. } => Err(key_err("kappa0", "this command takes a single value, not a range".into())),
        }
    }

    pub fn p(&self) -> AppResult<f64> {
        let p = self.p.unwrap_or(FRAC_PI_2);
        if !p.is_finite() {
            return Err(key_err("p", format!("{p} is not finite")));
        }
        Ok(p)
    }

    /// Validated top parameters for a single torsion value.
    pub fn top_params(&self, kappa0: f64) -> AppResult<TopParams> {
        Ok(TopParams::with_rotation(self.two_j()?, kappa0, self.p()?)?)
    }

    /// Initial coherent state: `state` or `theta0`/`phi0` (default `(0, 0)`).
    pub fn point(&self) -> AppResult<CoherentPoint> {
        if let Some(s) = self.state {
            if self.theta0.is_some() || self.phi0.is_some() {
                return Err(AppError::Validation(
                    "config keys `state` and `theta0`/`phi0` are mutually exclusive".into(),
                ));
            }
            return Ok(s.point());
        }
        let (t, p) = (self.theta0.unwrap_or(0.0), self.phi0.unwrap_or(0.0));
        if !(0.0..=PI).contains(&t) {
            return Err(key_err("theta0", format!("{t} outside [0, pi]")));
        }
        if !(-PI..=PI).contains(&p) {
            return Err(key_err("phi0", format!("{p} outside [-pi, pi]")));
        }
        Ok(CoherentPoint::new(t, p)?)
    }

    pub fn horizon(&self, default: u64) -> AppResult<u64> {
        let h = self.horizon.unwrap_or(default);
        if h == 0 {
            return Err(key_err("horizon", "must be >= 1".into()));
        }
        Ok(h)
    }

    pub fn grid(&self, default: (usize, usize)) -> AppResult<(usize, usize)> {
        let (nt, np) = (self.n_theta.unwrap_or(default.0), self.n_phi.unwrap_or(default.1));
        if nt < 2 {
            return Err(key_err("n_theta", format!("{nt} must be >= 2")));
        }
        if np < 2 {
            return Err(key_err("n_phi", format!("{np} must be >= 2")));
        }
        Ok((nt, np))
    }

    pub fn times(&self) -> AppResult<Vec<u64>> {
        match &self.times {
            Some(t) if !t.is_empty() => Ok(t.clone()),
            _ => Err(missing("times")),
        }
    }

    pub fn samples(&self, default: u64) -> AppResult<u64> {
        let s = self.samples.unwrap_or(default);
        if s == 0 {
            return Err(key_err("samples", "must be >= 1".into()));
        }
        Ok(s)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn format(&self) -> OutputFormat {
        self.format.unwrap_or_default()
    }

    /// Readout fidelities from `[tomo]`; ideal readout when absent.
    pub fn fidelities(&self) -> AppResult<ReadoutFidelities> {
        let t = self.tomo.clone().unwrap_or_default();
        match (t.f0, t.f1) {
            (None, None) => Ok(ReadoutFidelities::IDEAL),
            (Some(f0), Some(f1)) => {
                ReadoutFidelities::new(f0, f1).map_err(|e| key_err("tomo.f0/tomo.f1", e.to_string()))
            }
            _ => Err(AppError::Validation("config keys `tomo.f0` and `tomo.f1` must be given together".into())),
        }
    }

    pub fn tomo_noise(&self) -> AppResult<f64> {
        let n = self.tomo.as_ref().and_then(|t| t.noise).unwrap_or(0.0);
        if !(0.0..0.5).contains(&n) {
            return Err(key_err("tomo.noise", format!("{n} outside [0, 0.5)")));
        }
        Ok(n)
    }
}

fn missing(key: &str) -> AppError {
    AppError::Validation(format!(
        "config key `{key}` is required (set it in the config file or with --{})",
        key.replace('_', "-")
    ))
}

fn key_err(key: &str, msg: String) -> AppError {
    AppError::Validation(format!("config key `{key}`: {msg}"))
}

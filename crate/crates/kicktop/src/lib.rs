//! Command-line workbench for `kicktop-core`: config files, CSV/JSON output,
//! tomography file ingestion and the verification suite.

pub mod cli;
pub mod commands;
pub mod config;
pub mod criteria;
pub mod error;
pub mod output;
pub mod qubits;
pub mod tomo_csv;

pub use error::{AppError, AppResult};

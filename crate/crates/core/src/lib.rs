//! Quantum kicked top restricted to the permutation-symmetric (Dicke) subspace.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure functions:
//!
//! - [`numerics`]: dense complex matrices, a Hermitian Jacobi eigensolver,
//!   PSD square roots, unitary powers and Chebyshev polynomials.
//! - [`kicked_top`]: spin operators, the Floquet map, spin coherent states,
//!   time evolution and Husimi distributions.
//! - [`entanglement`]: one- and two-qubit reduced density matrices of
//!   symmetric states, linear entropy, concurrence and time averages.
//! - [`exact3`] / [`exact4`]: closed-form solutions for three and four qubits,
//!   including the four-qubit tunneling analysis.
//! - [`classical`]: the classical map on the unit sphere.
//! - [`ensembles`]: random symmetric-state entanglement baselines.
//! - [`tomography`]: readout correction and linear-inversion reconstruction of
//!   three-qubit states.
//!
//! File formats, the CLI and parallel drivers live in the `kicktop` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classical;
pub mod ensembles;
pub mod entanglement;
mod error;
pub mod exact3;
pub mod exact4;
pub mod kicked_top;
pub mod numerics;
#[cfg(test)]
mod oracle;
pub mod tomography;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;

//! Small dense complex linear algebra and special functions.

mod chebyshev;
mod eigen;
mod matrix;

pub use chebyshev::{cheb_t, cheb_u, chebyshev_pair, ChebyshevPoint};
pub use eigen::{expm_hermitian, herm_eig, psd_sqrt, unitary_power, HermEig};
pub use matrix::CMatrix;

use crate::C64;

/// Squared norm of a state vector.
pub fn norm_sqr(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// `<a|b>`.
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Binomial coefficient as a float (exact for the sizes used here).
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc
}

//! Brute-force references in the full 2^N qubit space, used only by tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::numerics::{binomial, CMatrix};
use crate::C64;

/// Expands Dicke amplitudes into the 2^N computational basis.
/// Qubit 0 is the most significant bit; bit value 1 is an excitation.
pub fn expand(amps: &[C64]) -> Vec<C64> {
    let n = amps.len() - 1;
    (0..1usize << n)
        .map(|idx| {
            let k = idx.count_ones();
            amps[k as usize] / libm::sqrt(binomial(n as u32, k))
        })
        .collect()
}

/// Projects a 2^N vector onto the Dicke basis.
pub fn project(full: &[C64], n: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n + 1];
    for (idx, z) in full.iter().enumerate() {
        let k = idx.count_ones() as usize;
        out[k] += z / libm::sqrt(binomial(n as u32, k as u32));
    }
    out
}

/// The all-to-all Ising Floquet operator on N qubits:
/// `exp(-i kappa0/(2N) sum_{l<l'} Z_l Z_l') * prod_l exp(-i p/2 Y_l)`.
pub fn qubit_floquet(n: usize, kappa0: f64, p: f64) -> CMatrix {
    let (c, s) = (libm::cos(p / 2.0), libm::sin(p / 2.0));
    let single = CMatrix::from_rows([[C64::new(c, 0.0), C64::new(-s, 0.0)], [C64::new(s, 0.0), C64::new(c, 0.0)]]);
    let mut rot = single.clone();
    for _ in 1..n {
        rot = rot.kron(&single);
    }
    let dim = 1usize << n;
    let phases: Vec<C64> = (0..dim)
        .map(|idx| {
            let ones = idx.count_ones() as i64;
            let zeros = n as i64 - ones;
            // sum_{l<l'} z_l z_l' = ((sum z)^2 - N) / 2
            let m = zeros - ones;
            let pairs = ((m * m - n as i64) / 2) as f64;
            C64::from_polar(1.0, -kappa0 / (2.0 * n as f64) * pairs)
        })
        .collect();
    &CMatrix::diag(&phases) * &rot
}

/// Reduced density matrix of the qubits listed in `keep` (in that order).
pub fn partial_trace(full: &[C64], n: usize, keep: &[usize]) -> CMatrix {
    let dk = 1usize << keep.len();
    let mut rho = CMatrix::zeros(dk, dk);
    let rest: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    for env in 0..1usize << rest.len() {
        let compose = |sub: usize| {
            let mut idx = 0usize;
            for (pos, &q) in keep.iter().enumerate() {
                idx |= ((sub >> (keep.len() - 1 - pos)) & 1) << (n - 1 - q);
            }
            for (pos, &q) in rest.iter().enumerate() {
                idx |= ((env >> (rest.len() - 1 - pos)) & 1) << (n - 1 - q);
            }
            idx
        };
        let col: Vec<C64> = (0..dk).map(|sub| full[compose(sub)]).collect();
        for a in 0..dk {
            for b in 0..dk {
                rho[(a, b)] += col[a] * col[b].conj();
            }
        }
    }
    rho
}

fn factorial(n: i64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Wigner small-d matrix `<j m'| exp(-i beta Jy) |j m>`, rows and columns ordered m = j..-j.
pub fn wigner_d(two_j: u32, beta: f64) -> CMatrix {
    let d = two_j as usize + 1;
    let (c, s) = (libm::cos(beta / 2.0), libm::sin(beta / 2.0));
    let tj = two_j as i64;
    CMatrix::from_fn(d, d, |r, col| {
        let (jp_mp, jm_mp) = (tj - r as i64, r as i64); // j+m', j-m'
        let (jp_m, jm_m) = (tj - col as i64, col as i64); // j+m, j-m
        let mp_minus_m = col as i64 - r as i64; // m' - m
        let pref = libm::sqrt(factorial(jp_mp) * factorial(jm_mp) * factorial(jp_m) * factorial(jm_m));
        let mut sum = 0.0;
        for k in 0..=tj {
            let a = jp_m - k;
            let b = mp_minus_m + k;
            let e = jm_mp - k;
            if a < 0 || b < 0 || e < 0 {
                continue;
            }
            let sign = if (mp_minus_m + k) % 2 == 0 { 1.0 } else { -1.0 };
            let num = libm::pow(c, (tj - mp_minus_m - 2 * k) as f64) * libm::pow(s, (mp_minus_m + 2 * k) as f64);
            sum += sign * num / (factorial(a) * factorial(k) * factorial(b) * factorial(e));
        }
        C64::new(pref * sum, 0.0)
    })
}

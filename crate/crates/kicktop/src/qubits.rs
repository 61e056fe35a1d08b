//! Three-qubit state vectors for tomography targets.

use kicktop_core::kicked_top::DickeState;
use kicktop_core::numerics::{binomial, CMatrix};
use kicktop_core::C64;

/// Amplitudes over `2^N` computational states (qubit 0 most significant) of
/// a symmetric state; each Dicke amplitude is spread evenly over the
/// `C(N, k)` strings with `k` excitations.
pub fn expand_dicke(state: &DickeState) -> Vec<C64> {
    let n = state.two_j();
    (0..1usize << n)
        .map(|b| {
            let k = b.count_ones();
            state.amps()[k as usize] / binomial(n, k).sqrt()
        })
        .collect()
}

/// `|v><v|`.
pub fn projector(v: &[C64]) -> CMatrix {
    CMatrix::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
}

/// `|000>`, `(|000> + |111>)/sqrt2` or `(|001> + |010> + |100>)/sqrt3`.
pub fn named_state(name: &str) -> Option<Vec<C64>> {
    let mut v = vec![C64::new(0.0, 0.0); 8];
    match name.to_ascii_lowercase().as_str() {
        "000" | "zero" => v[0] = C64::new(1.0, 0.0),
        "ghz" => {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            v[0] = C64::new(h, 0.0);
            v[7] = C64::new(h, 0.0);
        }
        "w" => {
            let t = 1.0 / 3f64.sqrt();
            for i in [1, 2, 4] {
                v[i] = C64::new(t, 0.0);
            }
        }
        _ => return None,
    }
    Some(v)
}

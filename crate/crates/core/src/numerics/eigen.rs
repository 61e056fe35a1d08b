//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, plus
//! the spectral helpers built on it.

use alloc::vec::Vec;

use super::CMatrix;
use crate::{Error, Result, C64};

const HERMITIAN_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl HermEig {
    /// Rebuilds `V f(D) V^dagger`.
    pub fn map(&self, f: impl Fn(f64) -> C64) -> CMatrix {
        let n = self.values.len();
        let fv: Vec<C64> = self.values.iter().map(|&x| f(x)).collect();
        CMatrix::from_fn(n, n, |i, j| (0..n).map(|k| self.vectors[(i, k)] * fv[k] * self.vectors[(j, k)].conj()).sum())
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// The input must be square and Hermitian to within `1e-10` (scaled by its
/// largest entry when that exceeds one).
pub fn herm_eig(m: &CMatrix) -> Result<HermEig> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let dev = m.hermiticity_deviation();
    if !(dev <= HERMITIAN_TOL * m.max_abs().max(1.0)) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = m.rows();
    let half = C64::new(0.5, 0.0);
    let mut a = (m + &m.adjoint()).scale(half);
    let mut v = CMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        let scale = a.frobenius_norm();
        if off == 0.0 || libm::sqrt(off) <= f64::EPSILON * 1e-2 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermEig { values, vectors })
}

/// One two-sided rotation zeroing `a[p][q]`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let mag = b.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    if mag <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = C64::new(0.0, 0.0);
        a[(q, p)] = C64::new(0.0, 0.0);
        return;
    }
    // Phase e^{-i phi} turns the pair into a real symmetric 2x2 block.
    let ph = b.conj() / mag;
    let theta = 0.5 * libm::atan2(2.0 * mag, aqq - app);
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    // G = [[c, s], [-s ph, c ph]]
    let g_pp = C64::new(c, 0.0);
    let g_pq = C64::new(s, 0.0);
    let g_qp = -ph * s;
    let g_qq = ph * c;
    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Principal square root of a positive semidefinite matrix.
///
/// Eigenvalues down to `-1e-6 * trace` are treated as round-off and clamped
/// to zero; anything more negative is rejected.
pub fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    let eig = herm_eig(m)?;
    let trace: f64 = eig.values.iter().sum();
    let min = eig.values.first().copied().unwrap_or(0.0);
    if min < -1e-6 * trace.abs().max(f64::MIN_POSITIVE) {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(eig.map(|x| C64::new(libm::sqrt(x.max(0.0)), 0.0)))
}

/// `exp(-i t h)` for Hermitian `h`.
pub fn expm_hermitian(h: &CMatrix, t: f64) -> Result<CMatrix> {
    let eig = herm_eig(h)?;
    Ok(eig.map(|x| C64::from_polar(1.0, -t * x)))
}

/// `u^n` by repeated squaring; `u` must be unitary to within `1e-10`.
pub fn unitary_power(u: &CMatrix, n: u64) -> Result<CMatrix> {
    if !u.is_square() {
        return Err(Error::DimensionMismatch { expected: u.rows(), found: u.cols() });
    }
    let dev = u.unitarity_deviation();
    if !(dev <= 1e-10) {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let mut acc = CMatrix::identity(u.rows());
    let mut base = u.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn reconstruct(e: &HermEig) -> CMatrix {
        e.map(|x| c(x, 0.0))
    }

    #[test]
    fn pauli_x_spectrum() {
        let x = CMatrix::from_rows([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let e = herm_eig(&x).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_y_spectrum_and_vectors() {
        let y = CMatrix::from_rows([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]);
        let e = herm_eig(&y).unwrap();
        assert!(reconstruct(&e).approx_eq(&y, 1e-14));
        assert!(e.vectors.unitarity_deviation() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_rows([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(herm_eig(&m), Err(Error::NotHermitian { .. })));
        assert!(herm_eig(&CMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = psd_sqrt(&CMatrix::diag_real(&[4.0, 9.0])).unwrap();
        assert!(r.approx_eq(&CMatrix::diag_real(&[2.0, 3.0]), 1e-14));
    }

    #[test]
    fn sqrt_clamps_round_off_but_rejects_negative() {
        assert!(psd_sqrt(&CMatrix::diag_real(&[1.0, -1e-9])).is_ok());
        assert!(matches!(psd_sqrt(&CMatrix::diag_real(&[1.0, -0.1])), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn power_matches_sequential_product() {
        let h = CMatrix::from_rows([
            [c(0.3, 0.0), c(0.1, 0.2), c(0.0, -0.4)],
            [c(0.1, -0.2), c(-0.5, 0.0), c(0.7, 0.0)],
            [c(0.0, 0.4), c(0.7, 0.0), c(0.2, 0.0)],
        ]);
        let u = expm_hermitian(&h, 1.3).unwrap();
        let mut seq = CMatrix::identity(3);
        for _ in 0..13 {
            seq = &seq * &u;
        }
        assert!(unitary_power(&u, 13).unwrap().approx_eq(&seq, 1e-12));
        assert_eq!(unitary_power(&u, 0).unwrap(), CMatrix::identity(3));
        assert!(unitary_power(&CMatrix::diag_real(&[1.0, 2.0]), 2).is_err());
    }

    fn hermitian(n: usize, entries: &[f64]) -> CMatrix {
        let mut m = CMatrix::zeros(n, n);
        let mut it = entries.iter().copied();
        for i in 0..n {
            m[(i, i)] = c(it.next().unwrap(), 0.0);
            for j in i + 1..n {
                let z = c(it.next().unwrap(), it.next().unwrap());
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs(n in 1usize..=8, seed in proptest::collection::vec(-2.0f64..2.0, 64)) {
            let m = hermitian(n, &seed);
            let e = herm_eig(&m).unwrap();
            prop_assert!(reconstruct(&e).approx_eq(&m, 1e-12));
            prop_assert!(e.vectors.unitarity_deviation() < 1e-12);
            prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn sqrt_squares_back(n in 1usize..=6, seed in proptest::collection::vec(-1.0f64..1.0, 36)) {
            let b = hermitian(n, &seed);
            let m = &b * &b.adjoint();
            let r = psd_sqrt(&m).unwrap();
            prop_assert!((&r * &r).approx_eq(&m, 1e-9));
        }
    }
}

//! Classical limit of the kicked top: an area-preserving map of the unit sphere
//!
//! `X' = Z cos(k X) + Y sin(k X)`, `Y' = -Z sin(k X) + Y cos(k X)`, `Z' = -X`,
//!
//! with `(X, Y, Z) = J / j` and `k = kappa0`.

use alloc::vec::Vec;

use crate::kicked_top::CoherentPoint;
use crate::{Error, Result, C64};

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpherePoint {
    /// Accepts coordinates whose squared norm is within `1e-12` of one.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = SpherePoint { x, y, z };
        let n2 = p.norm_sqr();
        if !((n2 - 1.0).abs() <= 1e-12) {
            return Err(Error::NotNormalized { norm_sqr: n2 });
        }
        Ok(p)
    }

    /// Direction of a spin coherent state (see [`CoherentPoint::bloch_vector`]).
    pub fn from_coherent(pt: CoherentPoint) -> Self {
        let [x, y, z] = pt.bloch_vector();
        SpherePoint { x, y, z }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    fn normalized(self) -> Self {
        let s = 1.0 / libm::sqrt(self.norm_sqr());
        SpherePoint { x: self.x * s, y: self.y * s, z: self.z * s }
    }
}

/// One application of the map.
pub fn classical_step(pt: SpherePoint, kappa0: f64) -> SpherePoint {
    let (s, c) = (libm::sin(kappa0 * pt.x), libm::cos(kappa0 * pt.x));
    SpherePoint { x: pt.z * c + pt.y * s, y: -pt.z * s + pt.y * c, z: -pt.x }
}

/// `n` iterates after `pt` (not including it), renormalized every step.
pub fn orbit(pt: SpherePoint, kappa0: f64, n: usize) -> Vec<SpherePoint> {
    let mut out = Vec::with_capacity(n);
    let mut p = pt;
    for _ in 0..n {
        p = classical_step(p, kappa0).normalized();
        out.push(p);
    }
    out
}

pub type Mat3 = [[f64; 3]; 3];

/// Derivative of the map with respect to `(X, Y, Z)`.
pub fn jacobian(pt: SpherePoint, kappa0: f64) -> Mat3 {
    let (s, c) = (libm::sin(kappa0 * pt.x), libm::cos(kappa0 * pt.x));
    [[kappa0 * (-pt.z * s + pt.y * c), s, c], [kappa0 * (-pt.z * c - pt.y * s), c, -s], [-1.0, 0.0, 0.0]]
}

pub fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn mat_vec(m: &Mat3, v: [f64; 3]) -> [f64; 3] {
    core::array::from_fn(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Linear stability of the fixed point `(0, 1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stability {
    pub stable: bool,
    /// Eigenvalues of the tangent-plane map.
    pub multipliers: [C64; 2],
    /// Trace of the tangent-plane map (`kappa0` here); stable iff `|trace| <= 2`.
    pub trace: f64,
}

/// Stability of the fixed point `(0, 1, 0)`, read off the 2x2 tangent-plane
/// block in the `(X, Z)` directions. The radial direction is dropped.
pub fn fixed_point_stability(kappa0: f64) -> Stability {
    let j = jacobian(SpherePoint { x: 0.0, y: 1.0, z: 0.0 }, kappa0);
    let basis = [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
    let b: [[f64; 2]; 2] = core::array::from_fn(|a| core::array::from_fn(|c| dot(basis[a], mat_vec(&j, basis[c]))));
    let trace = b[0][0] + b[1][1];
    let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    let disc = C64::new(trace * trace - 4.0 * det, 0.0).sqrt();
    let multipliers = [(C64::new(trace, 0.0) + disc) / 2.0, (C64::new(trace, 0.0) - disc) / 2.0];
    Stability { stable: trace.abs() <= 2.0, multipliers, trace }
}

/// Bisects for the torsion at which the fixed point loses stability,
/// given `lo` stable and `hi` unstable. Returns the final bracket.
pub fn stability_boundary(mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)> {
    if !fixed_point_stability(lo).stable || fixed_point_stability(hi).stable {
        return Err(Error::InvalidParameter("bracket must start stable and end unstable".into()));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if fixed_point_stability(mid).stable {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Largest Lyapunov exponent by tangent-vector renormalization.
///
/// The tangent vector is kept in the sphere's tangent plane, `transient`
/// steps are discarded and the growth rate is averaged over `steps`.
pub fn lyapunov(pt: SpherePoint, kappa0: f64, steps: usize, transient: usize) -> Result<f64> {
    if steps == 0 {
        return Err(Error::InvalidParameter("Lyapunov estimate needs at least one step".into()));
    }
    let mut p = pt.normalized();
    // any vector not parallel to p, projected onto the tangent plane
    let seed = if p.x.abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let mut v = tangent_unit(p, seed);
    let mut sum = 0.0;
    for i in 0..transient + steps {
        let j = jacobian(p, kappa0);
        let w = mat_vec(&j, v);
        p = classical_step(p, kappa0).normalized();
        let w = project(p, w);
        let len = libm::sqrt(dot(w, w));
        if i >= transient {
            sum += libm::log(len);
        }
        v = [w[0] / len, w[1] / len, w[2] / len];
    }
    Ok(sum / steps as f64)
}

fn project(p: SpherePoint, w: [f64; 3]) -> [f64; 3] {
    let r = p.as_array();
    let d = dot(r, w);
    [w[0] - d * r[0], w[1] - d * r[1], w[2] - d * r[2]]
}

fn tangent_unit(p: SpherePoint, seed: [f64; 3]) -> [f64; 3] {
    let w = project(p, seed);
    let len = libm::sqrt(dot(w, w));
    [w[0] / len, w[1] / len, w[2] / len]
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    fn sp(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new(x, y, z).unwrap()
    }

    #[test]
    fn fixed_points() {
        for &k in &[0.0, 1.0, 3.0, 7.0] {
            for &y in &[1.0, -1.0] {
                let p = classical_step(sp(0.0, y, 0.0), k);
                assert!((p.x).abs() < 1e-14 && (p.y - y).abs() < 1e-14 && p.z.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn period_four_orbit_through_pole() {
        for &k in &[0.5, 3.0] {
            let o = orbit(sp(0.0, 0.0, 1.0), k, 4);
            let want = [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
            for (p, w) in o.iter().zip(want) {
                for (a, b) in p.as_array().iter().zip(w) {
                    assert!((a - b).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn free_map_is_quarter_turn() {
        let p = sp(0.6, 0.0, 0.8);
        let o = orbit(p, 0.0, 4);
        assert!((o[3].x - p.x).abs() < 1e-15 && (o[3].z - p.z).abs() < 1e-15);
        let j = jacobian(p, 0.0);
        assert_eq!(j, [[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]]);
    }

    #[test]
    fn stability_switch() {
        assert!(fixed_point_stability(1.0).stable);
        assert!(!fixed_point_stability(3.0).stable);
        assert!((fixed_point_stability(2.0).trace.abs() - 2.0).abs() < 1e-9);
        for m in fixed_point_stability(1.0).multipliers {
            assert!((m.norm() - 1.0).abs() < 1e-12);
        }
        let (lo, hi) = stability_boundary(1.0, 3.0, 1e-7).unwrap();
        assert!(hi - lo <= 1e-7 && (lo - 2.0).abs() < 1e-6);
    }

    #[test]
    fn chaotic_regime_has_positive_exponent() {
        let l = lyapunov(sp(0.3, 0.5, libm::sqrt(1.0 - 0.34)), 7.0, 10_000, 1_000).unwrap();
        assert!(l > 0.3, "{l}");
        // regular orbit near the stable fixed point
        let r = lyapunov(sp(0.05, libm::sqrt(1.0 - 0.005), 0.05), 1.0, 10_000, 1_000).unwrap();
        assert!(r < 0.05, "{r}");
    }

    proptest! {
        #[test]
        fn norm_and_area_preserved(t in 0.0..PI, ph in -PI..PI, k in 0.0f64..10.0) {
            let p = SpherePoint::from_coherent(CoherentPoint { theta0: t, phi0: ph });
            let q = classical_step(p, k);
            prop_assert!((libm::sqrt(q.norm_sqr()) - 1.0).abs() < 1e-14);
            prop_assert!((det3(&jacobian(p, k)) - 1.0).abs() < 1e-9);
        }

        #[test]
        fn jacobian_matches_finite_differences(t in 0.0..PI, ph in -PI..PI, k in 0.0f64..10.0) {
            let p = SpherePoint::from_coherent(CoherentPoint { theta0: t, phi0: ph });
            let j = jacobian(p, k);
            let h = 1e-6;
            for col in 0..3 {
                let mut a = p.as_array();
                let mut b = p.as_array();
                a[col] += h;
                b[col] -= h;
                let fa = classical_step(SpherePoint { x: a[0], y: a[1], z: a[2] }, k).as_array();
                let fb = classical_step(SpherePoint { x: b[0], y: b[1], z: b[2] }, k).as_array();
                for row in 0..3 {
                    prop_assert!(((fa[row] - fb[row]) / (2.0 * h) - j[row][col]).abs() < 1e-6);
                }
            }
        }
    }
}

//! Chebyshev polynomials of the first and second kind on [-1, 1].
//!
//! Both kinds obey `P_{k+1} = 2x P_k - P_{k-1}`. Short orders run the
//! recurrence directly; long orders raise the recurrence's companion matrix
//! `[[2x, -1], [1, 0]]` to the n-th power by squaring, whose entries are
//! `[[U_n, -U_{n-1}], [U_{n-1}, -U_{n-2}]]`.

use crate::{Error, Result};

const DOMAIN_SLACK: f64 = 1e-12;
const DIRECT_LIMIT: u64 = 64;

fn check_domain(x: f64) -> Result<()> {
    if !x.is_finite() || x.abs() > 1.0 + DOMAIN_SLACK {
        return Err(Error::Domain { what: "Chebyshev polynomial", value: x });
    }
    Ok(())
}

/// A Chebyshev argument `chi` together with a step count `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevPoint {
    pub chi: f64,
    pub n: u64,
}

impl ChebyshevPoint {
    pub fn new(chi: f64, n: u64) -> Result<Self> {
        check_domain(chi)?;
        Ok(ChebyshevPoint { chi, n })
    }

    /// `(T_n(chi), U_{n-1}(chi))`.
    pub fn pair(&self) -> (f64, f64) {
        pair_unchecked(self.chi, self.n)
    }
}

/// First column of `M^n`, i.e. `(U_n, U_{n-1})`.
fn companion_power(x: f64, mut n: u64) -> (f64, f64) {
    // 2x2 matrices stored as [a, b, c, d] = [[a, b], [c, d]].
    let mul = |p: [f64; 4], q: [f64; 4]| {
        [p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]]
    };
    let mut acc = [1.0, 0.0, 0.0, 1.0];
    let mut base = [2.0 * x, -1.0, 1.0, 0.0];
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        n >>= 1;
    }
    (acc[0], acc[2])
}

fn pair_unchecked(x: f64, n: u64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    if n <= DIRECT_LIMIT {
        // (T_{k-1}, T_k) and (U_{k-2}, U_{k-1}) advanced together.
        let (mut t_prev, mut t) = (1.0, x);
        let (mut u_prev, mut u) = (0.0, 1.0);
        for _ in 1..n {
            let t_next = 2.0 * x * t - t_prev;
            t_prev = t;
            t = t_next;
            let u_next = 2.0 * x * u - u_prev;
            u_prev = u;
            u = u_next;
        }
        return (t, u);
    }
    let (u_n, u_n1) = companion_power(x, n);
    // T_n = U_n - x U_{n-1}
    let (t, u) = (u_n - x * u_n1, u_n1);
    // Squaring lets T^2 + (1 - x^2) U^2 = 1 drift by ~n eps; project back
    // onto it away from the endpoints, where the identity is well conditioned.
    let w = 1.0 - x * x;
    if w > 1e-6 {
        let scale = 1.0 / libm::sqrt(t * t + w * u * u);
        (t * scale, u * scale)
    } else {
        (t, u)
    }
}

/// First-kind Chebyshev polynomial `T_n(x) = cos(n arccos x)`.
pub fn cheb_t(x: f64, n: u64) -> Result<f64> {
    check_domain(x)?;
    Ok(pair_unchecked(x, n).0)
}

/// Second-kind Chebyshev polynomial `U_{n-1}(x) = sin(n θ) / sin θ`, `x = cos θ`.
///
/// The index is `n - 1`, so `-1` is allowed and yields 0.
pub fn cheb_u(x: f64, n_minus_1: i64) -> Result<f64> {
    check_domain(x)?;
    if n_minus_1 < -1 {
        return Err(Error::Domain { what: "Chebyshev U index", value: n_minus_1 as f64 });
    }
    Ok(pair_unchecked(x, (n_minus_1 + 1) as u64).1)
}

/// `(T_n(x), U_{n-1}(x))` in one pass.
pub fn chebyshev_pair(x: f64, n: u64) -> Result<(f64, f64)> {
    check_domain(x)?;
    Ok(pair_unchecked(x, n))
}

//! Orthogonal polynomials and quadrature.
//!
//! Production evaluation of [`jacobi`] and [`laguerre`] uses the three-term
//! recurrences in the degree. The explicit finite sums [`jacobi_sum`] and
//! [`laguerre_sum`] are independent reference forms kept for cross-checks.

mod double_double;
mod quadrature;

use double_double::Dd;

pub use quadrature::{integrate, integrate_graded, Grading, QuadratureRule};

use crate::{Error, Result};

fn check_index(a: f64) -> Result<()> {
    if a.is_nan() || a <= -1.0 {
        Err(Error::InvalidIndex(a))
    } else {
        Ok(())
    }
}

/// Jacobi polynomial `P_n^(a,b)(x)` by upward recurrence in `n`.
pub fn jacobi(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    check_index(a)?;
    check_index(b)?;
    Ok(jacobi_unchecked(n, a, b, x))
}

pub(crate) fn jacobi_unchecked(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = a + b;
    let mut prev = 1.0;
    let mut curr = (a + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let lead = 2.0 * k * (k + ab) * (c - 2.0);
        let linear = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        let back = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = (linear * curr - back * prev) / lead;
        prev = curr;
        curr = next;
    }
    curr
}

/// Associated Laguerre polynomial `L_n^a(x)` by upward recurrence in `n`.
pub fn laguerre(n: usize, a: f64, x: f64) -> Result<f64> {
    check_index(a)?;
    if !(x >= 0.0) {
        return Err(Error::Domain {
            value: x,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    Ok(laguerre_unchecked(n, a, x))
}

pub(crate) fn laguerre_unchecked(n: usize, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + a - x;
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 + a - x) * curr - (k - 1.0 + a) * prev) / k;
        prev = curr;
        curr = next;
    }
    curr
}

/// Natural log of `|Γ(x)|`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// Generalized binomial coefficient `C(z, k) = Γ(z+1) / (Γ(k+1) Γ(z-k+1))`
/// for real arguments, computed from log-gamma differences.
///
/// None of `z+1`, `k+1`, `z-k+1` may be a non-positive integer.
pub fn binomial(z: f64, k: f64) -> f64 {
    let (lz, sz) = libm::lgamma_r(z + 1.0);
    let (lk, sk) = libm::lgamma_r(k + 1.0);
    let (lzk, szk) = libm::lgamma_r(z - k + 1.0);
    let sign = (sz * sk * szk) as f64;
    sign * libm::exp(lz - lk - lzk)
}

/// `C(z, j)` for integer `j` as a falling-factorial product.
fn binomial_dd(z: Dd, j: usize) -> Dd {
    (1..=j).fold(Dd::ONE, |acc, i| {
        acc * (z - Dd::from((j - i) as f64)) / Dd::from(i as f64)
    })
}

/// Explicit finite-sum form of the Jacobi polynomial,
///
/// `P_n^(a,b)(x) = Σ_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`.
///
/// Reference form. Near a root the terms cancel heavily, so the sum is
/// carried in double-double precision and rounded once at the end.
pub fn jacobi_sum(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    check_index(a)?;
    check_index(b)?;
    let nf = n as f64;
    let half = Dd::from(0.5);
    let lower = Dd::sum(x, -1.0) * half;
    let upper = Dd::sum(x, 1.0) * half;
    let (za, zb) = (Dd::sum(nf, a), Dd::sum(nf, b));
    let mut sum = Dd::from(0.0);
    for s in 0..=n {
        sum = sum + binomial_dd(za, n - s) * binomial_dd(zb, s) * lower.powi(s) * upper.powi(n - s);
    }
    Ok(sum.to_f64())
}

/// Explicit finite-sum form `L_n^a(x) = Σ_i (-1)^i C(n+a, n-i) x^i / i!`,
/// carried in double-double precision like [`jacobi_sum`].
pub fn laguerre_sum(n: usize, a: f64, x: f64) -> Result<f64> {
    check_index(a)?;
    let z = Dd::sum(n as f64, a);
    let mut sum = Dd::from(0.0);
    let mut power_over_fact = Dd::ONE;
    for i in 0..=n {
        if i > 0 {
            power_over_fact = power_over_fact * Dd::from(-x) / Dd::from(i as f64);
        }
        sum = sum + binomial_dd(z, n - i) * power_over_fact;
    }
    Ok(sum.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial_product(z: f64, j: usize) -> f64 {
        (1..=j).fold(1.0, |acc, i| acc * (z - j as f64 + i as f64) / i as f64)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn jacobi_low_degrees() {
        assert_eq!(jacobi(0, 2.3, -0.4, 0.7).unwrap(), 1.0);
        assert_eq!(jacobi(1, 0.0, 0.0, 0.5).unwrap(), 0.5);
        let (a, b, x) = (1.7, 0.2, -0.35);
        let p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        assert!((jacobi(1, a, b, x).unwrap() - p1).abs() < 1e-15);
        assert!((jacobi_sum(1, a, b, x).unwrap() - p1).abs() < 1e-15);
        assert_eq!(jacobi_sum(0, a, b, x).unwrap(), 1.0);
    }

    #[test]
    fn jacobi_matches_legendre() {
        // P_3(x) = (5x³ - 3x) / 2
        let x: f64 = 0.37;
        let p3 = 0.5 * (5.0 * x.powi(3) - 3.0 * x);
        assert!((jacobi(3, 0.0, 0.0, x).unwrap() - p3).abs() < 1e-15);
    }

    #[test]
    fn jacobi_pt_indices_against_sum() {
        let r = jacobi(5, 6.4743, 8.3483, 0.3).unwrap();
        let s = jacobi_sum(5, 6.4743, 8.3483, 0.3).unwrap();
        assert!(rel(r, s) < 1e-10, "{r} vs {s}");
        let r = jacobi(3, 0.5, 1.5, -0.2).unwrap();
        let s = jacobi_sum(3, 0.5, 1.5, -0.2).unwrap();
        assert!(rel(r, s) < 1e-13);
    }

    #[test]
    fn invalid_indices() {
        assert_eq!(jacobi(2, -1.0, 0.0, 0.1), Err(Error::InvalidIndex(-1.0)));
        assert_eq!(jacobi_sum(2, 0.0, -1.5, 0.1), Err(Error::InvalidIndex(-1.5)));
        assert_eq!(laguerre(2, -2.0, 0.1), Err(Error::InvalidIndex(-2.0)));
        assert!(matches!(laguerre(2, 0.0, -0.1), Err(Error::Domain { .. })));
    }

    #[test]
    fn laguerre_low_degrees_and_sum() {
        assert_eq!(laguerre(0, 2.5, 1.7).unwrap(), 1.0);
        assert!((laguerre(1, 2.5, 1.7).unwrap() - (1.0 + 2.5 - 1.7)).abs() < 1e-15);
        let r = laguerre(4, 2.5, 1.7).unwrap();
        let s = laguerre_sum(4, 2.5, 1.7).unwrap();
        assert!((r - s).abs() < 1e-12, "{r} vs {s}");
        // L_2^a(x) = x²/2 - (a+2)x + (a+2)(a+1)/2
        let (a, x) = (0.3, 2.2);
        let l2 = x * x / 2.0 - (a + 2.0) * x + (a + 2.0) * (a + 1.0) / 2.0;
        assert!((laguerre(2, a, x).unwrap() - l2).abs() < 1e-14);
    }

    #[test]
    fn binomial_real_arguments() {
        assert!((binomial(5.0, 2.0) - 10.0).abs() < 1e-12);
        assert!(rel(binomial(4.5, 3.0), binomial_product(4.5, 3)) < 1e-13);
        assert!(rel(binomial(0.5 + 8.0, 8.0), binomial_product(8.5, 8)) < 1e-12);
    }

    #[test]
    fn gamma_log() {
        assert!((ln_gamma(5.0) - libm::log(24.0)).abs() < 1e-14);
        assert!((ln_gamma(0.5) - 0.5 * libm::log(core::f64::consts::PI)).abs() < 1e-14);
    }
}

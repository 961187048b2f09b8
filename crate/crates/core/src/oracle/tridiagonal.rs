//! Symmetric tridiagonal eigenvalues by Sturm-count bisection and
//! eigenvectors by inverse iteration.

use alloc::vec;
use alloc::vec::Vec;

/// Number of eigenvalues strictly below `x` (negative pivots of the LDLᵀ
/// factorization of `T - x I`).
pub fn sturm_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { offdiag[i - 1] * offdiag[i - 1] };
        q = d - x - if i == 0 { 0.0 } else { coupling / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(diag: &[f64], offdiag: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { offdiag[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// The `index`-th smallest eigenvalue (0-based), bisected until the bracket
/// is below `rel_tol` relative width or no longer shrinks.
pub fn kth_eigenvalue(diag: &[f64], offdiag: &[f64], index: usize, rel_tol: f64) -> f64 {
    let (mut lo, mut hi) = gershgorin(diag, offdiag);
    let pad = f64::EPSILON * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE;
    lo -= pad;
    hi += pad;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= rel_tol * mid.abs().max(lo.abs()).max(hi.abs()) {
            return mid;
        }
        if sturm_count(diag, offdiag, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Solves `(T - shift I) x = rhs` by Gaussian elimination with partial
/// pivoting, overwriting `rhs`.
fn solve_shifted(diag: &[f64], offdiag: &[f64], shift: f64, rhs: &mut [f64]) {
    let n = diag.len();
    // Row i of U holds (u0, u1, u2) at columns (i, i+1, i+2).
    let mut u0 = vec![0.0; n];
    let mut u1 = vec![0.0; n];
    let mut u2 = vec![0.0; n];
    let tiny = f64::EPSILON * gershgorin(diag, offdiag).1.abs().max(1.0);
    // Working row: current candidate row i with entries at (i, i+1).
    let mut cur0 = diag[0] - shift;
    let mut cur1 = if n > 1 { offdiag[0] } else { 0.0 };
    let mut cur2 = 0.0;
    for i in 0..n {
        if i + 1 == n {
            u0[i] = if cur0.abs() < tiny { tiny } else { cur0 };
            u1[i] = 0.0;
            u2[i] = 0.0;
            break;
        }
        // Next row entries at columns (i, i+1, i+2).
        let next0 = offdiag[i];
        let next1 = diag[i + 1] - shift;
        let next2 = if i + 2 < n { offdiag[i + 1] } else { 0.0 };
        if next0.abs() > cur0.abs() {
            // swap rows i and i+1
            u0[i] = next0;
            u1[i] = next1;
            u2[i] = next2;
            rhs.swap(i, i + 1);
            let factor = cur0 / next0;
            rhs[i + 1] -= factor * rhs[i];
            cur0 = cur1 - factor * next1;
            cur1 = cur2 - factor * next2;
        } else {
            let pivot = if cur0.abs() < tiny { tiny } else { cur0 };
            u0[i] = pivot;
            u1[i] = cur1;
            u2[i] = cur2;
            let factor = next0 / pivot;
            rhs[i + 1] -= factor * rhs[i];
            cur0 = next1 - factor * cur1;
            cur1 = next2 - factor * cur2;
        }
        cur2 = 0.0;
    }
    for i in (0..n).rev() {
        let mut v = rhs[i];
        if i + 1 < n {
            v -= u1[i] * rhs[i + 1];
        }
        if i + 2 < n {
            v -= u2[i] * rhs[i + 2];
        }
        rhs[i] = v / u0[i];
    }
}

/// Unit eigenvector for an (accurate) eigenvalue, by inverse iteration.
pub fn eigenvector(diag: &[f64], offdiag: &[f64], eigenvalue: f64) -> Vec<f64> {
    let n = diag.len();
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * libm::sin(i as f64 + 1.0)).collect();
    for _ in 0..3 {
        solve_shifted(diag, offdiag, eigenvalue, &mut x);
        let norm = libm::sqrt(x.iter().map(|v| v * v).sum::<f64>());
        x.iter_mut().for_each(|v| *v /= norm);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn laplacian(n: usize) -> (Vec<f64>, Vec<f64>) {
        (vec![2.0; n], vec![-1.0; n - 1])
    }

    #[test]
    fn discrete_laplacian_spectrum() {
        let n = 50;
        let (d, e) = laplacian(n);
        for k in 0..n {
            // 2 - 2cos(jπ/(n+1)), j = k+1
            let exact = 2.0 - 2.0 * libm::cos((k + 1) as f64 * PI / (n + 1) as f64);
            let v = kth_eigenvalue(&d, &e, k, 1e-14);
            assert!((v - exact).abs() < 1e-12, "k={k}: {v} vs {exact}");
        }
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 4.0), n);
    }

    #[test]
    fn eigenvector_solves_system() {
        let n = 40;
        let d: Vec<f64> = (0..n).map(|i| 2.0 + 0.01 * (i * i) as f64).collect();
        let e = vec![-1.0; n - 1];
        for k in [0, 3, 17] {
            let lambda = kth_eigenvalue(&d, &e, k, 1e-15);
            let x = eigenvector(&d, &e, lambda);
            let mut worst = 0.0f64;
            for i in 0..n {
                let mut y = d[i] * x[i] - lambda * x[i];
                if i > 0 {
                    y += e[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += e[i] * x[i + 1];
                }
                worst = worst.max(y.abs());
            }
            assert!(worst < 1e-10, "k={k}: {worst}");
        }
    }

    #[test]
    fn single_element() {
        assert!((kth_eigenvalue(&[3.5], &[], 0, 1e-15) - 3.5).abs() < 1e-14);
        assert_eq!(sturm_count(&[3.5], &[], 4.0), 1);
    }
}

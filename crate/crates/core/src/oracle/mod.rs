//! Finite-difference oracle for the s-wave radial equation
//! `-R'' + (V1'/sin²(αr) + V2'/cos²(αr)) R = ε R` with `R = 0` at both walls.
//!
//! Nothing here uses the NU pipeline: the three-point Laplacian on a uniform
//! grid gives a symmetric tridiagonal matrix whose lowest eigenvalues are
//! found by Sturm-count bisection and improved by Richardson extrapolation.

mod tridiagonal;

pub use tridiagonal::{eigenvector as tridiagonal_eigenvector, gershgorin, kth_eigenvalue, sturm_count};

use alloc::vec::Vec;

use crate::trig_pt::PtPotential;
use crate::{Error, Result};

/// Smallest accepted interior grid.
pub const MIN_GRID_POINTS: usize = 100;
/// Relative bracket width at which eigenvalue bisection stops.
pub const EIGENVALUE_REL_TOL: f64 = 1e-13;

/// `-d²/dr² + V'(r)` on `n_points` interior nodes `r_i = i h` of `(0, L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialOperator {
    pub n_points: usize,
    pub h: f64,
    pub diag: Vec<f64>,
    pub offdiag: f64,
    pub domain: (f64, f64),
}

impl RadialOperator {
    /// Discretizes `-d²/dr² + v(r)` on `(0, length)` with Dirichlet ends.
    pub fn from_potential<V: Fn(f64) -> f64>(length: f64, n_points: usize, v: V) -> Result<Self> {
        if n_points < MIN_GRID_POINTS {
            return Err(Error::GridTooSmall(n_points));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "length",
                value: length,
            });
        }
        let h = length / (n_points + 1) as f64;
        let kinetic = 2.0 / (h * h);
        let mut diag = Vec::with_capacity(n_points);
        for i in 1..=n_points {
            let r = i as f64 * h;
            let d = kinetic + v(r);
            if !d.is_finite() {
                return Err(Error::NonFinite { at: r });
            }
            diag.push(d);
        }
        Ok(Self {
            n_points,
            h,
            diag,
            offdiag: -1.0 / (h * h),
            domain: (0.0, length),
        })
    }

    pub fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.n_points).map(move |i| i as f64 * self.h)
    }

    fn offdiag_vec(&self) -> Vec<f64> {
        alloc::vec![self.offdiag; self.n_points.saturating_sub(1)]
    }

    /// The `count` smallest eigenvalues in ascending order.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count == 0 || count > self.n_points {
            return Err(Error::InvalidParameter {
                name: "count",
                value: count as f64,
            });
        }
        let off = self.offdiag_vec();
        Ok((0..count)
            .map(|k| kth_eigenvalue(&self.diag, &off, k, EIGENVALUE_REL_TOL))
            .collect())
    }

    /// Unit-norm eigenvector of the `index`-th mode (0-based) on the grid.
    pub fn eigenvector(&self, index: usize) -> Result<Vec<f64>> {
        let value = *self.lowest_eigenvalues(index + 1)?.last().unwrap_or(&0.0);
        Ok(tridiagonal_eigenvector(&self.diag, &self.offdiag_vec(), value))
    }
}

/// `-d²/dr² + V1'/sin²(αr) + V2'/cos²(αr)` on the first well.
pub fn discretize(p: &PtPotential, n_points: usize) -> Result<RadialOperator> {
    let (v1p, v2p, alpha) = (p.v1_prime(), p.v2_prime(), p.alpha());
    RadialOperator::from_potential(p.well_width(), n_points, |r| {
        let (sin, cos) = libm::sincos(alpha * r);
        v1p / (sin * sin) + v2p / (cos * cos)
    })
}

/// `(2^order e_h2 - e_h) / (2^order - 1)`; for `order = 2` this is
/// `(4 e_h2 - e_h) / 3`.
pub fn richardson(e_h: f64, e_h2: f64, order: u32) -> f64 {
    let factor = libm::pow(2.0, order as f64);
    (factor * e_h2 - e_h) / (factor - 1.0)
}

/// Eigenvalue at grid steps `h` and `h/2`, its extrapolation and the
/// observed convergence order from a third grid at `h/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergedEigenvalue {
    pub eps_h: f64,
    pub eps_h2: f64,
    pub extrapolated: f64,
    pub order_estimate: f64,
}

/// Interior point count of the grid with half the step.
pub fn halved_grid(n_points: usize) -> usize {
    2 * n_points + 1
}

/// Lowest `count` eigenvalues of the well at `n_points`, `2 n_points + 1`
/// and `4 n_points + 3` interior points.
pub fn converged_eigenvalues(p: &PtPotential, n_points: usize, count: usize) -> Result<Vec<ConvergedEigenvalue>> {
    let grids = [n_points, halved_grid(n_points), halved_grid(halved_grid(n_points))];
    let mut levels: [Vec<f64>; 3] = Default::default();
    for (slot, &points) in levels.iter_mut().zip(&grids) {
        *slot = discretize(p, points)?.lowest_eigenvalues(count)?;
    }
    Ok((0..count)
        .map(|k| {
            let (e1, e2, e4) = (levels[0][k], levels[1][k], levels[2][k]);
            ConvergedEigenvalue {
                eps_h: e1,
                eps_h2: e2,
                extrapolated: richardson(e1, e2, 2),
                order_estimate: libm::log2((e1 - e2) / (e2 - e4)),
            }
        })
        .collect())
}

/// `max_i |R''(r_i) + (ε - V'(r_i)) R(r_i)| / max_i |R(r_i)|` with `R''` from
/// the five-point fourth-order stencil at step `1e-4 · π/2α`.
pub fn ode_residual<R: Fn(f64) -> f64>(radial: R, p: &PtPotential, energy: f64, samples: &[f64]) -> Result<f64> {
    let width = p.well_width();
    let margin = 1e-3 * width;
    let step = 1e-4 * width;
    let eps = 2.0 * p.m() * energy;
    let mut worst = 0.0f64;
    let mut peak = 0.0f64;
    for &r in samples {
        if !(r > margin && r < width - margin) {
            return Err(Error::Domain {
                value: r,
                lo: margin,
                hi: width - margin,
            });
        }
        let centre = radial(r);
        let second = (-radial(r + 2.0 * step) + 16.0 * radial(r + step) - 30.0 * centre + 16.0 * radial(r - step)
            - radial(r - 2.0 * step))
            / (12.0 * step * step);
        let potential = 2.0 * p.m() * p.potential_value(r)?;
        let residual = second + (eps - potential) * centre;
        if !residual.is_finite() {
            return Err(Error::NonFinite { at: r });
        }
        worst = worst.max(residual.abs());
        peak = peak.max(centre.abs());
    }
    let ratio = worst / peak;
    if !ratio.is_finite() {
        return Err(Error::NonFinite { at: peak });
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn table2() -> PtPotential {
        PtPotential::new(10.0, 5.0, 3.0, 1.2).unwrap()
    }

    #[test]
    fn grid_geometry() {
        let op = discretize(&table2(), 999).unwrap();
        assert_eq!(op.h, (PI / 2.4) / 1000.0);
        assert_eq!(op.diag.len(), 999);
        assert_eq!(op.offdiag, -1.0 / (op.h * op.h));
        // r_500 = π/(4α)
        let mid = op.diag[499];
        let expected = 2.0 / (op.h * op.h) + 2.0 * 100.0 + 2.0 * 60.0;
        assert!((mid - expected).abs() < 1e-9 * expected);
        assert!(matches!(discretize(&table2(), 99), Err(Error::GridTooSmall(99))));
    }

    #[test]
    fn richardson_examples() {
        assert_eq!(richardson(3.25, 3.25, 2), 3.25);
        let delta = 0.01;
        assert_eq!(richardson(4.0 + 4.0 * delta, 4.0 + delta, 2), 4.0);
    }

    #[test]
    fn particle_in_a_box() {
        let length = 2.0;
        let count = 5;
        let exact = |k: usize| ((k + 1) as f64 * PI / length).powi(2);
        let coarse = RadialOperator::from_potential(length, 400, |_| 0.0).unwrap();
        let fine = RadialOperator::from_potential(length, halved_grid(400), |_| 0.0).unwrap();
        let (ec, ef) = (coarse.lowest_eigenvalues(count).unwrap(), fine.lowest_eigenvalues(count).unwrap());
        for k in 0..count {
            let raw = (ef[k] - exact(k)).abs() / exact(k);
            let extrapolated = (richardson(ec[k], ef[k], 2) - exact(k)).abs() / exact(k);
            assert!(raw < 1e-4);
            assert!(extrapolated < 1e-6, "k={k}: {extrapolated}");
            assert!(extrapolated < raw / 10.0);
        }
        assert!(ec.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sturm_oscillation() {
        let op = discretize(&table2(), 500).unwrap();
        for k in 0..5 {
            let v = op.eigenvector(k).unwrap();
            assert_eq!(crate::trig_pt::count_sign_changes(v.iter().copied()), k);
        }
    }

    #[test]
    fn invalid_count() {
        let op = discretize(&table2(), 200).unwrap();
        assert!(op.lowest_eigenvalues(0).is_err());
        assert!(op.lowest_eigenvalues(201).is_err());
    }

    #[test]
    fn ode_residual_detects_wrong_energy() {
        let p = table2();
        let width = p.well_width();
        let samples: Vec<f64> = (1..=50).map(|i| width * (0.02 + 0.96 * i as f64 / 51.0)).collect();
        let w = p.radial_wavefunction(0).unwrap();
        let e = p.energy_closed_form(0);
        let good = ode_residual(|r| w.value_unchecked(r), &p, e, &samples).unwrap();
        assert!(good < 1e-6, "{good}");
        let bad = ode_residual(|r| w.value_unchecked(r), &p, e + 0.1, &samples).unwrap();
        assert!(bad >= 1e-2, "{bad}");
        assert!(matches!(ode_residual(|_| 0.0, &p, e, &samples), Err(Error::NonFinite { .. })));
        assert!(matches!(ode_residual(|r| r, &p, e, &[1e-5]), Err(Error::Domain { .. })));
    }
}

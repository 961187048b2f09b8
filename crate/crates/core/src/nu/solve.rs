use super::{derive_constants, residual_with_scale, Branch, SpectralFamily};
use crate::{Error, Result};

/// Residual tolerance, relative to the magnitude of the residual's terms.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    eps: f64,
    value: f64,
    scale: f64,
}

impl Sample {
    fn converged(&self, tol: f64) -> bool {
        self.value.abs() <= tol * self.scale.max(1.0)
    }
}

fn sample<F: Fn(f64) -> (f64, f64, f64)>(
    family: &SpectralFamily<F>,
    n: usize,
    branch: Branch,
    eps: f64,
) -> Result<Sample> {
    let d = derive_constants(&family.coefficients(eps)?, branch)?;
    let (value, scale) = residual_with_scale(&d, n);
    if !value.is_finite() {
        return Err(Error::NonFinite { at: eps });
    }
    Ok(Sample { eps, value, scale })
}

/// Finds `ε` in `bracket` where the quantization residual of level `n`
/// vanishes, to `|residual| <= tol · Σ|terms|`.
///
/// Three probes detect a residual that is affine in `ε`; that case is solved
/// by one interpolation. Otherwise a bracketing secant iteration runs with a
/// bisection step whenever the bracket fails to halve.
pub fn solve_energy<F: Fn(f64) -> (f64, f64, f64)>(
    family: &SpectralFamily<F>,
    n: usize,
    branch: Branch,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64> {
    solve_energy_with(
        family,
        n,
        branch,
        bracket,
        SolveOptions {
            tol,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_energy_with<F: Fn(f64) -> (f64, f64, f64)>(
    family: &SpectralFamily<F>,
    n: usize,
    branch: Branch,
    bracket: (f64, f64),
    options: SolveOptions,
) -> Result<f64> {
    let (lo, hi) = bracket;
    if !(options.tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: options.tol,
        });
    }
    if !(lo < hi) {
        return Err(Error::InvalidParameter {
            name: "bracket",
            value: hi - lo,
        });
    }
    let tol = options.tol;
    let mut a = sample(family, n, branch, lo)?;
    let mut b = sample(family, n, branch, hi)?;
    let mid = sample(family, n, branch, 0.5 * (lo + hi))?;

    for s in [a, b] {
        if s.value == 0.0 {
            return Ok(s.eps);
        }
    }

    let rounding = 64.0 * f64::EPSILON * (a.scale + b.scale + mid.scale);
    let affine = (mid.value - 0.5 * (a.value + b.value)).abs() <= rounding;
    if affine {
        if (b.value - a.value).abs() <= rounding {
            return Err(Error::NoSignChange { lo, hi });
        }
        let guess = a.eps - a.value * (b.eps - a.eps) / (b.value - a.value);
        if !(guess >= lo && guess <= hi) {
            return Err(Error::NoSignChange { lo, hi });
        }
        let s = sample(family, n, branch, guess)?;
        if s.converged(tol) {
            return Ok(s.eps);
        }
    }

    if a.value.signum() == b.value.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    let mut last_width = b.eps - a.eps;
    let mut use_bisection = false;
    for _ in 0..options.max_iterations {
        let width = b.eps - a.eps;
        let secant = a.eps - a.value * width / (b.value - a.value);
        let x = if use_bisection || !(secant > a.eps && secant < b.eps) {
            0.5 * (a.eps + b.eps)
        } else {
            secant
        };
        let s = sample(family, n, branch, x)?;
        if s.converged(tol) || s.value == 0.0 {
            return Ok(s.eps);
        }
        if s.value.signum() == a.value.signum() {
            a = s;
        } else {
            b = s;
        }
        let new_width = b.eps - a.eps;
        if new_width <= 4.0 * f64::EPSILON * a.eps.abs().max(b.eps.abs()) {
            let best = if a.value.abs() < b.value.abs() { a } else { b };
            return if best.converged(tol) {
                Ok(best.eps)
            } else {
                Err(Error::NonConvergence {
                    iterations: options.max_iterations,
                })
            };
        }
        use_bisection = new_width > 0.5 * last_width;
        last_width = new_width;
    }
    Err(Error::NonConvergence {
        iterations: options.max_iterations,
    })
}

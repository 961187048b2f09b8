//! Parametric Nikiforov-Uvarov method.
//!
//! Any second-order equation of the form
//!
//! ```text
//! ψ'' + (a1 - a2 s) / (s (1 - a3 s)) ψ' + (-x1 s² + x2 s - x3) / (s (1 - a3 s))² ψ = 0
//! ```
//!
//! is described by six numbers ([`NuCoefficients`]). The method reduces it to
//! a hypergeometric-type equation whose polynomial solutions exist only when a
//! quantization condition holds. Everything else is a fixed pipeline of
//! derived constants ([`NuDerived`]):
//!
//! ```text
//! a4 = (1 - a1)/2            a5 = (a2 - 2 a3)/2
//! a6 = a5² + x1              a7 = 2 a4 a5 - x2           a8 = a4² + x3
//! a9 = a3 a7 + a3² a8 + a6
//! a10 = a1 + 2 a4 + 2√a8     a11 = a2 - 2 a5 + 2(√a9 + a3 √a8)
//! a12 = a4 + √a8             a13 = a5 - (√a9 + a3 √a8)
//! ```
//!
//! The [`Branch::Secondary`] choice of `k` flips the sign of `√a8` in the last
//! four constants.

mod eigenfunction;
mod family;
mod solve;

pub use eigenfunction::{
    eigenfunction_factors, evaluate_eigenfunction, evaluate_eigenfunction_limit, EigenfunctionFactors,
};
pub use family::SpectralFamily;
pub use solve::{solve_energy, solve_energy_with, SolveOptions, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};

use crate::{Error, Result};

/// The six inputs of the parametric equation: `a1, a2, a3` fix
/// `τ̃(s) = a1 - a2 s` and `σ(s) = s(1 - a3 s)`; `x1, x2, x3` fix
/// `σ̃(s) = -x1 s² + x2 s - x3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl NuCoefficients {
    pub fn new(a1: f64, a2: f64, a3: f64, x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let c = Self { a1, a2, a3, x1, x2, x3 };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let named = [
            ("a1", self.a1),
            ("a2", self.a2),
            ("a3", self.a3),
            ("x1", self.x1),
            ("x2", self.x2),
            ("x3", self.x3),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        if self.a3 < 0.0 {
            return Err(Error::InvalidParameter {
                name: "a3",
                value: self.a3,
            });
        }
        Ok(())
    }

    fn base(&self) -> Base {
        let a4 = 0.5 * (1.0 - self.a1);
        let a5 = 0.5 * (self.a2 - 2.0 * self.a3);
        let a6 = a5 * a5 + self.x1;
        let a7 = 2.0 * a4 * a5 - self.x2;
        let a8 = a4 * a4 + self.x3;
        let a9 = self.a3 * a7 + self.a3 * self.a3 * a8 + a6;
        Base { a4, a5, a6, a7, a8, a9 }
    }
}

/// Constants `a4..a9`, shared by both branches.
#[derive(Debug, Clone, Copy)]
struct Base {
    a4: f64,
    a5: f64,
    a6: f64,
    a7: f64,
    a8: f64,
    a9: f64,
}

impl Base {
    fn roots(&self) -> Result<(f64, f64)> {
        if !(self.a8 >= 0.0 && self.a9 >= 0.0) {
            return Err(Error::NegativeDiscriminant {
                a8: self.a8,
                a9: self.a9,
            });
        }
        Ok((libm::sqrt(self.a8), libm::sqrt(self.a9)))
    }
}

/// Which root of the perfect-square condition on `k` is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Branch {
    /// `k = -(a7 + 2 a3 a8) - 2√(a8 a9)`.
    #[default]
    Principal,
    /// `k = -(a7 + 2 a3 a8) + 2√(a8 a9)`; uses the starred constants.
    Secondary,
}

impl Branch {
    /// Sign carried by `√a8` in `a10..a13` and by `√(a8 a9)` in `k`.
    fn sign(self) -> f64 {
        match self {
            Branch::Principal => 1.0,
            Branch::Secondary => -1.0,
        }
    }
}

/// Derived constants of the parametric pipeline for one branch. Under
/// [`Branch::Secondary`] the fields `a10..a13` hold the starred values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuDerived {
    pub coefficients: NuCoefficients,
    pub a4: f64,
    pub a5: f64,
    pub a6: f64,
    pub a7: f64,
    pub a8: f64,
    pub a9: f64,
    pub a10: f64,
    pub a11: f64,
    pub a12: f64,
    pub a13: f64,
    pub k: f64,
    pub branch: Branch,
}

impl NuDerived {
    /// `√a9 + a3√a8` (Principal) or `√a9 - a3√a8` (Secondary).
    fn slope(&self) -> f64 {
        libm::sqrt(self.a9) + self.branch.sign() * self.coefficients.a3 * libm::sqrt(self.a8)
    }

    /// Whether `τ'(s) < 0`, the condition for a physical solution.
    pub fn is_physical(&self) -> bool {
        tau_prime(self) < 0.0
    }
}

/// Runs the constant pipeline for `branch`.
pub fn derive_constants(c: &NuCoefficients, branch: Branch) -> Result<NuDerived> {
    c.validate()?;
    let base = c.base();
    let (r8, r9) = base.roots()?;
    let sign = branch.sign();
    let slope = r9 + sign * c.a3 * r8;
    Ok(NuDerived {
        coefficients: *c,
        a4: base.a4,
        a5: base.a5,
        a6: base.a6,
        a7: base.a7,
        a8: base.a8,
        a9: base.a9,
        a10: c.a1 + 2.0 * base.a4 + sign * 2.0 * r8,
        a11: c.a2 - 2.0 * base.a5 + 2.0 * slope,
        a12: base.a4 + sign * r8,
        a13: base.a5 - slope,
        k: -(base.a7 + 2.0 * c.a3 * base.a8) - sign * 2.0 * r8 * r9,
        branch,
    })
}

/// Both roots `k = -(a7 + 2 a3 a8) ± 2√(a8 a9)`, larger first.
pub fn k_values(c: &NuCoefficients) -> Result<(f64, f64)> {
    c.validate()?;
    let base = c.base();
    let product = base.a8 * base.a9;
    if !(product >= 0.0) {
        return Err(Error::NegativeDiscriminant {
            a8: base.a8,
            a9: base.a9,
        });
    }
    let centre = -(base.a7 + 2.0 * c.a3 * base.a8);
    let spread = 2.0 * libm::sqrt(product);
    Ok((centre + spread, centre - spread))
}

/// `τ'(s) = -2 a3 - 2(√a9 ± a3√a8)`. Negative values mark physical
/// solutions; a non-negative value is reported, not rejected.
pub fn tau_prime(d: &NuDerived) -> f64 {
    -2.0 * d.coefficients.a3 - 2.0 * d.slope()
}

/// The individual terms of the quantization condition.
fn residual_terms(d: &NuDerived, n: usize) -> [f64; 7] {
    let c = &d.coefficients;
    let nf = n as f64;
    let sign = d.branch.sign();
    [
        c.a2 * nf,
        -(2.0 * nf + 1.0) * d.a5,
        (2.0 * nf + 1.0) * d.slope(),
        nf * (nf - 1.0) * c.a3,
        d.a7,
        2.0 * c.a3 * d.a8,
        sign * 2.0 * libm::sqrt(d.a8 * d.a9),
    ]
}

/// Residual and the sum of absolute term magnitudes, the natural rounding
/// scale of the residual.
pub(crate) fn residual_with_scale(d: &NuDerived, n: usize) -> (f64, f64) {
    let terms = residual_terms(d, n);
    let value = terms.iter().sum();
    let scale = terms.iter().map(|t| t.abs()).sum();
    (value, scale)
}

/// Left-hand side of the quantization condition
///
/// ```text
/// n a2 - (2n+1) a5 + (2n+1)(√a9 ± a3√a8) + n(n-1) a3 + a7 + 2 a3 a8 ± 2√(a8 a9) = 0
/// ```
///
/// which is `λ_n - λ` for the selected branch.
pub fn quantization_residual(c: &NuCoefficients, n: usize, branch: Branch) -> Result<f64> {
    let d = derive_constants(c, branch)?;
    Ok(residual_with_scale(&d, n).0)
}

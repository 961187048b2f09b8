//! Parametric Nikiforov-Uvarov (NU) engine and its application to the
//! trigonometric Pöschl-Teller potential.
//!
//! The crate is `no_std` and needs only `alloc`. It is organised as:
//!
//! - [`nu`]: the generic parametric NU pipeline. Six input coefficients
//!   produce the derived constants, the quantization condition, an energy
//!   root-finder and the eigenfunction factors.
//! - [`special`]: Jacobi and associated Laguerre polynomials, log-gamma
//!   binomials and graded composite Gauss-Legendre quadrature.
//! - [`trig_pt`]: the trigonometric Pöschl-Teller potential
//!   `V(r) = V1/sin²(αr) + V2/cos²(αr)` mapped onto the NU template, closed-form
//!   s-wave energies and normalized radial wavefunctions.
//! - [`oracle`]: an independent finite-difference eigensolver for the s-wave
//!   radial equation used to certify the closed forms.
//!
//! All units are natural (ħ = c = 1): masses and energies in fm⁻¹, the
//! spectral parameter `ε = 2mE` in fm⁻².
#![no_std]
// `!(x > 0.0)` guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod nu;
pub mod oracle;
pub mod special;
pub mod trig_pt;

pub use error::{Error, Result};
pub use nu::{Branch, NuCoefficients, NuDerived, SpectralFamily};
pub use trig_pt::{BoundState, PtPotential, RadialWavefunction};

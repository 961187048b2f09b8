use super::NuCoefficients;
use crate::{Error, Result};

/// A one-parameter family of NU problems indexed by the spectral parameter
/// `ε`. `a1..a3` are fixed; `xi_map` produces `(x1, x2, x3)` for each `ε` in
/// the closed interval `domain`.
#[derive(Debug, Clone, Copy)]
pub struct SpectralFamily<F> {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    xi_map: F,
    domain: (f64, f64),
}

impl<F: Fn(f64) -> (f64, f64, f64)> SpectralFamily<F> {
    pub fn new(a1: f64, a2: f64, a3: f64, xi_map: F, domain: (f64, f64)) -> Self {
        Self {
            a1,
            a2,
            a3,
            xi_map,
            domain,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn xi(&self, eps: f64) -> Result<(f64, f64, f64)> {
        let (lo, hi) = self.domain;
        if !(eps >= lo && eps <= hi) {
            return Err(Error::Domain { value: eps, lo, hi });
        }
        Ok((self.xi_map)(eps))
    }

    pub fn coefficients(&self, eps: f64) -> Result<NuCoefficients> {
        let (x1, x2, x3) = self.xi(eps)?;
        NuCoefficients::new(self.a1, self.a2, self.a3, x1, x2, x3)
    }
}

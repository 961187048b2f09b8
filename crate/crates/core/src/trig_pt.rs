//! Trigonometric Pöschl-Teller potential `V(r) = V1/sin²(αr) + V2/cos²(αr)`
//! in the s-wave channel.
//!
//! With `ε = 2mE`, `V' = 2mV` and `s = sin²(αr)` the radial equation
//! `R'' + (ε - V1'/sin²(αr) - V2'/cos²(αr)) R = 0` takes the parametric NU
//! form with `a1 = 1/2`, `a2 = a3 = 1` and
//! `(x1, x2, x3) = (ε, ε + V1' - V2', V1') / 4α²`.
//!
//! All states live in the first well `0 < r < π/2α` and vanish at both
//! singular walls.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::nu::{
    derive_constants, eigenfunction_factors, quantization_residual, solve_energy, Branch, EigenfunctionFactors,
    NuDerived, SpectralFamily, DEFAULT_TOLERANCE,
};
use crate::special::{integrate_graded, Grading};
use crate::{Error, Result};

/// Physical parameters in natural units (fm⁻¹).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtPotential {
    m: f64,
    v1: f64,
    v2: f64,
    alpha: f64,
}

impl PtPotential {
    pub fn new(m: f64, v1: f64, v2: f64, alpha: f64) -> Result<Self> {
        for (name, value) in [("m", m), ("v1", v1), ("v2", v2), ("alpha", alpha)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        Ok(Self { m, v1, v2, alpha })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn v1(&self) -> f64 {
        self.v1
    }

    pub fn v2(&self) -> f64 {
        self.v2
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `V1' = 2 m V1`, fm⁻².
    pub fn v1_prime(&self) -> f64 {
        2.0 * self.m * self.v1
    }

    /// `V2' = 2 m V2`, fm⁻².
    pub fn v2_prime(&self) -> f64 {
        2.0 * self.m * self.v2
    }

    /// Width `π/2α` of the well, fm.
    pub fn well_width(&self) -> f64 {
        PI / (2.0 * self.alpha)
    }

    /// Minimum of `V` over the well, `V1 + V2 + 2√(V1 V2)`.
    pub fn well_floor(&self) -> f64 {
        alpha_zero_limit(self.v1, self.v2)
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        let hi = self.well_width();
        if !(r > 0.0 && r < hi) {
            return Err(Error::Domain { value: r, lo: 0.0, hi });
        }
        Ok(())
    }

    /// `V(r)` inside the well.
    pub fn potential_value(&self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        let (sin, cos) = libm::sincos(self.alpha * r);
        Ok(self.v1 / (sin * sin) + self.v2 / (cos * cos))
    }

    /// The NU family in `ε`, defined for every real `ε`.
    pub fn to_nu_family(&self) -> SpectralFamily<impl Fn(f64) -> (f64, f64, f64) + Copy> {
        let q = 4.0 * self.alpha * self.alpha;
        let (v1p, v2p) = (self.v1_prime(), self.v2_prime());
        SpectralFamily::new(
            0.5,
            1.0,
            1.0,
            move |eps| (eps / q, eps / q + v1p / q - v2p / q, v1p / q),
            (f64::NEG_INFINITY, f64::INFINITY),
        )
    }

    /// Derived NU constants at spectral parameter `eps`.
    pub fn nu_derived(&self, eps: f64) -> Result<NuDerived> {
        derive_constants(&self.to_nu_family().coefficients(eps)?, Branch::Principal)
    }

    /// Closed-form s-wave energy `E_{n,0}`, fm⁻¹:
    ///
    /// ```text
    /// E = (2α²/m)(n + 1/2)² + (α/2m)(2n+1)(√(α² + 8mV1) + √(α² + 8mV2))
    ///   + (1/4m)(√((α² + 8mV1)(α² + 8mV2)) + α²) + V1 + V2
    /// ```
    pub fn energy_closed_form(&self, n: usize) -> f64 {
        let (m, a) = (self.m, self.alpha);
        let a2 = a * a;
        let w1 = a2 + 8.0 * m * self.v1;
        let w2 = a2 + 8.0 * m * self.v2;
        let half = n as f64 + 0.5;
        2.0 * a2 / m * half * half
            + a / (2.0 * m) * (2.0 * n as f64 + 1.0) * (libm::sqrt(w1) + libm::sqrt(w2))
            + (libm::sqrt(w1 * w2) + a2) / (4.0 * m)
            + self.v1
            + self.v2
    }

    pub fn alpha_zero_limit(&self) -> f64 {
        self.well_floor()
    }

    /// Energy from a root of the quantization condition, fm⁻¹.
    pub fn energy_via_nu(&self, n: usize) -> Result<f64> {
        let family = self.to_nu_family();
        let lo = 2.0 * self.m * self.well_floor();
        let residual = |eps: f64| quantization_residual(&family.coefficients(eps)?, n, Branch::Principal);
        let mut width = lo.max(1.0);
        let mut hi = lo + width;
        let mut expansions = 0;
        while residual(hi)? > 0.0 {
            width *= 2.0;
            hi = lo + width;
            expansions += 1;
            if expansions > 64 {
                return Err(Error::NoSignChange { lo, hi });
            }
        }
        let eps = solve_energy(&family, n, Branch::Principal, (lo, hi), DEFAULT_TOLERANCE)?;
        Ok(eps / (2.0 * self.m))
    }

    /// Unnormalized radial function of level `n`, evaluated at the
    /// closed-form energy.
    pub fn radial_wavefunction(&self, n: usize) -> Result<RadialWavefunction> {
        let eps = 2.0 * self.m * self.energy_closed_form(n);
        let factors = eigenfunction_factors(&self.nu_derived(eps)?)?;
        Ok(RadialWavefunction::new(n, self.alpha, factors))
    }

    /// Bound state of level `n` with unit `∫ R² dr` over the well.
    pub fn normalize(&self, n: usize) -> Result<BoundState> {
        let energy = self.energy_closed_form(n);
        let mut wavefunction = self.radial_wavefunction(n)?;
        let spread = wavefunction.factors.s_power + wavefunction.factors.tail_power;
        let mut panels = 64usize.max(libm::ceil(8.0 * libm::sqrt(2.0 * spread)) as usize);
        let width = self.well_width();
        let norm_sq = loop {
            let (value, err) = integrate_graded(
                |r| {
                    let v = wavefunction.value_unchecked(r);
                    v * v
                },
                0.0,
                width,
                panels,
                Grading::Both,
            )?;
            if err <= 1e-12 * value || panels > 1 << 16 {
                break value;
            }
            panels *= 2;
        };
        if !(norm_sq > 0.0 && norm_sq.is_finite()) {
            return Err(Error::NonFinite { at: norm_sq });
        }
        let scale = 1.0 / libm::sqrt(norm_sq);
        wavefunction.scale = scale;
        Ok(BoundState {
            n,
            energy,
            eps: 2.0 * self.m * energy,
            ln_norm: libm::log(scale) - wavefunction.ln_peak,
            wavefunction,
        })
    }
}

/// `V1 + V2 + 2√(V1 V2)`, the common `α → 0` limit of every level.
pub fn alpha_zero_limit(v1: f64, v2: f64) -> f64 {
    v1 + v2 + 2.0 * libm::sqrt(v1 * v2)
}

/// A normalized s-wave bound state.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub n: usize,
    /// `E_{n,0}`, fm⁻¹.
    pub energy: f64,
    /// `ε = 2 m E`, fm⁻².
    pub eps: f64,
    /// `ln N_{n,0}`, where `N · (sin αr)^(2 a12) (cos αr)^(-2 a12 - 2 a13) P_n(cos 2αr)`
    /// has unit norm. Kept as a logarithm since `N` overflows for small `α`.
    pub ln_norm: f64,
    pub wavefunction: RadialWavefunction,
}

impl BoundState {
    pub fn norm(&self) -> f64 {
        libm::exp(self.ln_norm)
    }
}

/// `R(r) = scale · e^(-ln_peak) (sin αr)^(2 a12) (cos αr)^(2 tail) P_n^(ja,jb)(cos 2αr)`.
///
/// The envelope is evaluated in log space and shifted by its maximum so the
/// function stays representable when the exponents are in the thousands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWavefunction {
    pub n: usize,
    pub alpha: f64,
    pub factors: EigenfunctionFactors,
    ln_peak: f64,
    scale: f64,
}

impl RadialWavefunction {
    fn new(n: usize, alpha: f64, factors: EigenfunctionFactors) -> Self {
        let (p1, p2) = (factors.s_power, factors.tail_power);
        let ln_peak = if p1 > 0.0 && p2 > 0.0 {
            factors.ln_envelope(p1 / (factors.a3 * (p1 + p2)))
        } else {
            0.0
        };
        Self {
            n,
            alpha,
            factors,
            ln_peak,
            scale: 1.0,
        }
    }

    pub fn well_width(&self) -> f64 {
        PI / (2.0 * self.alpha)
    }

    /// Multiplies the amplitude by `k`.
    pub fn scaled(mut self, k: f64) -> Self {
        self.scale *= k;
        self
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `R(r)` on the open well.
    pub fn value(&self, r: f64) -> Result<f64> {
        let hi = self.well_width();
        if !(r > 0.0 && r < hi) {
            return Err(Error::Domain { value: r, lo: 0.0, hi });
        }
        Ok(self.value_unchecked(r))
    }

    /// `R(r)`, with the boundary value 0 at and beyond the walls.
    pub fn value_unchecked(&self, r: f64) -> f64 {
        if !(r > 0.0 && r < self.well_width()) {
            return 0.0;
        }
        let sin = libm::sin(self.alpha * r);
        let s = sin * sin;
        if !(s > 0.0 && s < 1.0) {
            return 0.0;
        }
        let envelope = libm::exp(self.factors.ln_envelope(s) - self.ln_peak);
        let x = libm::cos(2.0 * self.alpha * r);
        let poly = crate::special::jacobi_unchecked(self.n, self.factors.jacobi_a, self.factors.jacobi_b, x);
        self.scale * envelope * poly
    }

    /// The A24 product itself, without the peak shift or scale. Underflows
    /// to zero for large exponents.
    pub fn raw_value(&self, r: f64) -> Result<f64> {
        Ok(self.value(r)? / self.scale * libm::exp(self.ln_peak))
    }

    /// Sign changes of `R` over `samples` equally spaced interior points.
    pub fn node_count(&self, samples: usize) -> usize {
        let width = self.well_width();
        let values = (1..=samples).map(|i| self.value_unchecked(width * i as f64 / (samples + 1) as f64));
        count_sign_changes(values)
    }
}

/// Sign changes in a sequence, skipping exact zeros.
pub fn count_sign_changes<I: IntoIterator<Item = f64>>(values: I) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for v in values {
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}

/// Closed-form energies for a list of range parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub alphas: Vec<f64>,
    /// `rows[n][j]` is `E_{n,0}` at `alphas[j]`.
    pub rows: Vec<Vec<f64>>,
}

pub fn spectrum_table(m: f64, v1: f64, v2: f64, alphas: &[f64], n_max: usize) -> Result<SpectrumTable> {
    if alphas.is_empty() {
        return Err(Error::InvalidParameter {
            name: "alphas",
            value: 0.0,
        });
    }
    let potentials = alphas
        .iter()
        .map(|&a| PtPotential::new(m, v1, v2, a))
        .collect::<Result<Vec<_>>>()?;
    let rows = (0..=n_max)
        .map(|n| potentials.iter().map(|p| p.energy_closed_form(n)).collect())
        .collect();
    Ok(SpectrumTable {
        alphas: alphas.to_vec(),
        rows,
    })
}

use super::NuDerived;
use crate::special::{jacobi, laguerre};
use crate::{Error, Result};

/// `ψ(s) = s^s_power (1 - a3 s)^tail_power P_n^(jacobi_a, jacobi_b)(1 - 2 a3 s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenfunctionFactors {
    pub s_power: f64,
    pub tail_power: f64,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
    pub a3: f64,
}

impl EigenfunctionFactors {
    /// Natural log of the power-law envelope `s^p1 (1 - a3 s)^p2`.
    pub fn ln_envelope(&self, s: f64) -> f64 {
        self.s_power * libm::log(s) + self.tail_power * libm::log1p(-self.a3 * s)
    }

    pub fn polynomial(&self, n: usize, s: f64) -> Result<f64> {
        jacobi(n, self.jacobi_a, self.jacobi_b, 1.0 - 2.0 * self.a3 * s)
    }

    fn check_domain(&self, s: f64) -> Result<()> {
        let hi = 1.0 / self.a3;
        if !(s > 0.0 && s < hi) {
            return Err(Error::Domain { value: s, lo: 0.0, hi });
        }
        Ok(())
    }
}

/// Power-law exponents and Jacobi indices of the eigenfunction. The weight
/// `ρ = s^(a10-1) (1 - a3 s)^(a11/a3 - a10 - 1)` fixes the Jacobi indices and
/// `φ = s^a12 (1 - a3 s)^(-a12 - a13/a3)` the envelope.
pub fn eigenfunction_factors(d: &NuDerived) -> Result<EigenfunctionFactors> {
    let a3 = d.coefficients.a3;
    if a3 == 0.0 {
        return Err(Error::ZeroA3);
    }
    Ok(EigenfunctionFactors {
        s_power: d.a12,
        tail_power: -d.a12 - d.a13 / a3,
        jacobi_a: d.a10 - 1.0,
        jacobi_b: d.a11 / a3 - d.a10 - 1.0,
        a3,
    })
}

/// Unnormalized `ψ(s)` on `0 < s < 1/a3`.
pub fn evaluate_eigenfunction(d: &NuDerived, n: usize, s: f64) -> Result<f64> {
    let f = eigenfunction_factors(d)?;
    f.check_domain(s)?;
    let envelope = libm::pow(s, f.s_power) * libm::pow(1.0 - f.a3 * s, f.tail_power);
    Ok(envelope * f.polynomial(n, s)?)
}

/// The `a3 = 0` form `ψ(s) = s^a12 e^(a13 s) L_n^(a10-1)(a11 s)`.
pub fn evaluate_eigenfunction_limit(d: &NuDerived, n: usize, s: f64) -> Result<f64> {
    let a3 = d.coefficients.a3;
    if a3 != 0.0 {
        return Err(Error::NonzeroA3(a3));
    }
    if !(s > 0.0) {
        return Err(Error::Domain {
            value: s,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let envelope = libm::pow(s, d.a12) * libm::exp(d.a13 * s);
    Ok(envelope * laguerre(n, d.a10 - 1.0, d.a11 * s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nu::{derive_constants, Branch, NuCoefficients};
    use crate::special::laguerre_sum;
    use proptest::prelude::*;

    fn pt_derived(m: f64, v1: f64, v2: f64, alpha: f64, eps: f64) -> NuDerived {
        let q = 4.0 * alpha * alpha;
        let (v1p, v2p) = (2.0 * m * v1, 2.0 * m * v2);
        let c = NuCoefficients::new(0.5, 1.0, 1.0, eps / q, (eps + v1p - v2p) / q, v1p / q).unwrap();
        derive_constants(&c, Branch::Principal).unwrap()
    }

    #[test]
    fn pt_factors() {
        let d = pt_derived(10.0, 5.0, 3.0, 1.2, 360.5);
        let f = eigenfunction_factors(&d).unwrap();
        // s-side index carries V1' = 100, (1-s)-side carries V2' = 60
        assert!((f.jacobi_a - (0.25f64 + 100.0 / 1.44).sqrt()).abs() < 1e-12);
        assert!((f.jacobi_b - (0.25f64 + 60.0 / 1.44).sqrt()).abs() < 1e-12);
        assert!((f.jacobi_a - 8.3483).abs() < 1e-4);
        assert!((f.jacobi_b - 6.4743).abs() < 1e-4);
        let a12 = 0.25 * (1.0 + (1.0f64 + 4.0 * 100.0 / 1.44).sqrt());
        assert!((f.s_power - a12).abs() < 1e-12);
        assert!((2.0 * f.s_power - 8.8483).abs() < 1e-4);
        let tail = 0.25 * (1.0 + (1.0f64 + 4.0 * 60.0 / 1.44).sqrt());
        assert!((f.tail_power - tail).abs() < 1e-12);
    }

    #[test]
    fn zero_s_power() {
        // a4 = 0, x3 = 0 ⇒ a8 = 0 and a12 = 0
        let c = NuCoefficients::new(1.0, 1.0, 1.0, 0.5, 0.2, 0.0).unwrap();
        let d = derive_constants(&c, Branch::Principal).unwrap();
        assert_eq!(eigenfunction_factors(&d).unwrap().s_power, 0.0);
    }

    #[test]
    fn degree_one_value() {
        let d = pt_derived(10.0, 5.0, 3.0, 1.2, 457.41);
        let f = eigenfunction_factors(&d).unwrap();
        let s: f64 = 0.5;
        let p1_at_zero = (f.jacobi_a - f.jacobi_b) / 2.0;
        let expected = s.powf(f.s_power) * (1.0 - s).powf(f.tail_power) * p1_at_zero;
        let v = evaluate_eigenfunction(&d, 1, s).unwrap();
        assert!((v - expected).abs() <= 1e-13 * expected.abs());
    }

    #[test]
    fn domain_and_branch_errors() {
        let d = pt_derived(10.0, 5.0, 3.0, 1.2, 360.0);
        assert!(matches!(evaluate_eigenfunction(&d, 0, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(evaluate_eigenfunction(&d, 0, 1.0), Err(Error::Domain { .. })));
        assert_eq!(evaluate_eigenfunction_limit(&d, 0, 0.5), Err(Error::NonzeroA3(1.0)));
        let c = NuCoefficients::new(0.5, 1.0, 0.0, 1.0, 2.0, 0.5).unwrap();
        let d0 = derive_constants(&c, Branch::Principal).unwrap();
        assert_eq!(eigenfunction_factors(&d0), Err(Error::ZeroA3));
        assert!(evaluate_eigenfunction(&d0, 0, 0.5).is_err());
    }

    #[test]
    fn vanishes_at_origin() {
        let d = pt_derived(10.0, 5.0, 3.0, 1.2, 360.0);
        let near = evaluate_eigenfunction(&d, 0, 1e-6).unwrap();
        assert!(near > 0.0 && near < 1e-20);
    }

    #[test]
    fn limit_form() {
        // a1 = 1, x3 = 0 ⇒ a12 = 0; a2 = 0 ⇒ a5 = 0; x1 = 0 ⇒ a9 = 0 ⇒ a13 = 0
        let c = NuCoefficients::new(1.0, 0.0, 0.0, 0.0, 0.3, 0.0).unwrap();
        let d = derive_constants(&c, Branch::Principal).unwrap();
        assert_eq!((d.a12, d.a13), (0.0, 0.0));
        assert_eq!(evaluate_eigenfunction_limit(&d, 0, 2.7).unwrap(), 1.0);

        let c = NuCoefficients::new(0.4, 1.3, 0.0, 0.8, -0.2, 0.6).unwrap();
        let d = derive_constants(&c, Branch::Principal).unwrap();
        let s: f64 = 1.3;
        let envelope = s.powf(d.a12) * (d.a13 * s).exp();
        assert!((evaluate_eigenfunction_limit(&d, 0, s).unwrap() - envelope).abs() < 1e-15);
        let expected = envelope * laguerre_sum(3, d.a10 - 1.0, d.a11 * s).unwrap();
        let v = evaluate_eigenfunction_limit(&d, 3, s).unwrap();
        assert!((v - expected).abs() <= 1e-12 * expected.abs().max(1.0), "{v} vs {expected}");
    }

    proptest! {
        #[test]
        fn ground_state_is_envelope(s in 1e-6..(1.0 - 1e-6)) {
            let d = pt_derived(10.0, 5.0, 3.0, 1.2, 360.5);
            let f = eigenfunction_factors(&d).unwrap();
            let v = evaluate_eigenfunction(&d, 0, s).unwrap();
            prop_assert_eq!(v, libm::pow(s, f.s_power) * libm::pow(1.0 - s, f.tail_power));
        }
    }
}

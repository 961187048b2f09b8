use alloc::vec::Vec;

use crate::{Error, Result};

/// Gauss-Legendre points per panel.
const ORDER: usize = 12;
/// Geometric contraction of successive end sub-panels.
const GRADING_RATIO: f64 = 0.15;
/// Number of geometric sub-panels that replace a graded end panel.
const GRADING_LEVELS: usize = 24;

/// A fixed quadrature rule on a closed interval.
///
/// Nodes lie strictly inside `interval` in increasing order and all weights
/// are positive.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

impl QuadratureRule {
    /// `order`-point Gauss-Legendre rule on `[lo, hi]`. Nodes are found by
    /// Newton iteration on the Legendre recurrence.
    pub fn gauss_legendre(order: usize, lo: f64, hi: f64) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut nodes = Vec::with_capacity(order);
        let mut weights = Vec::with_capacity(order);
        let nf = order as f64;
        for i in 0..order {
            // Tricomi initial guess, ordered from +1 down to -1.
            let mut x = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(order, x);
            if d.is_finite() {
                dp = d;
            }
            nodes.push(mid - half * x);
            weights.push(half * 2.0 / ((1.0 - x * x) * dp * dp));
        }
        Self {
            nodes,
            weights,
            interval: (lo, hi),
        }
    }

    pub fn apply<F: FnMut(f64) -> f64>(&self, mut f: F) -> Result<f64> {
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let y = f(x);
            if !y.is_finite() {
                return Err(Error::NonFinite { at: x });
            }
            sum += w * y;
        }
        Ok(sum)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Which ends of the interval receive geometric panel refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grading {
    #[default]
    Uniform,
    Lower,
    Upper,
    Both,
}

impl Grading {
    fn lower(self) -> bool {
        matches!(self, Grading::Lower | Grading::Both)
    }

    fn upper(self) -> bool {
        matches!(self, Grading::Upper | Grading::Both)
    }
}

/// Panel breakpoints: `panels` equal panels, with graded end panels replaced
/// by a geometric sequence shrinking toward the endpoint.
fn breakpoints(lo: f64, hi: f64, panels: usize, grading: Grading) -> Vec<f64> {
    let width = (hi - lo) / panels as f64;
    // sub-panels closer to an endpoint than this collapse in floating point
    let resolvable = |end: f64, offset: f64| offset > 64.0 * f64::EPSILON * end.abs() && offset > f64::MIN_POSITIVE;
    let mut points = Vec::with_capacity(panels + 2 * GRADING_LEVELS + 1);
    points.push(lo);
    if grading.lower() {
        for level in (1..=GRADING_LEVELS).rev() {
            let offset = width * libm::pow(GRADING_RATIO, level as f64);
            if resolvable(lo, offset) {
                points.push(lo + offset);
            }
        }
    }
    for i in 1..panels {
        points.push(lo + width * i as f64);
    }
    if grading.upper() {
        for level in 1..=GRADING_LEVELS {
            let offset = width * libm::pow(GRADING_RATIO, level as f64);
            if resolvable(hi, offset) {
                points.push(hi - offset);
            }
        }
    }
    points.push(hi);
    points
}

fn composite<F: FnMut(f64) -> f64>(f: &mut F, points: &[f64], unit: &QuadratureRule) -> Result<f64> {
    let mut total = 0.0;
    for pair in points.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        for (&t, &w) in unit.nodes.iter().zip(&unit.weights) {
            let x = mid + half * t;
            let y = f(x);
            if !y.is_finite() {
                return Err(Error::NonFinite { at: x });
            }
            total += half * w * y;
        }
    }
    Ok(total)
}

/// Composite Gauss-Legendre integral of `f` over `[lo, hi]` on `panels`
/// equal panels. Returns `(value, error_estimate)`.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, lo: f64, hi: f64, panels: usize) -> Result<(f64, f64)> {
    integrate_graded(f, lo, hi, panels, Grading::Uniform)
}

/// Like [`integrate`], with geometric refinement toward the ends selected by
/// `grading`. The estimate is `|I(mesh) - I(mesh with every panel halved)|`
/// and the finer value is returned. `f` is never evaluated at `lo` or `hi`.
pub fn integrate_graded<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    panels: usize,
    grading: Grading,
) -> Result<(f64, f64)> {
    if panels == 0 {
        return Err(Error::InvalidParameter {
            name: "panels",
            value: 0.0,
        });
    }
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::InvalidParameter {
            name: "interval",
            value: hi - lo,
        });
    }
    let unit = QuadratureRule::gauss_legendre(ORDER, -1.0, 1.0);
    let coarse = breakpoints(lo, hi, panels, grading);
    let mut fine = Vec::with_capacity(2 * coarse.len());
    for pair in coarse.windows(2) {
        fine.push(pair[0]);
        fine.push(0.5 * (pair[0] + pair[1]));
    }
    fine.push(hi);
    let coarse_value = composite(&mut f, &coarse, &unit)?;
    let fine_value = composite(&mut f, &fine, &unit)?;
    Ok((fine_value, (fine_value - coarse_value).abs()))
}

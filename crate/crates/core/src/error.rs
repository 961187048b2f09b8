use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    /// α₈ or α₉ came out negative, so the square roots of the parametric
    /// pipeline are not real.
    #[error("negative discriminant: a8 = {a8}, a9 = {a9}")]
    NegativeDiscriminant { a8: f64, a9: f64 },
    #[error("quantization residual does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("root finder did not converge in {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("a3 = 0 requires the Laguerre limit form")]
    ZeroA3,
    #[error("Laguerre limit form requires a3 = 0, got {0}")]
    NonzeroA3(f64),
    #[error("argument {value} outside the open interval ({lo}, {hi})")]
    Domain { value: f64, lo: f64, hi: f64 },
    #[error("polynomial parameter {0} must exceed -1")]
    InvalidIndex(f64),
    #[error("non-finite value encountered at {at}")]
    NonFinite { at: f64 },
    #[error("grid of {0} interior points is too small")]
    GridTooSmall(usize),
    #[error("invalid parameter `{name}` = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
}

//! Arbitrary-precision combinatorics and the scalar backends shared by the
//! formula modules.
//!
//! Everything downstream is generic over a [`Scalar`] backend:
//! [`ExactRational`] never rounds and is used for oracle-grade comparisons,
//! `f64` is the everyday floating backend.

mod combinatorics;
mod rational;
mod scalar;

pub use combinatorics::{
    binomial, compositions, composition_power_sum, falling_factorial, multinomial, stirling2,
    Stirling2Table,
};
pub use rational::ExactRational;
pub use scalar::{Horizon, Scalar};

/// Relative gap below which two floating scalars are treated as equal.
///
/// Shared with the fitter's root-distinctness threshold so distinctness
/// behaves the same across modules.
pub const FLOAT_DISTINCTNESS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("scalars must be pairwise distinct: entries {first} and {second} coincide")]
    DistinctnessViolated { first: usize, second: usize },
    #[error("the exact backend requires an integer horizon, got t = {horizon}")]
    RealHorizonUnsupported { horizon: f64 },
}

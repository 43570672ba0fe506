use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::rational::ExactRational;
use super::{NumericsError, FLOAT_DISTINCTNESS_TOL};

/// Time horizon of a moment computation.
///
/// The exact backend only accepts whole step counts; the floating backend
/// also accepts real horizons, which the fitter produces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Horizon {
    Steps(u64),
    Real(f64),
}

impl Horizon {
    /// Classifies an `f64` horizon, preferring `Steps` when it is a
    /// nonnegative integer so the exact backend stays usable.
    pub fn from_f64(t: f64) -> Self {
        if t >= 0.0 && t.fract() == 0.0 && t <= 2f64.powi(53) {
            Horizon::Steps(t as u64)
        } else {
            Horizon::Real(t)
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Horizon::Steps(t) => t as f64,
            Horizon::Real(t) => t,
        }
    }

    pub fn as_steps(self) -> Option<u64> {
        match self {
            Horizon::Steps(t) => Some(t),
            Horizon::Real(_) => None,
        }
    }
}

impl From<u64> for Horizon {
    fn from(value: u64) -> Self {
        Horizon::Steps(value)
    }
}

/// Arithmetic backend for the formula modules.
///
/// Implemented by [`ExactRational`] (exact, integer horizons only) and `f64`
/// (rounding, real horizons allowed).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic never rounds.
    const IS_EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_big_int(value: &BigInt) -> Self;
    fn from_ratio(numerator: i64, denominator: i64) -> Self;
    fn powi(&self, exp: u32) -> Self;

    /// `self^t` for a nonnegative base, with `0^0 = 1`.
    ///
    /// The exact backend rejects real horizons.
    fn horizon_pow(&self, t: Horizon) -> Result<Self, NumericsError>;

    /// Backend distinctness test: exact inequality for rationals, relative
    /// gap above [`FLOAT_DISTINCTNESS_TOL`] for floats.
    fn is_distinct_from(&self, other: &Self) -> bool;

    fn to_f64(&self) -> f64;
}

impl Scalar for ExactRational {
    const IS_EXACT: bool = true;

    fn zero() -> Self {
        ExactRational::zero()
    }

    fn one() -> Self {
        ExactRational::one()
    }

    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }

    fn from_big_int(value: &BigInt) -> Self {
        ExactRational::from_integer(value.clone())
    }

    fn from_ratio(numerator: i64, denominator: i64) -> Self {
        ExactRational::ratio(numerator, denominator)
    }

    fn powi(&self, exp: u32) -> Self {
        self.pow(exp as u64)
    }

    fn horizon_pow(&self, t: Horizon) -> Result<Self, NumericsError> {
        match t {
            Horizon::Steps(steps) => Ok(self.pow(steps)),
            Horizon::Real(horizon) => Err(NumericsError::RealHorizonUnsupported { horizon }),
        }
    }

    fn is_distinct_from(&self, other: &Self) -> bool {
        self != other
    }

    fn to_f64(&self) -> f64 {
        ExactRational::to_f64(self)
    }
}

impl Scalar for f64 {
    const IS_EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn from_big_int(value: &BigInt) -> Self {
        value.to_f64().unwrap_or(f64::INFINITY)
    }

    fn from_ratio(numerator: i64, denominator: i64) -> Self {
        numerator as f64 / denominator as f64
    }

    fn powi(&self, exp: u32) -> Self {
        f64::powi(*self, exp as i32)
    }

    fn horizon_pow(&self, t: Horizon) -> Result<Self, NumericsError> {
        let t = t.as_f64();
        if t == 0.0 {
            return Ok(1.0);
        }
        Ok(f64::powf(*self, t))
    }

    fn is_distinct_from(&self, other: &Self) -> bool {
        let gap = (self - other).abs();
        gap > FLOAT_DISTINCTNESS_TOL * self.abs().max(other.abs())
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

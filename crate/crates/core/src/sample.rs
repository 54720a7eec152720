use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Scalar payload carried by signals and dense matrices.
///
/// Two payloads are provided: exact `i64` for the unnormalized, addition-only
/// transforms and `f64` for orthonormal work. Only real payloads can carry the
/// `1/sqrt(2)` factors, which is what [`Sample::IS_REAL`] advertises.
pub trait Sample:
    Copy
    + PartialEq
    + Debug
    + Default
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const ZERO: Self;
    const ONE: Self;
    const IS_REAL: bool;

    /// Multiply by a real factor. Only called when `IS_REAL` holds.
    fn scale(self, factor: f64) -> Self;

    /// Exact halving. For integers the value must be even.
    fn halve(self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// `self / divisor` when the quotient is exact for this payload.
    fn div_exact(self, divisor: Self) -> Option<Self>;

    fn to_f64(self) -> f64;

    /// Bit pattern used to compare rows for exact equality.
    fn bit_key(self) -> u64;
}

impl Sample for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;
    const IS_REAL: bool = false;

    #[inline]
    fn scale(self, factor: f64) -> Self {
        (self as f64 * factor).round() as i64
    }

    #[inline]
    fn halve(self) -> Self {
        debug_assert!(self % 2 == 0, "halving odd integer {self}");
        self / 2
    }

    #[inline]
    fn from_i64(v: i64) -> Self {
        v
    }

    fn div_exact(self, divisor: Self) -> Option<Self> {
        (divisor != 0 && self % divisor == 0).then(|| self / divisor)
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }

    #[inline]
    fn bit_key(self) -> u64 {
        self as u64
    }
}

impl Sample for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    const IS_REAL: bool = true;

    #[inline]
    fn scale(self, factor: f64) -> Self {
        self * factor
    }

    #[inline]
    fn halve(self) -> Self {
        self * 0.5
    }

    #[inline]
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn div_exact(self, divisor: Self) -> Option<Self> {
        Some(self / divisor)
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }

    #[inline]
    fn bit_key(self) -> u64 {
        // +0.0 and -0.0 compare equal as matrix entries
        if self == 0.0 {
            0
        } else {
            self.to_bits()
        }
    }
}

/// Whether the `1/sqrt(2)` factors are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ScalingMode {
    Orthonormal,
    #[default]
    Unnormalized,
}

impl ScalingMode {
    pub(crate) fn check<T: Sample>(self) -> crate::Result<()> {
        if self == ScalingMode::Orthonormal && !T::IS_REAL {
            return Err(crate::Error::UnsupportedMode);
        }
        Ok(())
    }
}

/// Largest input magnitude for which unnormalized `i64` transforms cannot
/// overflow through level 20.
pub const EXACT_INPUT_BOUND: i64 = 1 << 40;

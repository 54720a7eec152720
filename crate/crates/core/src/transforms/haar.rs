use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::Result;
use crate::instrumentation::Tally;
use crate::sample::{Sample, ScalingMode};
use crate::signal::level_of;

/// Haar analysis on `x` in place. `scratch` must hold at least `x.len() / 2`
/// samples. Output layout: the transform of the pairwise sums occupies the
/// first half, the pairwise differences the second half, recursively.
pub(crate) fn haar_levels<T: Sample>(
    x: &mut [T],
    scratch: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) {
    let mut len = x.len();
    while len > 1 {
        let half = len / 2;
        match mode {
            ScalingMode::Unnormalized => {
                for i in 0..half {
                    let (a, b) = (x[2 * i], x[2 * i + 1]);
                    x[i] = a + b;
                    scratch[i] = a - b;
                }
            }
            ScalingMode::Orthonormal => {
                for i in 0..half {
                    let (a, b) = (x[2 * i], x[2 * i + 1]);
                    x[i] = (a + b).scale(FRAC_1_SQRT_2);
                    scratch[i] = (a - b).scale(FRAC_1_SQRT_2);
                }
                tally.multiplications(len as u64);
            }
        }
        x[half..len].copy_from_slice(&scratch[..half]);
        tally.additions(len as u64);
        len = half;
    }
}

pub fn haar_forward_in_place<T: Sample>(
    x: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<()> {
    level_of(x.len())?;
    mode.check::<T>()?;
    let mut scratch = vec![T::ZERO; x.len() / 2];
    haar_levels(x, &mut scratch, mode, tally);
    Ok(())
}

/// `Psi_m x`.
pub fn haar_forward<T: Sample>(
    x: &[T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    haar_forward_in_place(&mut out, mode, tally)?;
    Ok(out)
}

/// Exact inverse of [`haar_forward_in_place`]. In unnormalized mode each
/// synthesis butterfly halves `(s + d, s - d)`, which is exact for integer
/// coefficients produced by the forward transform.
pub fn haar_inverse_in_place<T: Sample>(y: &mut [T], mode: ScalingMode) -> Result<()> {
    level_of(y.len())?;
    mode.check::<T>()?;
    let mut scratch = vec![T::ZERO; y.len() / 2];
    let mut len = 2;
    while len <= y.len() {
        let half = len / 2;
        scratch[..half].copy_from_slice(&y[half..len]);
        for i in (0..half).rev() {
            let (s, d) = (y[i], scratch[i]);
            let (a, b) = match mode {
                ScalingMode::Unnormalized => ((s + d).halve(), (s - d).halve()),
                ScalingMode::Orthonormal => {
                    ((s + d).scale(FRAC_1_SQRT_2), (s - d).scale(FRAC_1_SQRT_2))
                }
            };
            y[2 * i] = a;
            y[2 * i + 1] = b;
        }
        len *= 2;
    }
    Ok(())
}

pub fn haar_inverse<T: Sample>(y: &[T], mode: ScalingMode) -> Result<Vec<T>> {
    let mut out = y.to_vec();
    haar_inverse_in_place(&mut out, mode)?;
    Ok(out)
}

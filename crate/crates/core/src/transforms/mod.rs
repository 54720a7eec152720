//! Fast in-place transforms.
//!
//! Every transform comes in two flavours: `*_in_place` on a caller buffer and
//! an out-of-place wrapper returning a fresh `Vec`. Unnormalized mode uses
//! additions and subtractions only; orthonormal mode either scales each
//! butterfly (Haar) or defers a single `2^{-m/2}` scaling to [`normalize`]
//! (Walsh-Hadamard).

mod cascade;
mod haar;
mod walsh;

pub use cascade::{chw_forward, chw_forward_in_place, stage_blocks, stage_count};
pub(crate) use haar::haar_levels;
pub use haar::{haar_forward, haar_forward_in_place, haar_inverse, haar_inverse_in_place};
pub use walsh::{
    fwht_dyadic, fwht_dyadic_in_place, fwht_natural, fwht_natural_in_place, haar_walsh_forward,
    haar_walsh_forward_in_place,
};

use crate::error::{Error, Result};
use crate::instrumentation::Tally;
use crate::sample::Sample;
use crate::signal::level_of;

/// Multiply every sample by `2^{-m/2}`, turning unnormalized Walsh-Hadamard
/// output into orthonormal output. Costs `2^m` multiplications.
pub fn normalize_in_place<T: Sample>(x: &mut [T], tally: &mut impl Tally) -> Result<()> {
    if !T::IS_REAL {
        return Err(Error::UnsupportedMode);
    }
    let m = level_of(x.len())?;
    let factor = 2f64.powf(-(m as f64) / 2.0);
    for v in x.iter_mut() {
        *v = v.scale(factor);
    }
    tally.multiplications(x.len() as u64);
    Ok(())
}

pub fn normalize<T: Sample>(x: &[T], tally: &mut impl Tally) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    normalize_in_place(&mut out, tally)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instrumentation::OpTally;

    #[test]
    fn normalize_examples() {
        let mut t = OpTally::new();
        assert_eq!(normalize(&[3.5], &mut t).unwrap(), vec![3.5]);
        assert_eq!(
            normalize(&[1.0, 1.0, 1.0, 1.0], &mut t).unwrap(),
            vec![0.5; 4]
        );
        assert_eq!(t.read(), (0, 5));
        assert!(matches!(
            normalize(&[1i64, 1], &mut t),
            Err(Error::UnsupportedMode)
        ));
    }
}

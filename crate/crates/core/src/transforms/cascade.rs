use crate::error::{Error, Result};
use crate::instrumentation::Tally;
use crate::sample::{Sample, ScalingMode};
use crate::signal::{level_of, BlockSlice};

use super::haar::haar_levels;
use super::normalize_in_place;

/// Number of cascade stages after the initial full Haar transform.
pub fn stage_count(m: u32) -> u32 {
    m.saturating_sub(1)
}

fn check_stage(m: u32, r: u32) -> Result<()> {
    if r < 1 || r >= m {
        return Err(Error::argument(format!(
            "stage {r} out of range 1..={} for level {m}",
            stage_count(m)
        )));
    }
    Ok(())
}

pub(crate) fn stage_slices(m: u32, r: u32) -> impl Iterator<Item = BlockSlice> {
    let size = 1usize << (m - r);
    (0..1usize << (r - 1)).map(move |q| BlockSlice::new(2 * size * q + size, size))
}

/// Slices of stage `r` on which `Psi_{m-r}` acts. The complementary identity
/// blocks of the stage factor are never touched.
pub fn stage_blocks(m: u32, r: u32) -> Result<Vec<BlockSlice>> {
    check_stage(m, r)?;
    Ok(stage_slices(m, r).collect())
}

/// Cascading Haar Wavelet computation of the dyadic-ordered Walsh-Hadamard
/// transform: one Haar transform of the whole signal, then for each stage
/// `r = 1..m-1` a Haar transform of size `2^{m-r}` on every stage slice.
///
/// Unnormalized mode costs exactly `m 2^m` additions. Orthonormal mode runs
/// the same cascade and finishes with [`normalize_in_place`].
pub fn chw_forward_in_place<T: Sample>(
    x: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<()> {
    let m = level_of(x.len())?;
    mode.check::<T>()?;
    if m == 0 {
        return Ok(());
    }
    let mut scratch = vec![T::ZERO; x.len() / 2];
    haar_levels(x, &mut scratch, ScalingMode::Unnormalized, tally);
    for r in 1..m {
        for slice in stage_slices(m, r) {
            haar_levels(
                &mut x[slice.range()],
                &mut scratch,
                ScalingMode::Unnormalized,
                tally,
            );
        }
    }
    if mode == ScalingMode::Orthonormal {
        normalize_in_place(x, tally)?;
    }
    Ok(())
}

pub fn chw_forward<T: Sample>(
    x: &[T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    chw_forward_in_place(&mut out, mode, tally)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instrumentation::OpTally;

    const U: ScalingMode = ScalingMode::Unnormalized;

    fn slices(v: &[(usize, usize)]) -> Vec<BlockSlice> {
        v.iter().map(|&(o, s)| BlockSlice::new(o, s)).collect()
    }

    #[test]
    fn stage_block_examples() {
        assert_eq!(stage_blocks(2, 1).unwrap(), slices(&[(2, 2)]));
        assert_eq!(stage_blocks(4, 2).unwrap(), slices(&[(4, 4), (12, 4)]));
        assert_eq!(
            stage_blocks(4, 3).unwrap(),
            slices(&[(2, 2), (6, 2), (10, 2), (14, 2)])
        );
        assert!(stage_blocks(4, 0).is_err());
        assert!(stage_blocks(4, 4).is_err());
        assert!(stage_blocks(1, 1).is_err());
    }

    #[test]
    fn impulses() {
        let mut t = OpTally::new();
        assert_eq!(chw_forward(&[1i64, 0, 0, 0], U, &mut t).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(t.read(), (8, 0));
        assert_eq!(
            chw_forward(&[0i64, 1, 0, 0], U, &mut OpTally::new()).unwrap(),
            vec![1, 1, -1, -1]
        );
    }

    #[test]
    fn level_zero_is_identity() {
        let mut t = OpTally::new();
        assert_eq!(chw_forward(&[4i64], U, &mut t).unwrap(), vec![4]);
        assert_eq!(
            chw_forward(&[4.0f64], ScalingMode::Orthonormal, &mut t).unwrap(),
            vec![4.0]
        );
        assert_eq!(t.read(), (0, 0));
    }

    #[test]
    fn theorem_count_length_sixteen() {
        let mut t = OpTally::new();
        chw_forward(&(0..16i64).collect::<Vec<_>>(), U, &mut t).unwrap();
        assert_eq!(t.read(), (64, 0));
    }

    #[test]
    fn count_then_normalize() {
        let mut t = OpTally::new();
        let y = chw_forward(&[1.0f64; 16], U, &mut t).unwrap();
        normalize_in_place(&mut y.clone(), &mut t).unwrap();
        assert_eq!(t.read(), (64, 16));
    }

    #[test]
    fn rejects_bad_length() {
        assert!(chw_forward(&[1i64, 2, 3, 4, 5], U, &mut OpTally::new()).is_err());
    }
}

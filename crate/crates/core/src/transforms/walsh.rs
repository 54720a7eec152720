use crate::error::Result;
use crate::instrumentation::Tally;
use crate::orderings::bit_reverse_in_place;
use crate::sample::{Sample, ScalingMode};
use crate::signal::level_of;

use super::normalize_in_place;

fn butterflies<T: Sample>(x: &mut [T], tally: &mut impl Tally) {
    let n = x.len();
    let mut h = 1;
    while h < n {
        for block in x.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        tally.additions(n as u64);
        h *= 2;
    }
}

/// Classical in-place Walsh-Hadamard butterflies, natural (Sylvester) order.
pub fn fwht_natural_in_place<T: Sample>(
    x: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<()> {
    let m = level_of(x.len())?;
    mode.check::<T>()?;
    butterflies(x, tally);
    if mode == ScalingMode::Orthonormal && m > 0 {
        normalize_in_place(x, tally)?;
    }
    Ok(())
}

pub fn fwht_natural<T: Sample>(
    x: &[T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    fwht_natural_in_place(&mut out, mode, tally)?;
    Ok(out)
}

/// Natural-order butterflies followed by the bit-reversal reordering into
/// dyadic order.
pub fn fwht_dyadic_in_place<T: Sample>(
    x: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<()> {
    fwht_natural_in_place(x, mode, tally)?;
    bit_reverse_in_place(x);
    Ok(())
}

pub fn fwht_dyadic<T: Sample>(
    x: &[T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    fwht_dyadic_in_place(&mut out, mode, tally)?;
    Ok(out)
}

/// Haar-to-Walsh map `diag(1, H_0, H_1, ..., H_{m-1})` on Haar coefficients.
/// The scale-`j` detail band `[2^j, 2^{j+1})` gets a dyadic WHT of size `2^j`.
pub fn haar_walsh_forward_in_place<T: Sample>(
    h: &mut [T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<()> {
    let m = level_of(h.len())?;
    mode.check::<T>()?;
    for j in 0..m {
        let band = &mut h[1 << j..2 << j];
        fwht_dyadic_in_place(band, mode, tally)?;
    }
    Ok(())
}

pub fn haar_walsh_forward<T: Sample>(
    h: &[T],
    mode: ScalingMode,
    tally: &mut impl Tally,
) -> Result<Vec<T>> {
    let mut out = h.to_vec();
    haar_walsh_forward_in_place(&mut out, mode, tally)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instrumentation::OpTally;
    use crate::transforms::{chw_forward, haar_forward};

    const U: ScalingMode = ScalingMode::Unnormalized;

    #[test]
    fn natural_small() {
        assert_eq!(fwht_natural(&[1i64, 0], U, &mut OpTally::new()).unwrap(), vec![1, 1]);
        let mut t = OpTally::new();
        fwht_natural(&[1i64; 16], U, &mut t).unwrap();
        assert_eq!(t.read(), (64, 0));
    }

    #[test]
    fn dyadic_small() {
        assert_eq!(
            fwht_dyadic(&[1i64, 0, 0, 0], U, &mut OpTally::new()).unwrap(),
            vec![1, 1, 1, 1]
        );
        let x = [3i64, -2];
        assert_eq!(
            fwht_dyadic(&x, U, &mut OpTally::new()).unwrap(),
            fwht_natural(&x, U, &mut OpTally::new()).unwrap()
        );
    }

    #[test]
    fn haar_walsh_small() {
        let x = [5i64, -3];
        assert_eq!(haar_walsh_forward(&x, U, &mut OpTally::new()).unwrap(), x);
        let h = haar_forward(&[1i64, 0, 0, 0], U, &mut OpTally::new()).unwrap();
        assert_eq!(
            haar_walsh_forward(&h, U, &mut OpTally::new()).unwrap(),
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn haar_then_haar_walsh_costs_the_same_as_the_cascade() {
        for m in 1..=10u32 {
            let x: Vec<i64> = (0..1i64 << m).map(|i| (i * 7919) % 23 - 11).collect();
            let mut t = OpTally::new();
            let h = haar_forward(&x, U, &mut t).unwrap();
            let y = haar_walsh_forward(&h, U, &mut t).unwrap();
            assert_eq!(t.additions_count(), u64::from(m) << m);
            assert_eq!(y, chw_forward(&x, U, &mut OpTally::new()).unwrap());
        }
    }
}

use crate::error::{Error, Result};
use crate::sample::Sample;

/// A sequence of `2^m` samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal<T> {
    samples: Vec<T>,
}

impl<T: Sample> Signal<T> {
    pub fn new(samples: Vec<T>) -> Result<Self> {
        level_of(samples.len())?;
        Ok(Self { samples })
    }

    pub fn level(&self) -> u32 {
        self.samples.len().trailing_zeros()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[T] {
        &self.samples
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.samples
    }

    pub fn into_inner(self) -> Vec<T> {
        self.samples
    }
}

impl<T> AsRef<[T]> for Signal<T> {
    fn as_ref(&self) -> &[T] {
        &self.samples
    }
}

/// `log2(len)` for power-of-two lengths.
pub fn level_of(len: usize) -> Result<u32> {
    if len.is_power_of_two() {
        Ok(len.trailing_zeros())
    } else {
        Err(Error::argument(format!(
            "signal length {len} is not a power of two"
        )))
    }
}

/// A contiguous sub-interval of a signal where one Haar transform acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSlice {
    pub offset: usize,
    pub size: usize,
}

impl BlockSlice {
    pub fn new(offset: usize, size: usize) -> Self {
        debug_assert!(size.is_power_of_two() && offset.is_multiple_of(size));
        Self { offset, size }
    }

    pub fn end(&self) -> usize {
        self.offset + self.size
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.end()
    }

    pub fn contains(&self, other: &BlockSlice) -> bool {
        self.offset <= other.offset && other.end() <= self.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_power_of_two() {
        assert!(Signal::new(vec![1i64, 2, 3]).is_err());
        assert!(Signal::<i64>::new(vec![]).is_err());
        assert_eq!(Signal::new(vec![0i64; 8]).unwrap().level(), 3);
        assert_eq!(Signal::new(vec![5.0f64]).unwrap().level(), 0);
    }

    #[test]
    fn slice_containment() {
        let outer = BlockSlice::new(8, 8);
        assert!(outer.contains(&BlockSlice::new(10, 2)));
        assert!(outer.contains(&outer));
        assert!(!outer.contains(&BlockSlice::new(6, 2)));
    }
}

//! Operation counting for the transforms.
//!
//! Additions and subtractions count as one operation each; multiplications are
//! tracked separately. Transforms are generic over [`Tally`] so that timing
//! runs can use [`NoTally`], which compiles to nothing.

use std::ops::AddAssign;

pub trait Tally {
    fn additions(&mut self, n: u64);
    fn multiplications(&mut self, n: u64);
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpTally {
    additions: u64,
    multiplications: u64,
}

impl OpTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// `(additions, multiplications)`
    pub fn read(&self) -> (u64, u64) {
        (self.additions, self.multiplications)
    }

    pub fn additions_count(&self) -> u64 {
        self.additions
    }

    pub fn multiplications_count(&self) -> u64 {
        self.multiplications
    }
}

impl Tally for OpTally {
    #[inline]
    fn additions(&mut self, n: u64) {
        self.additions += n;
    }

    #[inline]
    fn multiplications(&mut self, n: u64) {
        self.multiplications += n;
    }
}

impl AddAssign for OpTally {
    fn add_assign(&mut self, rhs: Self) {
        self.additions += rhs.additions;
        self.multiplications += rhs.multiplications;
    }
}

impl std::iter::Sum for OpTally {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(OpTally::default(), |mut acc, t| {
            acc += t;
            acc
        })
    }
}

impl std::fmt::Display for OpTally {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "additions={} multiplications={}",
            self.additions, self.multiplications
        )
    }
}

/// Zero-cost tally for benchmarks.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoTally;

impl Tally for NoTally {
    #[inline(always)]
    fn additions(&mut self, _: u64) {}

    #[inline(always)]
    fn multiplications(&mut self, _: u64) {}
}

impl<T: Tally + ?Sized> Tally for &mut T {
    #[inline]
    fn additions(&mut self, n: u64) {
        (**self).additions(n)
    }

    #[inline]
    fn multiplications(&mut self, n: u64) {
        (**self).multiplications(n)
    }
}

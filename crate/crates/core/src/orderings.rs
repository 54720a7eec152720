//! Index permutations between the natural (Sylvester), dyadic (Paley) and
//! sequency orderings of Walsh-Hadamard coefficients.
//!
//! The maps are closed-form; the test suite re-derives them from the dense
//! oracle by row matching and by counting sign changes.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Bijection on `0..n`, applied as `out[i] = x[map[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &j in &map {
            if j >= map.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::structure(format!(
                    "index {j} repeated or out of range for length {}",
                    map.len()
                )));
            }
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    /// `self.then(other)` applies `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::argument("permutation lengths differ"));
        }
        Ok(Self {
            map: other.map.iter().map(|&j| self.map[j]).collect(),
        })
    }

    pub fn apply<T: Copy>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.map.len() {
            return Err(Error::argument(format!(
                "permutation of length {} applied to signal of length {}",
                self.map.len(),
                x.len()
            )));
        }
        Ok(self.map.iter().map(|&j| x[j]).collect())
    }
}

pub fn apply_permutation<T: Copy>(p: &Permutation, x: &[T]) -> Result<Vec<T>> {
    p.apply(x)
}

fn bit_reverse(i: usize, bits: u32) -> usize {
    if bits == 0 {
        0
    } else {
        i.reverse_bits() >> (usize::BITS - bits)
    }
}

/// Dyadic coefficient `i` is natural coefficient `bitrev_m(i)`.
pub fn natural_to_dyadic(m: u32) -> Permutation {
    Permutation {
        map: (0..1usize << m).map(|i| bit_reverse(i, m)).collect(),
    }
}

/// The sequency-`s` coefficient is dyadic coefficient `gray(s)`.
pub fn dyadic_to_sequency(m: u32) -> Permutation {
    Permutation {
        map: (0..1usize << m).map(|s| s ^ (s >> 1)).collect(),
    }
}

/// In-place bit-reversal reordering, natural to dyadic (and back).
pub(crate) fn bit_reverse_in_place<T>(x: &mut [T]) {
    let bits = x.len().trailing_zeros();
    for i in 0..x.len() {
        let j = bit_reverse(i, bits);
        if i < j {
            x.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ordering {
    Natural,
    #[default]
    Dyadic,
    Sequency,
}

impl Ordering {
    /// Permutation taking dyadic-ordered coefficients into this ordering.
    pub fn from_dyadic(self, m: u32) -> Permutation {
        match self {
            Ordering::Natural => natural_to_dyadic(m).inverse(),
            Ordering::Dyadic => Permutation::identity(1 << m),
            Ordering::Sequency => dyadic_to_sequency(m),
        }
    }

    /// Permutation taking natural-ordered coefficients into this ordering.
    pub fn from_natural(self, m: u32) -> Permutation {
        let to_dyadic = natural_to_dyadic(m);
        match self {
            Ordering::Natural => Permutation::identity(1 << m),
            Ordering::Dyadic => to_dyadic,
            Ordering::Sequency => to_dyadic
                .then(&dyadic_to_sequency(m))
                .expect("same length"),
        }
    }
}

impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(Ordering::Natural),
            "dyadic" => Ok(Ordering::Dyadic),
            "sequency" => Ok(Ordering::Sequency),
            other => Err(Error::argument(format!("unknown ordering `{other}`"))),
        }
    }
}

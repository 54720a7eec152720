#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ints(rng: &mut ChaCha8Rng, m: u32, bound: i64) -> Vec<i64> {
    (0..1usize << m).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_reals(rng: &mut ChaCha8Rng, m: u32) -> Vec<f64> {
    (0..1usize << m).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Number of sign changes along a row.
pub fn sign_changes(row: &[i64]) -> usize {
    row.windows(2).filter(|w| (w[0] < 0) != (w[1] < 0)).count()
}

use chw_core::oracle::{hadamard_dyadic_dense, mat_vec};
use chw_core::transforms::chw_forward;
use chw_core::{NoTally, ScalingMode, MAX_DENSE_LEVEL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Mode, VerifyArgs};
use crate::Failure;

const FLOAT_BOUND: f64 = 1e-10;

pub fn run(args: VerifyArgs) -> Result<(), Failure> {
    if args.m > MAX_DENSE_LEVEL {
        return Err(chw_core::Error::Capacity {
            m: args.m,
            max: MAX_DENSE_LEVEL,
        }
        .into());
    }
    let n = 1usize << args.m;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut worst = 0.0f64;
    let mut first_bad: Option<usize> = None;

    match args.mode {
        Mode::Unnormalized => {
            let h = hadamard_dyadic_dense::<i64>(args.m, ScalingMode::Unnormalized)?;
            for trial in 0..args.trials {
                let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
                let fast = chw_forward(&x, ScalingMode::Unnormalized, &mut NoTally)?;
                let slow = mat_vec(&h, &x)?;
                let d = fast
                    .iter()
                    .zip(&slow)
                    .map(|(a, b)| a.abs_diff(*b))
                    .max()
                    .unwrap_or(0);
                worst = worst.max(d as f64);
                if d != 0 && first_bad.is_none() {
                    first_bad = Some(trial);
                }
            }
        }
        Mode::Orthonormal => {
            let h = hadamard_dyadic_dense::<f64>(args.m, ScalingMode::Orthonormal)?;
            for trial in 0..args.trials {
                let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let fast = chw_forward(&x, ScalingMode::Orthonormal, &mut NoTally)?;
                let slow = mat_vec(&h, &x)?;
                let d = fast
                    .iter()
                    .zip(&slow)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                worst = worst.max(d);
                if d > FLOAT_BOUND && first_bad.is_none() {
                    first_bad = Some(trial);
                }
            }
        }
    }

    println!("max_discrepancy={worst}");
    match first_bad {
        None => Ok(()),
        Some(trial) => Err(Failure::Verification(format!(
            "discrepancy at m={} trial {trial} (seed {})",
            args.m, args.seed
        ))),
    }
}

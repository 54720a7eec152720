use std::hint::black_box;
use std::time::{Duration, Instant};

use chw_core::transforms::{chw_forward_in_place, fwht_natural_in_place};
use chw_core::{NoTally, OpTally, ParallelExecutor, ScalingMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::BenchArgs;
use crate::Failure;

const MAX_LEVEL: u32 = 24;
const U: ScalingMode = ScalingMode::Unnormalized;

/// Counted run for the `additions` column, one warm-up, then `reps` timed
/// runs on a freshly copied buffer each.
fn measure(
    input: &[i64],
    reps: u32,
    counted: impl FnOnce(&mut [i64], &mut OpTally) -> chw_core::Result<()>,
    mut f: impl FnMut(&mut [i64], &mut NoTally) -> chw_core::Result<()>,
) -> chw_core::Result<(f64, u64)> {
    let mut buf = input.to_vec();
    let mut tally = OpTally::new();
    counted(&mut buf, &mut tally)?;
    buf.copy_from_slice(input);
    f(&mut buf, &mut NoTally)?;

    let mut total = Duration::ZERO;
    for _ in 0..reps {
        buf.copy_from_slice(input);
        let start = Instant::now();
        f(black_box(&mut buf), &mut NoTally)?;
        total += start.elapsed();
    }
    let ns = total.as_nanos() as f64 / (f64::from(reps) * input.len() as f64);
    Ok((ns, tally.additions_count()))
}

pub fn run(args: BenchArgs) -> Result<(), Failure> {
    if args.max_m > MAX_LEVEL || args.min_m > args.max_m {
        return Err(Failure::Usage(format!(
            "need min-m <= max-m <= {MAX_LEVEL}, got {}..{}",
            args.min_m, args.max_m
        )));
    }
    if args.reps == 0 || args.workers.contains(&0) {
        return Err(Failure::Usage("reps and worker counts must be positive".into()));
    }
    let executors = args
        .workers
        .iter()
        .map(|&w| ParallelExecutor::new(w))
        .collect::<chw_core::Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);

    println!("algo,n,reps,ns_per_element,additions");
    for m in args.min_m..=args.max_m {
        let x: Vec<i64> = (0..1usize << m).map(|_| rng.gen_range(-1000..=1000)).collect();
        let n = x.len();
        let reps = args.reps;

        let (ns, adds) = measure(
            &x,
            reps,
            |b, t| chw_forward_in_place(b, U, t),
            |b, t| chw_forward_in_place(b, U, t),
        )?;
        println!("chw,{n},{reps},{ns:.3},{adds}");
        let (ns, adds) = measure(
            &x,
            reps,
            |b, t| fwht_natural_in_place(b, U, t),
            |b, t| fwht_natural_in_place(b, U, t),
        )?;
        println!("fwht-natural,{n},{reps},{ns:.3},{adds}");
        for e in &executors {
            let (ns, adds) = measure(
                &x,
                reps,
                |b, t| e.execute_in_place(b, U, t),
                |b, t| e.execute_in_place(b, U, t),
            )?;
            println!("parallel-{},{n},{reps},{ns:.3},{adds}", e.workers());
        }
    }
    Ok(())
}

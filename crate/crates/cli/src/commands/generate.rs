use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{GenerateArgs, SampleKind};
use crate::Failure;

pub fn run(args: GenerateArgs) -> Result<(), Failure> {
    if args.m > 30 {
        return Err(Failure::Usage(format!("-m {} is too large (max 30)", args.m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let n = 1usize << args.m;
    let x: Vec<f64> = match args.kind {
        SampleKind::Int => (0..n).map(|_| rng.gen_range(-1000i64..=1000) as f64).collect(),
        SampleKind::Real => (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect(),
    };
    super::emit_signal(&x, args.output.as_deref(), args.format.into())?;
    Ok(())
}

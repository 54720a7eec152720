use chw_core::transforms::{
    chw_forward_in_place, fwht_natural_in_place, haar_forward_in_place,
    haar_walsh_forward_in_place,
};
use chw_core::{
    read_signal, Ordering, OpTally, ParallelExecutor, Sample, ScalingMode, EXACT_INPUT_BOUND,
};

use crate::args::{Algo, TransformArgs};
use crate::Failure;

fn apply<T: Sample>(
    x: &mut [T],
    args: &TransformArgs,
    tally: &mut OpTally,
) -> chw_core::Result<()> {
    let mode: ScalingMode = args.mode.into();
    match (args.algo, args.workers) {
        (Algo::Chw, Some(w)) => ParallelExecutor::new(w)?.execute_in_place(x, mode, tally),
        (Algo::Chw, None) => chw_forward_in_place(x, mode, tally),
        (Algo::Fwht, _) => fwht_natural_in_place(x, mode, tally),
        (Algo::Haar, _) => haar_forward_in_place(x, mode, tally),
        (Algo::HaarWalsh, _) => haar_walsh_forward_in_place(x, mode, tally),
    }
}

pub fn run(args: TransformArgs) -> Result<(), Failure> {
    if args.algo == Algo::Haar && args.order.is_some() {
        return Err(Failure::Usage("--order does not apply to --algo haar".into()));
    }
    if args.workers.is_some() && args.algo != Algo::Chw {
        return Err(Failure::Usage("--workers requires --algo chw".into()));
    }
    if args.workers == Some(0) {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }

    let signal = read_signal(&args.input, args.input_format.into())?;
    let m = signal.level();
    let mut tally = OpTally::new();

    // exact integer arithmetic whenever it is available
    let exact = args.mode == crate::args::Mode::Unnormalized
        && signal
            .as_slice()
            .iter()
            .all(|v| v.fract() == 0.0 && v.abs() <= EXACT_INPUT_BOUND as f64);
    let mut out: Vec<f64> = if exact {
        let mut x: Vec<i64> = signal.as_slice().iter().map(|&v| v as i64).collect();
        apply(&mut x, &args, &mut tally)?;
        x.into_iter().map(Sample::to_f64).collect()
    } else {
        let mut x = signal.into_inner();
        apply(&mut x, &args, &mut tally)?;
        x
    };

    if args.algo != Algo::Haar {
        let native = if args.algo == Algo::Fwht {
            Ordering::Natural
        } else {
            Ordering::Dyadic
        };
        let target: Ordering = args.order.map_or(native, Into::into);
        let p = match native {
            Ordering::Natural => target.from_natural(m),
            _ => target.from_dyadic(m),
        };
        if !p.is_identity() {
            out = p.apply(&out)?;
        }
    }

    super::emit_signal(&out, args.output.as_deref(), args.output_format.into())?;
    if args.count_ops {
        eprintln!("{tally}");
    }
    Ok(())
}

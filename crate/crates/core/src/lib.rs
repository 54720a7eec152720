//! Walsh-Hadamard transforms in dyadic order computed entirely from Haar
//! wavelet transforms (the Cascading Haar Wavelet algorithm), together with
//! exact operation counting, a dense-matrix oracle, ordering permutations and
//! a node-per-scale parallel schedule simulator and executor.

pub mod error;
pub mod instrumentation;
pub mod io;
pub mod oracle;
pub mod orderings;
pub mod sample;
pub mod schedule;
pub mod signal;
pub mod transforms;

pub use error::{Error, Result};
pub use instrumentation::{NoTally, OpTally, Tally};
pub use io::{read_signal, write_signal, SignalFormat};
pub use oracle::{DenseMatrix, MAX_DENSE_LEVEL};
pub use orderings::{apply_permutation, dyadic_to_sequency, natural_to_dyadic, Ordering, Permutation};
pub use sample::{Sample, ScalingMode, EXACT_INPUT_BOUND};
pub use schedule::{
    build_task_graph, occupancy_report, parallel_execute, simulate, CostModel, ExportFormat,
    InitialNodePolicy, ParallelExecutor, Schedule, TaskGraph, TaskKind, TaskSpec,
};
pub use signal::{BlockSlice, Signal};
pub use transforms::{
    chw_forward, chw_forward_in_place, fwht_dyadic, fwht_natural, haar_forward, haar_inverse,
    haar_walsh_forward, normalize, stage_blocks,
};

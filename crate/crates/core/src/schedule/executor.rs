use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use rayon::ThreadPool;

use super::{build_task_graph, InitialNodePolicy, TaskGraph};
use crate::error::{Error, Result};
use crate::instrumentation::{OpTally, Tally};
use crate::sample::{Sample, ScalingMode};
use crate::signal::{level_of, BlockSlice};
use crate::transforms::{chw_forward_in_place, haar_levels, normalize_in_place};

/// Runs the cascade task graph on a fixed-size worker pool.
///
/// Every stage task's slice lies inside the slice of its prerequisite, and
/// siblings are disjoint, so the graph is walked as a tree: a task transforms
/// its slice, then its dependents run concurrently on disjoint sub-slices.
/// Each task keeps its own tally; tallies are summed on join.
///
/// Task graphs are built once per level and cached.
pub struct ParallelExecutor {
    pool: ThreadPool,
    workers: usize,
    plans: Mutex<HashMap<u32, Arc<Plan>>>,
}

struct Plan {
    graph: TaskGraph,
    /// Dependents of each task, sorted by slice offset.
    children: Vec<Vec<usize>>,
}

impl Plan {
    fn new(m: u32) -> Result<Self> {
        let graph = build_task_graph(m, InitialNodePolicy::ExtraNode)?;
        let mut children = graph.children();
        for kids in &mut children {
            kids.sort_by_key(|&c| graph.tasks()[c].slice.offset);
        }
        Ok(Self { graph, children })
    }

    fn parts<'a, T>(&self, task: usize, buf: &'a mut [T], base: usize) -> Vec<(&'a mut [T], usize)> {
        let slices = self.children[task].iter().map(|&c| self.graph.tasks()[c].slice);
        split_disjoint(buf, base, slices)
    }
}

impl ParallelExecutor {
    pub fn new(workers: usize) -> Result<Self> {
        if workers == 0 {
            return Err(Error::argument("worker count must be at least 1"));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .thread_name(|i| format!("chw-worker-{i}"))
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?;
        Ok(Self {
            pool,
            workers,
            plans: Mutex::new(HashMap::new()),
        })
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    fn plan(&self, m: u32) -> Result<Arc<Plan>> {
        let mut plans = self.plans.lock().expect("plan cache poisoned");
        if let Some(p) = plans.get(&m) {
            return Ok(Arc::clone(p));
        }
        let plan = Arc::new(Plan::new(m)?);
        plans.insert(m, Arc::clone(&plan));
        Ok(plan)
    }

    pub fn execute_in_place<T: Sample>(
        &self,
        x: &mut [T],
        mode: ScalingMode,
        tally: &mut impl Tally,
    ) -> Result<()> {
        let m = level_of(x.len())?;
        mode.check::<T>()?;
        if m < 2 {
            return chw_forward_in_place(x, mode, tally);
        }
        let plan = self.plan(m)?;
        let total = self.pool.install(|| run_task(&plan, 0, x, 0));
        tally.additions(total.additions_count());
        if mode == ScalingMode::Orthonormal {
            normalize_in_place(x, tally)?;
        }
        Ok(())
    }

    pub fn execute<T: Sample>(&self, x: &[T], mode: ScalingMode) -> Result<Vec<T>> {
        let mut out = x.to_vec();
        self.execute_in_place(&mut out, mode, &mut OpTally::new())?;
        Ok(out)
    }
}

/// Subtrees whose root slice is at most this long run on one worker.
const SERIAL_CUTOFF: usize = 1 << 12;

/// `buf` is exactly the slice of `task`, starting at signal index `base`.
fn run_task<T: Sample>(plan: &Plan, task: usize, buf: &mut [T], base: usize) -> OpTally {
    let mut tally = OpTally::new();
    let mut scratch = vec![T::ZERO; buf.len() / 2];
    if buf.len() <= SERIAL_CUTOFF {
        run_serial(plan, task, buf, base, &mut scratch, &mut tally);
        return tally;
    }
    haar_levels(buf, &mut scratch, ScalingMode::Unnormalized, &mut tally);
    drop(scratch);

    let sub: OpTally = plan.children[task]
        .par_iter()
        .zip(plan.parts(task, buf, base))
        .map(|(&c, (part, offset))| run_task(plan, c, part, offset))
        .sum();
    tally += sub;
    tally
}

fn run_serial<T: Sample>(
    plan: &Plan,
    task: usize,
    buf: &mut [T],
    base: usize,
    scratch: &mut [T],
    tally: &mut OpTally,
) {
    haar_levels(buf, scratch, ScalingMode::Unnormalized, tally);
    for (&c, (part, offset)) in plan.children[task].iter().zip(plan.parts(task, buf, base)) {
        run_serial(plan, c, part, offset, scratch, tally);
    }
}

/// Carve ordered, disjoint `slices` (absolute indices) out of `buf`, which
/// starts at absolute index `base`.
fn split_disjoint<T>(
    buf: &mut [T],
    base: usize,
    slices: impl Iterator<Item = BlockSlice>,
) -> Vec<(&mut [T], usize)> {
    let mut out = Vec::new();
    let mut rest = buf;
    let mut cursor = base;
    for s in slices {
        let (_, tail) = rest.split_at_mut(s.offset - cursor);
        let (part, tail) = tail.split_at_mut(s.size);
        out.push((part, s.offset));
        rest = tail;
        cursor = s.end();
    }
    out
}

/// One-shot convenience wrapper around [`ParallelExecutor`].
pub fn parallel_execute<T: Sample>(x: &[T], workers: usize, mode: ScalingMode) -> Result<Vec<T>> {
    ParallelExecutor::new(workers)?.execute(x, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::chw_forward;

    #[test]
    fn impulse() {
        for w in [1, 2, 3] {
            assert_eq!(
                parallel_execute(&[1i64, 0, 0, 0], w, ScalingMode::Unnormalized).unwrap(),
                vec![1, 1, 1, 1]
            );
        }
    }

    #[test]
    fn matches_serial_and_counts() {
        let exec = ParallelExecutor::new(4).unwrap();
        for m in 0..=12u32 {
            let x: Vec<i64> = (0..1i64 << m).map(|i| (i * 31) % 17 - 8).collect();
            let mut t = OpTally::new();
            let mut y = x.clone();
            exec.execute_in_place(&mut y, ScalingMode::Unnormalized, &mut t).unwrap();
            assert_eq!(y, chw_forward(&x, ScalingMode::Unnormalized, &mut OpTally::new()).unwrap());
            assert_eq!(t.read(), (u64::from(m) << m, 0));
        }
    }

    #[test]
    fn zero_workers_rejected() {
        assert!(matches!(ParallelExecutor::new(0), Err(Error::Argument(_))));
    }
}

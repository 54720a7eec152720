use serde::{Deserialize, Serialize};

use super::{CostModel, InitialNodePolicy};
use crate::error::{Error, Result};
use crate::signal::BlockSlice;
use crate::transforms::stage_blocks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaskKind {
    InitialFullHaar,
    StageHaar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskSpec {
    pub id: usize,
    pub kind: TaskKind,
    /// Cascade stage, `None` for the initial transform.
    pub stage: Option<u32>,
    pub slice: BlockSlice,
    pub node: u32,
}

impl TaskSpec {
    pub fn transform_size(&self) -> usize {
        self.slice.size
    }

    /// `log2` of the transform size.
    pub fn size_level(&self) -> u32 {
        self.slice.size.trailing_zeros()
    }
}

/// Tasks in cascade order (initial first, then by stage and offset) with one
/// prerequisite per stage task.
#[derive(Debug, Clone)]
pub struct TaskGraph {
    m: u32,
    policy: InitialNodePolicy,
    tasks: Vec<TaskSpec>,
    prerequisite: Vec<Option<usize>>,
}

/// Index of `(stage, q)` in cascade order.
fn task_index(stage: u32, q: usize) -> usize {
    (1usize << (stage - 1)) + q
}

pub fn build_task_graph(m: u32, policy: InitialNodePolicy) -> Result<TaskGraph> {
    if m < 2 {
        return Err(Error::argument(format!(
            "level {m} has no cascade stages; need m >= 2"
        )));
    }
    let n = 1usize << m;
    let initial_node = match policy {
        InitialNodePolicy::ExtraNode => m,
        InitialNodePolicy::ReuseLargestNode => m - 1,
    };
    let mut tasks = vec![TaskSpec {
        id: 0,
        kind: TaskKind::InitialFullHaar,
        stage: None,
        slice: BlockSlice::new(0, n),
        node: initial_node,
    }];
    let mut prerequisite = vec![None];
    for r in 1..m {
        for slice in stage_blocks(m, r)? {
            let id = tasks.len();
            debug_assert_eq!(id, task_index(r, (slice.offset - slice.size) / (2 * slice.size)));
            // the latest earlier stage whose slice covers this one, else the
            // initial transform
            let parent = (1..r)
                .rev()
                .find_map(|rp| {
                    let size = 1usize << (m - rp);
                    (slice.offset % (2 * size) >= size)
                        .then(|| task_index(rp, slice.offset / (2 * size)))
                })
                .unwrap_or(0);
            tasks.push(TaskSpec {
                id,
                kind: TaskKind::StageHaar,
                stage: Some(r),
                slice,
                node: m - r,
            });
            prerequisite.push(Some(parent));
        }
    }
    Ok(TaskGraph {
        m,
        policy,
        tasks,
        prerequisite,
    })
}

impl TaskGraph {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn policy(&self) -> InitialNodePolicy {
        self.policy
    }

    pub fn tasks(&self) -> &[TaskSpec] {
        &self.tasks
    }

    pub fn prerequisite(&self, task: usize) -> Option<usize> {
        self.prerequisite[task]
    }

    /// `(task, prerequisite)` edges.
    pub fn deps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.prerequisite
            .iter()
            .enumerate()
            .filter_map(|(t, p)| p.map(|p| (t, p)))
    }

    /// Dependents of each task, in cascade order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.tasks.len()];
        for (t, p) in self.deps() {
            out[p].push(t);
        }
        out
    }

    /// Node ids in increasing order.
    pub fn nodes(&self) -> Vec<u32> {
        let top = match self.policy {
            InitialNodePolicy::ExtraNode => self.m,
            InitialNodePolicy::ReuseLargestNode => self.m - 1,
        };
        (1..=top).collect()
    }

    pub fn total_work(&self, cost: CostModel) -> u64 {
        self.tasks.iter().map(|t| cost.duration(t.size_level())).sum()
    }

    /// Time after the initial transform's start at which the Haar detail band
    /// holding `slice` is final. The band `[2^j, 2^{j+1})` is written by the
    /// analysis level of length `2^{j+1}`; levels are charged in proportion to
    /// their addition counts and rounded up to whole time units.
    pub fn band_ready_offset(&self, slice: BlockSlice, cost: CostModel) -> u64 {
        let m = self.m;
        let j = usize::BITS - 1 - slice.offset.leading_zeros();
        let total_ops = (2u64 << m) - 2;
        let done_ops = (2u64 << m) - (2u64 << j);
        let duration = cost.duration(m);
        (duration * done_ops).div_ceil(total_ops)
    }
}

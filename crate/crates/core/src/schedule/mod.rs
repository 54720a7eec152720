//! Node-per-scale parallel architecture for the cascade.
//!
//! Node `s` (for `s = 1..m-1`) is dedicated to Haar transforms of size `2^s`.
//! The initial full transform of size `2^m` runs either on an extra node `m`
//! or on the largest scale node `m - 1`. The [`simulate`] function replays
//! this architecture in abstract integer time, and [`ParallelExecutor`] runs
//! the same task graph on a real worker pool.

mod executor;
mod export;
mod graph;
mod simulate;
pub mod validate;

pub use executor::{parallel_execute, ParallelExecutor};
pub use export::ExportFormat;
pub use graph::{build_task_graph, TaskGraph, TaskKind, TaskSpec};
pub use simulate::{occupancy_report, simulate, NodeOccupancy, OccupancyReport};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CostModel {
    /// `2(2^s - 1)` time units for a size-`2^s` Haar transform.
    LemmaOps,
    UnitPerTask,
    LinearInSize,
}

impl CostModel {
    pub const ALL: [CostModel; 3] = [
        CostModel::LemmaOps,
        CostModel::UnitPerTask,
        CostModel::LinearInSize,
    ];

    /// Duration of a Haar transform of size `2^level`.
    pub fn duration(self, level: u32) -> u64 {
        match self {
            CostModel::LemmaOps => 2 * ((1u64 << level) - 1),
            CostModel::UnitPerTask => 1,
            CostModel::LinearInSize => 1u64 << level,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CostModel::LemmaOps => "lemma-ops",
            CostModel::UnitPerTask => "unit-per-task",
            CostModel::LinearInSize => "linear-in-size",
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CostModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CostModel::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::argument(format!("unknown cost model `{s}`")))
    }
}

/// Where the initial full-size Haar transform runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum InitialNodePolicy {
    #[default]
    ExtraNode,
    ReuseLargestNode,
}

impl InitialNodePolicy {
    pub const ALL: [InitialNodePolicy; 2] = [
        InitialNodePolicy::ExtraNode,
        InitialNodePolicy::ReuseLargestNode,
    ];
}

/// One task as placed in time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduledTask {
    pub id: usize,
    pub kind: TaskKind,
    pub stage: Option<u32>,
    pub offset: usize,
    pub size: usize,
    pub node: u32,
    pub start: u64,
    pub end: u64,
}

impl ScheduledTask {
    pub fn duration(&self) -> u64 {
        self.end - self.start
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub m: u32,
    pub cost_model: CostModel,
    pub tasks: Vec<ScheduledTask>,
    pub makespan: u64,
    /// Busy time over makespan, per node.
    pub occupancy: BTreeMap<u32, f64>,
}

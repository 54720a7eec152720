use std::collections::BTreeMap;
use std::fmt;

use super::{CostModel, Schedule, ScheduledTask, TaskGraph, TaskKind};

/// Deterministic list-scheduling replay of the node-per-scale architecture.
///
/// At every event time each idle node, in increasing node id, starts its ready
/// task with the lowest `(stage, offset)`. With `pipelined_initial`, a task fed
/// directly by the initial transform becomes ready once the Haar level that
/// writes its input band has finished, instead of after the whole transform.
pub fn simulate(graph: &TaskGraph, cost: CostModel, pipelined_initial: bool) -> Schedule {
    let tasks = graph.tasks();
    let nodes = graph.nodes();
    let mut free_at: BTreeMap<u32, u64> = nodes.iter().map(|&n| (n, 0)).collect();
    // ready time, known once the prerequisite has been placed
    let mut ready: Vec<Option<u64>> = vec![None; tasks.len()];
    let mut placed: Vec<Option<(u64, u64)>> = vec![None; tasks.len()];
    let mut pending: BTreeMap<u32, Vec<usize>> = nodes.iter().map(|&n| (n, Vec::new())).collect();
    for t in tasks {
        pending.get_mut(&t.node).expect("task on known node").push(t.id);
    }
    let children = graph.children();
    ready[0] = Some(0);

    let mut remaining = tasks.len();
    let mut now = 0u64;
    while remaining > 0 {
        for (&node, queue) in pending.iter_mut() {
            if free_at[&node] > now {
                continue;
            }
            // queues are in cascade order, which is (stage, offset) order
            let Some(pos) = queue
                .iter()
                .position(|&t| ready[t].is_some_and(|r| r <= now))
            else {
                continue;
            };
            let id = queue.remove(pos);
            let end = now + cost.duration(tasks[id].size_level());
            placed[id] = Some((now, end));
            free_at.insert(node, end);
            remaining -= 1;
            for &child in &children[id] {
                let at = if pipelined_initial && tasks[id].kind == TaskKind::InitialFullHaar {
                    now + graph.band_ready_offset(tasks[child].slice, cost)
                } else {
                    end
                };
                ready[child] = Some(at);
            }
        }
        if remaining == 0 {
            break;
        }
        let next_free = free_at.values().copied().filter(|&t| t > now);
        let next_ready = ready
            .iter()
            .zip(&placed)
            .filter_map(|(r, p)| if p.is_none() { *r } else { None })
            .filter(|&t| t > now);
        now = next_free
            .chain(next_ready)
            .min()
            .expect("a future event exists while tasks remain");
    }

    let scheduled: Vec<ScheduledTask> = tasks
        .iter()
        .map(|t| {
            let (start, end) = placed[t.id].expect("every task placed");
            ScheduledTask {
                id: t.id,
                kind: t.kind,
                stage: t.stage,
                offset: t.slice.offset,
                size: t.slice.size,
                node: t.node,
                start,
                end,
            }
        })
        .collect();
    let makespan = scheduled.iter().map(|t| t.end).max().unwrap_or(0);
    let mut busy: BTreeMap<u32, u64> = nodes.iter().map(|&n| (n, 0)).collect();
    for t in &scheduled {
        *busy.get_mut(&t.node).expect("known node") += t.duration();
    }
    let occupancy = busy
        .into_iter()
        .map(|(n, b)| (n, b as f64 / makespan as f64))
        .collect();
    Schedule {
        m: graph.m(),
        cost_model: cost,
        tasks: scheduled,
        makespan,
        occupancy,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeOccupancy {
    pub node: u32,
    pub tasks: usize,
    pub busy: u64,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyReport {
    pub makespan: u64,
    pub nodes: Vec<NodeOccupancy>,
}

impl OccupancyReport {
    pub fn busy(&self, node: u32) -> Option<u64> {
        self.nodes.iter().find(|n| n.node == node).map(|n| n.busy)
    }
}

pub fn occupancy_report(schedule: &Schedule) -> OccupancyReport {
    let mut nodes: BTreeMap<u32, NodeOccupancy> = schedule
        .occupancy
        .keys()
        .map(|&node| {
            (
                node,
                NodeOccupancy {
                    node,
                    tasks: 0,
                    busy: 0,
                    fraction: 0.0,
                },
            )
        })
        .collect();
    for t in &schedule.tasks {
        let entry = nodes.entry(t.node).or_insert(NodeOccupancy {
            node: t.node,
            tasks: 0,
            busy: 0,
            fraction: 0.0,
        });
        entry.tasks += 1;
        entry.busy += t.duration();
    }
    for n in nodes.values_mut() {
        n.fraction = n.busy as f64 / schedule.makespan as f64;
    }
    OccupancyReport {
        makespan: schedule.makespan,
        nodes: nodes.into_values().collect(),
    }
}

impl fmt::Display for OccupancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "makespan={}", self.makespan)?;
        writeln!(f, "{:>6} {:>8} {:>10} {:>10}", "node", "tasks", "busy", "occupancy")?;
        for n in &self.nodes {
            writeln!(
                f,
                "{:>6} {:>8} {:>10} {:>10.4}",
                n.node, n.tasks, n.busy, n.fraction
            )?;
        }
        Ok(())
    }
}

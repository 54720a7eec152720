//! Stand-alone checker for exported schedules.
//!
//! Works on the raw JSON document and re-derives the task census, the
//! dependency structure and the task durations from first principles, sharing
//! no code with the graph builder or the simulator.

use std::collections::{BTreeMap, HashMap};

use serde_json::Value;

#[derive(Debug, Clone)]
struct Row {
    id: usize,
    initial: bool,
    stage: Option<u64>,
    offset: u64,
    size: u64,
    node: u64,
    start: u64,
    end: u64,
}

fn field_u64(v: &Value, key: &str, errs: &mut Vec<String>) -> u64 {
    v.get(key).and_then(Value::as_u64).unwrap_or_else(|| {
        errs.push(format!("missing or non-integer `{key}`"));
        0
    })
}

fn parse_row(i: usize, v: &Value, errs: &mut Vec<String>) -> Row {
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or_default();
    let initial = match kind {
        "initial-full-haar" => true,
        "stage-haar" => false,
        other => {
            errs.push(format!("task {i}: unknown kind `{other}`"));
            false
        }
    };
    let stage = v.get("stage").and_then(Value::as_u64);
    Row {
        id: field_u64(v, "id", errs) as usize,
        initial,
        stage,
        offset: field_u64(v, "offset", errs),
        size: field_u64(v, "size", errs),
        node: field_u64(v, "node", errs),
        start: field_u64(v, "start", errs),
        end: field_u64(v, "end", errs),
    }
}

fn cost_of(model: &str, size: u64) -> Option<u64> {
    match model {
        "lemma-ops" => Some(2 * (size - 1)),
        "unit-per-task" => Some(1),
        "linear-in-size" => Some(size),
        _ => None,
    }
}

/// Delay after the initial task starts until the Haar output band containing
/// `offset` is final. Analysis levels run on lengths `n, n/2, ..., 2`; the
/// level of length `L` writes details into `[L/2, L)` and costs `L` additions.
fn band_delay(model: &str, n: u64, offset: u64) -> u64 {
    let duration = cost_of(model, n).unwrap_or(0);
    let mut total = 0;
    let mut done = 0;
    let mut len = n;
    let mut reached = false;
    while len >= 2 {
        total += len;
        if !reached {
            done += len;
            reached = len / 2 <= offset && offset < len;
        }
        len /= 2;
    }
    (duration * done).div_ceil(total)
}

/// Returns every violated property; an empty list means the schedule is valid.
pub fn validate_schedule_json(text: &str, pipelined_initial: bool) -> Vec<String> {
    match serde_json::from_str::<Value>(text) {
        Ok(v) => validate_schedule_value(&v, pipelined_initial),
        Err(e) => vec![format!("not valid JSON: {e}")],
    }
}

pub fn validate_schedule_value(doc: &Value, pipelined_initial: bool) -> Vec<String> {
    let mut errs = Vec::new();
    let m = field_u64(doc, "m", &mut errs);
    let makespan = field_u64(doc, "makespan", &mut errs);
    let model = doc
        .get("cost_model")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_owned();
    if cost_of(&model, 2).is_none() {
        errs.push(format!("unknown cost model `{model}`"));
        return errs;
    }
    if !(2..=40).contains(&m) {
        errs.push(format!("m = {m} outside 2..=40"));
        return errs;
    }
    let n = 1u64 << m;
    let Some(raw) = doc.get("tasks").and_then(Value::as_array) else {
        errs.push("missing `tasks` array".into());
        return errs;
    };
    let rows: Vec<Row> = raw
        .iter()
        .enumerate()
        .map(|(i, v)| parse_row(i, v, &mut errs))
        .collect();
    if !errs.is_empty() {
        return errs;
    }

    // census: one full transform plus, for each stage, one transform per odd
    // multiple of its size
    let mut expected: Vec<(Option<u64>, u64, u64)> = vec![(None, 0, n)];
    for r in 1..m {
        let size = n >> r;
        let mut offset = size;
        while offset < n {
            expected.push((Some(r), offset, size));
            offset += 2 * size;
        }
    }
    let mut actual: Vec<(Option<u64>, u64, u64)> =
        rows.iter().map(|r| (r.stage, r.offset, r.size)).collect();
    actual.sort();
    expected.sort();
    if actual != expected {
        errs.push(format!(
            "task census mismatch: {} tasks, expected {}",
            actual.len(),
            expected.len()
        ));
        return errs;
    }
    let mut ids: Vec<usize> = rows.iter().map(|r| r.id).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != rows.len() {
        errs.push("duplicate task ids".into());
    }

    for r in &rows {
        if r.initial != r.stage.is_none() {
            errs.push(format!("task {}: kind and stage disagree", r.id));
        }
        if r.end < r.start || r.end - r.start != cost_of(&model, r.size).unwrap() {
            errs.push(format!(
                "task {}: duration {}..{} does not match {model} cost of size {}",
                r.id, r.start, r.end, r.size
            ));
        }
        let size_level = r.size.trailing_zeros() as u64;
        let node_ok = if r.initial {
            r.node == m || r.node == m - 1
        } else {
            r.node == size_level
        };
        if !node_ok {
            errs.push(format!("task {}: size {} on node {}", r.id, r.size, r.node));
        }
    }

    // no overlap per node
    let mut by_node: BTreeMap<u64, Vec<&Row>> = BTreeMap::new();
    for r in &rows {
        by_node.entry(r.node).or_default().push(r);
    }
    for (node, list) in by_node.iter_mut() {
        list.sort_by_key(|r| (r.start, r.end));
        for w in list.windows(2) {
            if w[1].start < w[0].end {
                errs.push(format!(
                    "node {node}: tasks {} and {} overlap",
                    w[0].id, w[1].id
                ));
            }
        }
    }

    // dependencies by brute-force containment
    let initial = rows.iter().find(|r| r.initial).expect("census has an initial task");
    let mut earliest: HashMap<usize, u64> = HashMap::new();
    let mut ordered: Vec<&Row> = rows.iter().collect();
    ordered.sort_by_key(|r| (r.stage.unwrap_or(0), r.offset));
    earliest.insert(initial.id, 0);
    let mut longest = cost_of(&model, n).unwrap();
    for r in ordered.iter().filter(|r| !r.initial) {
        let parent = rows
            .iter()
            .filter(|p| {
                !p.initial
                    && p.stage < r.stage
                    && p.offset <= r.offset
                    && r.offset + r.size <= p.offset + p.size
            })
            .max_by_key(|p| p.stage)
            .unwrap_or(initial);
        let (ready, ready_lb) = if parent.initial && pipelined_initial {
            let d = band_delay(&model, n, r.offset);
            (parent.start + d, earliest[&parent.id] + d)
        } else {
            let d = parent.end - parent.start;
            (parent.end, earliest[&parent.id] + d)
        };
        if r.start < ready {
            errs.push(format!(
                "task {} starts at {} before its input is ready at {}",
                r.id, r.start, ready
            ));
        }
        earliest.insert(r.id, ready_lb);
        longest = longest.max(ready_lb + (r.end - r.start));
    }

    let max_end = rows.iter().map(|r| r.end).max().unwrap_or(0);
    if makespan != max_end {
        errs.push(format!("makespan {makespan} != latest end {max_end}"));
    }
    if makespan < longest {
        errs.push(format!(
            "makespan {makespan} shorter than dependency path {longest}"
        ));
    }

    let occupancy = doc.get("occupancy").and_then(Value::as_object);
    match occupancy {
        None => errs.push("missing `occupancy` map".into()),
        Some(occ) => {
            if occ.len() != by_node.len() {
                errs.push(format!(
                    "occupancy lists {} nodes, schedule uses {}",
                    occ.len(),
                    by_node.len()
                ));
            }
            for (node, list) in &by_node {
                let busy: u64 = list.iter().map(|r| r.end - r.start).sum();
                let want = busy as f64 / makespan as f64;
                match occ.get(&node.to_string()).and_then(Value::as_f64) {
                    Some(f) if (f - want).abs() <= 1e-12 && f > 0.0 && f <= 1.0 => {}
                    other => errs.push(format!(
                        "node {node}: occupancy {other:?}, expected {want}"
                    )),
                }
            }
        }
    }
    errs
}

use std::fs::File;
use std::io::{BufWriter, Write};

use chw_core::schedule::validate::validate_schedule_json;
use chw_core::{build_task_graph, occupancy_report, simulate, Error, ExportFormat};

use crate::args::{ScheduleFormat, SimulateArgs};
use crate::Failure;

pub fn run(args: SimulateArgs) -> Result<(), Failure> {
    if args.m < 2 {
        return Err(Failure::Usage(format!(
            "-m {} has no cascade stages; need m >= 2",
            args.m
        )));
    }
    let graph = build_task_graph(args.m, args.policy.into())?;
    let schedule = simulate(&graph, args.cost.into(), args.pipelined);
    let format = match args.format {
        ScheduleFormat::Json => ExportFormat::Json,
        ScheduleFormat::Csv => ExportFormat::Csv,
    };

    match &args.output {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            schedule.export(format, &mut w)?;
            w.flush().map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
        }
        None => schedule.export(format, std::io::stdout().lock())?,
    }

    eprint!("{}", occupancy_report(&schedule));
    let violations = validate_schedule_json(&schedule.to_json()?, args.pipelined);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "schedule failed validation: {}",
            violations.join("; ")
        )))
    }
}

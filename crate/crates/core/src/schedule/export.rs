use std::io::Write;
use std::str::FromStr;

use super::Schedule;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::argument(format!("unknown export format `{other}`"))),
        }
    }
}

fn ser_err(e: impl std::fmt::Display) -> Error {
    Error::Serialization(e.to_string())
}

impl Schedule {
    /// Write the schedule as JSON (the whole schedule) or CSV (one row per
    /// task with a header row).
    pub fn export<W: Write>(&self, format: ExportFormat, out: W) -> Result<()> {
        match format {
            ExportFormat::Json => {
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, self).map_err(ser_err)?;
                writeln!(out).map_err(ser_err)
            }
            ExportFormat::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                for t in &self.tasks {
                    writer.serialize(t).map_err(ser_err)?;
                }
                writer.flush().map_err(ser_err)
            }
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.export(ExportFormat::Json, &mut buf)?;
        String::from_utf8(buf).map_err(ser_err)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(ser_err)
    }
}

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::Format;

/// A finished command: its JSON payload, the same data as a CSV table,
/// and the exit status it asks for.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub status: u8,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, params: Value, result: Value) -> Self {
        Report {
            command,
            params,
            result,
            header: Vec::new(),
            rows: Vec::new(),
            status: 0,
            failure: None,
        }
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|h| h.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn fail_with(mut self, status: u8, msg: impl Into<String>) -> Self {
        self.status = status;
        self.failure = Some(msg.into());
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: &'a Value,
    format: &'a str,
    result: &'a Value,
}

fn write_report(report: &Report, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let env = Envelope {
                command: report.command,
                params: &report.params,
                format: format.name(),
                result: &report.result,
            };
            serde_json::to_writer_pretty(&mut *w, &env)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut csv = csv::WriterBuilder::new().flexible(true).from_writer(w);
            csv.write_record(&report.header)?;
            for row in &report.rows {
                csv.write_record(row)?;
            }
            csv.flush()
        }
    }
}

pub fn emit(report: &Report, format: Format, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut f = File::create(path)?;
            write_report(report, format, &mut f)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_report(report, format, &mut lock)
        }
    }
}

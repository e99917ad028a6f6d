use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use satlab::bounds::BoundReport;
use serde::Serialize;

use crate::Failure;

/// First line of every CSV report.
pub const CSV_SCHEMA: &str = "# satlab bound-report v1";

pub const CSV_COLUMNS: [&str; 10] = ["name", "n", "s", "t", "lhs", "rhs", "holds", "equality", "asserted", "graph"];

pub struct Sink(Box<dyn Write>);

impl Sink {
    pub fn open(path: Option<&PathBuf>) -> Result<Sink, Failure> {
        Ok(Sink(match path {
            Some(p) if p.as_os_str() != "-" => Box::new(BufWriter::new(
                File::create(p).map_err(|e| Failure::io(format!("{}: {e}", p.display())))?,
            )),
            _ => Box::new(BufWriter::new(io::stdout())),
        }))
    }

    pub fn line(&mut self, text: &str) -> Result<(), Failure> {
        writeln!(self.0, "{text}").map_err(|e| Failure::io(format!("writing output: {e}")))
    }

    /// One JSON document on one line, object keys sorted.
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = to_sorted_json(value)?;
        self.line(&text)
    }

    pub fn csv(&mut self, reports: &[BoundReport]) -> Result<(), Failure> {
        self.line(CSV_SCHEMA)?;
        let mut w = csv::Writer::from_writer(&mut self.0);
        let io_err = |e: csv::Error| Failure::io(format!("writing CSV: {e}"));
        w.write_record(CSV_COLUMNS).map_err(io_err)?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in reports {
            w.write_record([
                r.name.clone(),
                r.n.to_string(),
                opt(r.s),
                opt(r.t),
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.holds.to_string(),
                r.equality.to_string(),
                r.asserted.to_string(),
                r.graph.clone().unwrap_or_default(),
            ])
            .map_err(io_err)?;
        }
        w.flush().map_err(|e| Failure::io(format!("writing CSV: {e}")))
    }

    pub fn finish(mut self) -> Result<(), Failure> {
        self.0.flush().map_err(|e| Failure::io(format!("writing output: {e}")))
    }
}

/// serde_json's default map is ordered by key, so a round trip through
/// `Value` sorts every object.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let v = serde_json::to_value(value).map_err(|e| Failure::data(format!("serializing output: {e}")))?;
    Ok(v.to_string())
}

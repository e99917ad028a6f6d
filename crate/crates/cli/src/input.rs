//! Where graphs come from: a file, standard input, an inline graph6 string or
//! a named family.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use satlab::constructions::{make, FamilySpec};
use satlab::graph6::{from_graph6, parse_lines};
use satlab::Graph;

use crate::Failure;

#[derive(Args, Debug, Clone, Default)]
pub struct GraphSource {
    /// graph6 file, one graph per line ("-" for standard input)
    #[arg(short = 'i', long = "input", conflicts_with_all = ["graph", "family"])]
    pub input: Option<PathBuf>,

    /// Inline graph6 string
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<String>,

    /// Named family, e.g. "petersen" or "ehm:n=10,s=4"
    #[arg(long)]
    pub family: Option<String>,
}

pub fn parse_family(text: &str) -> Result<FamilySpec, Failure> {
    Ok(text.parse()?)
}

pub fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::io(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
    }
}

impl GraphSource {
    /// The graphs named by this source; standard input when nothing is given.
    pub fn graphs(&self) -> Result<Vec<Graph>, Failure> {
        if let Some(g6) = &self.graph {
            return Ok(vec![from_graph6(g6)?]);
        }
        if let Some(f) = &self.family {
            return Ok(vec![make(parse_family(f)?)?]);
        }
        let path = self.input.clone().unwrap_or_else(|| PathBuf::from("-"));
        let text = read_text(&path)?;
        let graphs = parse_lines(&text)?;
        if graphs.is_empty() {
            return Err(Failure::usage("no graphs in input"));
        }
        Ok(graphs)
    }
}

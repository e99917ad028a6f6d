//! Pattern mini-language: `k_s` (clique), `k_a_b` (complete bipartite),
//! `c_r` (cycle), `g6:<graph6>` (explicit pattern).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructions::{complete, complete_bipartite, cycle};
use crate::count::{
    count_cliques, count_cycles, count_embeddings, count_kab, BipartitePattern, CopyCount, PatternGraph,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Clique(usize),
    Bipartite(BipartitePattern),
    Cycle(usize),
    Graph(PatternGraph),
}

impl Pattern {
    /// Number of copies in `g`, through the specialized counter where one exists.
    pub fn count(&self, g: &Graph) -> Result<CopyCount> {
        match self {
            Pattern::Clique(r) => count_cliques(g, *r),
            Pattern::Bipartite(p) => count_kab(g, *p),
            Pattern::Cycle(r) => count_cycles(g, *r),
            Pattern::Graph(f) => count_embeddings(g, f),
        }
    }

    /// The pattern as an explicit graph.
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Pattern::Clique(r) => complete(*r),
            Pattern::Bipartite(p) => complete_bipartite(p.a(), p.b()),
            Pattern::Cycle(r) => cycle(*r),
            Pattern::Graph(f) => Ok(f.graph().clone()),
        }
    }

    pub fn to_pattern_graph(&self) -> Result<PatternGraph> {
        PatternGraph::new(self.to_graph()?)
    }
}

fn bad(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        if let Some(g6) = s.strip_prefix("g6:") {
            let g = from_graph6(g6).map_err(|e| match e {
                Error::Parse { offset, message } => bad(offset + 3, message),
                other => other,
            })?;
            return Ok(Pattern::Graph(PatternGraph::new(g)?));
        }
        let parts: Vec<&str> = s.split('_').collect();
        let num = |i: usize| -> Result<usize> {
            let offset: usize = parts[..i].iter().map(|p| p.len() + 1).sum();
            parts[i]
                .parse()
                .map_err(|_| bad(offset, format!("expected an integer, found '{}'", parts[i])))
        };
        match (parts[0], parts.len()) {
            ("k", 2) => {
                let r = num(1)?;
                if r == 0 {
                    return Err(bad(2, "clique size must be positive"));
                }
                Ok(Pattern::Clique(r))
            }
            ("k", 3) => Ok(Pattern::Bipartite(BipartitePattern::new(num(1)?, num(2)?)?)),
            ("c", 2) => {
                let r = num(1)?;
                if !(3..=8).contains(&r) {
                    return Err(bad(2, "cycle length must be in 3..=8"));
                }
                Ok(Pattern::Cycle(r))
            }
            _ => Err(bad(0, format!("unrecognized pattern '{s}' (use k_s, k_a_b, c_r or g6:...)"))),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Clique(r) => write!(f, "k_{r}"),
            Pattern::Bipartite(p) => write!(f, "k_{}_{}", p.a(), p.b()),
            Pattern::Cycle(r) => write!(f, "c_{r}"),
            Pattern::Graph(g) => write!(f, "g6:{}", to_graph6(g.graph())),
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

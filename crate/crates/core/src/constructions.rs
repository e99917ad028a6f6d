//! Named graph families.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::Graph;

/// A graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_{s-2} + complement(K_{n-s+2})`.
    Ehm { n: usize, s: usize },
    /// `K_{1,n-1}`.
    Star { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Empty { n: usize },
    Petersen,
    HoffmanSingleton,
}

impl FamilySpec {
    /// Builds a spec from a family name and optional integer parameters.
    pub fn from_name(
        name: &str,
        n: Option<usize>,
        s: Option<usize>,
        a: Option<usize>,
        b: Option<usize>,
    ) -> Result<FamilySpec> {
        let need = |p: Option<usize>, what: &str| match p {
            Some(v) => Ok(v),
            None => input(format!("family {name} requires --{what}")),
        };
        Ok(match name {
            "ehm" => FamilySpec::Ehm {
                n: need(n, "n")?,
                s: need(s, "s")?,
            },
            "star" => FamilySpec::Star { n: need(n, "n")? },
            "cycle" => FamilySpec::Cycle { n: need(n, "n")? },
            "complete" => FamilySpec::Complete { n: need(n, "n")? },
            "complete_bipartite" => FamilySpec::CompleteBipartite {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            "empty" => FamilySpec::Empty { n: need(n, "n")? },
            "petersen" => FamilySpec::Petersen,
            "hoffman_singleton" => FamilySpec::HoffmanSingleton,
            other => return input(format!("unknown family '{other}'")),
        })
    }
}

/// `name[:key=value,...]` with keys `n`, `s`, `a`, `b`, e.g. `ehm:n=10,s=4`.
impl std::str::FromStr for FamilySpec {
    type Err = crate::Error;

    fn from_str(text: &str) -> Result<FamilySpec> {
        let (name, params) = text.split_once(':').unwrap_or((text, ""));
        let mut vals: [Option<usize>; 4] = [None; 4];
        for part in params.split(',').filter(|p| !p.is_empty()) {
            let Some((k, v)) = part.split_once('=') else {
                return input(format!("family parameter '{part}' is not key=value"));
            };
            let slot = match k.trim() {
                "n" => 0,
                "s" => 1,
                "a" => 2,
                "b" => 3,
                other => return input(format!("unknown family parameter '{other}'")),
            };
            match v.trim().parse() {
                Ok(x) => vals[slot] = Some(x),
                Err(_) => return input(format!("family parameter {k} needs an integer, got '{v}'")),
            }
        }
        FamilySpec::from_name(name.trim(), vals[0], vals[1], vals[2], vals[3])
    }
}

/// Builds the graph named by `spec`.
pub fn make(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Ehm { n, s } => ehm_graph(n, s),
        FamilySpec::Star { n } => star(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
        FamilySpec::Empty { n } => empty(n),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::HoffmanSingleton => Ok(hoffman_singleton()),
    }
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::new(n)
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::new(n)?.complement())
}

/// The clique occupies vertices `0..s-2`.
pub fn ehm_graph(n: usize, s: usize) -> Result<Graph> {
    if s < 2 {
        return input(format!("ehm graph needs s >= 2, got s={s}"));
    }
    if n < s {
        return input(format!("ehm graph needs n >= s, got n={n}, s={s}"));
    }
    complete(s - 2)?.join(&empty(n - s + 2)?)
}

/// `K_{1,n-1}` on `n >= 1` vertices with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("star needs n >= 1");
    }
    complete(1)?.join(&empty(n - 1)?)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("cycle needs n >= 3, got {n}"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return input(format!("complete bipartite graph needs a, b >= 1, got ({a},{b})"));
    }
    empty(a)?.join(&empty(b)?)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Pentagons `P_h` (vertex `j` at `5h + j`) and pentagrams `Q_i` (vertex `j`
/// at `25 + 5i + j`); vertex `j` of `P_h` is adjacent to vertex `h*i + j mod 5` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let mut g = Graph::new(50).unwrap();
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(p(h, j), p(h, j + 1));
            g.add_edge(q(h, j), q(h, j + 2));
            for i in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g
}

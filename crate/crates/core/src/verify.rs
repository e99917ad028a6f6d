//! Sweeps: every `K_s`-saturated graph up to isomorphism on `s..=n_max`
//! vertices is run through the per-instance checks, and exact search results
//! are compared with the closed forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    check_k12_floor, check_k2t_floor, check_k4minus_chain, check_kkko, check_star_bound, check_star_power_mean, formula,
    BoundReport, Formula, FormulaValue, Num, Relation,
};
use crate::constructions::ehm_graph;
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::pattern::Pattern;
use crate::saturation::{build_witness_hypergraph, is_ks_saturated};
use crate::search::{for_each_graph, min_count_over_saturated, Hereditary, SearchOptions, MAX_ENUM_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Kkko,
    K4minus,
    Prop21,
    Hypergraph,
    Formulas,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["kkko", "k4minus", "prop21", "hypergraph", "formulas", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Kkko, Suite::K4minus, Suite::Prop21, Suite::Hypergraph, Suite::Formulas],
            one => vec![one],
        }
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "kkko" => Suite::Kkko,
            "k4minus" => Suite::K4minus,
            "prop21" => Suite::Prop21,
            "hypergraph" => Suite::Hypergraph,
            "formulas" => Suite::Formulas,
            "all" => Suite::All,
            other => return input(format!("unknown suite '{other}' (expected one of {})", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Kkko, Suite::K4minus, Suite::Prop21, Suite::Hypergraph, Suite::Formulas, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// All `K_s`-saturated graphs on `n` vertices, one per isomorphism class.
pub fn saturated_graphs(n: usize, s: usize) -> Result<Vec<Graph>> {
    if s < 2 {
        return input(format!("K_s saturation needs s >= 2, got {s}"));
    }
    let mut out = Vec::new();
    for_each_graph(n, &Hereditary::KsFree(s), None, |g| {
        if is_ks_saturated(g, s).is_saturated {
            out.push(g.clone());
        }
    })?;
    Ok(out)
}

/// Witness hypergraph invariants at every vertex with a non-neighbor.
pub fn hypergraph_reports(g: &Graph, s: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v)?;
        if d + 1 == g.n() {
            continue;
        }
        let h = build_witness_hypergraph(g, v, s)?;
        let ok = h.check_invariants(g).is_ok();
        out.push(BoundReport {
            name: "witness_hypergraph".into(),
            relation: Relation::Equal,
            n: g.n(),
            s: Some(s),
            t: None,
            lhs: Num::Int(h.edges.len() as i128),
            rhs: Num::Int((g.n() - d - 1) as i128),
            holds: ok,
            equality: h.edges.len() == g.n() - d - 1,
            asserted: true,
            graph: Some(to_graph6(g)),
        });
    }
    Ok(out)
}

/// The per-instance reports of one suite for one graph.
pub fn instance_reports(suite: Suite, g: &Graph, s: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::Kkko => {
                out.extend(check_kkko(g, s).into_vec());
                if g.n() >= 3 && (s == 3 || (s >= 4 && g.n() >= s)) {
                    out.push(check_k12_floor(g, s)?);
                }
            }
            Suite::K4minus => {
                let (a, b) = check_k4minus_chain(g, s)?;
                out.push(a);
                out.push(b);
                out.push(check_k2t_floor(g, 2)?);
                out.push(check_k2t_floor(g, 3)?);
            }
            Suite::Prop21 => {
                if s >= 3 && g.n() >= s {
                    for t in [3, 4] {
                        out.push(check_star_bound(g, s, t)?);
                    }
                    for t in [2, 3, 4] {
                        out.push(check_star_power_mean(g, s, t)?);
                    }
                }
            }
            Suite::Hypergraph => out.extend(hypergraph_reports(g, s)?),
            Suite::Formulas | Suite::All => {}
        }
    }
    Ok(out)
}

fn int_formula(f: Formula) -> Result<i128> {
    match formula(f)? {
        FormulaValue::Int(v) => Ok(v as i128),
        FormulaValue::Real(_) => unreachable!("integer formula"),
    }
}

#[allow(clippy::too_many_arguments)]
fn plain(name: &str, relation: Relation, n: usize, s: usize, t: Option<usize>, lhs: i128, rhs: i128, asserted: bool) -> BoundReport {
    let holds = match relation {
        Relation::AtLeast => lhs >= rhs,
        Relation::AtMost => lhs <= rhs,
        Relation::Equal => lhs == rhs,
    };
    BoundReport {
        name: name.into(),
        relation,
        n,
        s: Some(s),
        t,
        lhs: Num::Int(lhs),
        rhs: Num::Int(rhs),
        holds,
        equality: lhs == rhs,
        asserted,
        graph: None,
    }
}

/// Exact search values against the closed forms at `(n, s)`.
pub fn formula_reports(n: usize, s: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    let opts = SearchOptions::default();
    let f = Pattern::Clique(s);
    let ehm_key = to_graph6(&crate::canon::canonical_graph(&ehm_graph(n, s)?)?);
    let unique_ehm = |r: &crate::search::SatRecord| r.minimizers == 1 && r.extremal == [ehm_key.clone()];

    let edges = min_count_over_saturated(n, &Pattern::Clique(2), &f, opts)?;
    let mut rep = plain(
        "sat_edges",
        Relation::Equal,
        n,
        s,
        None,
        edges.min_count.value() as i128,
        int_formula(Formula::EhmEdges { n, s })?,
        true,
    );
    rep.holds &= unique_ehm(&edges);
    rep.graph = edges.extremal.first().cloned();
    out.push(rep);

    let k12 = min_count_over_saturated(n, &"k_1_2".parse()?, &f, opts)?;
    if s >= 4 {
        let mut rep = plain(
            "sat_k12",
            Relation::Equal,
            n,
            s,
            Some(2),
            k12.min_count.value() as i128,
            int_formula(Formula::Thm12K12 { n, s })?,
            true,
        );
        rep.holds &= unique_ehm(&k12);
        rep.graph = k12.extremal.first().cloned();
        out.push(rep);
    } else if s == 3 {
        let value = k12.min_count.value() as i128;
        let upper = crate::count::binomial(n as u64 - 1, 2).unwrap() as i128;
        out.push(plain("sat_k12_upper", Relation::AtMost, n, s, Some(2), value, upper, true));
        // value >= C(n,2) - n^{3/2}/2  <=>  2(C(n,2) - value) <= n^{3/2}.
        let gap = 2 * (crate::count::binomial(n as u64, 2).unwrap() as i128 - value);
        let holds = gap <= 0 || (gap * gap) as u128 <= (n as u128).pow(3);
        let FormulaValue::Real(lower) = formula(Formula::Thm11Lower { n })? else {
            unreachable!()
        };
        out.push(BoundReport {
            name: "sat_k12_lower".into(),
            relation: Relation::AtLeast,
            n,
            s: Some(s),
            t: Some(2),
            lhs: Num::Int(value),
            rhs: Num::Real(lower),
            holds,
            equality: gap >= 0 && (gap * gap) as u128 == (n as u128).pow(3),
            asserted: true,
            graph: k12.extremal.first().cloned(),
        });
    }

    // The closed form for K_r counts is a value on the extremal join; whether
    // it is the minimum is not claimed, so mismatches are informational.
    for r in 3..s {
        let rec = min_count_over_saturated(n, &Pattern::Clique(r), &f, opts)?;
        let mut rep = plain(
            "sat_kr_vs_cl_kr",
            Relation::Equal,
            n,
            s,
            Some(r),
            rec.min_count.value() as i128,
            int_formula(Formula::ClKr { n, r, s })?,
            false,
        );
        rep.graph = rec.extremal.first().cloned();
        out.push(rep);
    }
    Ok(out)
}

/// Every report of `suite` at one `(n, s)`.
pub fn reports_at(suite: Suite, n: usize, s: usize) -> Result<Vec<BoundReport>> {
    if n > MAX_ENUM_N {
        return input(format!("sweeps support n <= {MAX_ENUM_N}, got {n}"));
    }
    if s < 3 || n < s {
        return input(format!("sweeps need n >= s >= 3, got n={n}, s={s}"));
    }
    let mut out = Vec::new();
    let parts = suite.parts();
    if parts.iter().any(|p| *p != Suite::Formulas) {
        for g in saturated_graphs(n, s)? {
            for p in &parts {
                out.extend(instance_reports(*p, &g, s)?);
            }
        }
    }
    if parts.contains(&Suite::Formulas) {
        out.extend(formula_reports(n, s)?);
    }
    Ok(out)
}

/// Canonical report order: (s, n, graph6, name, t).
pub fn sort_reports(reports: &mut [BoundReport]) {
    reports.sort_by(|a, b| (a.s, a.n, &a.graph, &a.name, a.t).cmp(&(b.s, b.n, &b.graph, &b.name, b.t)));
}

/// Runs `suite` for every `s` in `s_values` and every `n` in `s..=n_max`,
/// in canonical order.
pub fn run(suite: Suite, s_values: &[usize], n_max: usize) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &s in s_values {
        if s < 3 {
            return input(format!("sweeps need s >= 3, got {s}"));
        }
        for n in s..=n_max {
            out.extend(reports_at(suite, n, s)?);
        }
    }
    sort_reports(&mut out);
    Ok(out)
}

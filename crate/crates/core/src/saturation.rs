//! Freeness and saturation verdicts, clique witnesses for non-edges, and the
//! witness hypergraph around a vertex.

use serde::{Deserialize, Serialize};

use crate::count::{binomial, find_copy, PatternGraph};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Verdict on `F`-freeness and `F`-saturation, with a witness either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub is_free: bool,
    /// Vertex set hosting a copy of `F` when the graph is not `F`-free.
    pub free_violation: Option<VertexSet>,
    pub is_saturated: bool,
    /// A non-edge whose addition creates no copy of `F`.
    pub saturation_violation: Option<(usize, usize)>,
}

impl SaturationReport {
    fn not_free(witness: VertexSet) -> SaturationReport {
        SaturationReport {
            is_free: false,
            free_violation: Some(witness),
            is_saturated: false,
            saturation_violation: None,
        }
    }

    fn free(violation: Option<(usize, usize)>) -> SaturationReport {
        SaturationReport {
            is_free: true,
            free_violation: None,
            is_saturated: violation.is_none(),
            saturation_violation: violation,
        }
    }
}

/// Lexicographically first `k`-clique inside `cand`, by depth-first search in
/// increasing vertex order.
pub fn find_clique(g: &Graph, cand: VertexSet, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    if cand.len() < k {
        return None;
    }
    for v in cand {
        let rest = cand.above(v);
        if rest.len() + 1 < k {
            break;
        }
        if let Some(c) = find_clique(g, rest.intersection(g.neighbors(v)), k - 1) {
            return Some(c.with(v));
        }
    }
    None
}

/// An `s`-clique of `g`, if one exists.
pub fn ks_witness(g: &Graph, s: usize) -> Option<VertexSet> {
    find_clique(g, g.vertices(), s)
}

pub fn is_ks_free(g: &Graph, s: usize) -> bool {
    ks_witness(g, s).is_none()
}

fn check_non_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() {
        return input(format!("pair ({u},{v}) out of range for n={}", g.n()));
    }
    if u == v {
        return input(format!("pair ({u},{v}) is not two distinct vertices"));
    }
    if g.has_edge(u, v) {
        return input(format!("({u},{v}) is already an edge"));
    }
    Ok(())
}

/// Whether adding the non-edge `uv` creates a `K_s`: true exactly when
/// `N(u,v)` contains an `(s-2)`-clique.
pub fn creates_ks(g: &Graph, u: usize, v: usize, s: usize) -> Result<bool> {
    check_non_edge(g, u, v)?;
    Ok(find_clique(g, g.common_neighbors(u, v), s.saturating_sub(2)).is_some())
}

/// Full `K_s`-saturation report. The reported saturation violation is the
/// first failing non-edge in row-major order.
pub fn is_ks_saturated(g: &Graph, s: usize) -> SaturationReport {
    if let Some(w) = ks_witness(g, s) {
        return SaturationReport::not_free(w);
    }
    let k = s.saturating_sub(2);
    let violation = g
        .non_edges()
        .find(|&(u, v)| find_clique(g, g.common_neighbors(u, v), k).is_none());
    SaturationReport::free(violation)
}

/// Saturation report for an arbitrary pattern with at least one edge.
pub fn is_h_saturated(g: &Graph, h: &PatternGraph) -> Result<SaturationReport> {
    if h.graph().edge_count() == 0 {
        return input("saturation pattern must have at least one edge");
    }
    if let Some(w) = find_copy(g, h) {
        return Ok(SaturationReport::not_free(w));
    }
    let violation = g
        .non_edges()
        .find(|&(u, v)| find_copy(&g.with_edge(u, v), h).is_none());
    Ok(SaturationReport::free(violation))
}

/// A non-edge `uv` with an `(s-2)`-clique inside `N(u,v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub u: usize,
    pub v: usize,
    pub s_set: VertexSet,
}

/// The lexicographically first `(s-2)`-clique in `N(u,v)`.
pub fn clique_witness(g: &Graph, u: usize, v: usize, s: usize) -> Result<CliqueWitness> {
    check_non_edge(g, u, v)?;
    match find_clique(g, g.common_neighbors(u, v), s.saturating_sub(2)) {
        Some(s_set) => Ok(CliqueWitness { u, v, s_set }),
        None => Err(Error::Precondition(format!(
            "no K_{} in N({u},{v}); graph is not K_{s}-saturated",
            s.saturating_sub(2)
        ))),
    }
}

/// One hyperedge `{u} ∪ S_u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperEdge {
    /// The vertex outside the closed neighborhood of the center.
    pub outside: usize,
    /// `S_u`, an `(s-2)`-clique inside `N(center) ∩ N(outside)`.
    pub inside: VertexSet,
}

impl HyperEdge {
    pub fn vertices(&self) -> VertexSet {
        self.inside.with(self.outside)
    }
}

/// The `(s-1)`-uniform hypergraph on `V \ {v}` with one edge `{u} ∪ S_u` per
/// vertex `u` outside `N[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessHypergraph {
    pub center: usize,
    pub s: usize,
    pub ground: VertexSet,
    pub edges: Vec<HyperEdge>,
}

impl WitnessHypergraph {
    /// `d_H(X)`: edges containing every vertex of `xs`.
    pub fn degree_of(&self, xs: VertexSet) -> usize {
        self.edges.iter().filter(|e| xs.is_subset(e.vertices())).count()
    }

    /// `d_H(y, X)`: edges containing `y` and every vertex of `xs`.
    pub fn degree_with(&self, y: usize, xs: VertexSet) -> usize {
        self.degree_of(xs.with(y))
    }

    /// Checks edge count `n - d(v) - 1`, uniformity `s - 1`, the one-outside /
    /// `s-2`-inside split, and that no two edges share their outside vertex.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let v = self.center;
        let nbrs = g.neighbors(v);
        let closed = nbrs.with(v);
        let expected = g.n() - nbrs.len() - 1;
        if self.edges.len() != expected {
            return Err(format!("{} edges, expected n - d(v) - 1 = {expected}", self.edges.len()));
        }
        let mut outside_seen = VertexSet::EMPTY;
        for e in &self.edges {
            let verts = e.vertices();
            if verts.len() != self.s - 1 {
                return Err(format!("edge {verts:?} has size {}, expected {}", verts.len(), self.s - 1));
            }
            if !self.ground.contains(e.outside) || closed.contains(e.outside) {
                return Err(format!("outside vertex {} lies in N[v]", e.outside));
            }
            if verts.difference(closed).len() != 1 || !e.inside.is_subset(nbrs) {
                return Err(format!("edge {verts:?} does not split 1 + (s-2) across N[v]"));
            }
            if outside_seen.contains(e.outside) {
                return Err(format!("outside vertex {} used twice", e.outside));
            }
            outside_seen = outside_seen.with(e.outside);
        }
        Ok(())
    }

    /// The averaging step: some `X ⊆ N(v)` with `|X| = a-1` has
    /// `d_H(X) * C(d(v), a-1) >= C(s-2, a-1) * (n - d(v) - 1)`.
    /// Returns the maximizing `X` (first in subset order) and whether the
    /// inequality holds for it.
    pub fn averaging_witness(&self, g: &Graph, a: usize) -> Result<(VertexSet, usize, bool)> {
        if a == 0 || a > self.s - 1 {
            return input(format!("averaging needs 1 <= a <= s-1, got a={a}, s={}", self.s));
        }
        let nbrs = g.neighbors(self.center);
        let k = a - 1;
        if nbrs.len() < k {
            return input(format!("d(v) = {} < a - 1 = {k}", nbrs.len()));
        }
        let mut best: Option<(VertexSet, usize)> = None;
        let mut visit = |x: VertexSet| {
            let d = self.degree_of(x);
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((x, d));
            }
        };
        for_each_subset(nbrs, k, VertexSet::EMPTY, &mut visit);
        let (x, d) = best.expect("at least one subset");
        let lhs = d as u128 * binomial(nbrs.len() as u64, k as u64).unwrap();
        let rhs = binomial(self.s as u64 - 2, k as u64).unwrap() * (g.n() - nbrs.len() - 1) as u128;
        Ok((x, d, lhs >= rhs))
    }
}

fn for_each_subset(pool: VertexSet, k: usize, acc: VertexSet, visit: &mut impl FnMut(VertexSet)) {
    if k == 0 {
        visit(acc);
        return;
    }
    for v in pool {
        let rest = pool.above(v);
        if rest.len() + 1 < k {
            break;
        }
        for_each_subset(rest, k - 1, acc.with(v), visit);
    }
}

/// Builds the witness hypergraph centered at `v`; each `S_u` is the
/// lexicographically first clique witness for the non-edge `uv`.
pub fn build_witness_hypergraph(g: &Graph, v: usize, s: usize) -> Result<WitnessHypergraph> {
    if v >= g.n() {
        return input(format!("vertex {v} out of range for n={}", g.n()));
    }
    if s < 2 {
        return input("witness hypergraph needs s >= 2");
    }
    let closed = g.neighbors(v).with(v);
    let edges = g
        .vertices()
        .difference(closed)
        .iter()
        .map(|u| {
            clique_witness(g, u, v, s).map(|w| HyperEdge {
                outside: u,
                inside: w.s_set,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessHypergraph {
        center: v,
        s,
        ground: g.vertices().without(v),
        edges,
    })
}

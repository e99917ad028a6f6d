//! Exact subgraph counting.
//!
//! "Copy" always means a subgraph isomorphic to the pattern; edges between
//! vertices of the same side are allowed.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact number of copies of a pattern.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CopyCount(pub u128);

impl CopyCount {
    pub const ZERO: CopyCount = CopyCount(0);

    pub fn value(self) -> u128 {
        self.0
    }
}

impl fmt::Display for CopyCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checked accumulator; every counter funnels through this so overflow is reported.
#[derive(Default)]
struct Acc {
    total: u128,
    overflow: bool,
}

impl Acc {
    #[inline]
    fn add(&mut self, x: Option<u128>) {
        match x.and_then(|x| self.total.checked_add(x)) {
            Some(t) => self.total = t,
            None => self.overflow = true,
        }
    }

    fn finish(self, what: &'static str) -> Result<CopyCount> {
        if self.overflow {
            Err(Error::Overflow(what))
        } else {
            Ok(CopyCount(self.total))
        }
    }
}

/// `C(m, k)` with `C(m, k) = 0` for `m < k`; `None` when the result overflows.
pub fn binomial(m: u64, k: u64) -> Option<u128> {
    if k > m {
        return Some(0);
    }
    let k = k.min(m - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.checked_mul((m - i) as u128)? / (i as u128 + 1);
    }
    Some(r)
}

/// `K_{a,b}` with `1 <= a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartitePattern {
    a: usize,
    b: usize,
}

impl BipartitePattern {
    /// Normalizes so the smaller side comes first.
    pub fn new(a: usize, b: usize) -> Result<BipartitePattern> {
        if a == 0 || b == 0 {
            return input(format!("K_{{{a},{b}}} needs both sides nonempty"));
        }
        Ok(BipartitePattern {
            a: a.min(b),
            b: a.max(b),
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }
}

/// Largest pattern accepted by the embedding counter.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// A small graph used as a counting or containment pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGraph(Graph);

impl PatternGraph {
    pub fn new(g: Graph) -> Result<PatternGraph> {
        if g.n() > MAX_PATTERN_VERTICES {
            return input(format!(
                "pattern has {} vertices, at most {MAX_PATTERN_VERTICES} allowed",
                g.n()
            ));
        }
        Ok(PatternGraph(g))
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    /// Whether the pattern is connected (the empty pattern counts as connected).
    pub fn is_connected(&self) -> bool {
        let g = &self.0;
        if g.n() == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)));
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == g.vertices()
    }

    /// Side sizes `(a, b)` with `a <= b` when the pattern is connected and
    /// bipartite; `None` otherwise.
    pub fn bipartition(&self) -> Option<(usize, usize)> {
        let g = &self.0;
        if g.n() == 0 || !self.is_connected() {
            return None;
        }
        let mut side = vec![None; g.n()];
        side[0] = Some(false);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    _ => {}
                }
            }
        }
        let a = side.iter().filter(|s| **s == Some(false)).count();
        let b = g.n() - a;
        Some((a.min(b), a.max(b)))
    }
}

/// `Σ_v C(d(v), t)`, the number of copies of `K_{1,t}` for `t >= 2`. At
/// `t = 1` both ends of an edge can be the center, so the value is `2e`.
pub fn count_stars(g: &Graph, t: usize) -> Result<CopyCount> {
    if t == 0 {
        return input("star size t must be at least 1");
    }
    let mut acc = Acc::default();
    for d in g.degrees() {
        acc.add(binomial(d as u64, t as u64));
    }
    acc.finish("star count")
}

/// Copies of `K_{a,b}`: `Σ_{|A|=a} C(|N(A)|, b)`, halved when `a = b`.
pub fn count_kab(g: &Graph, p: BipartitePattern) -> Result<CopyCount> {
    fn walk(g: &Graph, rest: VertexSet, common: VertexSet, need: usize, b: usize, acc: &mut Acc) {
        if need == 0 {
            acc.add(binomial(common.len() as u64, b as u64));
            return;
        }
        for v in rest {
            if rest.above(v).len() + 1 < need {
                break;
            }
            let c = common.intersection(g.neighbors(v));
            if c.len() >= b {
                walk(g, rest.above(v), c, need - 1, b, acc);
            }
        }
    }
    let mut acc = Acc::default();
    walk(g, g.vertices(), g.vertices(), p.a, p.b, &mut acc);
    let mut out = acc.finish("K_{a,b} count")?;
    if p.a == p.b {
        debug_assert!(out.0 % 2 == 0);
        out.0 /= 2;
    }
    Ok(out)
}

/// Number of `r`-cliques.
pub fn count_cliques(g: &Graph, r: usize) -> Result<CopyCount> {
    if r == 0 {
        return input("clique size r must be at least 1");
    }
    fn walk(g: &Graph, cand: VertexSet, need: usize, acc: &mut Acc) {
        if need == 1 {
            acc.add(Some(cand.len() as u128));
            return;
        }
        for v in cand {
            let next = cand.above(v).intersection(g.neighbors(v));
            if next.len() + 1 >= need {
                walk(g, next, need - 1, acc);
            }
        }
    }
    let mut acc = Acc::default();
    walk(g, g.vertices(), r, &mut acc);
    acc.finish("clique count")
}

/// Number of `r`-cycles as subgraphs, for `3 <= r <= 8`.
pub fn count_cycles(g: &Graph, r: usize) -> Result<CopyCount> {
    if !(3..=8).contains(&r) {
        return input(format!("cycle length {r} outside 3..=8"));
    }
    // Each cycle is traced from its smallest vertex in both directions.
    fn walk(g: &Graph, start: usize, at: usize, used: VertexSet, left: usize, acc: &mut u128) {
        let nbrs = g.neighbors(at);
        if left == 0 {
            if nbrs.contains(start) {
                *acc += 1;
            }
            return;
        }
        for w in nbrs.above(start).difference(used) {
            walk(g, start, w, used.with(w), left - 1, acc);
        }
    }
    let mut total = 0u128;
    for s in 0..g.n() {
        walk(g, s, s, VertexSet::singleton(s), r - 1, &mut total);
    }
    Ok(CopyCount(total / 2))
}

/// Non-edge-anchored copies of `K_4^-`: `Σ_{uv ∉ E} e(G[N(u,v)])`.
pub fn count_k4_minus(g: &Graph) -> Result<CopyCount> {
    let mut acc = Acc::default();
    for (u, v) in g.non_edges() {
        acc.add(Some(g.edges_within(g.common_neighbors(u, v)) as u128));
    }
    acc.finish("K4^- count")
}

/// `Σ_{xy ∈ E} C(d(x,y), t)` for `t >= 2`.
pub fn codegree_sum(g: &Graph, t: usize) -> Result<CopyCount> {
    if t < 2 {
        return input("codegree sums need t >= 2");
    }
    let mut acc = Acc::default();
    for (x, y) in g.edges() {
        acc.add(binomial(g.codegree(x, y) as u64, t as u64));
    }
    acc.finish("codegree sum")
}

/// Pattern vertex order for embedding search: each vertex after the first
/// maximizes its links to already placed vertices.
fn embedding_order(f: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(f.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < f.n() {
        let next = f
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| (f.neighbors(v).intersection(placed).len(), f.neighbors(v).len(), usize::MAX - v))
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    order
}

/// Visits every injective edge-preserving map from `f` into `g`, given as the
/// image of each pattern vertex.
pub(crate) fn for_each_embedding<B>(
    g: &Graph,
    f: &Graph,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let order = embedding_order(f);
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (0..i).filter(|&j| f.has_edge(v, order[j])).collect())
        .collect();
    let mut image = vec![0usize; f.n()];
    let mut placed = vec![0usize; f.n()];

    #[allow(clippy::too_many_arguments)]
    fn rec<B>(
        g: &Graph,
        order: &[usize],
        back: &[Vec<usize>],
        i: usize,
        used: VertexSet,
        placed: &mut [usize],
        image: &mut [usize],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if i == order.len() {
            return visit(image);
        }
        let cand = back[i]
            .iter()
            .fold(g.vertices(), |acc, &j| acc.intersection(g.neighbors(placed[j])))
            .difference(used);
        for w in cand {
            placed[i] = w;
            image[order[i]] = w;
            rec(g, order, back, i + 1, used.with(w), placed, image, visit)?;
        }
        ControlFlow::Continue(())
    }

    match rec(g, &order, &back, 0, VertexSet::EMPTY, &mut placed, &mut image, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn count_maps(g: &Graph, f: &Graph) -> Result<u128> {
    let mut total = 0u128;
    let overflow = for_each_embedding(g, f, |_| match total.checked_add(1) {
        Some(t) => {
            total = t;
            ControlFlow::Continue(())
        }
        None => ControlFlow::Break(()),
    });
    match overflow {
        Some(()) => Err(Error::Overflow("embedding count")),
        None => Ok(total),
    }
}

/// Number of automorphisms of a pattern.
pub fn automorphism_count(f: &PatternGraph) -> u128 {
    count_maps(f.graph(), f.graph()).expect("pattern automorphisms fit in u128")
}

/// Subgraph copies of `f` in `g`: injective embeddings divided by `|Aut(f)|`.
pub fn count_embeddings(g: &Graph, f: &PatternGraph) -> Result<CopyCount> {
    if f.graph().n() > g.n() {
        return Ok(CopyCount::ZERO);
    }
    let maps = count_maps(g, f.graph())?;
    let aut = automorphism_count(f);
    debug_assert_eq!(maps % aut, 0);
    Ok(CopyCount(maps / aut))
}

/// Vertex set of one copy of `f` in `g`, if any.
pub fn find_copy(g: &Graph, f: &PatternGraph) -> Option<VertexSet> {
    if f.graph().n() > g.n() {
        return None;
    }
    for_each_embedding(g, f.graph(), |img| {
        ControlFlow::Break(VertexSet::from_vertices(img.iter().copied()))
    })
}

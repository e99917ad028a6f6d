//! Canonical labeling by individualization and refinement.
//!
//! Every leaf of the search tree is a vertex ordering; its certificate is the
//! relabeled upper triangle read in graph6 column order, packed most-significant
//! bit first, so numeric order on certificates is lexicographic order on the bit
//! strings. The canonical labeling is the leaf with the smallest certificate.
//! Refinement is equitable color refinement, and subtrees that are images of an
//! already explored sibling under a discovered automorphism are skipped.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;

/// Largest graph the canonical labeler accepts (`C(16,2) = 120` certificate bits).
pub const MAX_CANON_VERTICES: usize = 16;

/// Packed relabeled adjacency of a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub n: u8,
    pub bits: u128,
}

/// Result of canonical labeling: `order[i]` is the original vertex placed at position `i`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub certificate: Certificate,
}

impl Labeling {
    /// Canonical position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn certificate(g: &Graph, order: &[usize]) -> Certificate {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = 0u128;
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(order[j]);
        for &vi in &order[..j] {
            if row.contains(vi) {
                bits |= 1u128 << (total - 1 - k);
            }
            k += 1;
        }
    }
    Certificate { n: n as u8, bits }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every cell. New cells are ordered by their count vectors, so
/// the result commutes with relabeling.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| VertexSet::from_vertices(c.iter().copied()).0).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v).0;
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Certificate, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            self.leaf(order);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.same_orbit(prefix, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let child = refine(self.g, child);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => {
                if cert == *best {
                    let mut gamma = vec![0; order.len()];
                    for (a, b) in best_order.iter().zip(&order) {
                        gamma[*a] = *b;
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                } else if cert < *best {
                    self.best = Some((cert, order));
                }
            }
        }
    }

    /// Whether `v` lies in the orbit of an explored sibling under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// Canonical labeling of `g`, optionally respecting an initial vertex coloring.
///
/// With `colors`, the initial cells are the color classes in increasing color
/// order, so certificates of two colored graphs are equal exactly when a
/// color-preserving isomorphism exists (given equal color class sizes).
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> Result<Labeling> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::Capacity {
            what: "canonical labeling",
            requested: n,
            limit: MAX_CANON_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Labeling {
            order: vec![],
            certificate: Certificate { n: 0, bits: 0 },
        });
    }
    let initial: Partition = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            if c.len() != n {
                return Err(Error::Input(format!("{} colors for {n} vertices", c.len())));
            }
            let mut keys: Vec<u32> = c.to_vec();
            keys.sort_unstable();
            keys.dedup();
            keys.iter()
                .map(|&k| (0..n).filter(|&v| c[v] == k).collect())
                .collect()
        }
    };
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(refine(g, initial), &mut Vec::new());
    let (certificate, order) = search.best.expect("search tree has at least one leaf");
    Ok(Labeling { order, certificate })
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let lab = canonical_labeling(g, None)?;
    Ok(g.permuted(&lab.order))
}

/// Canonical byte string: the graph6 text of the canonically relabeled graph.
/// Two graphs get equal strings exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(to_graph6(&canonical_graph(g)?).into_bytes())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_labeling(a, None)?.certificate == canonical_labeling(b, None)?.certificate)
}

/// Whether an automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    if g.neighbors(u).len() != g.neighbors(v).len() {
        return Ok(false);
    }
    let mark = |w: usize| -> Vec<u32> { (0..g.n()).map(|x| (x == w) as u32).collect() };
    let a = canonical_labeling(g, Some(&mark(u)))?;
    let b = canonical_labeling(g, Some(&mark(v)))?;
    Ok(a.certificate == b.certificate)
}

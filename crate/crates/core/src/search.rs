//! Exact `sat(n, H, F)` for small `n`.
//!
//! Graphs are generated one isomorphism class at a time by canonical
//! augmentation: a child is built from a parent by appending a vertex, and is
//! kept only if the new vertex is in the automorphism orbit of the child's
//! canonical deletion vertex (the minimum-degree vertex placed last by the
//! canonical labeling). Isomorphic siblings are removed by certificate.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_graph, canonical_labeling, same_orbit, MAX_CANON_VERTICES};
use crate::count::{CopyCount, PatternGraph};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::pattern::Pattern;
use crate::saturation::{find_clique, is_h_saturated, is_ks_saturated, SaturationReport};

/// Largest order the enumerator accepts.
pub const MAX_ENUM_N: usize = 10;
/// Largest order for the labeled brute-force oracle.
pub const MAX_BRUTE_N: usize = 7;
/// Default cap on the number of extremal graphs listed in a record.
pub const DEFAULT_EXTREMAL_CAP: usize = 100;

/// A slice `index` of `total` of the enumeration tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub fn new(index: usize, total: usize) -> Result<Shard> {
        if total == 0 || index >= total {
            return input(format!("shard {index}/{total}: need index < total"));
        }
        Ok(Shard { index, total })
    }
}

/// A property closed under vertex deletion, used to prune the generation tree.
#[derive(Clone, Debug)]
pub enum Hereditary {
    All,
    KsFree(usize),
    PatternFree(PatternGraph),
}

impl Hereditary {
    /// For `F`-saturation searches every candidate must be `F`-free.
    pub fn free_of(f: &Pattern) -> Result<Hereditary> {
        Ok(match f {
            Pattern::Clique(s) => Hereditary::KsFree(*s),
            other => Hereditary::PatternFree(other.to_pattern_graph()?),
        })
    }

    /// `child` is `parent` plus a last vertex adjacent to `nbrs`; the parent
    /// already satisfies the property.
    fn admits(&self, child: &Graph, nbrs: VertexSet) -> bool {
        match self {
            Hereditary::All => true,
            Hereditary::KsFree(s) => *s >= 2 && find_clique(child, nbrs, s - 1).is_none(),
            Hereditary::PatternFree(f) => crate::count::find_copy(child, f).is_none(),
        }
    }
}

struct Generator<'a, V: FnMut(&Graph)> {
    target: usize,
    filter: &'a Hereditary,
    shard: Option<(Shard, usize)>,
    counter: usize,
    visit: V,
}

impl<V: FnMut(&Graph)> Generator<'_, V> {
    fn extend(&mut self, g: &Graph) -> Result<()> {
        if let Some((shard, level)) = self.shard {
            if g.n() == level {
                let mine = self.counter % shard.total == shard.index;
                self.counter += 1;
                if !mine {
                    return Ok(());
                }
            }
        }
        if g.n() == self.target {
            (self.visit)(g);
            return Ok(());
        }
        let m = g.n();
        let mut seen = HashSet::new();
        for mask in 0..(1u64 << m) {
            let nbrs = VertexSet(mask);
            let child = g.add_vertex(nbrs)?;
            if !self.filter.admits(&child, nbrs) {
                continue;
            }
            let degs = child.degrees();
            let dmin = *degs.iter().min().unwrap();
            if degs[m] != dmin {
                continue;
            }
            let lab = canonical_labeling(&child, None)?;
            let w = *lab.order.iter().rev().find(|&&x| degs[x] == dmin).unwrap();
            if w != m && !same_orbit(&child, m, w)? {
                continue;
            }
            if !seen.insert(lab.certificate) {
                continue;
            }
            self.extend(&child)?;
        }
        Ok(())
    }
}

fn shard_level(n: usize) -> usize {
    if n >= 4 {
        n - 2
    } else {
        n
    }
}

/// Calls `visit` once per isomorphism class of graphs on `n` vertices that
/// satisfy `filter`, optionally restricted to one shard of the tree.
pub fn for_each_graph(
    n: usize,
    filter: &Hereditary,
    shard: Option<Shard>,
    visit: impl FnMut(&Graph),
) -> Result<()> {
    if n > MAX_ENUM_N {
        return input(format!("enumeration supports n <= {MAX_ENUM_N}, got {n}"));
    }
    let mut gen = Generator {
        target: n,
        filter,
        shard: shard.map(|s| (s, shard_level(n))),
        counter: 0,
        visit,
    };
    gen.extend(&Graph::new(0)?)
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph(n, &Hereditary::All, None, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Exact value of `sat(n, H, F)` with its minimizers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatRecord {
    pub n: usize,
    pub h_pattern: Pattern,
    pub f_pattern: Pattern,
    pub min_count: CopyCount,
    /// graph6 of the canonical forms of minimizers, sorted, at most the cap.
    pub extremal: Vec<String>,
    /// Number of minimizing classes (or labeled graphs for the brute-force oracle).
    pub minimizers: u64,
    pub truncated: bool,
    /// Number of `F`-saturated graphs examined.
    pub searched: u64,
}

impl SatRecord {
    /// Combines records of disjoint shards: minimum, and the union of
    /// minimizer lists when the minima agree.
    pub fn merge(self, other: SatRecord, cap: usize) -> Result<SatRecord> {
        if self.n != other.n || self.h_pattern != other.h_pattern || self.f_pattern != other.f_pattern {
            return input("cannot merge records of different searches");
        }
        let searched = self.searched + other.searched;
        let mut out = match self.min_count.cmp(&other.min_count) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => {
                let mut all: BTreeSet<String> = self.extremal.into_iter().collect();
                all.extend(other.extremal);
                SatRecord {
                    extremal: all.into_iter().collect(),
                    minimizers: self.minimizers + other.minimizers,
                    ..self
                }
            }
        };
        out.extremal.truncate(cap);
        out.truncated = out.minimizers > out.extremal.len() as u64;
        out.searched = searched;
        Ok(out)
    }
}

/// Result of one shard: a record, or only the number of graphs examined
/// when the shard saw no saturated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ShardResult {
    Found(SatRecord),
    Empty { n: usize, searched: u64 },
}

// Written by hand because untagged enums buffer numbers without 128-bit
// support, which breaks `min_count`.
impl<'de> Deserialize<'de> for ShardResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            searched: u64,
            h_pattern: Option<Pattern>,
            f_pattern: Option<Pattern>,
            min_count: Option<CopyCount>,
            extremal: Option<Vec<String>>,
            minimizers: Option<u64>,
            truncated: Option<bool>,
        }
        let r = Raw::deserialize(d)?;
        match (r.h_pattern, r.f_pattern, r.min_count, r.extremal, r.minimizers, r.truncated) {
            (None, None, None, None, None, None) => Ok(ShardResult::Empty {
                n: r.n,
                searched: r.searched,
            }),
            (Some(h_pattern), Some(f_pattern), Some(min_count), Some(extremal), Some(minimizers), Some(truncated)) => {
                Ok(ShardResult::Found(SatRecord {
                    n: r.n,
                    h_pattern,
                    f_pattern,
                    min_count,
                    extremal,
                    minimizers,
                    truncated,
                    searched: r.searched,
                }))
            }
            _ => Err(serde::de::Error::custom("incomplete search record")),
        }
    }
}

struct Tracker {
    cap: usize,
    min: Option<CopyCount>,
    extremal: BTreeSet<String>,
    minimizers: u64,
    searched: u64,
}

impl Tracker {
    fn new(cap: usize) -> Tracker {
        Tracker {
            cap,
            min: None,
            extremal: BTreeSet::new(),
            minimizers: 0,
            searched: 0,
        }
    }

    fn offer(&mut self, count: CopyCount, key: impl FnOnce() -> String) {
        self.searched += 1;
        match self.min {
            Some(m) if count > m => return,
            Some(m) if count == m => {}
            _ => {
                self.min = Some(count);
                self.extremal.clear();
                self.minimizers = 0;
            }
        }
        self.minimizers += 1;
        self.extremal.insert(key());
        while self.extremal.len() > self.cap {
            self.extremal.pop_last();
        }
    }

    fn finish(self, n: usize, h: &Pattern, f: &Pattern) -> Result<SatRecord> {
        let Some(min_count) = self.min else {
            return Err(Error::EmptyDomain(format!("no {f}-saturated graph on {n} vertices")));
        };
        let extremal: Vec<String> = self.extremal.into_iter().collect();
        Ok(SatRecord {
            n,
            h_pattern: h.clone(),
            f_pattern: f.clone(),
            min_count,
            truncated: self.minimizers > extremal.len() as u64,
            extremal,
            minimizers: self.minimizers,
            searched: self.searched,
        })
    }
}

/// Search options: extremal list cap and an optional shard.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub cap: usize,
    pub shard: Option<Shard>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_EXTREMAL_CAP,
            shard: None,
        }
    }
}

fn saturation_of(g: &Graph, f: &Pattern, fg: Option<&PatternGraph>) -> Result<SaturationReport> {
    match (f, fg) {
        (Pattern::Clique(s), _) => Ok(is_ks_saturated(g, *s)),
        (_, Some(p)) => is_h_saturated(g, p),
        _ => unreachable!("non-clique F is materialized"),
    }
}

fn check_f(f: &Pattern) -> Result<Option<PatternGraph>> {
    match f {
        Pattern::Clique(s) if *s >= 2 => Ok(None),
        Pattern::Clique(s) => input(format!("F = K_{s} needs s >= 2")),
        other => {
            let p = other.to_pattern_graph()?;
            if p.graph().edge_count() == 0 {
                return input("F must have at least one edge");
            }
            Ok(Some(p))
        }
    }
}

fn canonical_key(g: &Graph) -> String {
    if g.n() <= MAX_CANON_VERTICES {
        to_graph6(&canonical_graph(g).expect("within canonical capacity"))
    } else {
        to_graph6(g)
    }
}

/// Minimum number of copies of `h` over `F`-saturated graphs on `n` vertices,
/// with all minimizers up to isomorphism.
pub fn min_count_over_saturated(n: usize, h: &Pattern, f: &Pattern, opts: SearchOptions) -> Result<SatRecord> {
    match min_count_shard(n, h, f, opts)? {
        ShardResult::Found(r) => Ok(r),
        ShardResult::Empty { .. } => Err(Error::EmptyDomain(format!("no {f}-saturated graph on {n} vertices"))),
    }
}

/// Like [`min_count_over_saturated`] but an empty shard is a result, not an error.
pub fn min_count_shard(n: usize, h: &Pattern, f: &Pattern, opts: SearchOptions) -> Result<ShardResult> {
    let fg = check_f(f)?;
    if fg.is_some() && n > 8 {
        return input(format!("general-pattern saturation search supports n <= 8, got {n}"));
    }
    let filter = Hereditary::free_of(f)?;
    let mut tracker = Tracker::new(opts.cap);
    let mut failure = None;
    for_each_graph(n, &filter, opts.shard, |g| {
        if failure.is_some() {
            return;
        }
        let mut step = || -> Result<()> {
            if saturation_of(g, f, fg.as_ref())?.is_saturated {
                let c = h.count(g)?;
                tracker.offer(c, || canonical_key(g));
            }
            Ok(())
        };
        if let Err(e) = step() {
            failure = Some(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    if tracker.min.is_none() {
        return Ok(ShardResult::Empty {
            n,
            searched: tracker.searched,
        });
    }
    tracker.finish(n, h, f).map(ShardResult::Found)
}

/// Same reduction over an external stream of graphs on `n` vertices (for
/// example graph6 output of another generator). The stream is taken as given:
/// no isomorphism rejection, and graphs of other orders are an input error.
pub fn min_count_over_stream<I>(n: usize, graphs: I, h: &Pattern, f: &Pattern, cap: usize) -> Result<SatRecord>
where
    I: IntoIterator<Item = Graph>,
{
    let fg = check_f(f)?;
    let mut tracker = Tracker::new(cap);
    for g in graphs {
        if g.n() != n {
            return input(format!("stream graph has {} vertices, expected {n}", g.n()));
        }
        if saturation_of(&g, f, fg.as_ref())?.is_saturated {
            let c = h.count(&g)?;
            tracker.offer(c, || canonical_key(&g));
        }
    }
    tracker.finish(n, h, f)
}

/// Independent oracle: scans all `2^C(n,2)` labeled graphs. `minimizers`
/// counts labeled graphs; the extremal list is deduplicated up to isomorphism.
pub fn brute_force_labeled(n: usize, h: &Pattern, f: &Pattern) -> Result<SatRecord> {
    if n > MAX_BRUTE_N {
        return input(format!("labeled brute force supports n <= {MAX_BRUTE_N}, got {n}"));
    }
    let fg = check_f(f)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut tracker = Tracker::new(usize::MAX);
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = Graph::new(n)?;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        if saturation_of(&g, f, fg.as_ref())?.is_saturated {
            let c = h.count(&g)?;
            tracker.offer(c, || canonical_key(&g));
        }
    }
    tracker.finish(n, h, f)
}

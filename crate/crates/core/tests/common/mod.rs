//! Slow, independent oracles shared by the integration tests. Nothing here
//! calls into the library's counting, canonical labeling or enumeration code.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use satlab::Graph;

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Number of distinct subgraphs of `g` isomorphic to `h`: every vertex
/// subset of size `|h|` under every bijection, deduplicated by (vertex set,
/// image edge set).
type HostCopy = (Vec<usize>, Vec<(usize, usize)>);

pub fn copies(g: &Graph, h: &Graph) -> u128 {
    let k = h.n();
    if k > g.n() {
        return 0;
    }
    let h_edges = edge_list(h);
    let perms = permutations(k);
    // (host vertices, image edges)
    let mut seen: HashSet<HostCopy> = HashSet::new();
    for subset in subsets(g.n(), k) {
        for p in &perms {
            let mut image: Vec<(usize, usize)> = h_edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (subset[p[a]], subset[p[b]]);
                    (x.min(y), x.max(y))
                })
                .collect();
            if image.iter().all(|&(x, y)| g.has_edge(x, y)) {
                image.sort_unstable();
                seen.insert((subset.clone(), image));
            }
        }
    }
    seen.len() as u128
}

pub fn binom(m: u128, k: u128) -> u128 {
    if k > m {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// `Σ_{xy ∈ E} C(d(x,y), t)` straight from the adjacency predicate.
pub fn codegree_sum(g: &Graph, t: u128) -> u128 {
    let mut total = 0;
    for (x, y) in edge_list(g) {
        let d = (0..g.n()).filter(|&z| g.has_edge(x, z) && g.has_edge(y, z)).count() as u128;
        total += binom(d, t);
    }
    total
}

/// `K_4^-` copies anchored at their missing pair: quadruples split into a
/// non-edge `uv` and an edge `xy` with all four cross pairs present.
pub fn anchored_k4_minus(g: &Graph) -> u128 {
    let mut total = 0;
    for q in subsets(g.n(), 4) {
        for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2), (1, 2, 0, 3), (1, 3, 0, 2), (2, 3, 0, 1)] {
            let (u, v, x, y) = (q[a], q[b], q[c], q[d]);
            if !g.has_edge(u, v)
                && g.has_edge(x, y)
                && [(u, x), (u, y), (v, x), (v, y)].iter().all(|&(p, r)| g.has_edge(p, r))
            {
                total += 1;
            }
        }
    }
    total
}

pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((0, k - 1));
    Graph::from_edges(k, &edges).unwrap()
}

pub fn clique(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    Graph::from_edges(k, &edges).unwrap()
}

pub fn kab(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Graph::from_edges(a + b, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// For each labeled graph on `n` vertices (indexed by its pair mask, pairs in
/// row-major order) the smallest mask of its orbit under relabeling.
pub fn orbit_representatives(n: usize) -> Vec<u32> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    // For every permutation, where each pair bit goes.
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut rep = vec![u32::MAX; total];
    for mask in 0..total {
        if rep[mask] != u32::MAX {
            continue;
        }
        for m in &maps {
            let mut image = 0usize;
            for (k, &to) in m.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << to;
                }
            }
            rep[image] = mask as u32;
        }
    }
    rep
}

/// Number of isomorphism classes of graphs on `n` vertices, by orbit marking.
pub fn class_count(n: usize) -> usize {
    let rep = orbit_representatives(n);
    rep.iter().enumerate().filter(|&(m, &r)| m as u32 == r).count()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ea = edge_list(a);
    permutations(a.n())
        .iter()
        .any(|p| ea.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

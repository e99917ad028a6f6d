//! The random `F`-free process: visit all vertex pairs in a uniformly random
//! order and keep each edge whose insertion creates no copy of `F`.
//!
//! Reproducibility contract: the generator is xoshiro256++ seeded through
//! SplitMix64 (`seed_from_u64`); pairs are listed as `(0,1), (0,2), ..,
//! (n-2,n-1)` and shuffled by Fisher–Yates from the top index down, drawing
//! `j` in `0..=i` with Lemire's widening-multiply rejection method.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::count::{find_copy, PatternGraph};
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::saturation::find_clique;

/// Uniform draw from `0..bound` (`bound > 0`).
fn below(rng: &mut impl RngCore, bound: u64) -> u64 {
    let mut m = rng.next_u64() as u128 * bound as u128;
    if (m as u64) < bound {
        let threshold = bound.wrapping_neg() % bound;
        while (m as u64) < threshold {
            m = rng.next_u64() as u128 * bound as u128;
        }
    }
    (m >> 64) as u64
}

fn shuffle<T>(items: &mut [T], rng: &mut impl RngCore) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// Vertex pairs in the fixed order `(0,1), (0,2), .., (n-2,n-1)`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Everything needed to replay one run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcessTrace {
    pub seed: u64,
    pub n: usize,
    pub f: Pattern,
    /// Shuffled pair indices into [`pairs`].
    pub order: Vec<usize>,
    /// Inserted edges, in insertion order.
    pub accepted: Vec<(usize, usize)>,
    #[serde(with = "crate::graph6::serde_graph6")]
    pub result: Graph,
}

enum Forbidden {
    Clique(usize),
    Pattern(PatternGraph),
}

impl Forbidden {
    fn new(f: &Pattern) -> Result<Forbidden> {
        match f {
            Pattern::Clique(s) if *s >= 3 => Ok(Forbidden::Clique(*s)),
            Pattern::Clique(s) => input(format!("process needs F = K_s with s >= 3, got s={s}")),
            other => {
                let p = other.to_pattern_graph()?;
                if p.graph().edge_count() == 0 {
                    return input("process pattern must have at least one edge");
                }
                Ok(Forbidden::Pattern(p))
            }
        }
    }

    /// Whether `g + uv` stays `F`-free, given that `g` is.
    fn accepts(&self, g: &Graph, u: usize, v: usize) -> bool {
        match self {
            Forbidden::Clique(s) => find_clique(g, g.common_neighbors(u, v), s - 2).is_none(),
            Forbidden::Pattern(p) => find_copy(&g.with_edge(u, v), p).is_none(),
        }
    }
}

/// One run of the random `F`-free process on `n` vertices.
pub fn run_ffree_process(n: usize, f: &Pattern, seed: u64) -> Result<ProcessTrace> {
    let forbidden = Forbidden::new(f)?;
    let mut g = Graph::new(n)?;
    let pairs = pairs(n);
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    shuffle(&mut order, &mut rng);
    let mut accepted = Vec::new();
    for &idx in &order {
        let (u, v) = pairs[idx];
        if forbidden.accepts(&g, u, v) {
            g.add_edge(u, v);
            accepted.push((u, v));
        }
    }
    Ok(ProcessTrace {
        seed,
        n,
        f: f.clone(),
        order,
        accepted,
        result: g,
    })
}

/// Sample statistics of the number of copies of `H` in process outputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountStats {
    pub trials: u64,
    pub mean: f64,
    /// Sample standard deviation; absent for a single trial.
    pub stddev: Option<f64>,
    pub min: u128,
    pub max: u128,
    pub sum: u128,
    pub sum_squares: u128,
}

impl CountStats {
    pub fn from_samples(samples: &[u128]) -> Result<CountStats> {
        if samples.is_empty() {
            return input("need at least one sample");
        }
        let k = samples.len() as u128;
        let sum: u128 = samples.iter().sum();
        let sum_squares: u128 = samples.iter().map(|x| x * x).sum();
        // Sample variance = (k Σx² - (Σx)²) / (k (k-1)), numerator exact.
        let stddev = (k > 1).then(|| {
            let num = k * sum_squares - sum * sum;
            (num as f64 / (k * (k - 1)) as f64).sqrt()
        });
        Ok(CountStats {
            trials: samples.len() as u64,
            mean: sum as f64 / k as f64,
            stddev,
            min: *samples.iter().min().unwrap(),
            max: *samples.iter().max().unwrap(),
            sum,
            sum_squares,
        })
    }
}

/// Counts of `h` over `trials` runs; trial `i` uses seed `seed + i`.
pub fn sample_counts(n: usize, f: &Pattern, h: &Pattern, trials: u64, seed: u64) -> Result<Vec<u128>> {
    (0..trials)
        .map(|i| {
            let t = run_ffree_process(n, f, seed.wrapping_add(i))?;
            Ok(h.count(&t.result)?.value())
        })
        .collect()
}

pub fn estimate_expected_count(n: usize, f: &Pattern, h: &Pattern, trials: u64, seed: u64) -> Result<CountStats> {
    if trials == 0 {
        return input("trials must be at least 1");
    }
    CountStats::from_samples(&sample_counts(n, f, h, trials, seed)?)
}

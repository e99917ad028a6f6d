//! Closed-form values and per-graph inequality checks for `K_s`-saturated graphs.
//!
//! Real-valued right-hand sides are reported as `f64`, but `holds` and
//! `equality` are always decided exactly: every comparison against an
//! irrational bound is squared into an integer comparison first.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::count::{binomial, codegree_sum, count_k4_minus, count_kab, count_stars, BipartitePattern};
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::saturation::is_ks_saturated;

/// Relative tolerance used when only the floating-point values are compared.
pub const REAL_TOLERANCE: f64 = 1e-9;

/// A reported quantity: exact integer or real.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i128),
    Real(f64),
}

impl Num {
    pub fn as_f64(self) -> f64 {
        match self {
            Num::Int(v) => v as f64,
            Num::Real(v) => v,
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(v) => write!(f, "{v}"),
            Num::Real(v) => write!(f, "{v:.12}"),
        }
    }
}

/// How `lhs` and `rhs` are supposed to relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs >= rhs`
    AtLeast,
    /// `lhs <= rhs`
    AtMost,
    /// `lhs == rhs`
    Equal,
}

/// One evaluated inequality (or identity) on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub relation: Relation,
    pub n: usize,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub lhs: Num,
    pub rhs: Num,
    pub holds: bool,
    pub equality: bool,
    /// Whether the instance meets the hypotheses under which the relation is
    /// guaranteed. Reports outside the hypotheses are informational.
    pub asserted: bool,
    /// graph6 of the instance, when the report concerns one graph.
    pub graph: Option<String>,
}

impl BoundReport {
    /// An asserted relation that fails.
    pub fn violated(&self) -> bool {
        self.asserted && !self.holds
    }

    fn int(name: &str, relation: Relation, ctx: Ctx, lhs: i128, rhs: i128) -> BoundReport {
        let holds = match relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
        };
        BoundReport {
            name: name.to_string(),
            relation,
            n: ctx.n,
            s: ctx.s,
            t: ctx.t,
            lhs: Num::Int(lhs),
            rhs: Num::Int(rhs),
            holds,
            equality: lhs == rhs,
            asserted: ctx.asserted,
            graph: ctx.graph,
        }
    }
}

#[derive(Clone)]
struct Ctx {
    n: usize,
    s: Option<usize>,
    t: Option<usize>,
    asserted: bool,
    graph: Option<String>,
}

impl Ctx {
    fn of(g: &Graph, s: Option<usize>, t: Option<usize>, asserted: bool) -> Ctx {
        Ctx {
            n: g.n(),
            s,
            t,
            asserted,
            graph: Some(to_graph6(g)),
        }
    }
}

fn big(v: u128) -> BigUint {
    BigUint::from(v)
}

fn binom(m: usize, k: usize) -> u128 {
    binomial(m as u64, k as u64).expect("binomial of graph-sized arguments fits")
}

/// The closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Formula {
    /// Minimum edges of a `K_s`-saturated graph: `(s-2)(n-s+2) + C(s-2,2)`.
    EhmEdges { n: usize, s: usize },
    /// `K_r`-count of the extremal join: `(n-s+2) C(s-2,r-1) + C(s-2,r)`.
    ClKr { n: usize, r: usize, s: usize },
    /// `K_{1,2}`-count of the extremal join: `(s-2) C(n-1,2) + (n-s+2) C(s-2,2)`.
    Thm12K12 { n: usize, s: usize },
    /// `C(n,2) - n^{3/2}/2`.
    Thm11Lower { n: usize },
    /// `C(s-2,2) C(n-s+2,2) + C(s-2,3)(n-s+2) + C(s-2,4)`, as printed for the
    /// `K_{2,2}` count of the extremal join. Exact only for `s <= 4`; see
    /// [`ehm_k22_exact`].
    EhmK22 { n: usize, s: usize },
    /// `((n-1)^2 (s-2) + (s-2)^2 (n-s+2))^{t/2} / (t^t n^{t/2-1})`.
    Prop21Rhs { n: usize, s: usize, t: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormulaValue {
    Int(u128),
    Real(f64),
}

impl Formula {
    /// Builds a formula from its name and the parameters it needs.
    pub fn from_name(name: &str, n: Option<usize>, s: Option<usize>, r: Option<usize>, t: Option<usize>) -> Result<Formula> {
        let need = |p: Option<usize>, what: &str| match p {
            Some(v) => Ok(v),
            None => input(format!("formula {name} requires {what}")),
        };
        Ok(match name {
            "ehm_edges" => Formula::EhmEdges { n: need(n, "n")?, s: need(s, "s")? },
            "cl_kr" => Formula::ClKr { n: need(n, "n")?, r: need(r, "r")?, s: need(s, "s")? },
            "thm12_k12" => Formula::Thm12K12 { n: need(n, "n")?, s: need(s, "s")? },
            "thm11_lower" => Formula::Thm11Lower { n: need(n, "n")? },
            "ehm_k22" => Formula::EhmK22 { n: need(n, "n")?, s: need(s, "s")? },
            "prop21_rhs" => Formula::Prop21Rhs { n: need(n, "n")?, s: need(s, "s")?, t: need(t, "t")? },
            other => return input(format!("unknown formula '{other}'")),
        })
    }
}

fn need_n_ge_s(n: usize, s: usize, s_min: usize, what: &str) -> Result<()> {
    if s < s_min || n < s {
        return input(format!("{what} requires n >= s >= {s_min}, got n={n}, s={s}"));
    }
    Ok(())
}

pub fn formula(f: Formula) -> Result<FormulaValue> {
    let overflow = || Error::Overflow("formula");
    Ok(match f {
        Formula::EhmEdges { n, s } => {
            need_n_ge_s(n, s, 2, "ehm_edges (Erdős–Hajnal–Moon)")?;
            FormulaValue::Int(((s - 2) * (n - s + 2)) as u128 + binom(s - 2, 2))
        }
        Formula::ClKr { n, r, s } => {
            if r < 2 || r >= s || n < s {
                return input(format!("cl_kr requires 2 <= r < s <= n, got n={n}, r={r}, s={s}"));
            }
            FormulaValue::Int((n - s + 2) as u128 * binom(s - 2, r - 1) + binom(s - 2, r))
        }
        Formula::Thm12K12 { n, s } => {
            need_n_ge_s(n, s, 4, "thm12_k12")?;
            FormulaValue::Int((s - 2) as u128 * binom(n - 1, 2) + (n - s + 2) as u128 * binom(s - 2, 2))
        }
        Formula::Thm11Lower { n } => {
            if n < 3 {
                return input(format!("thm11_lower requires n >= 3, got {n}"));
            }
            FormulaValue::Real(binom(n, 2) as f64 - (n as f64).powf(1.5) / 2.0)
        }
        Formula::EhmK22 { n, s } => {
            need_n_ge_s(n, s, 2, "ehm_k22")?;
            let k = n - s + 2;
            let m = s - 2;
            FormulaValue::Int(
                binom(m, 2)
                    .checked_mul(binom(k, 2))
                    .and_then(|x| x.checked_add(binom(m, 3) * k as u128))
                    .and_then(|x| x.checked_add(binom(m, 4)))
                    .ok_or_else(overflow)?,
            )
        }
        Formula::Prop21Rhs { n, s, t } => FormulaValue::Real(Prop21Rhs::new(n, s, t)?.value()),
    })
}

/// Actual number of `K_{2,2}` copies in `K_{s-2} + complement(K_{n-s+2})`:
/// `C(m,2) C(k,2) + 3 C(m,3) k + 3 C(m,4)` with `m = s-2`, `k = n-s+2`
/// (a `K_4` holds three copies of `K_{2,2}`).
pub fn ehm_k22_exact(n: usize, s: usize) -> Result<u128> {
    need_n_ge_s(n, s, 2, "ehm_k22_exact")?;
    let (m, k) = (s - 2, n - s + 2);
    Ok(binom(m, 2) * binom(k, 2) + 3 * binom(m, 3) * k as u128 + 3 * binom(m, 4))
}

/// `(n-1)^2 (s-2) + (s-2)^2 (n-s+2)`, the degree-square floor.
pub fn degree_square_floor(n: usize, s: usize) -> Result<u128> {
    need_n_ge_s(n, s, 2, "degree-square floor")?;
    let (n, s) = (n as u128, s as u128);
    Ok((n - 1) * (n - 1) * (s - 2) + (s - 2) * (s - 2) * (n - s + 2))
}

/// The star-count lower bound `R^{t/2} / (t^t n^{t/2-1})` with `R` the
/// degree-square floor, kept in exact form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prop21Rhs {
    pub n: usize,
    pub t: usize,
    pub base: u128,
}

impl Prop21Rhs {
    pub fn new(n: usize, s: usize, t: usize) -> Result<Prop21Rhs> {
        need_n_ge_s(n, s, 3, "prop21_rhs")?;
        if t < 2 {
            return input(format!("prop21_rhs requires t >= 2, got {t}"));
        }
        Ok(Prop21Rhs {
            n,
            t,
            base: degree_square_floor(n, s)?,
        })
    }

    pub fn value(&self) -> f64 {
        let (r, t, n) = (self.base as f64, self.t as f64, self.n as f64);
        r.powf(t / 2.0) / (t.powf(t) * n.powf(t / 2.0 - 1.0))
    }

    /// Exact comparison of an integer `x` with `value()`, via
    /// `(x t^t)^2 n^{t-2}` against `R^t`.
    pub fn compare(&self, x: u128) -> std::cmp::Ordering {
        let t = self.t as u32;
        let lhs = (big(x) * big(self.t as u128).pow(t)).pow(2) * big(self.n as u128).pow(t - 2);
        lhs.cmp(&big(self.base).pow(t))
    }
}

/// Per-instance forms of the degree inequalities for a `K_s`-saturated graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KkkoReport {
    /// `Σ (d+1)(d+2-s) >= (s-2) n (n-s+1)`.
    pub kkko: BoundReport,
    /// `Σ (d+1)(d+2-s) = Σ (d-1)d + (4-s) Σ d + (2-s) n`.
    pub rearrangement: BoundReport,
    /// `Σ (d-1)d >= (s-2) n (n-s+1) + (s-4) 2e + (s-2) n`.
    pub combined: BoundReport,
    /// `Σ d^2 >= (n-1)^2 (s-2) + (s-2)^2 (n-s+2)`.
    pub degree_squares: BoundReport,
}

impl KkkoReport {
    pub fn into_vec(self) -> Vec<BoundReport> {
        vec![self.kkko, self.rearrangement, self.combined, self.degree_squares]
    }
}

fn saturated_hypothesis(g: &Graph, s: usize, s_min: usize) -> bool {
    s >= s_min && g.n() >= s && is_ks_saturated(g, s).is_saturated
}

pub fn check_kkko(g: &Graph, s: usize) -> KkkoReport {
    let asserted = saturated_hypothesis(g, s, 2);
    let ctx = Ctx::of(g, Some(s), None, asserted);
    let (n, si) = (g.n() as i128, s as i128);
    let degs: Vec<i128> = g.degrees().into_iter().map(|d| d as i128).collect();
    let lhs2: i128 = degs.iter().map(|d| (d + 1) * (d + 2 - si)).sum();
    let rhs2 = (si - 2) * n * (n - si + 1);
    let falling: i128 = degs.iter().map(|d| (d - 1) * d).sum();
    let deg_sum: i128 = degs.iter().sum();
    let rearranged = falling + (4 - si) * deg_sum + (2 - si) * n;
    let rhs4 = (si - 2) * n * (n - si + 1) + (si - 4) * deg_sum + (si - 2) * n;
    let squares: i128 = degs.iter().map(|d| d * d).sum();
    let rhs5 = (n - 1) * (n - 1) * (si - 2) + (si - 2) * (si - 2) * (n - si + 2);
    KkkoReport {
        kkko: BoundReport::int("kkko", Relation::AtLeast, ctx.clone(), lhs2, rhs2),
        rearrangement: BoundReport::int(
            "kkko_rearrangement",
            Relation::Equal,
            Ctx { asserted: true, ..ctx.clone() },
            lhs2,
            rearranged,
        ),
        combined: BoundReport::int("kkko_combined", Relation::AtLeast, ctx.clone(), falling, rhs4),
        degree_squares: BoundReport::int("degree_squares", Relation::AtLeast, ctx, squares, rhs5),
    }
}

/// Floor on the number of `K_{1,2}` copies: `C(n,2) - n^{3/2}/2` when `s = 3`
/// (requires `n >= 3`), the extremal-join count when `s >= 4`.
pub fn check_k12_floor(g: &Graph, s: usize) -> Result<BoundReport> {
    let n = g.n();
    let lhs = count_stars(g, 2)?.value();
    if s == 3 {
        let asserted = n >= 3 && saturated_hypothesis(g, s, 3);
        // lhs >= C(n,2) - n^{3/2}/2  <=>  2(C(n,2) - lhs) <= n^{3/2}.
        let gap = 2 * (binom(n, 2) as i128 - lhs as i128);
        let holds = gap <= 0 || (gap as u128).pow(2) <= (n as u128).pow(3);
        let equality = gap >= 0 && (gap as u128).pow(2) == (n as u128).pow(3);
        let rhs = binom(n, 2) as f64 - (n as f64).powf(1.5) / 2.0;
        return Ok(BoundReport {
            name: "k12_floor".into(),
            relation: Relation::AtLeast,
            n,
            s: Some(s),
            t: Some(2),
            lhs: Num::Int(lhs as i128),
            rhs: Num::Real(rhs),
            holds,
            equality,
            asserted,
            graph: Some(to_graph6(g)),
        });
    }
    need_n_ge_s(n, s, 4, "k12_floor")?;
    let FormulaValue::Int(rhs) = formula(Formula::Thm12K12 { n, s })? else {
        unreachable!()
    };
    let asserted = saturated_hypothesis(g, s, 4);
    Ok(BoundReport::int(
        "k12_floor",
        Relation::AtLeast,
        Ctx::of(g, Some(s), Some(2), asserted),
        lhs as i128,
        rhs as i128,
    ))
}

/// The codegree / `K_4^-` chain: `Σ_{xy ∈ E} C(d(x,y),2) >= N(K_4^-)` for
/// every graph, and `N(K_4^-) >= C(s-2,2) e(complement)` when `K_s`-saturated.
pub fn check_k4minus_chain(g: &Graph, s: usize) -> Result<(BoundReport, BoundReport)> {
    let k4m = count_k4_minus(g)?.value() as i128;
    let codeg = codegree_sum(g, 2)?.value() as i128;
    let non_edges = (binom(g.n(), 2) - g.edge_count() as u128) as i128;
    let rhs = binom(s.saturating_sub(2), 2) as i128 * non_edges;
    let asserted = saturated_hypothesis(g, s, 2);
    Ok((
        BoundReport::int("k4minus_upper", Relation::AtLeast, Ctx::of(g, Some(s), Some(2), true), codeg, k4m),
        BoundReport::int("k4minus_lower", Relation::AtLeast, Ctx::of(g, Some(s), None, asserted), k4m, rhs),
    ))
}

/// `Σ_v C(d(v), t) >= R^{t/2} / (t^t n^{t/2-1})`. Asserted only for
/// `K_s`-saturated graphs with `n >= s >= 3` and `t >= 3`.
pub fn check_star_bound(g: &Graph, s: usize, t: usize) -> Result<BoundReport> {
    let rhs = Prop21Rhs::new(g.n(), s, t)?;
    let lhs = count_stars(g, t)?.value();
    let asserted = t >= 3 && saturated_hypothesis(g, s, 3);
    let ord = rhs.compare(lhs);
    Ok(BoundReport {
        name: "star_bound".into(),
        relation: Relation::AtLeast,
        n: g.n(),
        s: Some(s),
        t: Some(t),
        lhs: Num::Int(lhs as i128),
        rhs: Num::Real(rhs.value()),
        holds: ord.is_ge(),
        equality: ord.is_eq(),
        asserted,
        graph: Some(to_graph6(g)),
    })
}

/// Power-mean step behind the star bound: `Σ_v d(v)^t >= R^{t/2} / n^{t/2-1}`.
pub fn check_star_power_mean(g: &Graph, s: usize, t: usize) -> Result<BoundReport> {
    let rhs = Prop21Rhs::new(g.n(), s, t)?;
    let lhs: u128 = g.degrees().iter().map(|&d| (d as u128).pow(t as u32)).sum();
    let asserted = saturated_hypothesis(g, s, 3);
    let ord = {
        let t32 = t as u32;
        let l = big(lhs).pow(2) * big(g.n() as u128).pow(t32 - 2);
        l.cmp(&big(rhs.base).pow(t32))
    };
    Ok(BoundReport {
        name: "star_power_mean".into(),
        relation: Relation::AtLeast,
        n: g.n(),
        s: Some(s),
        t: Some(t),
        lhs: Num::Int(lhs as i128),
        rhs: Num::Real(rhs.value() * (t as f64).powi(t as i32)),
        holds: ord.is_ge(),
        equality: ord.is_eq(),
        asserted,
        graph: Some(to_graph6(g)),
    })
}

/// `N(K_{2,t}) >= Σ_{xy ∈ E} C(d(x,y), t)`.
///
/// For `t >= 3` a copy of `K_{2,t}` has a unique 2-side, so each (edge, t-set)
/// pair on the right names a distinct copy and the relation is asserted. For
/// `t = 2` the left side is the role-resolved count (ordered side pairs,
/// twice the copy count) and the report is informational.
pub fn check_k2t_floor(g: &Graph, t: usize) -> Result<BoundReport> {
    if t < 2 {
        return input(format!("K_{{2,t}} floor needs t >= 2, got {t}"));
    }
    let copies = count_kab(g, BipartitePattern::new(2, t)?)?.value();
    let lhs = if t == 2 { 2 * copies } else { copies };
    let rhs = codegree_sum(g, t)?.value();
    Ok(BoundReport::int(
        "k2t_floor",
        Relation::AtLeast,
        Ctx::of(g, None, Some(t), t >= 3),
        lhs as i128,
        rhs as i128,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, ehm_graph, petersen, star};

    fn int(f: Formula) -> u128 {
        match formula(f).unwrap() {
            FormulaValue::Int(v) => v,
            other => panic!("{other:?}"),
        }
    }

    fn real(f: Formula) -> f64 {
        match formula(f).unwrap() {
            FormulaValue::Real(v) => v,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(int(Formula::EhmEdges { n: 10, s: 4 }), 17);
        assert_eq!(int(Formula::Thm12K12 { n: 6, s: 4 }), 24);
        assert_eq!(int(Formula::ClKr { n: 10, r: 3, s: 5 }), 22);
        assert!((real(Formula::Prop21Rhs { n: 10, s: 3, t: 2 }) - 22.5).abs() < 1e-9);
        assert!((real(Formula::Thm11Lower { n: 4 }) - 2.0).abs() < 1e-12);
        assert_eq!(int(Formula::EhmK22 { n: 8, s: 4 }), 15);
        assert!(formula(Formula::Thm12K12 { n: 6, s: 3 }).is_err());
        assert!(formula(Formula::ClKr { n: 6, r: 4, s: 4 }).is_err());
        assert!(formula(Formula::Thm11Lower { n: 2 }).is_err());
        assert_eq!(
            Formula::from_name("cl_kr", Some(10), Some(5), Some(3), None).unwrap(),
            Formula::ClKr { n: 10, r: 3, s: 5 }
        );
        assert!(Formula::from_name("cl_kr", Some(10), Some(5), None, None).is_err());
    }

    #[test]
    fn printed_k22_formula_undercounts_k4_copies() {
        assert_eq!(int(Formula::EhmK22 { n: 10, s: 4 }), ehm_k22_exact(10, 4).unwrap());
        assert!(int(Formula::EhmK22 { n: 10, s: 6 }) < ehm_k22_exact(10, 6).unwrap());
    }

    #[test]
    fn kkko_examples() {
        let r = check_kkko(&petersen(), 3);
        assert_eq!(r.degree_squares.lhs, Num::Int(90));
        assert_eq!(r.degree_squares.rhs, Num::Int(90));
        assert!(r.degree_squares.equality && r.degree_squares.asserted);
        let r = check_kkko(&ehm_graph(10, 4).unwrap(), 4);
        assert!(r.degree_squares.equality);
        assert!(r.kkko.holds && r.rearrangement.holds && r.combined.holds);
        let r = check_kkko(&cycle(4).unwrap(), 3);
        assert_eq!((r.degree_squares.lhs, r.degree_squares.rhs), (Num::Int(16), Num::Int(12)));
        assert!(r.degree_squares.holds && !r.degree_squares.equality);
        // Not saturated: evaluated but not asserted.
        assert!(!check_kkko(&complete(4).unwrap(), 3).kkko.asserted);
    }

    #[test]
    fn k4minus_chain_examples() {
        let (upper, lower) = check_k4minus_chain(&ehm_graph(8, 4).unwrap(), 4).unwrap();
        assert!(upper.holds);
        assert_eq!((lower.lhs, lower.rhs), (Num::Int(15), Num::Int(15)));
        assert!(lower.equality && lower.asserted);
        let (_, lower) = check_k4minus_chain(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(lower.rhs, Num::Int(0));
        assert!(lower.holds);
    }

    #[test]
    fn star_bound_examples() {
        let r = check_star_bound(&petersen(), 3, 3).unwrap();
        assert_eq!(r.lhs, Num::Int(10));
        assert!((r.rhs.as_f64() - 10.0).abs() < 1e-9);
        assert!(r.holds && r.equality);
        let r = check_star_bound(&star(10).unwrap(), 3, 3).unwrap();
        assert_eq!(r.lhs, Num::Int(84));
        assert!(r.holds && !r.equality);
        assert!(check_star_bound(&ehm_graph(9, 4).unwrap(), 4, 3).unwrap().holds);
        assert!(!check_star_bound(&petersen(), 3, 2).unwrap().asserted);
        assert!(check_star_bound(&petersen(), 2, 3).is_err());
    }

    #[test]
    fn k2t_examples() {
        let r = check_k2t_floor(&complete(4).unwrap(), 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (Num::Int(6), Num::Int(6)));
        assert!(r.equality && !r.asserted);
        let r = check_k2t_floor(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (Num::Int(0), Num::Int(0)));
        let r = check_k2t_floor(&complete_bipartite(2, 3).unwrap(), 3).unwrap();
        assert_eq!((r.lhs, r.rhs), (Num::Int(1), Num::Int(0)));
        assert!(r.asserted && r.holds);
        assert!(check_k2t_floor(&cycle(5).unwrap(), 1).is_err());
    }

    #[test]
    fn k12_floor_examples() {
        let r = check_k12_floor(&cycle(5).unwrap(), 3).unwrap();
        assert!(r.holds && r.asserted);
        let r = check_k12_floor(&ehm_graph(7, 5).unwrap(), 5).unwrap();
        assert!(r.equality && r.asserted);
    }
}

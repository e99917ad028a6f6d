mod common;

use satlab::bounds::{ehm_k22_exact, formula, Formula, FormulaValue};
use satlab::constructions::{ehm_graph, hoffman_singleton, petersen};
use satlab::count::{count_cliques, count_kab, count_stars, BipartitePattern, PatternGraph};
use satlab::pattern::Pattern;
use satlab::process::{run_ffree_process, ProcessTrace};
use satlab::saturation::{build_witness_hypergraph, is_h_saturated, is_ks_saturated};
use satlab::verify::saturated_graphs;
use satlab::Graph;

fn int(f: Formula) -> u128 {
    match formula(f).unwrap() {
        FormulaValue::Int(v) => v,
        FormulaValue::Real(v) => panic!("real {v}"),
    }
}

#[test]
fn ehm_graph_invariants() {
    for s in 2..=7 {
        for n in s..=12 {
            let g = ehm_graph(n, s).unwrap();
            assert!(is_ks_saturated(&g, s).is_saturated, "n={n} s={s}");
            assert_eq!(g.edge_count() as u128, int(Formula::EhmEdges { n, s }));
            for r in 2..s {
                assert_eq!(count_cliques(&g, r).unwrap().value(), int(Formula::ClKr { n, r, s }), "n={n} r={r} s={s}");
            }
            if s >= 4 {
                assert_eq!(count_stars(&g, 2).unwrap().value(), int(Formula::Thm12K12 { n, s }));
            }
        }
    }
}

#[test]
fn ehm_k22_counts() {
    let c4 = BipartitePattern::new(2, 2).unwrap();
    for s in 2..=7 {
        for n in s..=9 {
            let g = ehm_graph(n, s).unwrap();
            let actual = count_kab(&g, c4).unwrap().value();
            assert_eq!(actual, common::copies(&g, &common::cycle(4)), "n={n} s={s}");
            assert_eq!(actual, ehm_k22_exact(n, s).unwrap());
            let printed = int(Formula::EhmK22 { n, s });
            // The printed closed form counts each K_4 of the graph once
            // instead of three times, so it is exact only when there is no
            // K_4, i.e. when the clique part has at most two vertices.
            assert_eq!(printed == actual, s <= 4, "n={n} s={s}");
        }
    }
}

#[test]
fn moore_graphs_and_duplicates_stay_saturated() {
    let p = petersen();
    assert!(is_ks_saturated(&p, 3).is_saturated);
    assert_eq!(count_stars(&p, 2).unwrap().value(), 30);
    let hs = hoffman_singleton();
    assert!(is_ks_saturated(&hs, 3).is_saturated);
    for k in 1..=5 {
        let d = hs.duplicate_vertex(0, k).unwrap();
        assert!(is_ks_saturated(&d, 3).is_saturated, "k={k}");
        let d = p.duplicate_vertex(3, k).unwrap();
        assert!(is_ks_saturated(&d, 3).is_saturated, "k={k}");
    }
}

#[test]
fn witness_hypergraph_over_saturated_graphs() {
    for s in 3..=5 {
        for n in s..=8 {
            for g in saturated_graphs(n, s).unwrap() {
                for v in 0..n {
                    let d = g.degree(v).unwrap();
                    if d + 1 == n {
                        continue;
                    }
                    let h = build_witness_hypergraph(&g, v, s).unwrap();
                    h.check_invariants(&g).unwrap();
                    for a in 1..s {
                        if a - 1 <= d {
                            let (_, _, holds) = h.averaging_witness(&g, a).unwrap();
                            assert!(holds, "n={n} s={s} v={v} a={a}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn general_saturation_matches_definition() {
    // C_4-saturation checked against adding each non-edge by hand.
    let c4 = PatternGraph::new(common::cycle(4)).unwrap();
    for n in 1..=6 {
        let rep = common::orbit_representatives(n);
        for (mask, &r) in rep.iter().enumerate() {
            if r as usize != mask {
                continue;
            }
            let g = common::graph_from_mask(n, mask as u64);
            let free = common::copies(&g, &common::cycle(4)) == 0;
            let saturated = free
                && g.non_edges().all(|(u, v)| common::copies(&g.with_edge(u, v), &common::cycle(4)) > 0);
            let got = is_h_saturated(&g, &c4).unwrap();
            assert_eq!((got.is_free, got.is_saturated), (free, saturated), "{g:?}");
        }
    }
}

#[test]
fn process_trace_round_trips_through_json() {
    let t = run_ffree_process(9, &Pattern::Clique(4), 42).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    let back: ProcessTrace = serde_json::from_str(&json).unwrap();
    assert_eq!(back, t);
    let mut replay = Graph::new(9).unwrap();
    for &(u, v) in &t.accepted {
        replay.add_edge(u, v);
    }
    assert_eq!(replay, t.result);
}

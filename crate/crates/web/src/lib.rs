//! WebAssembly entry points for the browser demo.
//!
//! Every export takes plain strings and numbers and returns one JSON document,
//! `{"error": "..."}` on failure, so the same functions run in native tests.

use satlab::canon::canonical_graph;
use satlab::constructions::{make, FamilySpec};
use satlab::count::{count_cliques, count_stars};
use satlab::graph6::{from_graph6, to_graph6};
use satlab::pattern::Pattern;
use satlab::process::run_ffree_process;
use satlab::saturation::{is_h_saturated, is_ks_saturated};
use satlab::Graph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn describe(g: &Graph) -> Value {
    json!({
        "graph6": to_graph6(g),
        "n": g.n(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "degrees": g.degrees(),
    })
}

/// Builds a named family such as `petersen` or `ehm:n=10,s=4`.
#[wasm_bindgen]
pub fn construct(family: &str) -> String {
    respond((|| {
        let spec: FamilySpec = family.parse().map_err(|e: satlab::Error| e.to_string())?;
        let g = make(spec).map_err(|e| e.to_string())?;
        Ok(describe(&g))
    })())
}

/// One run of the random `F`-free process; `edges` lists the accepted edges
/// in insertion order so the page can animate them.
#[wasm_bindgen]
pub fn random_process(n: usize, pattern: &str, seed: u64) -> String {
    respond((|| {
        let f: Pattern = pattern.parse().map_err(|e: satlab::Error| e.to_string())?;
        let trace = run_ffree_process(n, &f, seed).map_err(|e| e.to_string())?;
        let report = match &f {
            Pattern::Clique(s) => is_ks_saturated(&trace.result, *s),
            other => {
                let p = other.to_pattern_graph().map_err(|e| e.to_string())?;
                is_h_saturated(&trace.result, &p).map_err(|e| e.to_string())?
            }
        };
        let mut out = describe(&trace.result);
        out["edges"] = json!(trace.accepted.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>());
        out["pattern"] = json!(f.to_string());
        out["seed"] = json!(seed);
        out["saturated"] = json!(report.is_saturated);
        Ok(out)
    })())
}

/// Degree data, small counts and the `K_s`-saturation verdict for a graph6 string.
#[wasm_bindgen]
pub fn inspect(graph6: &str, s: usize) -> String {
    respond((|| {
        let g = from_graph6(graph6.trim()).map_err(|e| e.to_string())?;
        if s < 2 {
            return Err(format!("s must be at least 2, got {s}"));
        }
        let report = is_ks_saturated(&g, s);
        let mut out = describe(&g);
        // canonical labeling has a smaller vertex limit than the rest
        out["canonical"] = json!(canonical_graph(&g).ok().map(|c| to_graph6(&c)));
        out["cherries"] = json!(count_stars(&g, 2).map_err(|e| e.to_string())?.value().to_string());
        out["triangles"] = json!(count_cliques(&g, 3).map_err(|e| e.to_string())?.value().to_string());
        out["s"] = json!(s);
        out["ks_free"] = json!(report.is_free);
        out["ks_saturated"] = json!(report.is_saturated);
        out["clique"] = json!(report.free_violation.map(|w| w.to_vec()));
        out["open_pair"] = json!(report.saturation_violation.map(|(u, v)| [u, v]));
        Ok(out)
    })())
}

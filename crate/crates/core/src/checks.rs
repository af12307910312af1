//! Registry of named, falsifiable checks executed over graph streams.
//!
//! Every check has a stable string id (a public contract), an
//! applicability filter and an assertion. Runs are deterministic given
//! (stream order, config) for any worker count: per-graph seeds are
//! derived from the master seed and the graph's canonical graph6 string,
//! and results are merged in input order. Violations are collected, never
//! aborted on: for proved statements a violation means a software bug or a
//! genuine counterexample (rerun at a higher trial count to distinguish);
//! for conjecture-mode checks it is a reported finding.

use crate::graph::{self, Graph};
use crate::linked::{self, Truth};
use crate::matroid;
use crate::rigidity::{maxwell_violations, EdgeSet, GenericConfig, RankOracle};
use crate::stress;
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("unknown check id '{0}'")]
    UnknownId(String),
    #[error("check '{id}' does not apply at dimension {dim} (supported: {min}..={max})")]
    DimOutOfRange {
        id: String,
        dim: usize,
        min: usize,
        max: usize,
    },
    #[error("graph {graph6} too large for check '{id}': {detail}")]
    GraphTooLarge {
        id: String,
        graph6: String,
        detail: String,
    },
    #[error("empty graph stream")]
    EmptyStream,
    #[error("sharpness suite supports d <= 3 and n_max <= 12")]
    SharpnessOutOfRange,
}

/// Per-graph outcome of one check.
enum Outcome {
    /// applicability filter not satisfied
    Filtered,
    /// filter satisfied, assertion holds
    Pass,
    /// assertion holds regardless of the filter, which was skipped
    PassLazy,
    Violation(String),
    Unknown(String),
    /// conjecture-mode finding below the stated vertex threshold
    BelowThreshold(String),
}

type Runner = fn(&Graph, &GenericConfig) -> Result<Outcome, String>;

pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    /// inclusive dimension range; for t66-mader the dimension is the
    /// connectivity parameter k
    pub dims: (usize, usize),
    /// search-mode check for an open conjecture
    pub conjecture: bool,
    runner: Runner,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Finding {
    pub graph6: String,
    pub detail: String,
}

/// Aggregated result of one check over one stream. `checked` counts graphs
/// whose applicability filter was evaluated and held; assertion-first
/// shortcuts count under `passed` only. The wall-clock runtime is kept out
/// of the serialized form so reports are byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub dim: usize,
    pub scanned: usize,
    pub checked: usize,
    pub passed: usize,
    pub violations: Vec<Finding>,
    pub unknowns: Vec<Finding>,
    pub below_threshold: Vec<Finding>,
    pub config: GenericConfig,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id == id)
}

static REGISTRY: [CheckDef; 19] = [
    CheckDef {
        id: "t13-min-glob-bound",
        summary: "minimally globally d-rigid graphs have at most (d+1)n - C(d+2,2) edges, with equality only for K_{d+2}",
        dims: (1, 6),
        conjecture: false,
        runner: run_t13,
    },
    CheckDef {
        id: "t14-glob-rd1-indep",
        summary: "minimally globally d-rigid graphs are R_{d+1}-independent",
        dims: (1, 6),
        conjecture: false,
        runner: run_t14,
    },
    CheckDef {
        id: "t12-dim-drop",
        summary: "(d+1)-rigid graphs are globally d-rigid",
        dims: (1, 6),
        conjecture: false,
        runner: run_t12,
    },
    CheckDef {
        id: "t16-linked-drop",
        summary: "(d+1)-linked pairs are d-stress-linked (verdict never False)",
        dims: (1, 6),
        conjecture: false,
        runner: run_t16,
    },
    CheckDef {
        id: "t15-vertex-redundant",
        summary: "vertex-redundantly d-linked pairs are d-stress-linked (verdict never False)",
        dims: (1, 6),
        conjecture: false,
        runner: run_t15,
    },
    CheckDef {
        id: "t-mainstress",
        summary: "d-stress-independent graphs are R_{d+1}-independent and satisfy the subgraph bound |E'| <= r_d(G') + |V'| - d - 1 with equality only on K_{d+2}",
        dims: (1, 4),
        conjecture: false,
        runner: run_mainstress,
    },
    CheckDef {
        id: "t46-3n9",
        summary: "2-stress-independent graphs on at least 8 vertices have at most 3n - 9 edges",
        dims: (2, 2),
        conjecture: false,
        runner: run_t46,
    },
    CheckDef {
        id: "t47-strong",
        summary: "subgraphs of 2-stress-independent graphs on at least 8 vertices satisfy |E'| <= r_2(G') + |V'| - 6",
        dims: (2, 2),
        conjecture: false,
        runner: run_t47,
    },
    CheckDef {
        id: "l49-2sum",
        summary: "s_d is additive over 2-sum decompositions of R_d-circuits",
        dims: (1, 4),
        conjecture: false,
        runner: run_l49,
    },
    CheckDef {
        id: "l411-class",
        summary: "R_2-circuits with s_2 = 1 are exactly K_4, with s_2 = 2 exactly W_5 and K_4 + K_4 (2-sum); circuits on >= 7 vertices have s_2 >= 3",
        dims: (2, 2),
        conjecture: false,
        runner: run_l411,
    },
    CheckDef {
        id: "p412-3n7",
        summary: "2-stress-independent graphs with |E| = 3n - 7 are K_4 - e, K_4 plus a degree-2 vertex, or W_5",
        dims: (2, 2),
        conjecture: false,
        runner: run_p412,
    },
    CheckDef {
        id: "t52-min-mconn",
        summary: "graphs whose nontrivial R_d-components are all minimally R_d-connected are R_{d+1}-independent and satisfy the subgraph bound with equality only on K_{d+2}",
        dims: (1, 4),
        conjecture: false,
        runner: run_t52,
    },
    CheckDef {
        id: "c51-via-2d",
        summary: "minimally R_d-connected graphs are d-stress-independent (theorem for d = 2, conjecture search for d = 3)",
        dims: (2, 3),
        conjecture: true,
        runner: run_c51,
    },
    CheckDef {
        id: "t62-nok4",
        summary: "R_2-connected 2-stress-independent graphs on at least 5 vertices contain no K_4",
        dims: (2, 2),
        conjecture: false,
        runner: run_t62,
    },
    CheckDef {
        id: "t66-mader",
        summary: "minimally k-connected graphs are R_k-independent and satisfy |E'| <= r_{k-1}(G') + |V'| - k on subgraphs, equality only on K_{k+1} (dimension parameter = k)",
        dims: (2, 6),
        conjecture: false,
        runner: run_t66,
    },
    CheckDef {
        id: "c44-sigma-sharp",
        summary: "d-stress-independent graphs with enough vertices have at most (d+1)n - (d+1)^2 edges (counterexample search; failures below n = C(d+2,2)+1 are reported separately)",
        dims: (1, 4),
        conjecture: true,
        runner: run_c44,
    },
    CheckDef {
        id: "maxwell",
        summary: "R_d-independent graphs satisfy the sparsity count |E(S)| <= d|S| - C(d+1,2) on every vertex subset",
        dims: (1, 6),
        conjecture: false,
        runner: run_maxwell,
    },
    CheckDef {
        id: "hendrickson+mconn",
        summary: "globally d-rigid graphs on at least d+2 vertices are redundantly d-rigid and R_d-connected",
        dims: (1, 4),
        conjecture: false,
        runner: run_hendrickson,
    },
    CheckDef {
        id: "c63-kd2-free",
        summary: "minimally globally d-rigid graphs on at least d+3 vertices contain no K_{d+2} (counterexample search)",
        dims: (2, 3),
        conjecture: true,
        runner: run_c63,
    },
];

fn oracle(g: &Graph, config: &GenericConfig) -> RankOracle {
    RankOracle::new(g.clone(), config)
}

fn run_t13(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let (n, m, d) = (g.vertex_count(), g.edge_count(), config.dim);
    if n < d + 2 {
        return Ok(Outcome::Filtered);
    }
    let bound = (d + 1) * n - (d + 2) * (d + 1) / 2;
    if m < bound {
        // bound strict: nothing to verify beyond the filter
        return if stress::is_minimally_globally_rigid(&mut oracle(g, config)) {
            Ok(Outcome::Pass)
        } else {
            Ok(Outcome::Filtered)
        };
    }
    if !stress::is_minimally_globally_rigid(&mut oracle(g, config)) {
        return Ok(Outcome::Filtered);
    }
    if m > bound {
        return Ok(Outcome::Violation(format!(
            "minimally globally rigid with {} > {} edges",
            m, bound
        )));
    }
    if n == d + 2 && g.is_complete() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Violation(format!(
            "edge bound attained with equality but the graph is not K_{}",
            d + 2
        )))
    }
}

fn run_t14(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    if !stress::is_minimally_globally_rigid(&mut oracle(g, config)) {
        return Ok(Outcome::Filtered);
    }
    let d1 = config.with_dim(config.dim + 1);
    if oracle(g, &d1).is_independent() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Violation(format!(
            "not R_{}-independent",
            config.dim + 1
        )))
    }
}

fn run_t12(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let d1 = config.with_dim(config.dim + 1);
    if !oracle(g, &d1).is_rigid() {
        return Ok(Outcome::Filtered);
    }
    if stress::is_globally_rigid(&mut oracle(g, config)) {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Violation(format!(
            "{}-rigid but not globally {}-rigid",
            config.dim + 1,
            config.dim
        )))
    }
}

fn run_t16(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let n = g.vertex_count();
    if n < 2 {
        return Ok(Outcome::Filtered);
    }
    let d1 = config.with_dim(config.dim + 1);
    let mut relevant = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            if !crate::rigidity::is_linked(g, u, v, &d1).unwrap() {
                continue;
            }
            relevant = true;
            let verdict = linked::stress_linked_verdict(g, u, v, config).unwrap();
            match verdict.value {
                Truth::False => {
                    return Ok(Outcome::Violation(format!(
                        "pair ({}, {}) is {}-linked but not {}-stress-linked (rule {})",
                        u,
                        v,
                        config.dim + 1,
                        config.dim,
                        verdict.rule.unwrap_or("?")
                    )));
                }
                Truth::Unknown => {
                    return Ok(Outcome::Unknown(format!(
                        "pair ({}, {}) is {}-linked, stress-linkedness undecided",
                        u,
                        v,
                        config.dim + 1
                    )));
                }
                Truth::True => {}
            }
        }
    }
    Ok(if relevant { Outcome::Pass } else { Outcome::Filtered })
}

fn run_t15(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let n = g.vertex_count();
    if n < 3 {
        return Ok(Outcome::Filtered);
    }
    let mut relevant = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            if !linked::is_vertex_redundantly_linked(g, u, v, config).unwrap() {
                continue;
            }
            relevant = true;
            let verdict = linked::stress_linked_verdict(g, u, v, config).unwrap();
            match verdict.value {
                Truth::False => {
                    return Ok(Outcome::Violation(format!(
                        "pair ({}, {}) is vertex-redundantly linked but not stress-linked (rule {})",
                        u,
                        v,
                        verdict.rule.unwrap_or("?")
                    )));
                }
                Truth::Unknown => {
                    return Ok(Outcome::Unknown(format!(
                        "pair ({}, {}) vertex-redundantly linked, stress-linkedness undecided",
                        u, v
                    )));
                }
                Truth::True => {}
            }
        }
    }
    Ok(if relevant { Outcome::Pass } else { Outcome::Filtered })
}

/// Shared by t-mainstress and t52: R_{d+1}-independence plus the induced
/// subgraph bound |E'| <= r_d(G') + |V'| - d - 1 with equality exactly on
/// complete graphs K_{d+2}. Exhaustive over vertex subsets; n <= 12.
fn independence_and_bounds(g: &Graph, config: &GenericConfig) -> Result<Option<String>, String> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(format!("subgraph scan needs n <= 12, got {}", n));
    }
    let d = config.dim;
    if !oracle(g, &config.with_dim(d + 1)).is_independent() {
        return Ok(Some(format!("not R_{}-independent", d + 1)));
    }
    let mut o = oracle(g, config);
    let m = g.edge_count();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < d + 2 {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|x| mask >> x & 1 == 1).collect();
        let indices: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| inside[e.u()] && inside[e.v()])
            .map(|(i, _)| i)
            .collect();
        let rank = o.rank(&EdgeSet::from_indices(m, &indices));
        let bound = rank + size - d - 1;
        if indices.len() > bound {
            return Ok(Some(format!(
                "induced subgraph on {:?} has {} > {} edges",
                (0..n).filter(|&x| inside[x]).collect::<Vec<_>>(),
                indices.len(),
                bound
            )));
        }
        if indices.len() == bound && (size != d + 2 || indices.len() != size * (size - 1) / 2) {
            return Ok(Some(format!(
                "subgraph bound attained with equality on {:?}, which is not K_{}",
                (0..n).filter(|&x| inside[x]).collect::<Vec<_>>(),
                d + 2
            )));
        }
    }
    Ok(None)
}

fn run_mainstress(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => match independence_and_bounds(g, config)? {
            None => Ok(Outcome::Pass),
            Some(detail) => Ok(Outcome::Violation(detail)),
        },
    }
}

fn run_t46(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 8 {
        return Ok(Outcome::Filtered);
    }
    if m <= 3 * n - 9 {
        return Ok(Outcome::PassLazy);
    }
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => Ok(Outcome::Violation(format!(
            "2-stress-independent with {} > {} edges",
            m,
            3 * n - 9
        ))),
    }
}

fn run_t47(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let n = g.vertex_count();
    if n < 8 {
        return Ok(Outcome::Filtered);
    }
    if n > 12 {
        return Err(format!("subgraph scan needs n <= 12, got {}", n));
    }
    let mut o = oracle(g, config);
    let m = g.edge_count();
    let mut offending: Option<String> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 8 {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|x| mask >> x & 1 == 1).collect();
        let indices: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| inside[e.u()] && inside[e.v()])
            .map(|(i, _)| i)
            .collect();
        let rank = o.rank(&EdgeSet::from_indices(m, &indices));
        if indices.len() > rank + size - 6 {
            offending = Some(format!(
                "induced subgraph on {:?} has {} > {} edges",
                (0..n).filter(|&x| inside[x]).collect::<Vec<_>>(),
                indices.len(),
                rank + size - 6
            ));
            break;
        }
    }
    let Some(detail) = offending else {
        return Ok(Outcome::PassLazy);
    };
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => Ok(Outcome::Violation(detail)),
    }
}

fn run_l49(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let mut o = oracle(g, config);
    if !o.is_circuit() {
        return Ok(Outcome::Filtered);
    }
    let seps = g.two_separations();
    let Some(sep) = seps.iter().find(|s| !g.has_edge(s.pair.0, s.pair.1)) else {
        return Ok(Outcome::Filtered);
    };
    let (u, v) = sep.pair;
    let build_side = |side: &[usize]| -> (Graph, usize, usize) {
        let (h, back) = g.induced(side);
        let hu = back.iter().position(|&x| x == u).unwrap();
        let hv = back.iter().position(|&x| x == v).unwrap();
        (h.add_edge(hu, hv).unwrap(), hu, hv)
    };
    let (g1, _, _) = build_side(&sep.side1);
    let (g2, _, _) = build_side(&sep.side2);
    let mut o1 = oracle(&g1, config);
    let mut o2 = oracle(&g2, config);
    if !o1.is_circuit() || !o2.is_circuit() {
        return Ok(Outcome::Violation(format!(
            "2-sum decomposition along nonadjacent pair ({}, {}) does not split into two circuits",
            u, v
        )));
    }
    let s = stress::shared_stress_profile(&mut o).s;
    let s1 = stress::shared_stress_profile(&mut o1).s;
    let s2 = stress::shared_stress_profile(&mut o2).s;
    if s == s1 + s2 {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Violation(format!(
            "s = {} but the 2-sum sides give {} + {}",
            s, s1, s2
        )))
    }
}

fn run_l411(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let mut o = oracle(g, config);
    if !o.is_circuit() {
        return Ok(Outcome::Filtered);
    }
    let n = g.vertex_count();
    let s = stress::shared_stress_profile(&mut o).s;
    if n >= 7 && s < 3 {
        return Ok(Outcome::Violation(format!(
            "circuit on {} vertices with s_2 = {} < 3",
            n, s
        )));
    }
    let is_k4 = n == 4 && g.is_complete();
    if (s == 1) != is_k4 {
        return Ok(Outcome::Violation(format!(
            "s_2 = {} disagrees with the K_4 classification",
            s
        )));
    }
    let is_w5 = n == 5 && graph::are_isomorphic(g, &graph::construct_family("wheel", &[5]).unwrap());
    let is_2sum = n == 6
        && graph::are_isomorphic(g, &graph::construct_family("k4_2sum_k4", &[]).unwrap());
    if (s == 2) != (is_w5 || is_2sum) {
        return Ok(Outcome::Violation(format!(
            "s_2 = {} disagrees with the W_5 / K_4-2-sum classification",
            s
        )));
    }
    Ok(Outcome::Pass)
}

fn run_p412(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 4 || m != 3 * n - 7 {
        return Ok(Outcome::Filtered);
    }
    let target = n == 4
        && graph::are_isomorphic(
            g,
            &graph::construct_family("complete", &[4]).unwrap().remove_edge(0, 1).unwrap(),
        )
        || n == 5
            && (graph::are_isomorphic(g, &graph::construct_family("k4_plus", &[]).unwrap())
                || graph::are_isomorphic(g, &graph::construct_family("wheel", &[5]).unwrap()));
    if target {
        return Ok(Outcome::PassLazy);
    }
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => Ok(Outcome::Violation(format!(
            "2-stress-independent with |E| = 3n - 7 but not K_4 - e, K_4^+, or W_5 (n = {})",
            n
        ))),
    }
}

fn run_t52(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let decomp = matroid::components(&mut oracle(g, config));
    for comp in decomp.nontrivial() {
        let sub = g.edge_subgraph(&comp.edges.indices());
        let spanned: Vec<usize> = (0..sub.vertex_count())
            .filter(|&v| sub.degree(v) > 0)
            .collect();
        let (h, _) = sub.induced(&spanned);
        if !matroid::is_minimally_rd_connected(&mut oracle(&h, config)) {
            return Ok(Outcome::Filtered);
        }
    }
    if g.edge_count() == 0 {
        return Ok(Outcome::Filtered);
    }
    match independence_and_bounds(g, config)? {
        None => Ok(Outcome::Pass),
        Some(detail) => Ok(Outcome::Violation(detail)),
    }
}

fn run_c51(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    if !matroid::is_minimally_rd_connected(&mut oracle(g, config)) {
        return Ok(Outcome::Filtered);
    }
    match linked::stress_independent_verdict(g, config).value {
        Truth::True => Ok(Outcome::Pass),
        Truth::False => Ok(Outcome::Violation(
            "minimally R_d-connected but not d-stress-independent".to_string(),
        )),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
    }
}

fn run_t62(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    if g.vertex_count() < 5 {
        return Ok(Outcome::Filtered);
    }
    if !g.has_clique(4) {
        return Ok(Outcome::PassLazy);
    }
    if !matroid::is_rd_connected(&mut oracle(g, config)) {
        return Ok(Outcome::Filtered);
    }
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => Ok(Outcome::Violation(
            "R_2-connected and 2-stress-independent but contains K_4".to_string(),
        )),
    }
}

fn run_t66(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let k = config.dim;
    let n = g.vertex_count();
    if !g.is_k_connected(k) {
        return Ok(Outcome::Filtered);
    }
    let minimally = g.edges().iter().all(|e| {
        !g.remove_edge(e.u(), e.v()).unwrap().is_k_connected(k)
    });
    if !minimally {
        return Ok(Outcome::Filtered);
    }
    if n > 12 {
        return Err(format!("subgraph scan needs n <= 12, got {}", n));
    }
    if !oracle(g, config).is_independent() {
        return Ok(Outcome::Violation(format!("not R_{}-independent", k)));
    }
    // subgraph bound at dimension k-1
    let low = config.with_dim(k - 1);
    let mut o = oracle(g, &low);
    let m = g.edge_count();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < k + 1 {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|x| mask >> x & 1 == 1).collect();
        let indices: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| inside[e.u()] && inside[e.v()])
            .map(|(i, _)| i)
            .collect();
        let rank = o.rank(&EdgeSet::from_indices(m, &indices));
        let bound = rank + size - k;
        if indices.len() > bound {
            return Ok(Outcome::Violation(format!(
                "induced subgraph on {:?} has {} > {} edges",
                (0..n).filter(|&x| inside[x]).collect::<Vec<_>>(),
                indices.len(),
                bound
            )));
        }
        if indices.len() == bound && (size != k + 1 || indices.len() != size * (size - 1) / 2) {
            return Ok(Outcome::Violation(format!(
                "bound attained with equality on a subgraph that is not K_{}",
                k + 1
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn run_c44(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let (n, m, d) = (g.vertex_count(), g.edge_count(), config.dim);
    let bound = ((d + 1) * n) as i64 - ((d + 1) * (d + 1)) as i64;
    if (m as i64) <= bound {
        return Ok(Outcome::PassLazy);
    }
    match linked::stress_independent_verdict(g, config).value {
        Truth::False => Ok(Outcome::Filtered),
        Truth::Unknown => Ok(Outcome::Unknown(
            "stress-independence undecided".to_string(),
        )),
        Truth::True => {
            let threshold = (d + 2) * (d + 1) / 2 + 1;
            let detail = format!(
                "d-stress-independent with {} > {} edges (n = {})",
                m, bound, n
            );
            if n >= threshold {
                Ok(Outcome::Violation(detail))
            } else {
                Ok(Outcome::BelowThreshold(detail))
            }
        }
    }
}

fn run_maxwell(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    if !oracle(g, config).is_independent() {
        return Ok(Outcome::Filtered);
    }
    let violations = maxwell_violations(g, config.dim).map_err(|e| e.to_string())?;
    if violations.is_empty() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Violation(format!(
            "R_d-independent but {} vertex sets violate the sparsity count (first: {:?})",
            violations.len(),
            violations[0]
        )))
    }
}

fn run_c63(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    let (n, d) = (g.vertex_count(), config.dim);
    if n < d + 3 {
        return Ok(Outcome::Filtered);
    }
    if !g.has_clique(d + 2) {
        return Ok(Outcome::PassLazy);
    }
    if stress::is_minimally_globally_rigid(&mut oracle(g, config)) {
        Ok(Outcome::Violation(format!(
            "minimally globally {}-rigid but contains K_{}",
            d,
            d + 2
        )))
    } else {
        Ok(Outcome::Filtered)
    }
}

fn run_hendrickson(g: &Graph, config: &GenericConfig) -> Result<Outcome, String> {
    if g.vertex_count() < config.dim + 2 {
        return Ok(Outcome::Filtered);
    }
    if !stress::is_globally_rigid(&mut oracle(g, config)) {
        return Ok(Outcome::Filtered);
    }
    if !stress::is_redundantly_rigid(&mut oracle(g, config)) {
        return Ok(Outcome::Violation(
            "globally rigid but not redundantly rigid".to_string(),
        ));
    }
    if !matroid::is_rd_connected(&mut oracle(g, config)) {
        return Ok(Outcome::Violation(
            "globally rigid but not R_d-connected".to_string(),
        ));
    }
    Ok(Outcome::Pass)
}

/// Runs one check over a stream. Deterministic for any `jobs` value;
/// jobs = 0 uses all available cores.
pub fn run_check(
    id: &str,
    graphs: &[Graph],
    config: &GenericConfig,
    jobs: usize,
) -> Result<CheckReport, CheckError> {
    let def = find_check(id).ok_or_else(|| CheckError::UnknownId(id.to_string()))?;
    if config.dim < def.dims.0 || config.dim > def.dims.1 {
        return Err(CheckError::DimOutOfRange {
            id: id.to_string(),
            dim: config.dim,
            min: def.dims.0,
            max: def.dims.1,
        });
    }
    if graphs.is_empty() {
        return Err(CheckError::EmptyStream);
    }
    let start = Instant::now();
    let outcomes: Vec<(String, Result<Outcome, String>)> = parallel_map(jobs, graphs, |g| {
        let g6 = g.graph6();
        let derived = config.derive_for_graph(g);
        (g6, (def.runner)(g, &derived))
    });

    let mut report = CheckReport {
        id: id.to_string(),
        dim: config.dim,
        scanned: 0,
        checked: 0,
        passed: 0,
        violations: Vec::new(),
        unknowns: Vec::new(),
        below_threshold: Vec::new(),
        config: *config,
        runtime: Duration::ZERO,
    };
    for (g6, outcome) in outcomes {
        report.scanned += 1;
        match outcome {
            Err(detail) => {
                return Err(CheckError::GraphTooLarge {
                    id: id.to_string(),
                    graph6: g6,
                    detail,
                });
            }
            Ok(Outcome::Filtered) => {}
            Ok(Outcome::Pass) => {
                report.checked += 1;
                report.passed += 1;
            }
            Ok(Outcome::PassLazy) => {
                report.passed += 1;
            }
            Ok(Outcome::Violation(detail)) => {
                report.checked += 1;
                report.violations.push(Finding { graph6: g6, detail });
            }
            Ok(Outcome::Unknown(detail)) => {
                report.checked += 1;
                report.unknowns.push(Finding { graph6: g6, detail });
            }
            Ok(Outcome::BelowThreshold(detail)) => {
                report.checked += 1;
                report.below_threshold.push(Finding { graph6: g6, detail });
            }
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// Order-preserving parallel map over a slice; jobs = 0 uses the rayon
/// default width. Output order equals input order for every width.
pub fn parallel_map<I, O, F>(jobs: usize, items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

/// Sharpness of the conjectured (d+1)n - (d+1)^2 bound: the complete
/// bipartite graphs K_{d+1, n-d-1} attain it and are minimally globally
/// d-rigid for every n from C(d+2,2)+1 up to n_max. d <= 3, n_max <= 12.
pub fn sharpness_suite(
    dim: usize,
    n_max: usize,
    config: &GenericConfig,
) -> Result<CheckReport, CheckError> {
    if dim > 3 || n_max > 12 {
        return Err(CheckError::SharpnessOutOfRange);
    }
    let config = config.with_dim(dim);
    let start = Instant::now();
    let mut report = CheckReport {
        id: "sharpness".to_string(),
        dim,
        scanned: 0,
        checked: 0,
        passed: 0,
        violations: Vec::new(),
        unknowns: Vec::new(),
        below_threshold: Vec::new(),
        config,
        runtime: Duration::ZERO,
    };
    let n_min = (dim + 2) * (dim + 1) / 2 + 1;
    for n in n_min..=n_max {
        let g = graph::construct_family("complete_bipartite", &[dim + 1, n - dim - 1]).unwrap();
        report.scanned += 1;
        report.checked += 1;
        let expect_edges = (dim + 1) * n - (dim + 1) * (dim + 1);
        let derived = config.derive_for_graph(&g);
        if g.edge_count() != expect_edges {
            report.violations.push(Finding {
                graph6: g.graph6(),
                detail: format!("K_{{{},{}}} has {} edges, expected {}", dim + 1, n - dim - 1, g.edge_count(), expect_edges),
            });
            continue;
        }
        if !stress::is_minimally_globally_rigid(&mut RankOracle::new(g.clone(), &derived)) {
            report.violations.push(Finding {
                graph6: g.graph6(),
                detail: format!("K_{{{},{}}} is not minimally globally {}-rigid", dim + 1, n - dim - 1, dim),
            });
            continue;
        }
        report.passed += 1;
    }
    report.runtime = start.elapsed();
    Ok(report)
}

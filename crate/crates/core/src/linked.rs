//! The linkedness hierarchy: d-linked variants, the exact 2-stress-linked
//! test, and three-valued verdicts for d-stress-linkedness, global
//! linkedness and d-stress-independence.
//!
//! For d = 2 stress-linkedness has an exact combinatorial characterisation
//! (an R_2-connected subgraph containing both vertices with local
//! connectivity at least three). For other dimensions only one-directional
//! theorems are available, so verdicts are three-valued: True and False
//! always name the rule that fired, Unknown carries the rules attempted.

use crate::graph::{connectivity, Graph};
use crate::matroid;
use crate::rigidity::{is_linked, GenericConfig, RankOracle};
use crate::stress;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkedError {
    #[error("vertices must be distinct")]
    EqualVertices,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("exact 2-stress-linked test limited to n <= {limit}, got {n}")]
    ExactTestTooLarge { n: usize, limit: usize },
    #[error("graph too large for exhaustive subgraph scan (n = {0})")]
    ScanTooLarge(usize),
    #[error("graph is not verified d-stress-independent")]
    NotStressIndependent,
    #[error("vertex-redundant linkedness needs at least 3 vertices")]
    TooFewVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Truth {
    True,
    False,
    Unknown,
}

/// Witness attached to a verdict: the vertex set of an exact-test subgraph,
/// an offending edge, or a separator used by the gluing rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum Witness {
    VertexSet(Vec<usize>),
    Edge(usize, usize),
    Separator(Vec<usize>),
}

/// Three-valued result. True/False verdicts carry the identifier of the
/// rule that fired; Unknown lists the rules attempted. Rule identifiers
/// are a stable public contract (see the crate README).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: Truth,
    pub rule: Option<&'static str>,
    pub witness: Option<Witness>,
    pub attempted: Vec<&'static str>,
}

impl Verdict {
    fn decided(value: Truth, rule: &'static str, witness: Option<Witness>) -> Self {
        Verdict {
            value,
            rule: Some(rule),
            witness,
            attempted: Vec::new(),
        }
    }

    fn unknown(attempted: Vec<&'static str>) -> Self {
        Verdict {
            value: Truth::Unknown,
            rule: None,
            witness: None,
            attempted,
        }
    }

    pub fn is_true(&self) -> bool {
        self.value == Truth::True
    }

    pub fn is_false(&self) -> bool {
        self.value == Truth::False
    }
}

pub const RULE_ADJACENT: &str = "adjacent";
pub const RULE_EXACT_2D: &str = "thm-2-stress-linked-exact";
pub const RULE_NOT_LINKED: &str = "not-d-linked";
pub const RULE_KAPPA: &str = "thm-stresslinked-kappa";
pub const RULE_COCIRCUIT: &str = "thm-stresslinked-cocircuit";
pub const RULE_VERTEX_REDUNDANT: &str = "thm-vertex-redundant-sufficient";
pub const RULE_DIMENSION_DROP: &str = "thm-linked-dimension-drop";
pub const RULE_GLUING: &str = "thm-gluing";
pub const RULE_GLOBALLY_RIGID: &str = "prop-globally-rigid-all-pairs";
pub const RULE_STRESS_TO_GLOBAL: &str = "thm-stresslinked-implies-globally-linked";
pub const RULE_VR_GLOBAL: &str = "thm-vertex-redundant-globally-linked";
pub const RULE_DEF_STRESS_INDEPENDENT: &str = "def-stress-independent";

const EXACT_LIMIT: usize = 16;
const SCAN_LIMIT: usize = 12;

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<(), LinkedError> {
    if u == v {
        return Err(LinkedError::EqualVertices);
    }
    let n = g.vertex_count();
    if u >= n {
        return Err(LinkedError::VertexOutOfRange(u));
    }
    if v >= n {
        return Err(LinkedError::VertexOutOfRange(v));
    }
    Ok(())
}

/// {u, v} is d-linked in g - z for every other vertex z.
pub fn is_vertex_redundantly_linked(
    g: &Graph,
    u: usize,
    v: usize,
    config: &GenericConfig,
) -> Result<bool, LinkedError> {
    check_pair(g, u, v)?;
    if g.vertex_count() < 3 {
        return Err(LinkedError::TooFewVertices);
    }
    for z in 0..g.vertex_count() {
        if z == u || z == v {
            continue;
        }
        let smaller = g.remove_vertex(z).unwrap();
        let (u2, v2) = (u - (u > z) as usize, v - (v > z) as usize);
        if !is_linked(&smaller, u2, v2, config).unwrap() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact 2-stress-linkedness: uv is an edge, or some induced subgraph on
/// S containing u and v is R_2-connected with kappa(u, v) >= 3 inside it.
///
/// Restricting to induced subgraphs loses nothing: an R_2-connected
/// witness stays R_2-connected after adding the remaining induced edges
/// (each addition closes a circuit through the existing component) and
/// local connectivity only grows. The whole vertex set is tried first (the
/// common accept for dense graphs), then subsets in ascending (size, mask)
/// order; the first success is the reported witness. Exhaustive over
/// 2^(n-2) subsets, so n <= 16 is enforced.
pub fn is_two_stress_linked(
    g: &Graph,
    u: usize,
    v: usize,
    config: &GenericConfig,
) -> Result<(bool, Option<Vec<usize>>), LinkedError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok((true, None));
    }
    let n = g.vertex_count();
    if n > EXACT_LIMIT {
        return Err(LinkedError::ExactTestTooLarge {
            n,
            limit: EXACT_LIMIT,
        });
    }
    let config = config.with_dim(2);
    // local connectivity of an (induced) subgraph never exceeds the
    // graph's, so kappa < 3 rules every witness out
    if g.kappa(u, v).unwrap() < 3 {
        return Ok((false, None));
    }
    let try_subset = |vertices: &[usize]| -> Option<Vec<usize>> {
        let (h, back) = g.induced(vertices);
        let hu = back.iter().position(|&x| x == u).unwrap();
        let hv = back.iter().position(|&x| x == v).unwrap();
        if h.kappa(hu, hv).unwrap() < 3 {
            return None;
        }
        if matroid::is_rd_connected(&mut RankOracle::new(h, &config)) {
            Some(back)
        } else {
            None
        }
    };

    let all: Vec<usize> = (0..n).collect();
    if let Some(w) = try_subset(&all) {
        return Ok((true, Some(w)));
    }
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    // witnesses need at least four vertices (the smallest R_2-circuit is K_4)
    for size in 2..others.len() {
        // Gosper's hack over size-subsets in ascending mask order
        let mut mask: u64 = (1 << size) - 1;
        while mask < 1 << others.len() {
            let mut vertices = vec![u, v];
            for (i, &x) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    vertices.push(x);
                }
            }
            if let Some(w) = try_subset(&vertices) {
                return Ok((true, Some(w)));
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok((false, None))
}

/// Three-valued d-stress-linkedness verdict.
///
/// True rules, in order: adjacency; the exact d = 2 test (n <= 16);
/// few-failing-vertices (the set U of vertices whose deletion unlinks the
/// pair has size at most d-1, n >= d+2); (d+1)-linkedness; gluing across
/// a separator of size at most d+1 (exhaustive search, n <= 12); global
/// d-rigidity. False rules: the pair is not d-linked; kappa(u, v) <= d;
/// uv lies in a size-two cocircuit of R_d(G + uv). Anything else is
/// Unknown (only reachable for d != 2 or n > 16).
pub fn stress_linked_verdict(
    g: &Graph,
    u: usize,
    v: usize,
    config: &GenericConfig,
) -> Result<Verdict, LinkedError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok(Verdict::decided(Truth::True, RULE_ADJACENT, None));
    }
    if config.dim == 2 && g.vertex_count() <= EXACT_LIMIT {
        let (linked, witness) = is_two_stress_linked(g, u, v, config)?;
        let value = if linked { Truth::True } else { Truth::False };
        return Ok(Verdict::decided(
            value,
            RULE_EXACT_2D,
            witness.map(Witness::VertexSet),
        ));
    }
    cascade_verdict(g, u, v, config)
}

fn cascade_verdict(
    g: &Graph,
    u: usize,
    v: usize,
    config: &GenericConfig,
) -> Result<Verdict, LinkedError> {
    let d = config.dim;
    let n = g.vertex_count();
    let mut attempted = Vec::new();

    attempted.push(RULE_NOT_LINKED);
    if !is_linked(g, u, v, config).unwrap() {
        return Ok(Verdict::decided(Truth::False, RULE_NOT_LINKED, None));
    }

    attempted.push(RULE_KAPPA);
    if g.kappa(u, v).unwrap() <= d {
        return Ok(Verdict::decided(Truth::False, RULE_KAPPA, None));
    }

    attempted.push(RULE_COCIRCUIT);
    let plus = g.add_edge(u, v).unwrap();
    let uv_idx = plus.edge_index(u, v).unwrap();
    let mut oracle_plus = RankOracle::new(plus.clone(), config);
    for f in 0..plus.edge_count() {
        if f == uv_idx {
            continue;
        }
        if matroid::is_two_cocircuit(&mut oracle_plus, uv_idx, f).unwrap() {
            let fe = plus.edge(f);
            return Ok(Verdict::decided(
                Truth::False,
                RULE_COCIRCUIT,
                Some(Witness::Edge(fe.u(), fe.v())),
            ));
        }
    }

    if n >= d + 2 {
        attempted.push(RULE_VERTEX_REDUNDANT);
        let mut failing = Vec::new();
        for z in 0..n {
            if z == u || z == v {
                continue;
            }
            let smaller = g.remove_vertex(z).unwrap();
            let (u2, v2) = (u - (u > z) as usize, v - (v > z) as usize);
            if !is_linked(&smaller, u2, v2, config).unwrap() {
                failing.push(z);
            }
        }
        if failing.len() <= d - 1 {
            return Ok(Verdict::decided(
                Truth::True,
                RULE_VERTEX_REDUNDANT,
                Some(Witness::VertexSet(failing)),
            ));
        }
    }

    attempted.push(RULE_DIMENSION_DROP);
    if is_linked(g, u, v, &config.with_dim(d + 1)).unwrap() {
        return Ok(Verdict::decided(Truth::True, RULE_DIMENSION_DROP, None));
    }

    if n <= SCAN_LIMIT {
        attempted.push(RULE_GLUING);
        if let Some(sep) = gluing_separator(g, u, v, config) {
            return Ok(Verdict::decided(
                Truth::True,
                RULE_GLUING,
                Some(Witness::Separator(sep)),
            ));
        }
    }

    attempted.push(RULE_GLOBALLY_RIGID);
    if stress::is_globally_rigid(&mut RankOracle::new(g.clone(), config)) {
        return Ok(Verdict::decided(Truth::True, RULE_GLOBALLY_RIGID, None));
    }

    Ok(Verdict::unknown(attempted))
}

/// Searches for a separator S of size at most d+1 containing {u, v} that
/// splits g into two sides, each keeping the pair d-linked. Linkedness is
/// monotone under taking supergraphs, so if two separate components
/// already link the pair, any one-vs-rest split works; otherwise all
/// component bipartitions are tried.
fn gluing_separator(g: &Graph, u: usize, v: usize, config: &GenericConfig) -> Option<Vec<usize>> {
    let d = config.dim;
    for sep in connectivity::separators_containing(g, u, v, d + 1) {
        let mut removed = vec![false; g.vertex_count()];
        for &x in &sep {
            removed[x] = true;
        }
        let comps = connectivity::components_avoiding(g, &removed);
        let k = comps.len();
        if k < 2 || k > 12 {
            continue;
        }
        let linked_in = |vertices: &[usize]| -> bool {
            let mut side = sep.clone();
            side.extend_from_slice(vertices);
            let (h, back) = g.induced(&side);
            let hu = back.iter().position(|&x| x == u).unwrap();
            let hv = back.iter().position(|&x| x == v).unwrap();
            is_linked(&h, hu, hv, config).unwrap()
        };
        let singly_linked: Vec<usize> = (0..k)
            .filter(|&i| linked_in(&comps[i]))
            .collect();
        if singly_linked.len() >= 2 {
            return Some(sep);
        }
        // try every bipartition of the components
        for split in 1u32..(1 << (k - 1)) {
            let mut side_a = Vec::new();
            let mut side_b = Vec::new();
            for (i, comp) in comps.iter().enumerate() {
                if split >> i & 1 == 1 {
                    side_a.extend_from_slice(comp);
                } else {
                    side_b.extend_from_slice(comp);
                }
            }
            if linked_in(&side_a) && linked_in(&side_b) {
                return Some(sep);
            }
        }
    }
    None
}

/// Three-valued globally-d-linked verdict: True when the pair is adjacent,
/// d-stress-linked, or vertex-redundantly d-linked; False when it is not
/// d-linked or kappa(u, v) <= d; Unknown otherwise. A False
/// stress-linkedness verdict does not propagate (the converse implication
/// is conjectural).
pub fn globally_linked_verdict(
    g: &Graph,
    u: usize,
    v: usize,
    config: &GenericConfig,
) -> Result<Verdict, LinkedError> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok(Verdict::decided(Truth::True, RULE_ADJACENT, None));
    }
    let mut attempted = Vec::new();

    let sl = stress_linked_verdict(g, u, v, config)?;
    attempted.push(RULE_STRESS_TO_GLOBAL);
    if sl.is_true() {
        return Ok(Verdict::decided(Truth::True, RULE_STRESS_TO_GLOBAL, sl.witness));
    }

    attempted.push(RULE_NOT_LINKED);
    if !is_linked(g, u, v, config).unwrap() {
        return Ok(Verdict::decided(Truth::False, RULE_NOT_LINKED, None));
    }
    attempted.push(RULE_KAPPA);
    if g.kappa(u, v).unwrap() <= config.dim {
        return Ok(Verdict::decided(Truth::False, RULE_KAPPA, None));
    }

    if g.vertex_count() >= 3 {
        attempted.push(RULE_VR_GLOBAL);
        if is_vertex_redundantly_linked(g, u, v, config)? {
            return Ok(Verdict::decided(Truth::True, RULE_VR_GLOBAL, None));
        }
    }

    Ok(Verdict::unknown(attempted))
}

/// d-stress-independence: no edge uv has {u, v} d-stress-linked in G - uv.
/// False verdicts carry the offending edge; exact for d = 2 (n <= 16).
pub fn stress_independent_verdict(g: &Graph, config: &GenericConfig) -> Verdict {
    let mut attempted = vec![RULE_DEF_STRESS_INDEPENDENT];
    let mut sound = true;
    for e in g.edges() {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        let verdict = stress_linked_verdict(&smaller, e.u(), e.v(), config).unwrap();
        match verdict.value {
            Truth::True => {
                return Verdict::decided(
                    Truth::False,
                    RULE_DEF_STRESS_INDEPENDENT,
                    Some(Witness::Edge(e.u(), e.v())),
                );
            }
            Truth::Unknown => {
                sound = false;
                for r in verdict.attempted {
                    if !attempted.contains(&r) {
                        attempted.push(r);
                    }
                }
            }
            Truth::False => {}
        }
    }
    if sound {
        Verdict::decided(Truth::True, RULE_DEF_STRESS_INDEPENDENT, None)
    } else {
        Verdict::unknown(attempted)
    }
}

/// Sparsity consequences of d-stress-independence: the graph is
/// R_{d+1}-independent, and every induced subgraph on at least d+2
/// vertices satisfies |E'| <= r_d(G') + |V'| - d - 1, with equality only
/// on copies of K_{d+2}.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessBoundsReport {
    pub rd1_independent: bool,
    pub bounds_hold: bool,
    pub equality_cases: Vec<Vec<usize>>,
    pub equality_cases_are_kd2: bool,
}

impl WitnessBoundsReport {
    pub fn all_good(&self) -> bool {
        self.rd1_independent && self.bounds_hold && self.equality_cases_are_kd2
    }
}

pub fn stress_independence_witness_bounds(
    g: &Graph,
    config: &GenericConfig,
) -> Result<WitnessBoundsReport, LinkedError> {
    let n = g.vertex_count();
    if n > SCAN_LIMIT {
        return Err(LinkedError::ScanTooLarge(n));
    }
    if stress_independent_verdict(g, config).value != Truth::True {
        return Err(LinkedError::NotStressIndependent);
    }
    let d = config.dim;
    let rd1_independent =
        RankOracle::new(g.clone(), &config.with_dim(d + 1)).is_independent();

    let mut oracle = RankOracle::new(g.clone(), config);
    let m = g.edge_count();
    let mut bounds_hold = true;
    let mut equality_cases = Vec::new();
    let mut equality_cases_are_kd2 = true;
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
        let rank = oracle.rank(&crate::rigidity::EdgeSet::from_indices(m, &indices));
        let bound = rank + size - d - 1;
        if indices.len() > bound {
            bounds_hold = false;
        } else if indices.len() == bound {
            let vertices: Vec<usize> = (0..n).filter(|&x| inside[x]).collect();
            let complete = indices.len() == size * (size - 1) / 2;
            if size != d + 2 || !complete {
                equality_cases_are_kd2 = false;
            }
            equality_cases.push(vertices);
        }
    }
    Ok(WitnessBoundsReport {
        rd1_independent,
        bounds_hold,
        equality_cases,
        equality_cases_are_kd2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_family;

    fn cfg(d: usize) -> GenericConfig {
        GenericConfig::new(d)
    }

    #[test]
    fn vertex_redundant_linkedness() {
        // nonadjacent pair of K_5 - uv stays linked after any deletion
        let k5_minus = construct_family("complete", &[5]).unwrap().remove_edge(0, 1).unwrap();
        assert!(is_vertex_redundantly_linked(&k5_minus, 0, 1, &cfg(2)).unwrap());

        let p4 = construct_family("path", &[4]).unwrap();
        assert!(!is_vertex_redundantly_linked(&p4, 0, 3, &cfg(1)).unwrap());

        assert!(is_vertex_redundantly_linked(&construct_family("complete", &[5]).unwrap(), 0, 1, &cfg(2)).unwrap());
        assert!(matches!(
            is_vertex_redundantly_linked(&p4, 1, 1, &cfg(1)),
            Err(LinkedError::EqualVertices)
        ));
    }

    #[test]
    fn exact_two_stress_linked() {
        // glued pair of the 2-sum of two K_4's: linked, witnessed by the
        // whole vertex set
        let k4q2 = construct_family("k4q", &[2]).unwrap();
        let (linked, witness) = is_two_stress_linked(&k4q2, 0, 1, &cfg(2)).unwrap();
        assert!(linked);
        assert_eq!(witness.unwrap(), vec![0, 1, 2, 3, 4, 5]);

        // K_4 minus an edge: not 2-stress-linked
        let k4_minus = construct_family("complete", &[4]).unwrap().remove_edge(0, 1).unwrap();
        assert_eq!(is_two_stress_linked(&k4_minus, 0, 1, &cfg(2)).unwrap().0, false);

        // adjacent pairs are always stress-linked
        let k4 = construct_family("complete", &[4]).unwrap();
        assert!(is_two_stress_linked(&k4, 0, 1, &cfg(2)).unwrap().0);
    }

    #[test]
    fn verdict_d2_is_exact() {
        let k4q2 = construct_family("k4q", &[2]).unwrap();
        let verdict = stress_linked_verdict(&k4q2, 0, 1, &cfg(2)).unwrap();
        assert_eq!(verdict.value, Truth::True);
        assert_eq!(verdict.rule, Some(RULE_EXACT_2D));

        let p5 = construct_family("path", &[5]).unwrap();
        let verdict = stress_linked_verdict(&p5, 0, 4, &cfg(2)).unwrap();
        assert_eq!(verdict.value, Truth::False);
    }

    #[test]
    fn verdict_higher_dimension_rules() {
        // kappa <= d forces False
        let p5 = construct_family("path", &[5]).unwrap();
        let verdict = stress_linked_verdict(&p5, 0, 4, &cfg(3)).unwrap();
        assert_eq!(verdict.value, Truth::False);

        // K_6 - e at d = 3: few failing vertices
        let k6_minus = construct_family("complete", &[6]).unwrap().remove_edge(0, 1).unwrap();
        let verdict = stress_linked_verdict(&k6_minus, 0, 1, &cfg(3)).unwrap();
        assert_eq!(verdict.value, Truth::True);
        assert_eq!(verdict.rule, Some(RULE_VERTEX_REDUNDANT));

        // K_5 - e at d = 3: kappa(0, 1) = 3 = d forces False
        let k5_minus = construct_family("complete", &[5]).unwrap().remove_edge(0, 1).unwrap();
        let verdict = stress_linked_verdict(&k5_minus, 0, 1, &cfg(3)).unwrap();
        assert_eq!(verdict.value, Truth::False);
        assert_eq!(verdict.rule, Some(RULE_KAPPA));
    }

    #[test]
    fn cocircuit_rule_fires() {
        // K_5 plus a degree-3 vertex joined to {0, 1, 2}, minus the edge
        // {0, 1}: at d = 3 the pair is linked with kappa = 4, but adding
        // the edge back puts it in a size-two cocircuit with every other
        // K_5 edge (the pendant edges are bridges and contribute no slack)
        let mut edges = Vec::new();
        for u in 0..5usize {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        edges.extend([(0, 5), (1, 5), (2, 5)]);
        let g = crate::graph::Graph::from_edges(6, &edges).unwrap().remove_edge(0, 1).unwrap();
        let verdict = stress_linked_verdict(&g, 0, 1, &cfg(3)).unwrap();
        assert_eq!(verdict.value, Truth::False);
        assert_eq!(verdict.rule, Some(RULE_COCIRCUIT));
    }

    #[test]
    fn gluing_separator_found_across_shared_pair() {
        // two K_5's sharing the nonadjacent pair {0, 1}: both sides keep
        // the pair 3-linked, so {0, 1} is a qualifying separator (the
        // verdict itself is already True via the vertex-redundant rule,
        // which subsumes gluing whenever both sides are linked)
        let mut edges = Vec::new();
        for u in 0..5usize {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let side2 = [0usize, 1, 5, 6, 7];
        for i in 0..5 {
            for j in i + 1..5 {
                let (a, b) = (side2[i], side2[j]);
                if a < 2 && b < 2 {
                    continue;
                }
                edges.push((a, b));
            }
        }
        let g = crate::graph::Graph::from_edges(8, &edges).unwrap().remove_edge(0, 1).unwrap();
        assert_eq!(gluing_separator(&g, 0, 1, &cfg(3)), Some(vec![0, 1]));
        let verdict = stress_linked_verdict(&g, 0, 1, &cfg(3)).unwrap();
        assert_eq!(verdict.value, Truth::True);
        assert_eq!(verdict.rule, Some(RULE_VERTEX_REDUNDANT));
    }

    #[test]
    fn stress_independent_examples() {
        assert!(stress_independent_verdict(&construct_family("k4_plus", &[]).unwrap(), &cfg(2)).is_true());
        assert!(stress_independent_verdict(&construct_family("wheel", &[5]).unwrap(), &cfg(2)).is_true());
        assert!(!stress_independent_verdict(&construct_family("complete", &[5]).unwrap(), &cfg(2)).is_true());
        // K_{d+2} is minimally globally d-rigid, hence stress-independent
        for d in [1usize, 2] {
            let g = construct_family("complete", &[d + 2]).unwrap();
            assert!(stress_independent_verdict(&g, &cfg(d)).is_true(), "d = {}", d);
        }
    }

    #[test]
    fn witness_bounds_examples() {
        let w5 = construct_family("wheel", &[5]).unwrap();
        let report = stress_independence_witness_bounds(&w5, &cfg(2)).unwrap();
        assert!(report.rd1_independent && report.bounds_hold && report.equality_cases_are_kd2);

        let k4 = construct_family("complete", &[4]).unwrap();
        let report = stress_independence_witness_bounds(&k4, &cfg(2)).unwrap();
        assert!(report.all_good());
        assert_eq!(report.equality_cases, vec![vec![0, 1, 2, 3]]);

        let k4_minus = construct_family("complete", &[4]).unwrap().remove_edge(0, 1).unwrap();
        let report = stress_independence_witness_bounds(&k4_minus, &cfg(2)).unwrap();
        assert!(report.all_good());
        assert!(report.equality_cases.is_empty());

        let k5 = construct_family("complete", &[5]).unwrap();
        assert!(matches!(
            stress_independence_witness_bounds(&k5, &cfg(2)),
            Err(LinkedError::NotStressIndependent)
        ));
    }

    #[test]
    fn globally_linked_verdicts() {
        // vertex-redundantly linked pair
        let k5_minus = construct_family("complete", &[5]).unwrap().remove_edge(0, 1).unwrap();
        let verdict = globally_linked_verdict(&k5_minus, 0, 1, &cfg(2)).unwrap();
        assert_eq!(verdict.value, Truth::True);

        // kappa = 2 at d = 2 forces False
        let k4q2 = construct_family("k4q", &[2]).unwrap();
        let verdict = globally_linked_verdict(&k4q2, 2, 4, &cfg(2)).unwrap();
        assert_eq!(verdict.value, Truth::False);
        assert_eq!(verdict.rule, Some(RULE_KAPPA));
    }
}

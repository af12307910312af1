//! Rigidity matrices and the generic rank oracle.
//!
//! Generic frameworks are emulated by random points over a large prime
//! field. A random draw can only underestimate the generic rank, so the
//! oracle reports the maximum over independent trials; with the default
//! ~2^62 prime the per-trial failure probability is bounded by the total
//! degree of the relevant minor over p (Schwartz-Zippel), which is
//! negligible at desk scale.

use crate::field::{FieldMatrix, PrimeField, DEFAULT_PRIME};
use crate::graph::Graph;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: usize = 2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RigidityError {
    #[error("coordinate slice has length {got}, expected {expected}")]
    WrongCoordsLength { expected: usize, got: usize },
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("set is not independent")]
    NotIndependent,
    #[error("set is not dependent")]
    NotDependent,
    #[error("element already in the basis")]
    AlreadyInBasis,
    #[error("no circuit through the kept elements exists in the given set")]
    NoCircuitThroughKeep,
    #[error("exhaustive scan limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertices must be distinct")]
    EqualVertices,
}

/// The randomized-genericity contract: dimension, field, master seed and
/// trial count. Coordinates depend only on (seed, dim, trial) and the
/// vertex index, so graphs on a shared vertex set (subgraphs, single-edge
/// additions) see identical coordinates and their ranks are comparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GenericConfig {
    pub dim: usize,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
}

impl GenericConfig {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        GenericConfig {
            dim,
            prime: DEFAULT_PRIME,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        assert!(trials >= 1);
        self.trials = trials;
        self
    }

    pub fn with_prime(mut self, prime: u64) -> Self {
        self.prime = prime;
        self
    }

    pub fn with_dim(mut self, dim: usize) -> Self {
        assert!(dim >= 1);
        self.dim = dim;
        self
    }

    /// Same contract with the seed mixed with the graph's canonical graph6
    /// string, so per-graph work in a sharded stream is independent of
    /// stream order and worker count.
    pub fn derive_for_graph(&self, g: &Graph) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325; // FNV-1a
        for b in g.graph6().bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        self.with_seed(splitmix(self.seed ^ h))
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn trial_rng(config: &GenericConfig, trial: usize) -> ChaCha12Rng {
    let base = splitmix(
        config
            .seed
            .wrapping_add(splitmix(config.dim as u64))
            .wrapping_add(splitmix((trial as u64) ^ 0xABCD_EF01)),
    );
    let mut seed = [0u8; 32];
    let mut s = base;
    for chunk in seed.chunks_mut(8) {
        s = splitmix(s);
        chunk.copy_from_slice(&s.to_le_bytes());
    }
    ChaCha12Rng::from_seed(seed)
}

fn uniform_below(rng: &mut ChaCha12Rng, p: u64) -> u64 {
    let zone = u64::MAX - u64::MAX % p;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % p;
        }
    }
}

/// Field coordinates for one trial: vertex v occupies the slice
/// [v*d, (v+1)*d). The stream is consumed in vertex order so extending the
/// vertex set (e.g. coning) leaves existing coordinates unchanged.
pub fn trial_coords(config: &GenericConfig, n: usize, trial: usize) -> Vec<u64> {
    let mut rng = trial_rng(config, trial);
    (0..n * config.dim)
        .map(|_| uniform_below(&mut rng, config.prime))
        .collect()
}

/// The |E| x d|V| rigidity matrix: the row of edge uv carries p(u)-p(v) in
/// u's column block and p(v)-p(u) in v's, rows in canonical edge order.
pub fn rigidity_matrix(
    g: &Graph,
    coords: &[u64],
    dim: usize,
    field: PrimeField,
) -> Result<FieldMatrix, RigidityError> {
    let n = g.vertex_count();
    if coords.len() != n * dim {
        return Err(RigidityError::WrongCoordsLength {
            expected: n * dim,
            got: coords.len(),
        });
    }
    let mut m = FieldMatrix::zero(field, g.edge_count(), dim * n);
    for (row, e) in g.edges().iter().enumerate() {
        let (u, v) = (e.u(), e.v());
        for k in 0..dim {
            let pu = coords[u * dim + k];
            let pv = coords[v * dim + k];
            m.set(row, u * dim + k, field.sub(pu, pv));
            m.set(row, v * dim + k, field.sub(pv, pu));
        }
    }
    Ok(m)
}

/// r_d(K_n): C(n,2) for n <= d+1, else dn - C(d+1,2).
pub fn rank_complete(n: usize, dim: usize) -> usize {
    if n <= dim + 1 {
        n * n.saturating_sub(1) / 2
    } else {
        dim * n - dim * (dim + 1) / 2
    }
}

/// Subset of a graph's edges, by canonical edge index, as a fixed-width
/// bitmask. Widths always match within one oracle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            universe,
            words: vec![0; universe.div_ceil(64).max(1)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(universe);
        for &i in indices {
            assert!(i < universe, "edge index out of range");
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        EdgeSet {
            universe: self.universe,
            words,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        EdgeSet {
            universe: self.universe,
            words,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        EdgeSet {
            universe: self.universe,
            words,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Cached generic-rank function over edge subsets of one graph at one
/// dimension. Single-owner mutable (the cache); concurrent pipelines make
/// one oracle per worker, and all answers are deterministic functions of
/// (graph, config).
pub struct RankOracle {
    graph: Graph,
    config: GenericConfig,
    trials: Vec<Trial>,
    cache: HashMap<EdgeSet, usize>,
}

struct Trial {
    coords: Vec<u64>,
    matrix: FieldMatrix,
    full_rank: Option<usize>,
}

impl RankOracle {
    pub fn new(graph: Graph, config: &GenericConfig) -> Self {
        let field = config.field();
        let trials = (0..config.trials)
            .map(|t| {
                let coords = trial_coords(config, graph.vertex_count(), t);
                let matrix = rigidity_matrix(&graph, &coords, config.dim, field).unwrap();
                Trial {
                    coords,
                    matrix,
                    full_rank: None,
                }
            })
            .collect();
        RankOracle {
            graph,
            config: *config,
            trials,
            cache: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> &GenericConfig {
        &self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn full_set(&self) -> EdgeSet {
        EdgeSet::full(self.graph.edge_count())
    }

    pub fn trial_count(&self) -> usize {
        self.trials.len()
    }

    pub fn trial_coords(&self, t: usize) -> &[u64] {
        &self.trials[t].coords
    }

    pub fn trial_matrix(&self, t: usize) -> &FieldMatrix {
        &self.trials[t].matrix
    }

    /// Rank of the full edge set in trial t alone (no cross-trial max).
    pub fn trial_rank(&mut self, t: usize) -> usize {
        if let Some(r) = self.trials[t].full_rank {
            return r;
        }
        let r = self.trials[t].matrix.rank();
        self.trials[t].full_rank = Some(r);
        r
    }

    /// Generic rank of an edge subset: the maximum over trials of the rank
    /// of the selected rows. Cached by bitmask.
    pub fn rank(&mut self, set: &EdgeSet) -> usize {
        debug_assert_eq!(set.universe(), self.graph.edge_count());
        if let Some(&r) = self.cache.get(set) {
            return r;
        }
        let rows = set.indices();
        let r = (0..self.trials.len())
            .map(|t| self.trials[t].matrix.select_rows(&rows).rank())
            .max()
            .unwrap_or(0);
        debug_assert!(r <= rows.len());
        self.cache.insert(set.clone(), r);
        r
    }

    /// r_d(G), the rank of the whole edge set.
    pub fn rank_full(&mut self) -> usize {
        self.rank(&self.full_set())
    }

    pub fn is_rigid(&mut self) -> bool {
        let n = self.graph.vertex_count();
        let d = self.config.dim;
        self.rank_full() == rank_complete(n, d)
    }

    pub fn is_independent(&mut self) -> bool {
        self.rank_full() == self.graph.edge_count()
    }

    /// A circuit: r(E) = |E| - 1, every single-edge deletion independent,
    /// and no isolated vertices.
    pub fn is_circuit(&mut self) -> bool {
        let m = self.graph.edge_count();
        if m == 0 || self.graph.has_isolated_vertex() {
            return false;
        }
        if self.rank_full() != m - 1 {
            return false;
        }
        let full = self.full_set();
        (0..m).all(|e| self.rank(&full.without(e)) == m - 1)
    }

    /// An R_d-bridge: deleting the edge drops the rank.
    pub fn is_bridge(&mut self, edge: usize) -> Result<bool, RigidityError> {
        if edge >= self.graph.edge_count() {
            return Err(RigidityError::EdgeOutOfRange(edge));
        }
        let full = self.full_set();
        let r = self.rank(&full);
        Ok(self.rank(&full.without(edge)) == r - 1)
    }

    pub fn bridges(&mut self) -> Vec<usize> {
        (0..self.graph.edge_count())
            .filter(|&e| self.is_bridge(e).unwrap())
            .collect()
    }

    /// Greedy basis in canonical edge order.
    pub fn basis(&mut self) -> EdgeSet {
        let mut cur = EdgeSet::empty(self.graph.edge_count());
        let mut r = 0;
        for e in 0..self.graph.edge_count() {
            let cand = cur.with(e);
            if self.rank(&cand) > r {
                cur = cand;
                r += 1;
            }
        }
        cur
    }

    /// The unique circuit inside B + e, for B independent, e outside B and
    /// B + e dependent.
    pub fn fundamental_circuit(
        &mut self,
        e: usize,
        basis: &EdgeSet,
    ) -> Result<EdgeSet, RigidityError> {
        if e >= self.graph.edge_count() {
            return Err(RigidityError::EdgeOutOfRange(e));
        }
        if basis.contains(e) {
            return Err(RigidityError::AlreadyInBasis);
        }
        if self.rank(basis) != basis.count() {
            return Err(RigidityError::NotIndependent);
        }
        let s = basis.with(e);
        let r = self.rank(&s);
        if r == s.count() {
            return Err(RigidityError::NotDependent);
        }
        // nullity is exactly 1: an element lies on the circuit iff removing
        // it does not drop the rank
        let mut circuit = EdgeSet::empty(s.universe());
        for x in s.iter() {
            if self.rank(&s.without(x)) == r {
                circuit.insert(x);
            }
        }
        Ok(circuit)
    }

    /// Greedily deletes elements outside `keep` (canonical order) while the
    /// set stays dependent, then verifies the result is a circuit. With
    /// keep empty this always lands on a circuit; for nonempty keep the
    /// precondition that some circuit inside F contains all of keep is
    /// verified by the final check and reported if violated.
    pub fn shrink_to_circuit(
        &mut self,
        f: &EdgeSet,
        keep: &EdgeSet,
    ) -> Result<EdgeSet, RigidityError> {
        if !keep.is_subset_of(f) {
            return Err(RigidityError::NoCircuitThroughKeep);
        }
        let mut cur = f.clone();
        if self.rank(&cur) == cur.count() {
            return Err(RigidityError::NotDependent);
        }
        for e in f.indices() {
            if keep.contains(e) {
                continue;
            }
            let cand = cur.without(e);
            if self.rank(&cand) < cand.count() {
                cur = cand;
            }
        }
        // verify circuit: dependent with every deletion independent
        let m = cur.count();
        if self.rank(&cur) != m - 1 {
            return Err(RigidityError::NoCircuitThroughKeep);
        }
        for e in cur.indices() {
            let sub = cur.without(e);
            if self.rank(&sub) != m - 1 {
                return Err(RigidityError::NoCircuitThroughKeep);
            }
        }
        Ok(cur)
    }
}

/// d-linkedness: r_d(G + uv) = r_d(G). Adjacent pairs are linked.
/// Coordinates are shared between G and G + uv (they depend only on the
/// vertex set), so the two ranks come from the same draws.
pub fn is_linked(g: &Graph, u: usize, v: usize, config: &GenericConfig) -> Result<bool, RigidityError> {
    if u == v {
        return Err(RigidityError::EqualVertices);
    }
    if g.has_edge(u, v) {
        return Ok(true);
    }
    let plus = g.add_edge(u, v).expect("nonadjacent pair");
    let r = RankOracle::new(g.clone(), config).rank_full();
    let r_plus = RankOracle::new(plus, config).rank_full();
    Ok(r_plus == r)
}

/// All vertex sets S with |S| >= d violating the sparsity count
/// |E(G[S])| <= d|S| - C(d+1,2). Exhaustive over subsets; n <= 12.
pub fn maxwell_violations(g: &Graph, dim: usize) -> Result<Vec<Vec<usize>>, RigidityError> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(RigidityError::TooLarge { n, limit: 12 });
    }
    let bound_base = (dim * (dim + 1) / 2) as i64;
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < dim {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let edges = g.edges_within(&inside) as i64;
        if edges > (dim * size) as i64 - bound_base {
            out.push((0..n).filter(|&v| inside[v]).collect());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_family, Graph};

    fn k4() -> Graph {
        construct_family("complete", &[4]).unwrap()
    }

    fn cfg(d: usize) -> GenericConfig {
        GenericConfig::new(d)
    }

    #[test]
    fn rigidity_matrix_single_edge_1d() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let field = PrimeField::new(DEFAULT_PRIME);
        let m = rigidity_matrix(&g, &[5, 2], 1, field).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(m.get(0, 0), 3);
        assert_eq!(m.get(0, 1), DEFAULT_PRIME - 3);
        assert!(rigidity_matrix(&g, &[1, 2, 3], 1, field).is_err());
    }

    #[test]
    fn known_full_ranks() {
        assert_eq!(RankOracle::new(k4(), &cfg(2)).rank_full(), 5);
        let w5 = construct_family("wheel", &[5]).unwrap();
        assert_eq!(RankOracle::new(w5, &cfg(2)).rank_full(), 7);
        let k5 = construct_family("complete", &[5]).unwrap();
        assert_eq!(RankOracle::new(k5, &cfg(2)).rank_full(), 7);
    }

    #[test]
    fn rank_complete_values() {
        assert_eq!(rank_complete(4, 2), 5);
        assert_eq!(rank_complete(3, 5), 3);
        assert_eq!(rank_complete(7, 3), 15);
        assert_eq!(rank_complete(0, 2), 0);
        // agrees with the oracle on complete graphs
        for n in 1..=6 {
            for d in 1..=3 {
                let g = construct_family("complete", &[n]).unwrap();
                assert_eq!(
                    RankOracle::new(g, &cfg(d)).rank_full(),
                    rank_complete(n, d),
                    "n={} d={}",
                    n,
                    d
                );
            }
        }
    }

    #[test]
    fn predicates_on_k4() {
        let mut o = RankOracle::new(k4(), &cfg(2));
        assert!(o.is_rigid());
        assert!(!o.is_independent());
        assert!(o.is_circuit());
        assert!(!o.is_bridge(0).unwrap());

        let mut o3 = RankOracle::new(k4(), &cfg(3));
        assert!(o3.is_independent());
        assert!(!o3.is_circuit());
        for e in 0..6 {
            assert!(o3.is_bridge(e).unwrap());
        }
    }

    #[test]
    fn tree_edges_are_bridges_in_dimension_one() {
        let tree = construct_family("path", &[5]).unwrap();
        let mut o = RankOracle::new(tree, &cfg(1));
        for e in 0..4 {
            assert!(o.is_bridge(e).unwrap());
        }
    }

    #[test]
    fn d1_rank_is_spanning_forest_rank() {
        for n in 1..=6 {
            for g in crate::graph::enumerate_graphs(n).unwrap() {
                let forest_rank = g.vertex_count() - g.connected_components().len();
                assert_eq!(RankOracle::new(g, &cfg(1)).rank_full(), forest_rank);
            }
        }
    }

    #[test]
    fn linkedness_examples() {
        let k4_minus = k4().remove_edge(0, 1).unwrap();
        assert!(is_linked(&k4_minus, 0, 1, &cfg(2)).unwrap());

        let p5 = construct_family("path", &[5]).unwrap();
        assert!(!is_linked(&p5, 0, 4, &cfg(2)).unwrap());
        assert!(is_linked(&p5, 0, 1, &cfg(2)).unwrap()); // adjacent
        assert!(is_linked(&k4(), 0, 2, &cfg(2)).unwrap()); // rigid graph
        assert!(is_linked(&k4_minus, 2, 3, &cfg(2)).unwrap());
        assert!(matches!(
            is_linked(&p5, 1, 1, &cfg(2)),
            Err(RigidityError::EqualVertices)
        ));
    }

    #[test]
    fn fundamental_circuit_in_k4() {
        let mut o = RankOracle::new(k4(), &cfg(2));
        let b = o.basis();
        assert_eq!(b.count(), 5);
        let e = (0..6).find(|&e| !b.contains(e)).unwrap();
        let c = o.fundamental_circuit(e, &b).unwrap();
        assert_eq!(c.count(), 6);

        let indep = EdgeSet::from_indices(6, &[0, 1]);
        assert!(matches!(
            o.fundamental_circuit(2, &indep),
            Err(RigidityError::NotDependent)
        ));
    }

    #[test]
    fn shrink_finds_circuit_inside_k5() {
        let k5 = construct_family("complete", &[5]).unwrap();
        let mut o = RankOracle::new(k5, &cfg(2));
        let full = o.full_set();
        let keep = EdgeSet::empty(10);
        let c = o.shrink_to_circuit(&full, &keep).unwrap();
        assert!(c.count() >= 6 && c.count() <= 10);
        // returned set is a circuit of the subgraph it spans
        let gsub = o.graph().edge_subgraph(&c.indices());
        let spanned: Vec<usize> = (0..gsub.vertex_count())
            .filter(|&v| gsub.degree(v) > 0)
            .collect();
        let (gspan, _) = gsub.induced(&spanned);
        let mut osub = RankOracle::new(gspan, &cfg(2));
        assert!(osub.is_circuit());

        // shrinking an independent set fails
        let tree = construct_family("path", &[5]).unwrap();
        let mut ot = RankOracle::new(tree, &cfg(2));
        let f = ot.full_set();
        assert!(matches!(
            ot.shrink_to_circuit(&f, &EdgeSet::empty(4)),
            Err(RigidityError::NotDependent)
        ));
    }

    #[test]
    fn maxwell_examples() {
        // every K_4 inside K_5 already violates the d = 2 count, and so
        // does the whole vertex set (10 > 7)
        let k5 = construct_family("complete", &[5]).unwrap();
        let v = maxwell_violations(&k5, 2).unwrap();
        assert!(v.contains(&vec![0, 1, 2, 3, 4]));
        assert_eq!(v.len(), 6);

        let w5_minus = construct_family("wheel", &[5]).unwrap().remove_edge(1, 2).unwrap();
        assert!(maxwell_violations(&w5_minus, 2).unwrap().is_empty());

        let mut o = RankOracle::new(k4(), &cfg(3));
        assert!(o.is_independent());
        assert!(maxwell_violations(o.graph(), 3).unwrap().is_empty());
    }

    #[test]
    fn trial_monotonicity() {
        let w5 = construct_family("wheel", &[5]).unwrap();
        let mut prev = 0;
        for trials in [1, 2, 4] {
            let r = RankOracle::new(w5.clone(), &cfg(2).with_trials(trials)).rank_full();
            assert!(r >= prev);
            prev = r;
        }
    }

    #[test]
    fn cone_rank_identity_and_bridge_transfer() {
        for n in 0..=5 {
            for g in crate::graph::enumerate_graphs(n).unwrap() {
                let coned = g.cone();
                for d in [1usize, 2] {
                    let r = RankOracle::new(g.clone(), &cfg(d)).rank_full();
                    let rc = RankOracle::new(coned.clone(), &cfg(d + 1)).rank_full();
                    assert_eq!(rc, r + g.vertex_count(), "cone identity n={} d={}", n, d);
                }
                // bridge transfer along the cone, d = 1 -> 2
                let mut o = RankOracle::new(g.clone(), &cfg(1));
                let mut oc = RankOracle::new(coned.clone(), &cfg(2));
                for (i, e) in g.edges().iter().enumerate() {
                    let ci = coned.edge_index(e.u(), e.v()).unwrap();
                    assert_eq!(
                        o.is_bridge(i).unwrap(),
                        oc.is_bridge(ci).unwrap(),
                        "bridge transfer failed"
                    );
                }
            }
        }
    }

    #[test]
    fn edge_set_operations() {
        let mut s = EdgeSet::empty(70);
        s.insert(3);
        s.insert(65);
        assert!(s.contains(65) && !s.contains(64));
        assert_eq!(s.count(), 2);
        assert_eq!(s.indices(), vec![3, 65]);
        let t = EdgeSet::from_indices(70, &[3]);
        assert!(t.is_subset_of(&s));
        assert_eq!(s.difference(&t).indices(), vec![65]);
        assert_eq!(s.union(&t), s);
        assert_eq!(s.intersection(&t), t);
    }

    #[test]
    fn derived_config_is_stable() {
        let g = k4();
        let c = cfg(2);
        assert_eq!(c.derive_for_graph(&g), c.derive_for_graph(&g));
        let h = construct_family("wheel", &[5]).unwrap();
        assert_ne!(c.derive_for_graph(&g).seed, c.derive_for_graph(&h).seed);
    }
}

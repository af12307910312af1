//! Matroid-level structure of the rigidity matroid R_d(G): connected
//! components, connectivity tests, size-two cocircuits and ear
//! decompositions.

use crate::rigidity::{EdgeSet, RankOracle, RigidityError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("the rigidity matroid is not connected")]
    NotConnected,
    #[error("ear search exhausted on {0} remaining elements")]
    EarSearchExhausted(usize),
    #[error(transparent)]
    Rigidity(#[from] RigidityError),
}

/// One connected component of R_d(G): an edge set, trivial when it is a
/// single bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub edges: EdgeSet,
    pub trivial: bool,
}

/// The R_d-components of a graph. Components partition the edge set and
/// their ranks sum to r_d(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
}

impl ComponentDecomposition {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| !c.trivial)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins, keeping component ids canonical
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Connected components via the fundamental circuits of one basis: every
/// circuit C(e, B), e outside B, merges its elements, and the transitive
/// closure yields the matroid components. Bridges end up as trivial
/// singletons.
pub fn components(oracle: &mut RankOracle) -> ComponentDecomposition {
    let m = oracle.edge_count();
    if m == 0 {
        return ComponentDecomposition {
            components: Vec::new(),
        };
    }
    let basis = oracle.basis();
    let mut uf = UnionFind::new(m);
    for e in 0..m {
        if basis.contains(e) {
            continue;
        }
        let circuit = oracle
            .fundamental_circuit(e, &basis)
            .expect("non-basis element closes a circuit");
        let members = circuit.indices();
        for w in members.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut groups: Vec<(usize, EdgeSet)> = Vec::new();
    for e in 0..m {
        let root = uf.find(e);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, set)) => set.insert(e),
            None => {
                let mut set = EdgeSet::empty(m);
                set.insert(e);
                groups.push((root, set));
            }
        }
    }
    groups.sort_by_key(|(root, _)| *root);
    let full = oracle.full_set();
    let total_rank = oracle.rank(&full);
    let components: Vec<Component> = groups
        .into_iter()
        .map(|(_, edges)| {
            let trivial = edges.count() == 1;
            if trivial {
                let e = edges.indices()[0];
                debug_assert!(oracle.is_bridge(e).unwrap(), "singleton component must be a bridge");
            }
            Component { edges, trivial }
        })
        .collect();
    let rank_sum: usize = components.iter().map(|c| oracle.rank(&c.edges)).sum();
    debug_assert_eq!(rank_sum, total_rank, "component ranks must sum to r_d(G)");
    ComponentDecomposition { components }
}

/// Connected: one component, nontrivial, covering E, and no isolated
/// vertices.
pub fn is_rd_connected(oracle: &mut RankOracle) -> bool {
    if oracle.edge_count() == 0 || oracle.graph().has_isolated_vertex() {
        return false;
    }
    let decomp = components(oracle);
    decomp.len() == 1 && !decomp.components[0].trivial
}

/// Minimally connected: |E| >= 2, connected, and no single-edge deletion
/// stays connected.
pub fn is_minimally_rd_connected(oracle: &mut RankOracle) -> bool {
    if oracle.edge_count() < 2 || !is_rd_connected(oracle) {
        return false;
    }
    let g = oracle.graph().clone();
    let config = *oracle.config();
    g.edges().iter().all(|e| {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        !is_rd_connected(&mut RankOracle::new(smaller, &config))
    })
}

/// {e, f} is a cocircuit iff r(M) = r(M-e) = r(M-f) and
/// r(M-{e,f}) = r(M) - 1.
pub fn is_two_cocircuit(
    oracle: &mut RankOracle,
    e: usize,
    f: usize,
) -> Result<bool, RigidityError> {
    let m = oracle.edge_count();
    if e >= m {
        return Err(RigidityError::EdgeOutOfRange(e));
    }
    if f >= m {
        return Err(RigidityError::EdgeOutOfRange(f));
    }
    if e == f {
        return Err(RigidityError::EqualVertices);
    }
    let full = oracle.full_set();
    let r = oracle.rank(&full);
    Ok(oracle.rank(&full.without(e)) == r
        && oracle.rank(&full.without(f)) == r
        && oracle.rank(&full.without(e).without(f)) == r - 1)
}

/// An ear decomposition: ordered circuits C_1..C_t with prefix unions D_i
/// and lobes C_i - D_{i-1}, satisfying (E1) each later circuit meets the
/// prefix, (E2) each lobe is nonempty, (E3) no valid circuit has a lobe
/// properly inside the chosen one, and D_t = E.
#[derive(Clone, Debug)]
pub struct EarDecomposition {
    circuits: Vec<EdgeSet>,
    lobes: Vec<EdgeSet>,
    prefixes: Vec<EdgeSet>,
}

impl EarDecomposition {
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn circuits(&self) -> &[EdgeSet] {
        &self.circuits
    }

    pub fn lobes(&self) -> &[EdgeSet] {
        &self.lobes
    }

    /// D_i for i = 1..t.
    pub fn prefixes(&self) -> &[EdgeSet] {
        &self.prefixes
    }
}

/// Builds an ear decomposition of R_d(G); the matroid must be connected.
///
/// The next ear after a prefix D is found through the contraction M/D
/// (ranks r(X + D) - r(D)): a fundamental circuit Y of M/D that is
/// independent in M is a valid minimal lobe, and the full circuit is
/// recovered as the unique circuit inside Y + (basis of D), which contains
/// all of Y. Candidates whose Y is dependent in M are rejected; if no
/// fundamental circuit qualifies, an exhaustive scan over the remaining
/// elements finds a qualifying circuit of M/D.
pub fn ear_decomposition(oracle: &mut RankOracle) -> Result<EarDecomposition, MatroidError> {
    if !is_rd_connected(oracle) {
        return Err(MatroidError::NotConnected);
    }
    let m = oracle.edge_count();
    let full = oracle.full_set();
    let mut circuits: Vec<EdgeSet> = Vec::new();
    let mut lobes = Vec::new();
    let mut prefixes = Vec::new();
    let mut d = EdgeSet::empty(m);

    // first ear: fundamental circuit of the first non-basis edge
    let basis = oracle.basis();
    let e0 = (0..m)
        .find(|&e| !basis.contains(e))
        .expect("connected matroid with >= 2 elements is dependent");
    let c1 = oracle.fundamental_circuit(e0, &basis)?;
    d = d.union(&c1);
    lobes.push(c1.clone());
    prefixes.push(d.clone());
    circuits.push(c1);

    while d != full {
        let c = next_ear(oracle, &d)?;
        lobes.push(c.difference(&d));
        d = d.union(&c);
        prefixes.push(d.clone());
        circuits.push(c);
    }
    Ok(EarDecomposition {
        circuits,
        lobes,
        prefixes,
    })
}

fn next_ear(oracle: &mut RankOracle, d: &EdgeSet) -> Result<EdgeSet, MatroidError> {
    let m = oracle.edge_count();
    let rd = oracle.rank(d);
    let ground: Vec<usize> = (0..m).filter(|&e| !d.contains(e)).collect();

    // greedy basis of the contraction M/D in canonical order
    let mut contraction_basis: Vec<usize> = Vec::new();
    let mut basis_union = d.clone();
    let mut rank_b = 0;
    for &e in &ground {
        let cand = basis_union.with(e);
        if oracle.rank(&cand) - rd > rank_b {
            basis_union = cand;
            contraction_basis.push(e);
            rank_b += 1;
        }
    }

    for &f in &ground {
        if contraction_basis.contains(&f) {
            continue;
        }
        let y = contraction_fundamental_circuit(oracle, d, rd, &contraction_basis, f);
        if oracle.rank(&y) == y.count() {
            return recover_circuit(oracle, d, &y).map_err(Into::into);
        }
    }

    // No fundamental circuit of M/D was independent in M; scan all subsets
    // of the remaining elements by size for a qualifying circuit of M/D.
    if ground.len() > 20 {
        return Err(MatroidError::EarSearchExhausted(ground.len()));
    }
    for size in 1..=ground.len() {
        let mut found: Option<EdgeSet> = None;
        combinations(&ground, size, &mut |subset| {
            if found.is_some() {
                return;
            }
            let y = EdgeSet::from_indices(m, subset);
            if is_contraction_circuit(oracle, d, rd, &y) && oracle.rank(&y) == y.count() {
                found = Some(y);
            }
        });
        if let Some(y) = found {
            return recover_circuit(oracle, d, &y).map_err(Into::into);
        }
    }
    Err(MatroidError::EarSearchExhausted(ground.len()))
}

/// Fundamental circuit of f with respect to a basis of M/D: the unique
/// circuit of the contraction inside basis + f (membership by the rank
/// test, nullity is exactly one).
fn contraction_fundamental_circuit(
    oracle: &mut RankOracle,
    d: &EdgeSet,
    rd: usize,
    contraction_basis: &[usize],
    f: usize,
) -> EdgeSet {
    let mut s = EdgeSet::from_indices(oracle.edge_count(), contraction_basis);
    s.insert(f);
    let r = oracle.rank(&s.union(d)) - rd;
    let mut y = EdgeSet::empty(oracle.edge_count());
    for x in s.iter() {
        if oracle.rank(&s.without(x).union(d)) - rd == r {
            y.insert(x);
        }
    }
    y
}

fn is_contraction_circuit(oracle: &mut RankOracle, d: &EdgeSet, rd: usize, y: &EdgeSet) -> bool {
    let k = y.count();
    if k == 0 {
        return false;
    }
    if oracle.rank(&y.union(d)) - rd != k - 1 {
        return false;
    }
    y.iter().all(|x| {
        let sub = y.without(x);
        oracle.rank(&sub.union(d)) - rd == k - 1
    })
}

/// Y + basis(D) has nullity exactly one and its unique circuit contains
/// all of Y, so the greedy shrink provably lands on it.
fn recover_circuit(
    oracle: &mut RankOracle,
    d: &EdgeSet,
    y: &EdgeSet,
) -> Result<EdgeSet, RigidityError> {
    let mut basis_d = EdgeSet::empty(oracle.edge_count());
    let mut r = 0;
    for e in d.indices() {
        let cand = basis_d.with(e);
        if oracle.rank(&cand) > r {
            basis_d = cand;
            r += 1;
        }
    }
    oracle.shrink_to_circuit(&y.union(&basis_d), y)
}

fn combinations(items: &[usize], size: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        let need = size - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, visit);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut Vec::new(), visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_family, Graph};
    use crate::rigidity::GenericConfig;

    fn oracle(g: Graph, d: usize) -> RankOracle {
        RankOracle::new(g, &GenericConfig::new(d))
    }

    /// Exhaustive cross-check: circuits as minimal dependent subsets, then
    /// the transitive closure of "share a circuit". |E| <= 14.
    fn exhaustive_components(o: &mut RankOracle) -> Vec<Vec<usize>> {
        let m = o.edge_count();
        assert!(m <= 14);
        let mut circuits: Vec<u32> = Vec::new();
        for mask in 1u32..(1 << m) {
            let set = EdgeSet::from_indices(
                m,
                &(0..m).filter(|&e| mask >> e & 1 == 1).collect::<Vec<_>>(),
            );
            let k = set.count();
            if o.rank(&set) != k - 1 {
                continue;
            }
            if set.iter().all(|x| {
                let sub = set.without(x);
                o.rank(&sub) == k - 1
            }) {
                circuits.push(mask);
            }
        }
        let mut uf = UnionFind::new(m);
        for c in circuits {
            let members: Vec<usize> = (0..m).filter(|&e| c >> e & 1 == 1).collect();
            for w in members.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for e in 0..m {
            groups.entry(uf.find(e)).or_default().push(e);
        }
        groups.into_values().collect()
    }

    #[test]
    fn components_of_glued_k4s() {
        // two K_4's sharing vertex 3
        let mut edges = Vec::new();
        for u in 0..4usize {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        for u in 3..7usize {
            for v in u + 1..7 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(7, &edges).unwrap();
        let mut o = oracle(g, 2);
        let decomp = components(&mut o);
        assert_eq!(decomp.len(), 2);
        assert!(decomp.components.iter().all(|c| !c.trivial && c.edges.count() == 6));

        let expect = exhaustive_components(&mut o);
        let got: Vec<Vec<usize>> = decomp.components.iter().map(|c| c.edges.indices()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn tree_components_are_trivial() {
        let mut o = oracle(construct_family("path", &[5]).unwrap(), 1);
        let decomp = components(&mut o);
        assert_eq!(decomp.len(), 4);
        assert!(decomp.components.iter().all(|c| c.trivial));
        assert!(!is_rd_connected(&mut o));
    }

    #[test]
    fn k4q3_is_one_component() {
        let mut o = oracle(construct_family("k4q", &[3]).unwrap(), 2);
        let decomp = components(&mut o);
        assert_eq!(decomp.len(), 1);
        assert!(!decomp.components[0].trivial);
        assert!(is_rd_connected(&mut o));
    }

    #[test]
    fn components_match_exhaustive_on_small_graphs() {
        for n in 2..=5usize {
            for g in crate::graph::enumerate_graphs(n).unwrap() {
                if g.edge_count() == 0 || g.edge_count() > 14 {
                    continue;
                }
                for d in [1usize, 2] {
                    let mut o = oracle(g.clone(), d);
                    let got: Vec<Vec<usize>> =
                        components(&mut o).components.iter().map(|c| c.edges.indices()).collect();
                    assert_eq!(got, exhaustive_components(&mut o), "n={} d={}", n, d);
                }
            }
        }
    }

    #[test]
    fn minimal_connectivity() {
        assert!(is_minimally_rd_connected(&mut oracle(
            construct_family("complete", &[4]).unwrap(),
            2
        )));
        let mut k5 = oracle(construct_family("complete", &[5]).unwrap(), 2);
        assert!(is_rd_connected(&mut k5));
        assert!(!is_minimally_rd_connected(&mut k5));
        // disjoint union of two triangles, d = 1
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_rd_connected(&mut oracle(two_triangles, 1)));
    }

    #[test]
    fn two_cocircuits() {
        // any two edges of a circuit
        let mut k4 = oracle(construct_family("complete", &[4]).unwrap(), 2);
        for e in 0..6 {
            for f in e + 1..6 {
                assert!(is_two_cocircuit(&mut k4, e, f).unwrap());
            }
        }
        // two bridges
        let mut path = oracle(construct_family("path", &[4]).unwrap(), 1);
        assert!(!is_two_cocircuit(&mut path, 0, 1).unwrap());
        // edges in distinct components
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let mut o = oracle(two_triangles, 1);
        assert!(!is_two_cocircuit(&mut o, 0, 3).unwrap());
        assert!(is_two_cocircuit(&mut o, 0, 1).unwrap()); // same triangle
        assert!(is_two_cocircuit(&mut k4, 0, 0).is_err());
    }

    #[test]
    fn ear_decomposition_of_circuits_is_single_ear() {
        for g in [
            construct_family("complete", &[4]).unwrap(),
            construct_family("k4q", &[2]).unwrap(),
            construct_family("wheel", &[5]).unwrap(),
        ] {
            let mut o = oracle(g, 2);
            let ears = ear_decomposition(&mut o).unwrap();
            assert_eq!(ears.len(), 1);
            assert_eq!(ears.circuits()[0].count(), o.edge_count());
        }
    }

    #[test]
    fn ear_decomposition_structure_on_k5() {
        let mut o = oracle(construct_family("complete", &[5]).unwrap(), 2);
        let ears = ear_decomposition(&mut o).unwrap();
        let m = o.edge_count();
        // D_t = E
        assert_eq!(ears.prefixes().last().unwrap().count(), m);
        for i in 0..ears.len() {
            // E2: nonempty lobes; E1: later circuits meet the prefix
            assert!(!ears.lobes()[i].is_empty());
            if i > 0 {
                assert!(!ears.circuits()[i]
                    .intersection(&ears.prefixes()[i - 1])
                    .is_empty());
                // rank telescoping
                let prev = o.rank(&ears.prefixes()[i - 1]);
                let cur = o.rank(&ears.prefixes()[i]);
                assert_eq!(cur - prev, ears.lobes()[i].count() - 1);
            }
            // each C_i is a circuit
            let c = &ears.circuits()[i];
            assert_eq!(o.rank(c), c.count() - 1);
        }
    }

    #[test]
    fn ear_decomposition_requires_connectivity() {
        let mut o = oracle(construct_family("path", &[4]).unwrap(), 1);
        assert!(matches!(
            ear_decomposition(&mut o),
            Err(MatroidError::NotConnected)
        ));
    }
}

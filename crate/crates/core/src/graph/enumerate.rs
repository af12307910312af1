//! Small-graph enumeration up to isomorphism and brute-force isomorphism
//! testing.
//!
//! The canonical form of a graph on n <= 10 vertices is the
//! lexicographically minimal adjacency bit-string over all vertex
//! permutations, where string position p holds the bit of the pair (u, v),
//! u < v, at p = v(v-1)/2 + u (the graph6 bit order, so canonical
//! representatives also minimize the graph6 encoding).

use super::{Graph, GraphError};
use rayon::prelude::*;
use std::collections::HashSet;

const ENUM_LIMIT: usize = 7;
const ISO_LIMIT: usize = 10;

/// Pair (u, v) of bit-string position p, for all p < C(n,2).
fn pair_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

#[inline]
fn position(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn mask_of(g: &Graph) -> u64 {
    let mut m = 0u64;
    for e in g.edges() {
        m |= 1 << position(e.u(), e.v());
    }
    m
}

fn graph_of_mask(n: usize, mask: u64) -> Graph {
    let pos = pair_positions(n);
    let mut edges = Vec::new();
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        edges.push(pos[k]);
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Bit-string lexicographic order: position 0 is compared first and an
/// absent edge sorts before a present one.
#[inline]
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let k = (a ^ b).trailing_zeros();
    a >> k & 1 == 0
}

/// All n! edge-position maps, one per vertex permutation. Only built for
/// n <= 8 (the memory grows as n! times C(n,2)).
fn perm_edge_maps(n: usize) -> Vec<Vec<u8>> {
    assert!(n <= 8);
    let pos = pair_positions(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut maps = Vec::new();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let push = |perm: &[usize], maps: &mut Vec<Vec<u8>>| {
        let map = pos
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                position(a.min(b), a.max(b)) as u8
            })
            .collect();
        maps.push(map);
    };
    push(&perm, &mut maps);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            push(&perm, &mut maps);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    maps
}

#[inline]
fn apply_map(mask: u64, map: &[u8]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << map[k];
    }
    out
}

fn canonical_with_maps(mask: u64, maps: &[Vec<u8>]) -> u64 {
    let mut best = mask;
    for map in maps {
        let cand = apply_map(mask, map);
        if lex_less(cand, best) {
            best = cand;
        }
    }
    best
}

/// Canonical adjacency bit-string of `g`, minimized over all vertex
/// permutations. Brute force; n <= 10.
pub fn canonical_edge_mask(g: &Graph) -> Result<u64, GraphError> {
    let n = g.vertex_count();
    if n > ISO_LIMIT {
        return Err(GraphError::EnumerationTooLarge { n, limit: ISO_LIMIT });
    }
    let mask = mask_of(g);
    if n <= 8 {
        return Ok(canonical_with_maps(mask, &perm_edge_maps(n)));
    }
    // n in {9, 10}: walk permutations without materializing the maps
    let pos = pair_positions(n);
    let mut best = mask;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let eval = |perm: &[usize], best: &mut u64| {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = pos[k];
            let (a, b) = (perm[u], perm[v]);
            out |= 1 << position(a.min(b), a.max(b));
        }
        if lex_less(out, *best) {
            *best = out;
        }
    };
    eval(&perm, &mut best);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            eval(&perm, &mut best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Brute-force isomorphism via canonical forms; n <= 10.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    canonical_edge_mask(g1).expect("isomorphism limited to n <= 10")
        == canonical_edge_mask(g2).expect("isomorphism limited to n <= 10")
}

/// Canonical masks of all isomorphism classes on n vertices with edge count
/// up to `max_edges`, grouped by edge count. Classes with k+1 edges are
/// generated by adding every absent edge to every class with k edges.
fn classes_by_level(n: usize, max_edges: usize, maps: &[Vec<u8>]) -> Vec<Vec<u64>> {
    let total = n * (n - 1) / 2;
    let max_edges = max_edges.min(total);
    let mut levels: Vec<Vec<u64>> = vec![vec![0u64]];
    for k in 0..max_edges {
        let prev = &levels[k];
        let mut cands: Vec<u64> = prev
            .par_iter()
            .flat_map_iter(|&rep| {
                (0..total)
                    .filter(move |&p| rep >> p & 1 == 0)
                    .map(move |p| rep | 1 << p)
            })
            .map(|cand| canonical_with_maps(cand, maps))
            .collect();
        cands.sort_unstable_by(|&a, &b| {
            if lex_less(a, b) {
                std::cmp::Ordering::Less
            } else if a == b {
                std::cmp::Ordering::Equal
            } else {
                std::cmp::Ordering::Greater
            }
        });
        cands.dedup();
        levels.push(cands);
    }
    levels
}

/// One representative per isomorphism class on n vertices, ordered by edge
/// count and then by canonical bit-string. Built-in enumeration is limited
/// to n <= 7; larger streams come from external graph6 producers.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > ENUM_LIMIT {
        return Err(GraphError::EnumerationTooLarge { n, limit: ENUM_LIMIT });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let maps = perm_edge_maps(n);
    let total = n * (n - 1) / 2;
    let levels = classes_by_level(n, total, &maps);
    Ok(levels
        .into_iter()
        .flatten()
        .map(|mask| graph_of_mask(n, mask))
        .collect())
}

/// One representative per isomorphism class with at least `min_edges`
/// edges, via complementation of the sparse classes. Supports n <= 7
/// unconditionally and n = 8 when min_edges >= 15; this is the documented
/// generator for dense 8-vertex scans.
pub fn enumerate_dense(n: usize, min_edges: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 8 {
        return Err(GraphError::EnumerationTooLarge { n, limit: 8 });
    }
    let total = n * (n - 1) / 2;
    if n == 8 && min_edges < 15 {
        return Err(GraphError::DenseBoundTooLow(min_edges));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let maps = perm_edge_maps(n);
    let budget = total - min_edges.min(total);
    let levels = classes_by_level(n, budget, &maps);
    let full = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
    let mut dense: Vec<(usize, u64)> = levels
        .into_iter()
        .flatten()
        .map(|mask| {
            let comp = full & !mask;
            (comp.count_ones() as usize, comp)
        })
        .collect();
    dense.sort_unstable_by(|a, b| a.0.cmp(&b.0).then_with(|| {
        if lex_less(a.1, b.1) {
            std::cmp::Ordering::Less
        } else if a.1 == b.1 {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Greater
        }
    }));
    Ok(dense
        .into_iter()
        .map(|(_, mask)| graph_of_mask(n, mask))
        .collect())
}

/// True if g contains K_k as a subgraph (cliques are always induced).
pub fn has_clique(g: &Graph, k: usize) -> bool {
    if k <= 1 {
        return k == 0 || g.vertex_count() >= 1;
    }
    if k == 2 {
        return g.edge_count() >= 1;
    }
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut adj_set = vec![HashSet::new(); n];
    for (v, ns) in adj.iter().enumerate() {
        adj_set[v] = ns.iter().copied().collect();
    }
    fn extend(
        clique: &mut Vec<usize>,
        candidates: &[usize],
        k: usize,
        adj_set: &[HashSet<usize>],
    ) -> bool {
        if clique.len() == k {
            return true;
        }
        if clique.len() + candidates.len() < k {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .filter(|&&w| adj_set[v].contains(&w))
                .copied()
                .collect();
            clique.push(v);
            if extend(clique, &next, k, adj_set) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= k - 1).collect();
    extend(&mut Vec::new(), &candidates, k, &adj_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn class_counts_small_n() {
        let expect = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(enumerate_graphs(n).unwrap().len(), want, "n = {}", n);
        }
        assert!(matches!(
            enumerate_graphs(8),
            Err(GraphError::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn every_labeled_graph_has_exactly_one_representative() {
        for n in 1..=5usize {
            let reps: Vec<u64> = enumerate_graphs(n)
                .unwrap()
                .iter()
                .map(|g| canonical_edge_mask(g).unwrap())
                .collect();
            let rep_set: HashSet<u64> = reps.iter().copied().collect();
            assert_eq!(rep_set.len(), reps.len(), "duplicate class at n = {}", n);
            let maps = perm_edge_maps(n);
            let total = n * (n - 1) / 2;
            for mask in 0u64..(1 << total) {
                let canon = canonical_with_maps(mask, &maps);
                assert!(rep_set.contains(&canon));
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_canonical() {
        let a = enumerate_graphs(5).unwrap();
        let b = enumerate_graphs(5).unwrap();
        assert_eq!(a, b);
        for g in &a {
            assert_eq!(mask_of(g), canonical_edge_mask(g).unwrap());
        }
    }

    #[test]
    fn graph6_round_trip_over_enumeration() {
        for n in 0..=7usize {
            for g in enumerate_graphs(n).unwrap() {
                let s = g.graph6();
                assert_eq!(super::super::g6::decode(&s).unwrap(), g);
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let w5 = families::wheel(5).unwrap();
        let coned = families::cycle(4).unwrap().cone();
        assert!(are_isomorphic(&w5, &coned));
        assert!(!are_isomorphic(&w5, &families::complete(5)));
        // same degree sequence, different graphs: C_6 vs 2 triangles
        let c6 = families::cycle(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt));
    }

    #[test]
    fn dense_enumeration_matches_filtered_full_enumeration() {
        for n in [4usize, 6] {
            let dense = enumerate_dense(n, 5).unwrap();
            let expect: Vec<Graph> = enumerate_graphs(n)
                .unwrap()
                .into_iter()
                .filter(|g| g.edge_count() >= 5)
                .collect();
            assert_eq!(dense.len(), expect.len());
            // same classes (possibly different representatives)
            let a: HashSet<u64> = dense
                .iter()
                .map(|g| canonical_edge_mask(g).unwrap())
                .collect();
            let b: HashSet<u64> = expect
                .iter()
                .map(|g| canonical_edge_mask(g).unwrap())
                .collect();
            assert_eq!(a, b);
        }
        assert!(enumerate_dense(8, 10).is_err());
        assert!(enumerate_dense(9, 20).is_err());
    }

    #[test]
    fn clique_detection() {
        assert!(families::complete(5).has_clique(4));
        assert!(!families::complete_bipartite(3, 3).has_clique(3));
        assert!(families::k4q(2).unwrap().has_clique(3));
        assert!(!families::k4q(2).unwrap().has_clique(4));
        assert!(families::k4q_hat(2).unwrap().has_clique(4));
    }
}

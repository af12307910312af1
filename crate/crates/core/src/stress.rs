//! Equilibrium stresses, stress matrices, shared stress nullity and the
//! algebraic global rigidity test.
//!
//! A stress of a framework is a left-kernel vector of its rigidity matrix.
//! Stacking the stress matrices of a kernel basis gives the shared stress
//! nullity sigma_d (the stress matrix depends linearly on the stress, so
//! the common kernel over all stresses equals the kernel of the stacked
//! basis matrices); s_d = n - sigma_d reaches n - d - 1 exactly on globally
//! d-rigid graphs (for n >= d + 2).

use crate::field::{stack, FieldMatrix, PrimeField};
use crate::graph::Graph;
use crate::rigidity::{rank_complete, RankOracle};
use serde::Serialize;

/// Shared-stress profile of one graph at one dimension, with the trial it
/// came from. Only trials whose rigidity rank equals the cross-trial
/// maximum are eligible (a degenerate draw would inflate the stress
/// space); among those, s can only be underestimated, so the maximum over
/// eligible trials is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StressProfile {
    /// dim S(G,p) = |E| - r_d(G)
    pub stress_dim: usize,
    /// shared stress nullity sigma_d
    pub sigma: usize,
    /// s_d = n - sigma_d
    pub s: usize,
    /// trial index attaining the profile
    pub trial: usize,
    /// the reported trial achieved the cross-trial maximum rigidity rank
    pub valid: bool,
}

fn max_rank_trials(oracle: &mut RankOracle) -> (usize, Vec<usize>) {
    let ranks: Vec<usize> = (0..oracle.trial_count())
        .map(|t| oracle.trial_rank(t))
        .collect();
    let max = ranks.iter().copied().max().unwrap_or(0);
    let valid = (0..ranks.len()).filter(|&t| ranks[t] == max).collect();
    (max, valid)
}

/// Basis of the stress space S(G,p) for the first trial attaining the
/// maximum rigidity rank; entries follow the canonical edge order.
pub fn stress_basis(oracle: &mut RankOracle) -> Vec<Vec<u64>> {
    let (_, valid) = max_rank_trials(oracle);
    let t = valid[0];
    let kernel = oracle.trial_matrix(t).left_kernel();
    (0..kernel.rows()).map(|i| kernel.row(i).to_vec()).collect()
}

/// The n x n stress matrix of a stress vector: off-diagonal (u, v) holds
/// -omega_uv for edges and 0 otherwise; the diagonal holds the row sums of
/// omega at each vertex, making all row sums zero.
pub fn stress_matrix(g: &Graph, omega: &[u64], field: PrimeField) -> FieldMatrix {
    assert_eq!(omega.len(), g.edge_count(), "one entry per edge");
    let n = g.vertex_count();
    let mut m = FieldMatrix::zero(field, n, n);
    for (idx, e) in g.edges().iter().enumerate() {
        let w = omega[idx];
        let (u, v) = (e.u(), e.v());
        m.set(u, v, field.neg(w));
        m.set(v, u, field.neg(w));
        m.set(u, u, field.add(m.get(u, u), w));
        m.set(v, v, field.add(m.get(v, v), w));
    }
    m
}

/// Coordinate matrix extended by a ones column: n x (d+1); every stress
/// matrix annihilates it.
pub fn extended_coords(coords: &[u64], n: usize, dim: usize, field: PrimeField) -> FieldMatrix {
    let mut p = FieldMatrix::zero(field, n, dim + 1);
    for v in 0..n {
        for k in 0..dim {
            p.set(v, k, coords[v * dim + k]);
        }
        p.set(v, dim, 1);
    }
    p
}

/// Computes sigma_d and s_d: per eligible trial, s equals the rank of the
/// stacked stress matrices of a kernel basis; the profile reports the
/// maximum over eligible trials.
pub fn shared_stress_profile(oracle: &mut RankOracle) -> StressProfile {
    let n = oracle.graph().vertex_count();
    let field = PrimeField::new(oracle.config().prime);
    let (max_rank, valid) = max_rank_trials(oracle);
    let stress_dim = oracle.edge_count() - max_rank;
    let mut best: Option<(usize, usize)> = None; // (s, trial)
    for &t in &valid {
        let kernel = oracle.trial_matrix(t).left_kernel();
        let omegas: Vec<FieldMatrix> = (0..kernel.rows())
            .map(|i| stress_matrix(oracle.graph(), kernel.row(i), field))
            .collect();
        let stacked = stack(field, n, &omegas).unwrap();
        let s = stacked.rank();
        if best.map_or(true, |(bs, _)| s > bs) {
            best = Some((s, t));
        }
    }
    let (s, trial) = best.unwrap_or((0, 0));
    StressProfile {
        stress_dim,
        sigma: n - s,
        s,
        trial,
        valid: true,
    }
}

/// Globally d-rigid: s_d = n - d - 1 for n >= d + 2; for n <= d + 1 the
/// convention is completeness (generic point sets of at most d+1 points
/// are congruence-determined by their pairwise distances).
pub fn is_globally_rigid(oracle: &mut RankOracle) -> bool {
    let n = oracle.graph().vertex_count();
    let d = oracle.dim();
    if n <= d + 1 {
        return oracle.graph().is_complete();
    }
    shared_stress_profile(oracle).s == n - d - 1
}

/// Every single-edge deletion stays d-rigid.
pub fn is_redundantly_rigid(oracle: &mut RankOracle) -> bool {
    let g = oracle.graph().clone();
    let config = *oracle.config();
    let n = g.vertex_count();
    let target = rank_complete(n, config.dim);
    g.edges().iter().all(|e| {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        RankOracle::new(smaller, &config).rank_full() == target
    })
}

pub fn is_minimally_redundantly_rigid(oracle: &mut RankOracle) -> bool {
    if !is_redundantly_rigid(oracle) {
        return false;
    }
    let g = oracle.graph().clone();
    let config = *oracle.config();
    g.edges().iter().all(|e| {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        !is_redundantly_rigid(&mut RankOracle::new(smaller, &config))
    })
}

/// Globally d-rigid and no single-edge deletion stays globally d-rigid.
pub fn is_minimally_globally_rigid(oracle: &mut RankOracle) -> bool {
    if !is_globally_rigid(oracle) {
        return false;
    }
    let g = oracle.graph().clone();
    let config = *oracle.config();
    g.edges().iter().all(|e| {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        !is_globally_rigid(&mut RankOracle::new(smaller, &config))
    })
}

/// No R_d-bridges, but every single-edge deletion creates one. Requires at
/// least one edge.
pub fn is_minimally_rd_bridgeless(oracle: &mut RankOracle) -> bool {
    if oracle.edge_count() == 0 || !oracle.bridges().is_empty() {
        return false;
    }
    let g = oracle.graph().clone();
    let config = *oracle.config();
    g.edges().iter().all(|e| {
        let smaller = g.remove_edge(e.u(), e.v()).unwrap();
        !RankOracle::new(smaller, &config).bridges().is_empty()
    })
}

//! Generic rigidity matroids of finite simple graphs, computed exactly over a
//! large prime field.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] — immutable simple graphs, the classical constructions
//!   (cone, 2-sum, parallel connection, edge split), vertex connectivity,
//!   graph6 I/O and a small-graph enumerator.
//! * [`field`] — exact Gaussian elimination, kernels and stacking over F_p.
//! * [`rigidity`] — rigidity matrices and the randomized generic-rank oracle
//!   with its independence/circuit/bridge/linkedness predicates.
//! * [`matroid`] — matroid-level structure of the rigidity matroid:
//!   connected components, cocircuits, ear decompositions.
//! * [`stress`] — equilibrium stress bases, stress matrices, shared stress
//!   nullity and the algebraic global-rigidity test.
//! * [`linked`] — the linkedness hierarchy: exact 2-stress-linked test and
//!   three-valued verdicts for stress-linked / globally-linked pairs and
//!   stress-independent graphs.
//! * [`checks`] — a registry of named, falsifiable theorem checks that run
//!   over graph streams and aggregate violations.

pub mod checks;
pub mod field;
pub mod graph;
pub mod linked;
pub mod matroid;
pub mod rigidity;
pub mod stress;

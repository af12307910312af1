//! Vertex connectivity: internally disjoint path counts via unit-capacity
//! max-flow on the split graph, k-connectivity, and 2-separations.

use super::{Graph, GraphError};
use serde::Serialize;

pub(super) fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub(super) fn component_count(g: &Graph) -> usize {
    components(g).len()
}

/// Components of g - S, for a vertex set S given as a mask.
pub fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if removed[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[v] {
                if !removed[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Maximum number of pairwise internally disjoint u,v-paths.
///
/// For nonadjacent u, v this equals the minimum vertex cut separating them
/// (Menger), computed by unit-capacity max-flow on the vertex-split graph.
/// For adjacent u, v the convention is 1 + kappa(u, v; g - uv).
pub fn kappa(g: &Graph, u: usize, v: usize) -> Result<usize, GraphError> {
    if u == v {
        return Err(GraphError::EqualVertices);
    }
    if u >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange(u, g.vertex_count()));
    }
    if v >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange(v, g.vertex_count()));
    }
    if g.has_edge(u, v) {
        let reduced = g.remove_edge(u, v).unwrap();
        return Ok(1 + kappa(&reduced, u, v)?);
    }
    Ok(disjoint_paths(g, u, v))
}

/// Unit-capacity max-flow from u_out to v_in on the split graph: every
/// vertex w becomes an arc w_in -> w_out of capacity 1 (unbounded at the
/// terminals); every edge xy becomes arcs x_out -> y_in and y_out -> x_in.
fn disjoint_paths(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.vertex_count();
    // node 2w = w_in, 2w+1 = w_out
    let mut flow = FlowNet::new(2 * n);
    let big = n as i64 + 1;
    for w in 0..n {
        let cap = if w == u || w == v { big } else { 1 };
        flow.add_arc(2 * w, 2 * w + 1, cap);
    }
    for e in g.edges() {
        flow.add_arc(2 * e.u() + 1, 2 * e.v(), big);
        flow.add_arc(2 * e.v() + 1, 2 * e.u(), big);
    }
    flow.max_flow(2 * u + 1, 2 * v) as usize
}

struct FlowNet {
    // per node: (to, reverse-index, capacity)
    arcs: Vec<Vec<(usize, usize, i64)>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            arcs: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let (fl, tl) = (self.arcs[from].len(), self.arcs[to].len());
        self.arcs[from].push((to, tl, cap));
        self.arcs[to].push((from, fl, 0));
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            // BFS for an augmenting path (Edmonds-Karp; graphs are tiny)
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut seen = vec![false; self.arcs.len()];
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for (i, &(to, _, cap)) in self.arcs[x].iter().enumerate() {
                    if cap > 0 && !seen[to] {
                        seen[to] = true;
                        prev[to] = Some((x, i));
                        queue.push_back(to);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut x = t;
            while let Some((from, i)) = prev[x] {
                bottleneck = bottleneck.min(self.arcs[from][i].2);
                x = from;
            }
            let mut x = t;
            while let Some((from, i)) = prev[x] {
                self.arcs[from][i].2 -= bottleneck;
                let rev = self.arcs[from][i].1;
                self.arcs[x][rev].2 += bottleneck;
                x = from;
            }
            total += bottleneck;
        }
    }
}

/// Standard k-connectivity: n > k and no vertex cut of size below k.
/// Complete graphs K_{k+1} are k-connected.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if k == 0 {
        return g.is_connected();
    }
    if n <= k {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && disjoint_paths(g, u, v) < k {
                return false;
            }
        }
    }
    true
}

/// One 2-separation per separating pair {u, v}: side1 is the union of the
/// first component of g - {u, v} (ordered by smallest vertex) with {u, v},
/// side2 the rest with {u, v}. Any uv edge belongs to the side-1 subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSeparation {
    pub pair: (usize, usize),
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

impl TwoSeparation {
    /// The two edge-disjoint sides as graphs on the original vertex ids,
    /// relabeled per `Graph::induced`; any uv edge is kept only in side 1.
    pub fn subgraphs(&self, g: &Graph) -> ((Graph, Vec<usize>), (Graph, Vec<usize>)) {
        let s1 = g.induced(&self.side1);
        let (mut g2, back2) = g.induced(&self.side2);
        let (u, v) = self.pair;
        let iu = back2.iter().position(|&x| x == u).unwrap();
        let iv = back2.iter().position(|&x| x == v).unwrap();
        if g2.has_edge(iu, iv) {
            g2 = g2.remove_edge(iu, iv).unwrap();
        }
        (s1, (g2, back2))
    }
}

pub fn two_separations(g: &Graph) -> Vec<TwoSeparation> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for u in 0..n {
        for v in u + 1..n {
            let mut removed = vec![false; n];
            removed[u] = true;
            removed[v] = true;
            let comps = components_avoiding(g, &removed);
            if comps.len() < 2 {
                continue;
            }
            let mut side1 = comps[0].clone();
            side1.extend([u, v]);
            side1.sort_unstable();
            let mut side2: Vec<usize> = comps[1..].iter().flatten().copied().collect();
            side2.extend([u, v]);
            side2.sort_unstable();
            out.push(TwoSeparation {
                pair: (u, v),
                side1,
                side2,
            });
        }
    }
    out
}

/// All vertex sets S with {u, v} included, |S| <= max_size, whose removal
/// disconnects the remaining vertices into at least two components.
/// Exhaustive over subsets; callers keep n small.
pub fn separators_containing(
    g: &Graph,
    u: usize,
    v: usize,
    max_size: usize,
) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut out = Vec::new();
    let extra_max = max_size.saturating_sub(2);
    for mask in 0u64..(1u64 << others.len()) {
        if (mask.count_ones() as usize) > extra_max {
            continue;
        }
        let mut removed = vec![false; n];
        removed[u] = true;
        removed[v] = true;
        let mut sep = vec![u, v];
        for (i, &x) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                removed[x] = true;
                sep.push(x);
            }
        }
        if components_avoiding(g, &removed).len() >= 2 {
            sep.sort_unstable();
            out.push(sep);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn kappa_examples() {
        let k4_minus = families::complete(4).remove_edge(0, 1).unwrap();
        assert_eq!(kappa(&k4_minus, 0, 1).unwrap(), 2);

        let k4q2 = families::k4q(2).unwrap();
        assert_eq!(kappa(&k4q2, 0, 1).unwrap(), 4);

        let p3 = families::path(3);
        assert_eq!(kappa(&p3, 0, 2).unwrap(), 1);

        // adjacent convention: 1 + kappa in g - uv
        let k4 = families::complete(4);
        assert_eq!(kappa(&k4, 0, 1).unwrap(), 3);
        assert!(kappa(&k4, 1, 1).is_err());
    }

    #[test]
    fn kappa_matches_exhaustive_cuts_on_small_graphs() {
        // Menger cross-check: minimum vertex cut by direct enumeration
        for g in [
            families::k4q(2).unwrap(),
            families::wheel(6).unwrap(),
            families::complete_bipartite(2, 3),
            families::path(5),
        ] {
            let n = g.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut min_cut = usize::MAX;
                    let others: Vec<usize> =
                        (0..n).filter(|&x| x != u && x != v).collect();
                    for mask in 0u32..(1 << others.len()) {
                        let mut removed = vec![false; n];
                        for (i, &x) in others.iter().enumerate() {
                            if mask >> i & 1 == 1 {
                                removed[x] = true;
                            }
                        }
                        let comps = components_avoiding(&g, &removed);
                        let cu = comps.iter().position(|c| c.contains(&u));
                        let cv = comps.iter().position(|c| c.contains(&v));
                        if cu != cv {
                            min_cut = min_cut.min(mask.count_ones() as usize);
                        }
                    }
                    assert_eq!(kappa(&g, u, v).unwrap(), min_cut, "pair {u},{v}");
                }
            }
        }
    }

    #[test]
    fn k_connectivity() {
        assert!(families::complete(4).is_k_connected(3));
        assert!(!families::complete(4).is_k_connected(4));
        assert!(families::cycle(5).unwrap().is_k_connected(2));
        assert!(!families::path(4).is_k_connected(2));
        assert!(families::complete_bipartite(3, 4).is_k_connected(3));
    }

    #[test]
    fn two_separation_examples() {
        let hat = families::k4q_hat(2).unwrap();
        let seps = two_separations(&hat);
        assert!(seps.iter().any(|s| s.pair == (0, 1)));
        assert!(two_separations(&families::complete(5)).is_empty());

        let s = seps.iter().find(|s| s.pair == (0, 1)).unwrap();
        let ((g1, _), (g2, _)) = s.subgraphs(&hat);
        // glue edge stays on side 1 only
        assert_eq!(g1.edge_count() + g2.edge_count(), hat.edge_count());
    }

    #[test]
    fn small_separators() {
        let hat = families::k4q_hat(2).unwrap();
        let seps = separators_containing(&hat, 0, 1, 2);
        assert_eq!(seps, vec![vec![0, 1]]);
        assert!(separators_containing(&families::complete(5), 0, 1, 3).is_empty());
    }
}

//! Graph constructions: cone, parallel connection, 2-sum, edge split.

use super::{Graph, GraphError, VertexPair};

/// Adds a new vertex (index n) adjacent to every existing vertex.
pub fn cone(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    for v in 0..n {
        edges.push((v, n));
    }
    Graph::from_edges(n + 1, &edges).unwrap()
}

fn glue(
    g1: &Graph,
    e1: VertexPair,
    g2: &Graph,
    e2: VertexPair,
    keep_identified_edge: bool,
) -> Result<Graph, GraphError> {
    if g1.edge_index(e1.u(), e1.v()).is_none() {
        return Err(GraphError::NotAnEdge(e1.u(), e1.v()));
    }
    if g2.edge_index(e2.u(), e2.v()).is_none() {
        return Err(GraphError::NotAnEdge(e2.u(), e2.v()));
    }
    let n1 = g1.vertex_count();
    // g1 keeps its labels; g2's vertices are appended in increasing order,
    // with e2's endpoints identified onto e1's (u2 -> u1, v2 -> v1).
    let mut map = vec![0usize; g2.vertex_count()];
    let mut next = n1;
    for w in 0..g2.vertex_count() {
        if w == e2.u() {
            map[w] = e1.u();
        } else if w == e2.v() {
            map[w] = e1.v();
        } else {
            map[w] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().iter().map(|e| (e.u(), e.v())).collect();
    for e in g2.edges() {
        if *e == e2 {
            continue; // identified with e1, kept once
        }
        edges.push((map[e.u()], map[e.v()]));
    }
    let mut out = Graph::from_edges(next, &edges)?;
    if !keep_identified_edge {
        out = out.remove_edge(e1.u(), e1.v())?;
    }
    Ok(out)
}

/// Union of g1 and g2 with e2's endpoints identified onto e1's; the
/// identified edge is kept (once).
pub fn parallel_connection(
    g1: &Graph,
    e1: VertexPair,
    g2: &Graph,
    e2: VertexPair,
) -> Result<Graph, GraphError> {
    glue(g1, e1, g2, e2, true)
}

/// Parallel connection with the identified edge deleted.
pub fn two_sum(
    g1: &Graph,
    e1: VertexPair,
    g2: &Graph,
    e2: VertexPair,
) -> Result<Graph, GraphError> {
    glue(g1, e1, g2, e2, false)
}

/// Subdivides edge `e` by a new vertex w (index n) and joins w to `extra`
/// (which must hold d-1 further vertices, pairwise distinct and disjoint
/// from e's endpoints). The new vertex ends with degree d+1 and the edge
/// count grows by d.
pub fn edge_split(
    g: &Graph,
    e: VertexPair,
    dim: usize,
    extra: &[usize],
) -> Result<Graph, GraphError> {
    if g.edge_index(e.u(), e.v()).is_none() {
        return Err(GraphError::NotAnEdge(e.u(), e.v()));
    }
    if extra.len() != dim - 1 {
        return Err(GraphError::WrongExtraCount {
            expected: dim - 1,
            got: extra.len(),
        });
    }
    let mut seen = vec![false; g.vertex_count()];
    for &x in extra {
        if x >= g.vertex_count() || e.contains(x) || seen[x] {
            return Err(GraphError::InvalidExtraVertex(x));
        }
        seen[x] = true;
    }
    let w = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|f| **f != e)
        .map(|f| (f.u(), f.v()))
        .collect();
    edges.push((e.u(), w));
    edges.push((e.v(), w));
    for &x in extra {
        edges.push((x, w));
    }
    Graph::from_edges(w + 1, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::graph::are_isomorphic;

    #[test]
    fn cone_basics() {
        let c4 = families::cycle(4).unwrap();
        let coned = cone(&c4);
        assert_eq!(coned.vertex_count(), 5);
        assert_eq!(coned.degree(4), 4);
        assert!(are_isomorphic(&coned, &families::wheel(5).unwrap()));
        assert_eq!(cone(&families::complete(3)), families::complete(4));
        let point = cone(&Graph::empty(0));
        assert_eq!((point.vertex_count(), point.edge_count()), (1, 0));
    }

    #[test]
    fn two_sum_and_parallel_counts() {
        let k4 = families::complete(4);
        let e = k4.edge(0);
        let ts = two_sum(&k4, e, &k4, e).unwrap();
        assert_eq!((ts.vertex_count(), ts.edge_count()), (6, 10));
        let pc = parallel_connection(&k4, e, &k4, e).unwrap();
        assert_eq!((pc.vertex_count(), pc.edge_count()), (6, 11));
        assert!(are_isomorphic(&ts, &families::k4q(2).unwrap()));
        assert!(are_isomorphic(&pc, &families::k4q_hat(2).unwrap()));
    }

    #[test]
    fn two_sum_rejects_non_edges() {
        let k4 = families::complete(4);
        let p4 = families::path(4);
        let not_edge = VertexPair::new(0, 2).unwrap();
        assert!(two_sum(&p4, not_edge, &k4, k4.edge(0)).is_err());
    }

    #[test]
    fn edge_split_examples() {
        let k4 = families::complete(4);
        // split {0,1} towards the opposite vertex 2: wheel on 5 vertices
        let e = k4.edge(0);
        let split = edge_split(&k4, e, 2, &[2]).unwrap();
        assert_eq!(split.degree(4), 3);
        assert_eq!(split.edge_count(), 8);
        assert!(are_isomorphic(&split, &families::wheel(5).unwrap()));

        let p2 = families::path(2);
        let p3 = edge_split(&p2, p2.edge(0), 1, &[]).unwrap();
        assert!(are_isomorphic(&p3, &families::path(3)));

        // extra vertex may not be an endpoint of e
        assert!(matches!(
            edge_split(&k4, e, 2, &[0]),
            Err(GraphError::InvalidExtraVertex(0))
        ));
        assert!(matches!(
            edge_split(&k4, e, 3, &[2]),
            Err(GraphError::WrongExtraCount { .. })
        ));
    }
}

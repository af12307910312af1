//! Named graph families with fixed, documented vertex labelings.

use super::{Graph, GraphError};

fn param_err(family: &str, reason: &str) -> GraphError {
    GraphError::InvalidParams {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph K_{a,b}; part A is `0..a`, part B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Wheel W_n on n vertices: hub 0 joined to the cycle 1..n.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(param_err("wheel", "needs n >= 4"));
    }
    let rim = n - 1;
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((0, v));
    }
    for i in 0..rim {
        edges.push((1 + i, 1 + (i + 1) % rim));
    }
    Graph::from_edges(n, &edges)
}

/// Path on n vertices 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on n vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(param_err("cycle", "needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// q copies of K_4 glued along the vertex pair {0, 1}, keeping the glue
/// edge. Copy i occupies vertices {0, 1, 2+2i, 3+2i}.
pub fn k4q_hat(q: usize) -> Result<Graph, GraphError> {
    if q < 1 {
        return Err(param_err("k4q_hat", "needs q >= 1"));
    }
    let mut edges = vec![(0, 1)];
    for i in 0..q {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, a), (0, b), (1, a), (1, b), (a, b)]);
    }
    Graph::from_edges(2 + 2 * q, &edges)
}

/// k4q_hat with the glue edge {0, 1} deleted.
pub fn k4q(q: usize) -> Result<Graph, GraphError> {
    k4q_hat(q)?.remove_edge(0, 1)
}

/// K_4 on vertices 0..4 plus vertex 4 of degree two adjacent to {0, 1}.
pub fn k4_plus() -> Graph {
    let mut g = complete(4).cone();
    g = g.remove_edge(4, 2).unwrap();
    g.remove_edge(4, 3).unwrap()
}

/// Two-sum of two copies of K_4 along an edge of each; equals k4q(2).
pub fn k4_2sum_k4() -> Graph {
    let k4 = complete(4);
    super::ops::two_sum(
        &k4,
        k4.edge(0),
        &k4,
        k4.edge(0),
    )
    .unwrap()
}

/// Constructs a family by name. Used by the CLI `--family` input source.
///
/// Names and parameters:
/// `complete n`, `complete_bipartite a b`, `wheel n`, `path n`, `cycle n`,
/// `k4q q`, `k4q_hat q`, `k4_plus`, `k4_2sum_k4`.
pub fn construct_family(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let want = |k: usize| -> Result<(), GraphError> {
        if params.len() != k {
            Err(param_err(
                name,
                &format!("expected {} parameter(s), got {}", k, params.len()),
            ))
        } else {
            Ok(())
        }
    };
    match name {
        "complete" | "kn" => {
            want(1)?;
            Ok(complete(params[0]))
        }
        "complete_bipartite" | "kab" => {
            want(2)?;
            Ok(complete_bipartite(params[0], params[1]))
        }
        "wheel" => {
            want(1)?;
            wheel(params[0])
        }
        "path" => {
            want(1)?;
            Ok(path(params[0]))
        }
        "cycle" => {
            want(1)?;
            cycle(params[0])
        }
        "k4q" => {
            want(1)?;
            k4q(params[0])
        }
        "k4q_hat" => {
            want(1)?;
            k4q_hat(params[0])
        }
        "k4_plus" => {
            want(0)?;
            Ok(k4_plus())
        }
        "k4_2sum_k4" => {
            want(0)?;
            Ok(k4_2sum_k4())
        }
        other => Err(GraphError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(4).edge_count(), 6);
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.vertex_count(), w5.edge_count()), (5, 8));
        let h = k4q_hat(2).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (6, 11));
        let k = k4q(2).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (6, 10));
        assert_eq!(k4_plus().degree(4), 2);
        assert_eq!(k4_plus().edge_count(), 8);
        assert_eq!(complete_bipartite(3, 4).edge_count(), 12);
    }

    #[test]
    fn k4_2sum_k4_matches_k4q2() {
        assert_eq!(k4_2sum_k4(), k4q(2).unwrap());
    }

    #[test]
    fn construct_by_name() {
        assert_eq!(
            construct_family("complete", &[5]).unwrap(),
            complete(5)
        );
        assert!(matches!(
            construct_family("frobnicator", &[]),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!(construct_family("k4q", &[0]).is_err());
        assert!(construct_family("wheel", &[1, 2]).is_err());
    }
}

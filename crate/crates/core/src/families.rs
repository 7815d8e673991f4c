//! Named graph families used by tests, fixtures and the CLI.

use alloc::vec::Vec;

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are simple")
}

/// Cycle `C_n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut g = path(n);
    g.add_edge(0, n - 1).expect("closing edge is new");
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("fresh edge");
        }
    }
    g
}

/// Star with center `0` and `leaves` leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
}

/// Chordal graph with prescribed connectivity `kappa` and maximum clique
/// overlap `kappa_tilde` (`1 <= kappa <= kappa_tilde`).
///
/// A clique `x_1..x_{2k~}` plus `u_k ~ {x_1..x_k}`, `u_k~ ~ {x_1..x_k~}` and
/// `v ~ {x_{k~+1}..x_{2k~}}`. The clique occupies ids `0..2k~`, then
/// `u_k`, `u_k~`, `v` in that order.
#[derive(Debug, Clone)]
pub struct BestPossible {
    pub graph: Graph,
    /// `x[i]` is the id of `x_{i+1}`.
    pub x: Vec<usize>,
    pub u_kappa: usize,
    pub u_kappa_tilde: usize,
    pub v: usize,
}

pub fn best_possible(kappa: usize, kappa_tilde: usize) -> BestPossible {
    assert!(
        1 <= kappa && kappa <= kappa_tilde,
        "need 1 <= kappa <= kappa_tilde"
    );
    let k2 = 2 * kappa_tilde;
    let (u_kappa, u_kappa_tilde, v) = (k2, k2 + 1, k2 + 2);
    let mut g = complete(k2);
    g = extend(&g, k2 + 3);
    for x in 0..kappa {
        g.add_edge(x, u_kappa).expect("fresh edge");
    }
    for x in 0..kappa_tilde {
        g.add_edge(x, u_kappa_tilde).expect("fresh edge");
    }
    for x in kappa_tilde..k2 {
        g.add_edge(x, v).expect("fresh edge");
    }
    BestPossible {
        graph: g,
        x: (0..k2).collect(),
        u_kappa,
        u_kappa_tilde,
        v,
    }
}

fn extend(g: &Graph, n: usize) -> Graph {
    Graph::from_edges(n, &g.edges()).expect("edges stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(3).degree(0), 3);
        let bp = best_possible(1, 2);
        assert_eq!(bp.graph.n(), 7);
        assert_eq!(bp.graph.edge_count(), 6 + 1 + 2 + 2);
    }
}

//! Simple undirected graphs on `0..n` and the structural primitives built on
//! top of them: components, induced subgraphs, chordality, vertex
//! connectivity and cut-component sums.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliques;
use crate::error::{Error, Result};
use crate::peo::Peo;
use crate::subsets::Combinations;
use crate::vertex_set::VertexSet;

/// Simple undirected graph with vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `u-v`. Rejects self-loops, repeated edges and out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let had = self.adj[u].remove(v);
        self.adj[v].remove(u);
        had
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.len() + 1 == n)
    }

    /// True when every pair of members is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.adj[v])
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Connected components with a canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component id per vertex. Ids increase with the smallest member.
    pub labels: Vec<usize>,
}

pub fn components(g: &Graph) -> Components {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if labels[s] != usize::MAX {
            continue;
        }
        labels[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { count, labels }
}

/// Number of connected components of `g - removed`.
pub fn component_count_without(g: &Graph, removed: &VertexSet) -> usize {
    let mut unseen = g.vertices().difference(removed);
    let mut count = 0;
    while let Some(s) = unseen.first() {
        count += 1;
        let mut frontier = VertexSet::singleton(s);
        unseen.remove(s);
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in &frontier {
                next.union_with(g.neighbors(v));
            }
            next.intersect_with(&unseen);
            unseen.difference_with(&next);
            frontier = next;
        }
    }
    count
}

/// Subgraph induced by `keep`, relabeled order-preservingly to `0..|keep|`.
///
/// The returned map sends each new id to its original id.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.check_set(keep)?;
    let old: Vec<usize> = keep.to_vec();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in old.iter().enumerate() {
        new_id[v] = i;
    }
    let mut h = Graph::new(old.len());
    for (i, &v) in old.iter().enumerate() {
        for w in g.neighbors(v).intersection(keep).iter() {
            h.adj[i].insert(new_id[w]);
        }
    }
    Ok((h, old))
}

/// A perfect elimination ordering when `g` is chordal, otherwise `None`.
///
/// Runs maximum cardinality search (ties to the smallest id), reverses the
/// visit order and verifies the result.
pub fn chordality(g: &Graph) -> Option<Peo> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !numbered[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        numbered[best] = true;
        visit.push(best);
        for w in g.neighbors(best) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let peo = Peo::from_order(visit).expect("search visits every vertex once");
    if peo.is_perfect_for(g) {
        Some(peo)
    } else {
        None
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_some()
}

/// Minimum vertex-cut size, by exhaustive search over subsets of increasing
/// size. Complete graphs get `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    for k in 0..n.saturating_sub(1) {
        for y in Combinations::new(n, k) {
            let removed: VertexSet = y.into_iter().collect();
            if component_count_without(g, &removed) >= 2 {
                return k;
            }
        }
    }
    unreachable!("a non-complete graph has a vertex-cut of size at most n - 2")
}

/// `max(W(G - Y) - 1, 0)` for a single deleted set `Y`.
pub fn cut_component_term(g: &Graph, removed: &VertexSet) -> usize {
    component_count_without(g, removed).saturating_sub(1)
}

/// Exact `sum over |Y| = k of (W(G - Y) - 1)`, enumerating `Y` in colex order.
///
/// Deleting every vertex contributes nothing.
pub fn cut_component_sum(g: &Graph, k: usize) -> BigUint {
    let n = g.n();
    let mut total = BigUint::zero();
    if k >= n {
        return total;
    }
    for y in Combinations::new(n, k) {
        let removed: VertexSet = y.into_iter().collect();
        total += cut_component_term(g, &removed);
    }
    total
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.is_simplicial(v)).collect()
}

/// Random chordal graph grown one vertex at a time.
///
/// Each new vertex is joined to a clique of size at most `attach_width`,
/// drawn uniformly from all such cliques of the current graph (the empty
/// clique included). The reverse insertion order is a PEO.
pub fn random_chordal(n: usize, attach_width: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for v in 1..n {
        let (prefix, _) = induced_subgraph(&g, &VertexSet::full(v)).expect("prefix in range");
        let mut options = vec![VertexSet::new()];
        options.extend(cliques::cliques_up_to(&prefix, attach_width));
        let pick = rng.gen_range(0..options.len() as u64) as usize;
        for u in options[pick].iter() {
            g.add_edge(u, v).expect("fresh edge");
        }
    }
    g
}

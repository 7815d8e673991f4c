//! Elimination orderings, the special PEO anchored at a maximal clique, and
//! the ordering-derived quantities `N_σ(v)`, `n_σ(v)` and `s(C)`.
//!
//! Positions are 0-based: the vertex at position `p` is eliminated before
//! every vertex at a position `> p`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cliques;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::vertex_set::VertexSet;

/// An ordering of `0..n` together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Peo {
    order: Vec<usize>,
    inverse: Vec<usize>,
}

impl Peo {
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut inverse = vec![usize::MAX; n];
        for (pos, &v) in order.iter().enumerate() {
            if v >= n || inverse[v] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            inverse[v] = pos;
        }
        Ok(Peo { order, inverse })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.inverse[v]
    }

    #[inline]
    pub fn vertex_at(&self, position: usize) -> usize {
        self.order[position]
    }

    /// Every vertex is simplicial among the vertices that come after it.
    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.len() == g.n() && self.first_imperfect(g).is_none()
    }

    /// First vertex whose later neighbours are not a clique, with a
    /// non-adjacent pair among them.
    pub fn first_imperfect(&self, g: &Graph) -> Option<(usize, usize, usize)> {
        for &v in &self.order {
            let later = monotone_neighbors(g, self, v);
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    if !g.has_edge(a, b) {
                        return Some((v, a, b));
                    }
                }
            }
        }
        None
    }

    /// Sorts `set` by increasing position.
    pub fn well_order(&self, set: &VertexSet) -> Vec<usize> {
        let mut out = set.to_vec();
        out.sort_by_key(|&v| self.inverse[v]);
        out
    }
}

/// `N_σ(v)`: neighbours of `v` placed after it, by increasing position.
pub fn monotone_neighbors(g: &Graph, peo: &Peo, v: usize) -> Vec<usize> {
    let p = peo.position(v);
    let mut out: Vec<usize> = g
        .neighbors(v)
        .iter()
        .filter(|&u| peo.position(u) > p)
        .collect();
    out.sort_by_key(|&u| peo.position(u));
    out
}

/// `n_σ(v) = |N_σ(v)|`.
pub fn monotone_degree(g: &Graph, peo: &Peo, v: usize) -> usize {
    let p = peo.position(v);
    g.neighbors(v)
        .iter()
        .filter(|&u| peo.position(u) > p)
        .count()
}

/// Members of the maximal clique `c` whose later neighbours leave `c`.
pub fn s_of_clique(g: &Graph, peo: &Peo, c: &VertexSet) -> Result<VertexSet> {
    if !cliques::is_maximal_clique(g, c) {
        return Err(Error::NotMaximalClique);
    }
    Ok(s_unchecked(g, peo, c))
}

fn s_unchecked(g: &Graph, peo: &Peo, c: &VertexSet) -> VertexSet {
    c.iter()
        .filter(|&x| {
            monotone_neighbors(g, peo, x)
                .iter()
                .any(|&u| !c.contains(u))
        })
        .collect()
}

/// The clique order `x_1..x_k` used when the caller gives only a set:
/// decreasing vertex id.
pub fn default_clique_order(k_clique: &VertexSet) -> Vec<usize> {
    let mut v = k_clique.to_vec();
    v.reverse();
    v
}

/// Builds a PEO satisfying conditions (a)-(d) for the maximal clique
/// `k_clique = (x_1, ..., x_k)`.
///
/// Repeatedly takes the smallest simplicial vertex `u` outside the clique in
/// the residual graph, removes the batch of residual-simplicial vertices of
/// its residual maximal clique `u ∪ N(u)` (ordered by id), and finally places
/// `x_k, ..., x_1` so that `x_i` ends up at 1-based position `n - i + 1`.
/// The result is checked with [`verify_special_peo`]; see
/// [`construct_peo`] for the unchecked ordering.
pub fn special_peo(g: &Graph, k_clique: &[usize]) -> Result<Peo> {
    let peo = construct_peo(g, k_clique)?;
    let report = verify_special_peo(g, k_clique, &peo);
    match report.first_failure() {
        None => Ok(peo),
        Some(name) => Err(Error::SpecialPeoViolation(format!("{name}: {report:?}"))),
    }
}

/// The batch construction behind [`special_peo`] without the final check.
/// Always a PEO satisfying condition (a).
pub fn construct_peo(g: &Graph, k_clique: &[usize]) -> Result<Peo> {
    let n = g.n();
    let k_set = clique_set(g, k_clique)?;
    if !graph::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if !cliques::is_maximal_clique(g, &k_set) {
        return Err(Error::NotMaximalClique);
    }

    let mut residual = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    loop {
        let outside = residual.difference(&k_set);
        if outside.is_empty() {
            break;
        }
        let simplicial_in_residual =
            |w: usize| g.is_clique(&g.neighbors(w).intersection(&residual));
        let u = outside
            .iter()
            .find(|&w| simplicial_in_residual(w))
            .ok_or_else(|| {
                Error::SpecialPeoViolation(
                    "no simplicial vertex outside K in residual graph".into(),
                )
            })?;
        let mut clique = g.neighbors(u).intersection(&residual);
        clique.insert(u);
        let batch: Vec<usize> = clique
            .iter()
            .filter(|&w| !k_set.contains(w) && simplicial_in_residual(w))
            .collect();
        for &w in &batch {
            residual.remove(w);
        }
        order.extend(batch);
    }
    order.extend(k_clique.iter().rev().copied());
    Peo::from_order(order)
}

fn clique_set(g: &Graph, k_clique: &[usize]) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for &x in k_clique {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
        if !set.insert(x) {
            return Err(Error::NotMaximalClique);
        }
    }
    Ok(set)
}

/// A witness that one of the special-PEO conditions fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `vertex` has later neighbours `a`, `b` that are not adjacent.
    NotSimplicial { vertex: usize, a: usize, b: usize },
    /// The anchor clique is malformed (not a maximal clique, wrong size).
    BadAnchor,
    /// `x_{index}` sits at 0-based position `actual`, expected `expected`.
    AnchorPosition {
        index: usize,
        expected: usize,
        actual: usize,
    },
    /// `inside` (in `s(C)`) comes before `outside` (in `C - s(C)`).
    SBeforeRest {
        clique: VertexSet,
        in_s: usize,
        not_in_s: usize,
    },
    /// `count` vertices of `C - s(C)` have `n_σ = i - 1` (exactly one required).
    MonotoneDegreeCount {
        clique: VertexSet,
        i: usize,
        count: usize,
    },
    /// Neither one-sided precedence holds for two intersecting maximal cliques.
    PairPrecedence { first: VertexSet, second: VertexSet },
}

/// Per-condition outcome; `None` means the condition holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecialPeoReport {
    pub perfect: Option<Counterexample>,
    pub a: Option<Counterexample>,
    pub b: Option<Counterexample>,
    pub c: Option<Counterexample>,
    pub d: Option<Counterexample>,
}

impl SpecialPeoReport {
    pub fn all_pass(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        [
            ("peo", &self.perfect),
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("d", &self.d),
        ]
        .into_iter()
        .find(|(_, c)| c.is_some())
        .map(|(name, _)| name)
    }
}

/// Checks the PEO property and conditions (a)-(d) exhaustively over all
/// maximal cliques and all intersecting pairs of them.
pub fn verify_special_peo(g: &Graph, k_clique: &[usize], peo: &Peo) -> SpecialPeoReport {
    let mut report = SpecialPeoReport::default();
    let n = g.n();
    if peo.len() != n {
        report.perfect = Some(Counterexample::BadAnchor);
        return report;
    }
    report.perfect = peo
        .first_imperfect(g)
        .map(|(vertex, a, b)| Counterexample::NotSimplicial { vertex, a, b });

    // (a)
    match clique_set(g, k_clique) {
        Ok(k_set) if cliques::is_maximal_clique(g, &k_set) => {
            for (i, &x) in k_clique.iter().enumerate() {
                let expected = n - 1 - i;
                if peo.position(x) != expected {
                    report.a = Some(Counterexample::AnchorPosition {
                        index: i + 1,
                        expected,
                        actual: peo.position(x),
                    });
                    break;
                }
            }
        }
        _ => report.a = Some(Counterexample::BadAnchor),
    }

    let maximal = cliques::maximal_cliques_general(g);
    let s_sets: Vec<VertexSet> = maximal.iter().map(|c| s_unchecked(g, peo, c)).collect();

    // (b)
    'b: for (c, s) in maximal.iter().zip(&s_sets) {
        for v in s.iter() {
            for u in c.difference(s).iter() {
                if peo.position(v) < peo.position(u) {
                    report.b = Some(Counterexample::SBeforeRest {
                        clique: c.clone(),
                        in_s: v,
                        not_in_s: u,
                    });
                    break 'b;
                }
            }
        }
    }

    // (c)
    'c: for (c, s) in maximal.iter().zip(&s_sets) {
        let rest = c.difference(s);
        for i in s.len() + 1..=c.len() {
            let count = rest
                .iter()
                .filter(|&u| monotone_degree(g, peo, u) == i - 1)
                .count();
            if count != 1 {
                report.c = Some(Counterexample::MonotoneDegreeCount {
                    clique: c.clone(),
                    i,
                    count,
                });
                break 'c;
            }
        }
    }

    // (d)
    let precedes_common = |c: &VertexSet, other: &VertexSet, common: &VertexSet| {
        let latest_private = c.difference(other).iter().map(|u| peo.position(u)).max();
        let earliest_common = common.iter().map(|v| peo.position(v)).min();
        match (latest_private, earliest_common) {
            (Some(l), Some(e)) => l < e,
            _ => true,
        }
    };
    'd: for (i, c) in maximal.iter().enumerate() {
        for c2 in &maximal[i + 1..] {
            let common = c.intersection(c2);
            if common.is_empty() {
                continue;
            }
            if !precedes_common(c, c2, &common) && !precedes_common(c2, c, &common) {
                report.d = Some(Counterexample::PairPrecedence {
                    first: c.clone(),
                    second: c2.clone(),
                });
                break 'd;
            }
        }
    }
    report
}

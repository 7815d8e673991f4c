//! Clique enumeration and clique-derived invariants: the clique vector,
//! maximal cliques, `κ̃(G)` and exact dominating-clique numbers `d_i(G)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cover;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::peo::{self, Peo};
use crate::subsets::binomial;
use crate::vectors::CVector;
use crate::vertex_set::VertexSet;

/// All nonempty cliques with at most `max_size` vertices.
pub fn cliques_up_to(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = VertexSet::new();
    for v in 0..g.n() {
        let candidates: VertexSet = g.neighbors(v).iter().filter(|&w| w > v).collect();
        current.insert(v);
        extend_cliques(g, &mut current, 1, &candidates, max_size, &mut out);
        current.remove(v);
    }
    out
}

fn extend_cliques(
    g: &Graph,
    current: &mut VertexSet,
    size: usize,
    candidates: &VertexSet,
    max_size: usize,
    out: &mut Vec<VertexSet>,
) {
    if size > max_size {
        return;
    }
    out.push(current.clone());
    for w in candidates.iter() {
        let next: VertexSet = candidates
            .intersection(g.neighbors(w))
            .iter()
            .filter(|&x| x > w)
            .collect();
        current.insert(w);
        extend_cliques(g, current, size + 1, &next, max_size, out);
        current.remove(w);
    }
}

/// Clique counts by explicit enumeration; entry `i - 1` counts `i`-cliques.
pub fn clique_counts_enumerated(g: &Graph) -> Vec<BigInt> {
    let mut counts: Vec<BigInt> = Vec::new();
    for c in cliques_up_to(g, g.n()) {
        let s = c.len();
        if counts.len() < s {
            counts.resize(s, BigInt::zero());
        }
        counts[s - 1] += 1;
    }
    counts
}

/// `c_i = sum_v C(n_σ(v), i - 1)` for a perfect elimination ordering `σ`.
pub fn clique_counts_by_peo(g: &Graph, peo: &Peo) -> Vec<BigInt> {
    let degrees: Vec<u64> = (0..g.n())
        .map(|v| peo::monotone_degree(g, peo, v) as u64)
        .collect();
    let d = degrees.iter().copied().max().map_or(0, |m| m as usize + 1);
    (1..=d as u64)
        .map(|i| {
            degrees
                .iter()
                .map(|&nv| BigInt::from(binomial(nv, i - 1)))
                .sum()
        })
        .collect()
}

/// Clique vector `(c_1, ..., c_d)`.
///
/// Chordal inputs use the elimination-ordering formula; everything else is
/// enumerated.
pub fn clique_vector(g: &Graph) -> CVector {
    let counts = match graph::chordality(g) {
        Some(peo) => clique_counts_by_peo(g, &peo),
        None => clique_counts_enumerated(g),
    };
    CVector::from_entries(counts)
}

pub fn clique_number(g: &Graph) -> usize {
    clique_vector(g).d()
}

pub fn is_maximal_clique(g: &Graph, c: &VertexSet) -> bool {
    if c.is_empty() || c.last().is_some_and(|v| v >= g.n()) || !g.is_clique(c) {
        return false;
    }
    let mut common = g.vertices();
    for v in c.iter() {
        common.intersect_with(g.neighbors(v));
    }
    common.is_empty()
}

/// Inclusion-maximal cliques, sorted.
///
/// Chordal graphs take the maximal members of `{v ∪ N_σ(v)}`; other graphs
/// go through [`maximal_cliques_general`].
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    match graph::chordality(g) {
        Some(peo) => maximal_cliques_chordal(g, &peo),
        None => maximal_cliques_general(g),
    }
}

/// Maximal members of `{v ∪ N_σ(v)}` for a PEO `σ`.
pub fn maximal_cliques_chordal(g: &Graph, peo: &Peo) -> Vec<VertexSet> {
    let mut candidates: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            let mut c: VertexSet = peo::monotone_neighbors(g, peo, v).into_iter().collect();
            c.insert(v);
            c
        })
        .collect();
    candidates.sort_by_key(|c| core::cmp::Reverse(c.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !kept.iter().any(|k| c.is_subset(k)) {
            kept.push(c);
        }
    }
    kept.sort();
    kept
}

/// Bron-Kerbosch with Tomita pivoting; valid for any graph.
pub fn maximal_cliques_general(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    bron_kerbosch(
        g,
        &mut VertexSet::new(),
        g.vertices(),
        VertexSet::new(),
        &mut out,
    );
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection_len(&p))
        .expect("p nonempty");
    for v in p.difference(g.neighbors(pivot)).iter() {
        r.insert(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        );
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

/// Maximum cliques, sorted lexicographically.
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    let all = maximal_cliques(g);
    let d = all.iter().map(VertexSet::len).max().unwrap_or(0);
    all.into_iter().filter(|c| c.len() == d).collect()
}

/// Largest intersection of two distinct maximal cliques; `0` when there is
/// only one maximal clique.
pub fn kappa_tilde(g: &Graph) -> usize {
    kappa_tilde_of(&maximal_cliques(g))
}

pub fn kappa_tilde_of(maximal: &[VertexSet]) -> usize {
    let mut best = 0;
    for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            best = best.max(a.intersection_len(b));
        }
    }
    best
}

/// How an `i`-clique must sit inside a maximal clique to dominate it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Containment {
    /// `C ⊆ C'`: a maximal `i`-clique dominates itself.
    #[default]
    Inclusive,
    /// `C ⊊ C'`.
    Strict,
}

/// A minimum dominating `i`-clique family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domination {
    pub size: usize,
    pub witness: Vec<VertexSet>,
}

/// `d_i(G)`: fewest `i`-cliques such that every maximal clique of order at
/// least `i` contains one of them. Solved as an exact set cover.
pub fn dominating_number(g: &Graph, i: usize, containment: Containment) -> Result<Domination> {
    let maximal = maximal_cliques(g);
    dominating_number_with(&maximal, i, containment)
}

/// [`dominating_number`] against a precomputed maximal-clique list.
pub fn dominating_number_with(
    maximal: &[VertexSet],
    i: usize,
    containment: Containment,
) -> Result<Domination> {
    let d = maximal.iter().map(VertexSet::len).max().unwrap_or(0);
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    let targets: Vec<&VertexSet> = maximal.iter().filter(|c| c.len() >= i).collect();
    if targets.is_empty() {
        return Err(Error::NoMaximalCliqueOfOrder(i));
    }
    if containment == Containment::Strict && targets.iter().any(|c| c.len() == i) {
        return Err(Error::NoStrictDomination(i));
    }

    // candidate i-cliques keyed by the set of targets they dominate
    let mut by_cover: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for target in &targets {
        for_each_subset_of_size(target, i, |q| {
            let cover: VertexSet = targets
                .iter()
                .enumerate()
                .filter(|(_, t)| q.is_subset(t))
                .map(|(j, _)| j)
                .collect();
            by_cover
                .entry(cover)
                .and_modify(|best| {
                    if *q < *best {
                        *best = q.clone();
                    }
                })
                .or_insert_with(|| q.clone());
        });
    }
    // drop covers strictly contained in another cover
    let covers: Vec<(VertexSet, VertexSet)> = by_cover.into_iter().collect();
    let useful: Vec<&(VertexSet, VertexSet)> = covers
        .iter()
        .filter(|(c, _)| !covers.iter().any(|(o, _)| c != o && c.is_subset(o)))
        .collect();
    let sets: Vec<VertexSet> = useful.iter().map(|(c, _)| c.clone()).collect();
    let chosen = cover::min_set_cover(targets.len(), &sets).expect("each target covers itself");
    let mut witness: Vec<VertexSet> = chosen.iter().map(|&k| useful[k].1.clone()).collect();
    witness.sort();
    Ok(Domination {
        size: witness.len(),
        witness,
    })
}

fn for_each_subset_of_size(set: &VertexSet, k: usize, mut f: impl FnMut(&VertexSet)) {
    let members = set.to_vec();
    for idx in crate::subsets::Combinations::new(members.len(), k) {
        let q: VertexSet = idx.into_iter().map(|j| members[j]).collect();
        f(&q);
    }
}

/// `(d_1, ..., d_d)` under inclusive containment.
pub fn dominating_numbers(g: &Graph) -> Vec<usize> {
    let maximal = maximal_cliques(g);
    let d = maximal.iter().map(VertexSet::len).max().unwrap_or(0);
    (1..=d)
        .map(|i| {
            dominating_number_with(&maximal, i, Containment::Inclusive)
                .expect("a maximum clique has order >= i")
                .size
        })
        .collect()
}

/// Counts of maximal cliques by size; entry `i - 1` counts size-`i` cliques.
pub fn maximal_clique_sizes(maximal: &[VertexSet]) -> Vec<usize> {
    let d = maximal.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = vec![0; d];
    for c in maximal {
        out[c.len() - 1] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::threshold::{graph_from_word, SdWord};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn clique_vectors() {
        let w: SdWord = "SDSDDS".parse().unwrap();
        assert_eq!(
            clique_vector(&graph_from_word(&w)).entries(),
            ints(&[6, 7, 2]).as_slice()
        );
        assert_eq!(
            clique_vector(&families::complete(3)).entries(),
            ints(&[3, 3, 1]).as_slice()
        );
        let bp = families::best_possible(1, 2);
        assert_eq!(
            clique_vector(&bp.graph).entries(),
            ints(&[7, 11, 6, 1]).as_slice()
        );
        assert_eq!(
            clique_vector(&families::cycle(4)).entries(),
            ints(&[4, 4]).as_slice()
        );
    }

    #[test]
    fn maximal_clique_examples() {
        let p = maximal_cliques(&families::path(3));
        assert_eq!(
            p,
            vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()]
        );
        assert_eq!(maximal_cliques(&families::complete(4)).len(), 1);
        let bp = families::best_possible(1, 2);
        let x = &bp.x;
        let mut expected: Vec<VertexSet> = vec![
            x.iter().copied().collect(),
            [bp.u_kappa, x[0]].into_iter().collect(),
            [bp.u_kappa_tilde, x[0], x[1]].into_iter().collect(),
            [bp.v, x[2], x[3]].into_iter().collect(),
        ];
        expected.sort();
        assert_eq!(maximal_cliques(&bp.graph), expected);
        assert_eq!(maximal_cliques_general(&bp.graph), expected);
    }

    #[test]
    fn kappa_tilde_examples() {
        assert_eq!(kappa_tilde(&families::best_possible(1, 2).graph), 2);
        assert_eq!(kappa_tilde(&families::path(3)), 1);
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(kappa_tilde(&two_edges), 0);
        assert_eq!(kappa_tilde(&families::complete(4)), 0);
    }

    #[test]
    fn domination_on_best_possible() {
        let bp = families::best_possible(1, 2);
        let d2 = dominating_number(&bp.graph, 2, Containment::Inclusive).unwrap();
        assert_eq!(d2.size, 3);
        let d1 = dominating_number(&bp.graph, 1, Containment::Inclusive).unwrap();
        assert_eq!(d1.size, 2);
        let d4 = dominating_number(&bp.graph, 4, Containment::Inclusive).unwrap();
        assert_eq!(d4.size, 1);
        assert_eq!(dominating_numbers(&bp.graph), vec![2, 3, 3, 1]);
        // the witness really dominates
        let maximal = maximal_cliques(&bp.graph);
        for m in maximal.iter().filter(|m| m.len() >= 2) {
            assert!(d2.witness.iter().any(|q| q.is_subset(m)));
        }
    }

    #[test]
    fn domination_errors_and_strict_variant() {
        let bp = families::best_possible(1, 2);
        assert_eq!(
            dominating_number(&bp.graph, 5, Containment::Inclusive),
            Err(Error::IndexOutOfRange { index: 5, max: 4 })
        );
        assert_eq!(
            dominating_number(&bp.graph, 0, Containment::Inclusive),
            Err(Error::IndexOutOfRange { index: 0, max: 4 })
        );
        // the maximal 4-clique cannot strictly contain a 4-clique
        assert_eq!(
            dominating_number(&bp.graph, 4, Containment::Strict),
            Err(Error::NoStrictDomination(4))
        );
        // i = 1: every maximal clique has order >= 2, strict is feasible
        assert_eq!(
            dominating_number(&bp.graph, 1, Containment::Strict)
                .unwrap()
                .size,
            2
        );
    }

    #[test]
    fn peo_counts_agree_with_enumeration() {
        for seed in 0..40 {
            let g = graph::random_chordal(10, 5, seed);
            let peo = graph::chordality(&g).unwrap();
            assert_eq!(clique_counts_by_peo(&g, &peo), clique_counts_enumerated(&g));
        }
    }
}

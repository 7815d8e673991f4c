//! The edge shift `α_σ` that turns a chordal graph into a threshold graph
//! with the same clique vector.
//!
//! Fix a maximum clique `K = (x_1, ..., x_k)` and a special PEO `σ` for it.
//! Edges inside `K` stay. For `u ∉ K` with later neighbours
//! `u_1, ..., u_m` (in `σ` order), the edge `u u_j` is replaced by `u x_j`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cliques;
use crate::complex;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::peo::{self, Peo};
use crate::threshold::{self, SdWord};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
    pub shifted_graph: Graph,
    /// Threshold word of the shifted graph (letters relabel vertices; see
    /// [`threshold::recognize_threshold`]).
    pub word: SdWord,
    /// Each original edge `(u, v)`, `u < v`, with its image, also `u < v`.
    pub edge_map: Vec<((usize, usize), (usize, usize))>,
    pub peo_used: Peo,
    /// `x_1, ..., x_k`.
    pub k_clique: Vec<usize>,
    /// Whether `peo_used` passes all of conditions (a)-(d). When no special
    /// PEO exists for `K` the shift runs on a PEO satisfying (a) only, which
    /// is all the edge map needs.
    pub special: bool,
}

/// The lexicographically smallest maximum clique, as `x_1..x_k` in
/// decreasing id.
pub fn default_k_clique(g: &Graph) -> Vec<usize> {
    let first = cliques::maximum_cliques(g)
        .into_iter()
        .next()
        .unwrap_or_default();
    peo::default_clique_order(&first)
}

/// Applies `α_σ` and checks that the image is a threshold graph with the
/// same clique vector and the same number of edges.
pub fn alpha_shift(g: &Graph, k_clique: Option<&[usize]>) -> Result<ShiftResult> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices(2));
    }
    if !graph::is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let explicit = k_clique.is_some();
    let k_clique: Vec<usize> = match k_clique {
        Some(k) => {
            let set: VertexSet = k.iter().copied().collect();
            if let Some(&bad) = k.iter().find(|&&x| x >= g.n()) {
                return Err(Error::VertexOutOfRange {
                    vertex: bad,
                    n: g.n(),
                });
            }
            if set.len() != k.len()
                || !cliques::is_maximal_clique(g, &set)
                || set.len() != cliques::clique_number(g)
            {
                return Err(Error::NotMaximumClique);
            }
            k.to_vec()
        }
        None => default_k_clique(g),
    };
    let (k_clique, sigma, special) = choose_peo(g, k_clique, !explicit)?;
    let k_set: VertexSet = k_clique.iter().copied().collect();

    let mut shifted = Graph::new(g.n());
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let image = if k_set.contains(u) && k_set.contains(v) {
            (u, v)
        } else {
            let (early, late) = if sigma.position(u) < sigma.position(v) {
                (u, v)
            } else {
                (v, u)
            };
            let later = peo::monotone_neighbors(g, &sigma, early);
            let j = later
                .iter()
                .position(|&w| w == late)
                .expect("late endpoint is a later neighbour");
            let x = *k_clique.get(j).ok_or_else(|| {
                Error::ShiftVerification(format!(
                    "vertex {early} has more later neighbours than |K|"
                ))
            })?;
            (early.min(x), early.max(x))
        };
        shifted.add_edge(image.0, image.1).map_err(|e| {
            Error::ShiftVerification(format!("edge ({u}, {v}) maps to {image:?}: {e}"))
        })?;
        edge_map.push(((u, v), image));
    }

    let recognition = threshold::recognize_threshold(&shifted)
        .ok_or_else(|| Error::ShiftVerification("image is not a threshold graph".into()))?;
    if cliques::clique_vector(&shifted) != cliques::clique_vector(g) {
        return Err(Error::ShiftVerification("clique vectors differ".into()));
    }
    Ok(ShiftResult {
        shifted_graph: shifted,
        word: recognition.word,
        edge_map,
        peo_used: sigma,
        k_clique,
        special,
    })
}

/// Orders of `K` tried when looking for a special PEO.
const ORDER_SEARCH_CAP: usize = 720;

/// A special PEO for `k_clique` if one can be built; with `search`, other
/// orders of the same clique are tried as well. Falls back to the unchecked
/// construction for the original order.
fn choose_peo(g: &Graph, k_clique: Vec<usize>, search: bool) -> Result<(Vec<usize>, Peo, bool)> {
    if let Ok(p) = peo::special_peo(g, &k_clique) {
        return Ok((k_clique, p, true));
    }
    if search {
        let mut order = k_clique.clone();
        order.sort_unstable();
        for _ in 0..ORDER_SEARCH_CAP {
            if let Ok(p) = peo::special_peo(g, &order) {
                return Ok((order, p, true));
            }
            if !complex::next_permutation(&mut order) {
                break;
            }
        }
    }
    let p = peo::construct_peo(g, &k_clique)?;
    Ok((k_clique, p, false))
}

/// Image of a clique of `g` under the clique-level map induced by the shift:
/// cliques inside `K` are fixed, otherwise the `σ`-first vertex `u_1` keeps
/// its place and every other member `u_q` (the `j_q`-th later neighbour of
/// `u_1`) becomes `x_{j_q}`.
///
/// `None` when the map is undefined for `c` under the stored ordering.
pub fn clique_image(g: &Graph, shift: &ShiftResult, c: &VertexSet) -> Option<VertexSet> {
    let k_set: VertexSet = shift.k_clique.iter().copied().collect();
    if c.is_subset(&k_set) {
        return Some(c.clone());
    }
    let ordered = shift.peo_used.well_order(c);
    let first = ordered[0];
    let later = peo::monotone_neighbors(g, &shift.peo_used, first);
    let mut image = VertexSet::singleton(first);
    for &u in &ordered[1..] {
        let j = later.iter().position(|&w| w == u)?;
        image.insert(*shift.k_clique.get(j)?);
    }
    Some(image)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionIssue {
    NotACliqueInImage {
        clique: Vec<usize>,
        image: Vec<usize>,
    },
    Collision {
        first: Vec<usize>,
        second: Vec<usize>,
        image: Vec<usize>,
    },
    Undefined {
        clique: Vec<usize>,
    },
    CountMismatch {
        size: usize,
        in_graph: usize,
        in_shifted: usize,
    },
    EdgeMapMismatch {
        edge: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BijectionReport {
    pub cliques_checked: usize,
    pub issues: Vec<BijectionIssue>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn summary(&self) -> String {
        match self.issues.first() {
            None => format!("{} cliques mapped bijectively", self.cliques_checked),
            Some(issue) => format!("{} issue(s), first: {issue:?}", self.issues.len()),
        }
    }
}

/// Checks that [`clique_image`] maps the cliques of `g` bijectively onto the
/// cliques of the shifted graph, size by size, and agrees with the edge map.
pub fn clique_bijection_check(g: &Graph, shift: &ShiftResult) -> BijectionReport {
    let t = &shift.shifted_graph;
    let mut report = BijectionReport::default();
    let mut seen: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    let all = cliques::cliques_up_to(g, g.n());
    for c in &all {
        report.cliques_checked += 1;
        let Some(image) = clique_image(g, shift, c) else {
            report
                .issues
                .push(BijectionIssue::Undefined { clique: c.to_vec() });
            continue;
        };
        if image.len() != c.len() || !t.is_clique(&image) {
            report.issues.push(BijectionIssue::NotACliqueInImage {
                clique: c.to_vec(),
                image: image.to_vec(),
            });
            continue;
        }
        if let Some(prev) = seen.insert(image.clone(), c.clone()) {
            report.issues.push(BijectionIssue::Collision {
                first: prev.to_vec(),
                second: c.to_vec(),
                image: image.to_vec(),
            });
        }
    }
    let mut in_graph = BTreeMap::<usize, usize>::new();
    for c in &all {
        *in_graph.entry(c.len()).or_default() += 1;
    }
    let mut in_shifted = BTreeMap::<usize, usize>::new();
    for c in cliques::cliques_up_to(t, t.n()) {
        *in_shifted.entry(c.len()).or_default() += 1;
    }
    let sizes: VertexSet = in_graph.keys().chain(in_shifted.keys()).copied().collect();
    for size in sizes.iter() {
        let a = in_graph.get(&size).copied().unwrap_or(0);
        let b = in_shifted.get(&size).copied().unwrap_or(0);
        if a != b {
            report.issues.push(BijectionIssue::CountMismatch {
                size,
                in_graph: a,
                in_shifted: b,
            });
        }
    }
    for &((u, v), (a, b)) in &shift.edge_map {
        let pair: VertexSet = [u, v].into_iter().collect();
        let expected: VertexSet = [a, b].into_iter().collect();
        if clique_image(g, shift, &pair) != Some(expected) {
            report
                .issues
                .push(BijectionIssue::EdgeMapMismatch { edge: (u, v) });
        }
    }
    report
}

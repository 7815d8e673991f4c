//! Finite simplicial complexes on `0..n`, stored by their facets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::Combinations;
use crate::vectors::FVector;
use crate::vertex_set::VertexSet;

/// Largest vertex count for which whole face lattices are enumerated.
pub const FACE_CAP: usize = 24;
/// Largest vertex count for brute force over all vertex subsets.
pub const SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `generators`; non-maximal and empty
    /// generators are dropped. Vertices outside every facet are allowed
    /// (they are not faces).
    pub fn new(n: usize, generators: Vec<VertexSet>) -> Result<Self> {
        for s in &generators {
            if let Some(v) = s.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(generators),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in increasing order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn contains_face(&self, s: &VertexSet) -> bool {
        s.is_empty() || self.facets.iter().any(|f| s.is_subset(f))
    }

    /// `max |F| - 1`, and `-1` for the complex `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(VertexSet::len).max().unwrap_or(0) as i64 - 1
    }

    /// Faces grouped by size: entry `k` lists the faces with `k` vertices,
    /// starting with `[∅]`.
    pub fn faces_by_size(&self) -> Result<Vec<Vec<VertexSet>>> {
        if self.n > FACE_CAP {
            return Err(Error::CapExceeded {
                what: "face enumeration vertices",
                limit: FACE_CAP,
                actual: self.n,
            });
        }
        let top = (self.dim() + 1) as usize;
        let mut levels: Vec<BTreeSet<VertexSet>> = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            let members = f.to_vec();
            for (k, level) in levels.iter_mut().enumerate().take(members.len() + 1) {
                for idx in Combinations::new(members.len(), k) {
                    level.insert(idx.into_iter().map(|j| members[j]).collect());
                }
            }
        }
        levels[0].insert(VertexSet::new());
        Ok(levels
            .into_iter()
            .map(|l| l.into_iter().collect())
            .collect())
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Result<FVector> {
        let levels = self.faces_by_size()?;
        Ok(FVector::from_entries(
            levels.iter().map(|l| BigInt::from(l.len())).collect(),
        ))
    }

    /// Faces of dimension at most `t`.
    pub fn skeleton(&self, t: usize) -> SimplicialComplex {
        let mut gens = Vec::new();
        for f in &self.facets {
            if f.len() <= t + 1 {
                gens.push(f.clone());
            } else {
                let members = f.to_vec();
                for idx in Combinations::new(members.len(), t + 1) {
                    gens.push(idx.into_iter().map(|j| members[j]).collect());
                }
            }
        }
        SimplicialComplex {
            n: self.n,
            facets: maximalize(gens),
        }
    }

    /// `Δ|_W`, keeping the ambient vertex range.
    pub fn restrict(&self, w: &VertexSet) -> SimplicialComplex {
        let gens = self.facets.iter().map(|f| f.intersection(w)).collect();
        SimplicialComplex {
            n: self.n,
            facets: maximalize(gens),
        }
    }

    /// Minimal non-faces (the generators of the Stanley–Reisner ideal), in
    /// increasing order. Vertices that are not faces show up as singletons.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        if self.n > SUBSET_CAP {
            return Err(Error::CapExceeded {
                what: "minimal non-face vertices",
                limit: SUBSET_CAP,
                actual: self.n,
            });
        }
        let masks: Vec<u64> = self.facets.iter().map(VertexSet::low_mask).collect();
        let is_face = |s: u64| masks.iter().any(|&f| s & !f == 0);
        let mut out = Vec::new();
        for s in 1u64..1 << self.n {
            if is_face(s) {
                continue;
            }
            let mut rest = s;
            let mut minimal = true;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !is_face(s ^ bit) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(VertexSet::from_mask(s));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Shifted with respect to the labeling that gives `order[k]` label `k`:
    /// any face stays a face when one of its vertices is replaced by a
    /// non-member of larger label.
    pub fn is_shifted(&self, order: &[usize]) -> Result<bool> {
        let mut rank = vec![usize::MAX; self.n];
        for (k, &v) in order.iter().enumerate() {
            if v >= self.n || rank[v] != usize::MAX {
                return Err(Error::NotAPermutation(self.n));
            }
            rank[v] = k;
        }
        if order.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        for level in self.faces_by_size()? {
            for face in &level {
                for i in face.iter() {
                    for &j in &order[rank[i] + 1..] {
                        if face.contains(j) {
                            continue;
                        }
                        let mut moved = face.clone();
                        moved.remove(i);
                        moved.insert(j);
                        if !self.contains_face(&moved) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Shifted under some labeling. Tries `hint` first, then every
    /// permutation when `n <= 8`; `None` when larger complexes fail the hint.
    pub fn is_shifted_under_some_order(&self, hint: Option<&[usize]>) -> Result<Option<bool>> {
        if let Some(order) = hint {
            if self.is_shifted(order)? {
                return Ok(Some(true));
            }
        }
        if self.n > 8 {
            return Ok(None);
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            if self.is_shifted(&perm)? {
                return Ok(Some(true));
            }
            if !next_permutation(&mut perm) {
                return Ok(Some(false));
            }
        }
    }

    /// All facets have the same size.
    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(VertexSet::len);
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Every vertex restriction `Δ|_W`, `W ⊆ 0..n`, is pure.
    pub fn is_matroid(&self) -> Result<bool> {
        if self.n > SUBSET_CAP {
            return Err(Error::CapExceeded {
                what: "matroid test vertices",
                limit: SUBSET_CAP,
                actual: self.n,
            });
        }
        let masks: Vec<u64> = self.facets.iter().map(VertexSet::low_mask).collect();
        for w in 0u64..1 << self.n {
            let restricted: Vec<u64> = masks.iter().map(|f| f & w).collect();
            let mut size = None;
            for (a, &fa) in restricted.iter().enumerate() {
                let maximal = !restricted
                    .iter()
                    .enumerate()
                    .any(|(b, &fb)| b != a && fa & !fb == 0 && (fa != fb || b < a));
                if maximal {
                    let s = fa.count_ones();
                    match size {
                        None => size = Some(s),
                        Some(t) if t != s => return Ok(false),
                        _ => {}
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `Δ(G)`: every clique of `g` is a face.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        n: g.n(),
        facets: maximalize(cliques::maximal_cliques(g)),
    }
}

fn maximalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.retain(|s| !s.is_empty());
    sets.sort_by_key(|s| core::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::threshold::{graph_from_word, shifting_order};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn clique_complex_of_path() {
        let d = clique_complex(&families::path(3));
        assert_eq!(d.facets(), &[set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(d.minimal_nonfaces().unwrap(), vec![set(&[0, 2])]);
        assert_eq!(d.f_vector().unwrap(), FVector::from_i64(&[1, 3, 2]));
        assert_eq!(d.dim(), 1);
    }

    #[test]
    fn minimal_nonfaces_are_non_edges_for_flag_complexes() {
        let g = families::best_possible(1, 2).graph;
        let d = clique_complex(&g);
        let mut non_edges = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    non_edges.push(set(&[u, v]));
                }
            }
        }
        non_edges.sort();
        assert_eq!(d.minimal_nonfaces().unwrap(), non_edges);
    }

    #[test]
    fn ghost_vertices_are_nonfaces() {
        let d = SimplicialComplex::new(3, vec![set(&[0, 1])]).unwrap();
        assert_eq!(d.minimal_nonfaces().unwrap(), vec![set(&[2])]);
        assert!(SimplicialComplex::new(2, vec![set(&[2])]).is_err());
    }

    #[test]
    fn skeleton_and_restriction() {
        let d = clique_complex(&families::complete(4));
        let s = d.skeleton(1);
        assert_eq!(s.facets().len(), 6);
        assert_eq!(d.skeleton(0).facets().len(), 4);
        let r = d.restrict(&set(&[0, 2]));
        assert_eq!(r.facets(), &[set(&[0, 2])]);
    }

    #[test]
    fn threshold_complexes_are_shifted() {
        for w in ["SDS", "SSD", "SDSDDS", "SDSDSDDSDS", "SSDDSDS"] {
            let g = graph_from_word(&w.parse().unwrap());
            let d = clique_complex(&g);
            assert!(d.is_shifted(&shifting_order(&g)).unwrap(), "{w}");
        }
        let p4 = clique_complex(&families::path(4));
        assert_eq!(p4.is_shifted_under_some_order(None).unwrap(), Some(false));
    }

    #[test]
    fn purity_and_matroids() {
        let g = graph_from_word(&"SDDSS".parse().unwrap());
        let d = clique_complex(&g);
        assert!(d.is_pure());
        assert!(d.is_matroid().unwrap());
        assert!(clique_complex(&families::path(3)).is_matroid().unwrap());
        let p4 = clique_complex(&families::path(4));
        assert!(p4.is_pure());
        assert!(!p4.is_matroid().unwrap());
        let sds = clique_complex(&graph_from_word(&"SDSDS".parse().unwrap()));
        assert!(!sds.is_matroid().unwrap());
    }

    #[test]
    fn permutations_cycle_through_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}

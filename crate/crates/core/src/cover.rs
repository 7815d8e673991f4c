//! Exact minimum set cover by branch and bound.

use alloc::vec::Vec;

use crate::vertex_set::VertexSet;

/// Indices of a minimum-cardinality subfamily of `sets` covering `0..universe`,
/// or `None` when no cover exists.
///
/// Upper bound from the greedy cover; lower bound from a greedy family of
/// uncovered elements no two of which share a set.
pub fn min_set_cover(universe: usize, sets: &[VertexSet]) -> Option<Vec<usize>> {
    let all = VertexSet::full(universe);
    let mut reach = VertexSet::new();
    for s in sets {
        reach.union_with(s);
    }
    if !all.is_subset(&reach) {
        return None;
    }
    let covering: Vec<Vec<usize>> = (0..universe)
        .map(|e| (0..sets.len()).filter(|&i| sets[i].contains(e)).collect())
        .collect();
    let mut search = Search {
        sets,
        covering: &covering,
        best: greedy(&all, sets),
        chosen: Vec::new(),
    };
    search.run(&all);
    Some(search.best)
}

fn greedy(all: &VertexSet, sets: &[VertexSet]) -> Vec<usize> {
    let mut uncovered = all.clone();
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let (i, _) = sets
            .iter()
            .enumerate()
            .max_by_key(|(i, s)| (s.intersection_len(&uncovered), core::cmp::Reverse(*i)))
            .expect("cover exists");
        picked.push(i);
        uncovered.difference_with(&sets[i]);
    }
    picked
}

struct Search<'a> {
    sets: &'a [VertexSet],
    covering: &'a [Vec<usize>],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: &VertexSet) {
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + self.lower_bound(uncovered) >= self.best.len() {
            return;
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&e| self.covering[e].len())
            .expect("nonempty");
        let mut options = self.covering[pivot].clone();
        options.sort_by_key(|&i| core::cmp::Reverse(self.sets[i].intersection_len(uncovered)));
        for i in options {
            self.chosen.push(i);
            self.run(&uncovered.difference(&self.sets[i]));
            self.chosen.pop();
        }
    }

    fn lower_bound(&self, uncovered: &VertexSet) -> usize {
        let mut blocked = VertexSet::new();
        let mut count = 0;
        for e in uncovered.iter() {
            if blocked.contains(e) {
                continue;
            }
            count += 1;
            for &i in &self.covering[e] {
                blocked.union_with(&self.sets[i].intersection(uncovered));
            }
        }
        count
    }
}

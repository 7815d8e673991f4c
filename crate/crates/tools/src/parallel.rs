//! Rayon versions of the subset enumerations. Sums are exact, so results are
//! identical to the sequential functions in the core crate.

use chordal_bvec::betti::{self, BettiTable};
use chordal_bvec::complex::SimplicialComplex;
use chordal_bvec::graph;
use chordal_bvec::subsets::Combinations;
use chordal_bvec::{Graph, Result, VertexSet};
use num_bigint::BigUint;
use rayon::prelude::*;

/// Runs `f` on a pool of `jobs` threads, or directly when `jobs <= 1`.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

pub fn cut_component_sum(g: &Graph, k: usize) -> BigUint {
    if k >= g.n() {
        return BigUint::default();
    }
    let subsets: Vec<Vec<usize>> = Combinations::new(g.n(), k).collect();
    subsets
        .par_iter()
        .map(|y| {
            let removed: VertexSet = y.iter().copied().collect();
            BigUint::from(graph::cut_component_term(g, &removed))
        })
        .reduce(BigUint::default, |a, b| a + b)
}

pub fn linear_strand_hochster(g: &Graph) -> Vec<BigUint> {
    let n = g.n();
    (1..n).map(|i| cut_component_sum(g, n - i - 1)).collect()
}

pub fn full_betti_hochster(complex: &SimplicialComplex, cap: usize) -> Result<BettiTable> {
    let levels = betti::hochster_levels(complex, cap)?;
    let n = complex.n();
    Ok((0u64..1 << n)
        .into_par_iter()
        .map(|w| {
            let mut t = BettiTable::empty(n);
            for ((i, j), r) in betti::hochster_contributions(&levels, w) {
                t.add(i, j, BigUint::from(r));
            }
            t
        })
        .reduce(
            || BettiTable::empty(n),
            |mut a, b| {
                a.merge(&b);
                a
            },
        ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordal_bvec::complex::clique_complex;

    #[test]
    fn matches_sequential() {
        for seed in 0..10 {
            let g = graph::random_chordal(9, 3, seed);
            for k in 0..=g.n() {
                assert_eq!(
                    with_jobs(3, || cut_component_sum(&g, k)),
                    graph::cut_component_sum(&g, k)
                );
            }
            let c = clique_complex(&g);
            assert_eq!(
                with_jobs(4, || full_betti_hochster(&c, 10)).unwrap(),
                betti::full_betti_hochster(&c, 10).unwrap()
            );
        }
    }
}

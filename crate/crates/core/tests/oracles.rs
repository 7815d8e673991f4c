use chordal_bvec::betti::{self, BettiTable};
use chordal_bvec::complex::clique_complex;
use chordal_bvec::{cliques, corpus, families, graph, peo, shifting, threshold, vectors};
use chordal_bvec::{BVector, Graph, Peo, SdWord};
use num_bigint::BigInt;

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | (1 << w)))
        .collect()
}

fn brute_clique_counts(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let mut counts = vec![0u64; g.n() + 1];
    for mask in 1u32..(1 << g.n()) {
        let is_clique = (0..g.n())
            .filter(|v| mask >> v & 1 == 1)
            .all(|v| mask & !(1 << v) & !adj[v] == 0);
        if is_clique {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts.remove(0);
    counts
}

fn components_without(adj: &[u32], removed: u32) -> usize {
    let n = adj.len();
    let mut unseen = ((1u32 << n) - 1) & !removed;
    let mut count = 0;
    while unseen != 0 {
        count += 1;
        let mut frontier = unseen & unseen.wrapping_neg();
        while frontier != 0 {
            unseen &= !frontier;
            let next = adj
                .iter()
                .enumerate()
                .filter(|(v, _)| frontier >> v & 1 == 1)
                .fold(0, |acc, (_, a)| acc | a);
            frontier = next & unseen;
        }
    }
    count
}

fn brute_connectivity(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0..n.saturating_sub(1))
        .find(|&k| {
            (0u32..(1 << n))
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| components_without(&adj, m) >= 2)
        })
        .unwrap_or(n - 1)
}

fn brute_is_threshold(g: &Graph) -> bool {
    // no alternating 4-cycle: ab, cd edges with ac, bd non-edges
    let n = g.n();
    let e = |a: usize, b: usize| g.has_edge(a, b);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct && e(a, b) && e(c, d) && !e(a, c) && !e(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn poly_from_b(b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); b.len()];
    for (i, bi) in b.iter().enumerate() {
        // (x + 1)^i by repeated multiplication
        let mut p = vec![BigInt::from(1)];
        for _ in 0..i {
            let mut q = vec![BigInt::from(0); p.len() + 1];
            for (k, a) in p.iter().enumerate() {
                q[k] += a;
                q[k + 1] += a;
            }
            p = q;
        }
        for (k, a) in p.iter().enumerate() {
            out[k] += bi * a;
        }
    }
    out
}

#[test]
fn clique_vectors_match_subset_enumeration() {
    for e in corpus::chordal_corpus(150, 2, 11, 3) {
        let c = cliques::clique_vector(&e.graph);
        let expected: Vec<BigInt> = brute_clique_counts(&e.graph)
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(c.entries(), expected.as_slice(), "{:?}", e.graph.edges());
    }
}

#[test]
fn connectivity_matches_exhaustive_cuts() {
    for e in corpus::chordal_corpus(150, 2, 10, 5) {
        assert_eq!(
            graph::vertex_connectivity(&e.graph),
            brute_connectivity(&e.graph)
        );
    }
    assert_eq!(graph::vertex_connectivity(&families::cycle(6)), 2);
    assert_eq!(graph::vertex_connectivity(&families::complete(5)), 4);
}

#[test]
fn b_vector_satisfies_the_generating_identity() {
    for e in corpus::chordal_corpus(100, 2, 10, 11) {
        let c = cliques::clique_vector(&e.graph);
        let b = vectors::b_from_c(&c);
        assert_eq!(poly_from_b(b.entries()), c.entries());
    }
}

#[test]
fn threshold_recognition_agrees_with_forbidden_subgraphs() {
    for e in corpus::chordal_corpus(200, 2, 9, 13) {
        assert_eq!(
            threshold::is_threshold(&e.graph),
            brute_is_threshold(&e.graph)
        );
    }
    for len in 1..=10 {
        let w = corpus::random_word(len, len as u64);
        assert!(brute_is_threshold(&threshold::graph_from_word(&w)));
    }
}

#[test]
fn word_b_vector_is_the_clique_b_vector() {
    for seed in 0..200 {
        let w = corpus::random_word(2 + seed as usize % 12, seed);
        let g = threshold::graph_from_word(&w);
        let via_cliques = vectors::b_from_c(&cliques::clique_vector(&g));
        assert_eq!(threshold::bvector_from_word(&w), via_cliques, "{w}");
        assert_eq!(threshold::word_from_bvector(&via_cliques).unwrap(), w);
    }
}

#[test]
fn figure_word() {
    let w: SdWord = "SDSDDS".parse().unwrap();
    assert_eq!(
        threshold::bvector_from_word(&w),
        BVector::from_i64(&[1, 3, 2])
    );
    let p = threshold::threshold_profile(&w).unwrap();
    assert_eq!(p.kappa, 1);
    assert_eq!(p.dominating, vec![1, 3, 2]);
    assert_eq!(p.components_after_cut, 3);
}

/// All orders of the non-clique vertices followed by `x_k, ..., x_1`.
fn any_special_peo(g: &Graph, x: &[usize]) -> bool {
    let rest: Vec<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
    let mut idx: Vec<usize> = (0..rest.len()).collect();
    loop {
        let mut order: Vec<usize> = idx.iter().map(|&i| rest[i]).collect();
        order.extend(x.iter().rev());
        let sigma = Peo::from_order(order).unwrap();
        if peo::verify_special_peo(g, x, &sigma).all_pass() {
            return true;
        }
        let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
            return false;
        };
        let j = (i..idx.len()).rev().find(|&j| idx[j] > idx[i - 1]).unwrap();
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
}

#[test]
fn some_maximum_cliques_admit_no_special_peo() {
    // a triangle with a triangle glued on each of its edges
    let g = Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (1, 4),
            (2, 4),
            (0, 5),
            (2, 5),
        ],
    )
    .unwrap();
    for x in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        assert!(!any_special_peo(&g, &x), "{x:?}");
        assert!(peo::special_peo(&g, &x).is_err());
    }
    // the shift itself only needs condition (a)
    let r = shifting::alpha_shift(&g, Some(&[0, 1, 2])).unwrap();
    assert!(!r.special);
    assert_eq!(
        threshold::bvector_from_word(&r.word),
        vectors::b_from_c(&cliques::clique_vector(&g))
    );
}

#[test]
fn betti_routes_on_small_graphs() {
    for e in corpus::chordal_corpus(60, 2, 8, 19) {
        let g = &e.graph;
        let c = cliques::clique_vector(g);
        let full = betti::full_betti_hochster(&clique_complex(g), 10).unwrap();
        let h = vectors::h_from_f(&vectors::f_from_c(&c));
        let via_h = BettiTable::from_linear_strand(
            g.n(),
            2,
            &betti::betti_from_hvector(&h, g.n(), c.d(), 2),
        )
        .unwrap();
        let via_b = BettiTable::from_linear_strand(
            g.n(),
            2,
            &betti::betti_from_bvector(&vectors::b_from_c(&c), g.n(), c.d()),
        )
        .unwrap();
        assert_eq!(full, via_h);
        assert_eq!(full, via_b);
        let strand: Vec<BigInt> = betti::linear_strand_hochster(g)
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(
            BettiTable::from_linear_strand(g.n(), 2, &strand).unwrap(),
            full
        );
    }
}

#[test]
fn cycles_are_not_two_linear() {
    for k in 4..=7 {
        let t = betti::full_betti_hochster(&clique_complex(&families::cycle(k)), 10).unwrap();
        assert!(!betti::homological_profile(&t).is_two_linear, "C{k}");
    }
}

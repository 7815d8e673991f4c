use chordal_bvec::claims::{self, VerifyOptions};
use chordal_bvec::threshold::Letter;
use chordal_bvec::{cliques, graph, peo, shifting, threshold, vectors};
use chordal_bvec::{BVector, CVector, FVector, HVector, SdWord};
use proptest::prelude::*;

fn small_chordal() -> impl Strategy<Value = chordal_bvec::Graph> {
    (2usize..=10, 1usize..=9, any::<u64>())
        .prop_map(|(n, w, seed)| graph::random_chordal(n, w.min(n - 1).max(1), seed))
}

fn word() -> impl Strategy<Value = SdWord> {
    prop::collection::vec(any::<bool>(), 1..=14).prop_map(|bits| {
        SdWord::new(
            bits.into_iter()
                .map(|s| if s { Letter::S } else { Letter::D })
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vector_conversions_are_inverse(v in prop::collection::vec(-1_000_000i64..=1_000_000, 1..=20)) {
        let c = CVector::from_i64(&v);
        prop_assert_eq!(vectors::c_from_b(&vectors::b_from_c(&c)), c);
        let b = BVector::from_i64(&v);
        prop_assert_eq!(vectors::b_from_c(&vectors::c_from_b(&b)), b);
        let f = FVector::from_i64(&v);
        prop_assert_eq!(vectors::f_from_h(&vectors::h_from_f(&f)), f);
        let h = HVector::from_i64(&v);
        prop_assert_eq!(vectors::h_from_f(&vectors::f_from_h(&h)), h);
    }

    #[test]
    fn random_chordal_graphs_are_chordal(g in small_chordal()) {
        prop_assert!(graph::is_chordal(&g));
        let sigma = graph::chordality(&g).unwrap();
        prop_assert!(sigma.is_perfect_for(&g));
    }

    #[test]
    fn shift_preserves_clique_vector(g in small_chordal()) {
        prop_assume!(!g.is_complete());
        let r = shifting::alpha_shift(&g, None).unwrap();
        prop_assert!(threshold::is_threshold(&r.shifted_graph));
        prop_assert_eq!(cliques::clique_vector(&r.shifted_graph), cliques::clique_vector(&g));
        prop_assert_eq!(graph::vertex_connectivity(&r.shifted_graph), graph::vertex_connectivity(&g));
        prop_assert!(shifting::clique_bijection_check(&g, &r).passed());
        if r.special {
            prop_assert!(peo::verify_special_peo(&g, &r.k_clique, &r.peo_used).all_pass());
        }
    }

    #[test]
    fn construction_always_meets_condition_a(g in small_chordal()) {
        prop_assume!(!g.is_complete());
        for k in cliques::maximal_cliques(&g) {
            let x = peo::default_clique_order(&k);
            let sigma = peo::construct_peo(&g, &x).unwrap();
            let report = peo::verify_special_peo(&g, &x, &sigma);
            prop_assert!(report.perfect.is_none() && report.a.is_none());
        }
    }

    #[test]
    fn words_roundtrip_through_graphs(w in word()) {
        let g = threshold::graph_from_word(&w);
        let r = threshold::recognize_threshold(&g).unwrap();
        prop_assert_eq!(&r.word, &w);
        prop_assert_eq!(threshold::word_from_bvector(&threshold::bvector_from_word(&w)).unwrap(), w.clone());
        prop_assert_eq!(w.to_string().parse::<SdWord>().unwrap(), w);
    }

    #[test]
    fn profile_matches_graph(w in word()) {
        prop_assume!(!w.is_complete());
        let g = threshold::graph_from_word(&w);
        let p = threshold::threshold_profile(&w).unwrap();
        prop_assert_eq!(p.kappa, graph::vertex_connectivity(&g));
        prop_assert_eq!(&p.dominating, &cliques::dominating_numbers(&g));
        prop_assert_eq!(claims::minimum_cuts(&g, p.kappa), vec![p.minimum_cut.clone()]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn all_claims_hold(g in small_chordal()) {
        let r = claims::verify_graph(&g, &VerifyOptions::default());
        let failures: Vec<_> = r.failures().collect();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }
}

//! Executable versions of the structural results on b-vectors of chordal
//! graphs, evaluated instance by instance.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::betti::{self, BettiTable};
use crate::cliques;
use crate::complex::{self, SimplicialComplex};
use crate::graph::{self, Graph};
use crate::shifting;
use crate::threshold;
use crate::vectors::{self, BVector, CVector};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skip,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub status: ClaimStatus,
    /// Failure witness, skip reason, or a short note on a pass.
    pub witness: String,
}

/// Claim ids in reporting order.
pub const CLAIM_IDS: &[&str] = &[
    "main.a",
    "main.b",
    "main.c",
    "main.d",
    "main.e",
    "goodarzi",
    "betti.a",
    "betti.b",
    "depth",
    "samecliquevector",
    "shift.kappa",
    "shift.bijection",
    "d_i.a",
    "d_i.b",
    "dominate",
    "k+2",
    "pure.threshold",
    "pure.chordal",
    "matroid.threshold",
    "matroid.word",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `n` for the Hochster table; above it Betti numbers come from
    /// the h-vector formula.
    pub betti_cap: usize,
    /// Largest `n` for the brute-force matroid test.
    pub matroid_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            betti_cap: betti::DEFAULT_HOCHSTER_CAP,
            matroid_cap: 14,
        }
    }
}

/// Numerical invariants reported for every instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub chordal: bool,
    pub c: CVector,
    pub b: BVector,
    pub d: usize,
    pub kappa: usize,
    pub kappa_tilde: usize,
    /// `d_i(G)`, entry `i - 1`.
    pub dominating: Vec<usize>,
    pub maximal_clique_count: usize,
}

pub fn invariants(g: &Graph) -> Invariants {
    let maximal = cliques::maximal_cliques(g);
    let c = cliques::clique_vector(g);
    let d = c.d();
    let dominating = (1..=d)
        .map(|i| {
            cliques::dominating_number_with(&maximal, i, cliques::Containment::Inclusive)
                .map(|dom| dom.size)
                .expect("a maximum clique has order >= i")
        })
        .collect();
    Invariants {
        n: g.n(),
        m: g.edge_count(),
        chordal: graph::is_chordal(g),
        b: vectors::b_from_c(&c),
        c,
        d,
        kappa: graph::vertex_connectivity(g),
        kappa_tilde: cliques::kappa_tilde_of(&maximal),
        dominating,
        maximal_clique_count: maximal.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub invariants: Invariants,
    pub claims: Vec<ClaimResult>,
}

impl InstanceReport {
    /// The claims in [`CLAIM_IDS`] apply (chordal, not complete).
    pub fn theorems_applicable(&self) -> bool {
        self.claims.iter().any(|c| c.status != ClaimStatus::Skip)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }
}

struct Recorder(Vec<ClaimResult>);

impl Recorder {
    fn push(&mut self, id: &'static str, outcome: Outcome) {
        let (status, witness) = match outcome {
            Outcome::Pass(note) => (ClaimStatus::Pass, note),
            Outcome::Fail(w) => (ClaimStatus::Fail, w),
            Outcome::Skip(why) => (ClaimStatus::Skip, why),
        };
        self.0.push(ClaimResult {
            id,
            status,
            witness,
        });
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// First failing index, as a pass/fail outcome.
fn each(
    range: impl Iterator<Item = usize>,
    mut bad: impl FnMut(usize) -> Option<String>,
) -> Outcome {
    let mut checked = 0;
    for i in range {
        checked += 1;
        if let Some(w) = bad(i) {
            return Outcome::Fail(w);
        }
    }
    if checked == 0 {
        Outcome::Pass("vacuous".into())
    } else {
        Outcome::Pass(format!("{checked} indices"))
    }
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

/// Evaluates every claim in [`CLAIM_IDS`] on `g`. Complete and non-chordal
/// graphs get `skip` throughout.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> InstanceReport {
    let inv = invariants(g);
    let mut rec = Recorder(Vec::new());
    let skip_reason = if g.n() == 0 {
        Some("empty graph")
    } else if g.is_complete() {
        Some("complete graph")
    } else if !inv.chordal {
        Some("not chordal")
    } else {
        None
    };
    if let Some(why) = skip_reason {
        for &id in CLAIM_IDS {
            rec.push(id, Outcome::Skip(why.into()));
        }
        return InstanceReport {
            invariants: inv,
            claims: rec.0,
        };
    }

    let n = inv.n;
    let d = inv.d;
    let kappa = inv.kappa;
    let kt = inv.kappa_tilde;
    let b = |i: usize| inv.b.get(i).clone();
    let di = |i: usize| big(inv.dominating[i - 1]);
    // Σ_{|Y|=i-1} (W(G-Y) - 1) + 1, i = 1..=d
    let cut1: Vec<BigInt> = (1..=d)
        .map(|i| BigInt::from(graph::cut_component_sum(g, i - 1)) + 1)
        .collect();

    rec.push(
        "main.a",
        each(1..=(kappa + 1).min(d), |i| {
            (b(i) != cut1[i - 1])
                .then(|| format!("i={i}: b_i={} vs cut sum + 1 = {}", b(i), cut1[i - 1]))
        }),
    );
    rec.push(
        "main.b",
        each(kappa + 2..=d, |i| {
            (b(i) >= cut1[i - 1])
                .then(|| format!("i={i}: b_i={} not < cut sum + 1 = {}", b(i), cut1[i - 1]))
        }),
    );
    rec.push(
        "main.c",
        each(1..=d, |i| {
            (b(i) > di(i)).then(|| format!("i={i}: b_i={} > d_i={}", b(i), di(i)))
        }),
    );
    rec.push(
        "main.d",
        each(kt + 1..=d, |i| {
            (b(i) != di(i)).then(|| format!("i={i}: b_i={} != d_i={}", b(i), di(i)))
        }),
    );
    rec.push(
        "main.e",
        each(kt + 1..=d, |i| {
            (kt + 1..=i)
                .find(|&j| b(i) > b(j))
                .map(|j| format!("j={j}, i={i}: b_i={} > b_j={}", b(i), b(j)))
        }),
    );
    rec.push("goodarzi", {
        let ones = each(1..=kappa.min(d), |i| {
            (b(i) != BigInt::one()).then(|| format!("i={i}: b_i={} != 1", b(i)))
        });
        match ones {
            Outcome::Pass(_) if kappa < d && b(kappa + 1) == BigInt::one() => {
                Outcome::Fail(format!("b_(kappa+1) = b_{} = 1", kappa + 1))
            }
            other => other,
        }
    });

    // Betti numbers of R/I_Δ(G)
    let complex = complex::clique_complex(g);
    let (table, source) = betti_table(g, &complex, &inv, opts);
    let beta_total = |i: usize| BigInt::from(table.total(i));
    rec.push(
        "betti.a",
        each(1..=(kappa + 1).min(d), |i| {
            let rhs = beta_total(n - i) + 1;
            (b(i) != rhs).then(|| format!("i={i}: b_i={} vs beta_(n-i)+1={rhs} ({source})", b(i)))
        }),
    );
    rec.push(
        "betti.b",
        each(kappa + 2..=d, |i| {
            let rhs = beta_total(n - i) + 1;
            (b(i) >= rhs)
                .then(|| format!("i={i}: b_i={} not < beta_(n-i)+1={rhs} ({source})", b(i)))
        }),
    );
    rec.push("depth", {
        let p = betti::homological_profile(&table);
        if !p.is_two_linear {
            Outcome::Fail(format!("table not 2-linear ({source})"))
        } else if p.depth != kappa + 1 {
            Outcome::Fail(format!(
                "depth {} != kappa+1 = {} ({source})",
                p.depth,
                kappa + 1
            ))
        } else if p.kappa_from_betti != kappa {
            Outcome::Fail(format!(
                "kappa from Betti numbers {} != {kappa}",
                p.kappa_from_betti
            ))
        } else {
            Outcome::Pass(format!("depth {} ({source})", p.depth))
        }
    });

    // shifting
    match shifting::alpha_shift(g, None) {
        Err(e) => {
            let msg = format!("{e}");
            for id in [
                "samecliquevector",
                "shift.kappa",
                "shift.bijection",
                "d_i.a",
                "d_i.b",
            ] {
                rec.push(id, Outcome::Fail(msg.clone()));
            }
        }
        Ok(shift) => {
            let t = &shift.shifted_graph;
            rec.push("samecliquevector", {
                let ct = cliques::clique_vector(t);
                if !threshold::is_threshold(t) {
                    Outcome::Fail("shifted graph is not threshold".into())
                } else if ct != inv.c {
                    Outcome::Fail(format!(
                        "c(T)={:?} != c(G)={:?}",
                        ct.entries(),
                        inv.c.entries()
                    ))
                } else {
                    let kind = if shift.special {
                        "special PEO"
                    } else {
                        "PEO with condition (a) only"
                    };
                    Outcome::Pass(format!("T = {} ({kind})", shift.word))
                }
            });
            rec.push("shift.kappa", {
                let kt_ = graph::vertex_connectivity(t);
                if kt_ == kappa {
                    Outcome::Pass(format!("kappa {kappa}"))
                } else {
                    Outcome::Fail(format!("kappa(T)={kt_} != kappa(G)={kappa}"))
                }
            });
            rec.push("shift.bijection", {
                let r = shifting::clique_bijection_check(g, &shift);
                if r.passed() {
                    Outcome::Pass(r.summary())
                } else {
                    Outcome::Fail(r.summary())
                }
            });
            let dt = cliques::dominating_numbers(t);
            rec.push(
                "d_i.a",
                each(1..=d, |i| {
                    (dt[i - 1] > inv.dominating[i - 1]).then(|| {
                        format!(
                            "i={i}: d_i(T)={} > d_i(G)={}",
                            dt[i - 1],
                            inv.dominating[i - 1]
                        )
                    })
                }),
            );
            rec.push(
                "d_i.b",
                each(kt + 1..=d, |i| {
                    (dt[i - 1] != inv.dominating[i - 1]).then(|| {
                        format!(
                            "i={i}: d_i(T)={} != d_i(G)={}",
                            dt[i - 1],
                            inv.dominating[i - 1]
                        )
                    })
                }),
            );
        }
    }

    // threshold-only statements
    let recognition = threshold::recognize_threshold(g);
    match &recognition {
        None => {
            rec.push("dominate", Outcome::Skip("not threshold".into()));
            rec.push("k+2", Outcome::Skip("not threshold".into()));
        }
        Some(r) => {
            rec.push("dominate", dominate_claim(g, r, &inv));
            rec.push(
                "k+2",
                each(kappa + 1..=d.saturating_sub(1), |i| {
                    let sum = BigInt::from(graph::cut_component_sum(g, i));
                    (b(i + 1) >= sum).then(|| format!("i={i}: b_(i+1)={} not < {sum}", b(i + 1)))
                }),
            );
        }
    }

    let pure = complex.is_pure();
    rec.push(
        "pure.threshold",
        match (&recognition, pure) {
            (Some(r), true) => {
                let ones = each(1..d, |i| {
                    (b(i) != BigInt::one()).then(|| format!("i={i}: b_i={}", b(i)))
                });
                match ones {
                    Outcome::Pass(_) if !r.word.is_s_d_s_form() => {
                        Outcome::Fail(format!("word {} is not S D^a S^b", r.word))
                    }
                    Outcome::Pass(note) => match matroid(&complex, opts) {
                        Some(false) => {
                            Outcome::Fail("pure threshold complex is not a matroid".into())
                        }
                        _ => Outcome::Pass(note),
                    },
                    other => other,
                }
            }
            _ => Outcome::Skip("not a pure threshold complex".into()),
        },
    );
    rec.push(
        "pure.chordal",
        if pure {
            each(kt + 2..=d, |i| {
                (b(i) != b(kt + 1))
                    .then(|| format!("i={i}: b_i={} != b_(kt+1)={}", b(i), b(kt + 1)))
            })
        } else {
            Outcome::Skip("not pure".into())
        },
    );
    let is_matroid = matroid(&complex, opts);
    rec.push(
        "matroid.threshold",
        match is_matroid {
            None => Outcome::Skip(format!("n > {}", opts.matroid_cap)),
            Some(false) => Outcome::Skip("not a matroid complex".into()),
            Some(true) => match &recognition {
                None => Outcome::Fail("matroid clique complex but graph is not threshold".into()),
                Some(_) => each(1..d, |i| {
                    (b(i) != BigInt::one()).then(|| format!("i={i}: b_i={}", b(i)))
                }),
            },
        },
    );
    rec.push(
        "matroid.word",
        match &recognition {
            Some(r) if r.word.is_s_d_s_form() => match is_matroid {
                None => Outcome::Skip(format!("n > {}", opts.matroid_cap)),
                Some(true) => Outcome::Pass(format!("word {}", r.word)),
                Some(false) => {
                    Outcome::Fail(format!("word {} gives a non-matroid complex", r.word))
                }
            },
            _ => Outcome::Skip("word not of the form S D^a S^b".into()),
        },
    );

    InstanceReport {
        invariants: inv,
        claims: rec.0,
    }
}

fn matroid(complex: &SimplicialComplex, opts: &VerifyOptions) -> Option<bool> {
    if complex.n() > opts.matroid_cap {
        return None;
    }
    complex.is_matroid().ok()
}

fn betti_table(
    g: &Graph,
    complex: &SimplicialComplex,
    inv: &Invariants,
    opts: &VerifyOptions,
) -> (BettiTable, &'static str) {
    if let Ok(t) = betti::full_betti_hochster(complex, opts.betti_cap) {
        return (t, "hochster");
    }
    let h = vectors::h_from_f(&vectors::f_from_c(&inv.c));
    let values = betti::betti_from_hvector(&h, g.n(), inv.d, 2);
    match BettiTable::from_linear_strand(g.n(), 2, &values) {
        Some(t) => (t, "h-vector formula"),
        None => (
            BettiTable::trivial(g.n()),
            "h-vector formula (negative values)",
        ),
    }
}

/// Closed-form threshold invariants against graph-level brute force.
fn dominate_claim(g: &Graph, r: &threshold::Recognition, inv: &Invariants) -> Outcome {
    let d = inv.d;
    let kappa = inv.kappa;
    let b = |i: usize| inv.b.get(i).to_usize().unwrap_or(usize::MAX);
    let maximal = cliques::maximal_cliques(g);
    let maximal_of = |i: usize| maximal.iter().filter(|c| c.len() == i).count();
    if r.word.trailing_s_run() != kappa {
        return Outcome::Fail(format!(
            "trailing S run {} != kappa {kappa}",
            r.word.trailing_s_run()
        ));
    }
    for i in 1..=kappa.min(d) {
        if b(i) != 1 {
            return Outcome::Fail(format!("i={i}: b_i={} != 1", b(i)));
        }
    }
    for i in kappa + 1..d {
        if b(i) != maximal_of(i) + 1 {
            return Outcome::Fail(format!(
                "i={i}: b_i - 1 = {} != |C_i| = {}",
                b(i) - 1,
                maximal_of(i)
            ));
        }
    }
    if b(d) != maximal_of(d) {
        return Outcome::Fail(format!("b_d={} != |C_d|={}", b(d), maximal_of(d)));
    }
    for i in 1..=d {
        if b(i) != inv.dominating[i - 1] {
            return Outcome::Fail(format!(
                "i={i}: b_i={} != d_i={}",
                b(i),
                inv.dominating[i - 1]
            ));
        }
    }
    let cuts = minimum_cuts(g, kappa);
    if cuts.len() != 1 {
        return Outcome::Fail(format!("{} minimum vertex cuts", cuts.len()));
    }
    let w = graph::component_count_without(g, &cuts[0]);
    if w != b(kappa + 1) {
        return Outcome::Fail(format!("W(T - Y) = {w} != b_(kappa+1) = {}", b(kappa + 1)));
    }
    Outcome::Pass(format!("word {}", r.word))
}

/// All vertex cuts of size `k`.
pub fn minimum_cuts(g: &Graph, k: usize) -> Vec<VertexSet> {
    crate::subsets::Combinations::new(g.n(), k)
        .map(|y| y.into_iter().collect::<VertexSet>())
        .filter(|y| graph::component_count_without(g, y) >= 2)
        .collect()
}

/// `b_i` against `β_{n-i}` on the strand table: convenience for callers that
/// already hold a table.
pub fn betti_form_values(b: &BVector, table: &BettiTable) -> Vec<(BigInt, BigUint)> {
    let n = table.n();
    (1..=b.d().min(n))
        .map(|i| (b.get(i).clone(), table.total(n - i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use alloc::vec;

    fn status(r: &InstanceReport, id: &str) -> ClaimStatus {
        r.claim(id).unwrap().status
    }

    #[test]
    fn best_possible_passes_everything() {
        let g = families::best_possible(1, 2).graph;
        let r = verify_graph(&g, &VerifyOptions::default());
        assert!(!r.has_failure(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.invariants.b, BVector::from_i64(&[1, 2, 3, 1]));
        assert_eq!(r.invariants.dominating, vec![2, 3, 3, 1]);
        assert_eq!((r.invariants.kappa, r.invariants.kappa_tilde), (1, 2));
        assert_eq!(status(&r, "dominate"), ClaimStatus::Skip);
        assert_eq!(r.claims.len(), CLAIM_IDS.len());
    }

    #[test]
    fn skips() {
        let r = verify_graph(&families::complete(4), &VerifyOptions::default());
        assert!(r.claims.iter().all(|c| c.status == ClaimStatus::Skip));
        assert!(!r.theorems_applicable());
        let r = verify_graph(&families::cycle(5), &VerifyOptions::default());
        assert!(!r.theorems_applicable());
    }

    #[test]
    fn threshold_instance_checks_threshold_claims() {
        let g = threshold::graph_from_word(&"SDSDDS".parse().unwrap());
        let r = verify_graph(&g, &VerifyOptions::default());
        assert!(!r.has_failure(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(status(&r, "dominate"), ClaimStatus::Pass);
        assert_eq!(status(&r, "k+2"), ClaimStatus::Pass);

        let g = threshold::graph_from_word(&"SDDSS".parse().unwrap());
        let r = verify_graph(&g, &VerifyOptions::default());
        assert!(!r.has_failure(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(status(&r, "matroid.word"), ClaimStatus::Pass);
        assert_eq!(status(&r, "matroid.threshold"), ClaimStatus::Pass);
        assert_eq!(status(&r, "pure.threshold"), ClaimStatus::Pass);
    }

    #[test]
    fn large_instances_fall_back_to_formula() {
        let g = graph::random_chordal(12, 3, 5);
        let opts = VerifyOptions {
            betti_cap: 4,
            matroid_cap: 4,
        };
        let r = verify_graph(&g, &opts);
        assert!(!r.has_failure(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

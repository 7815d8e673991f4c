//! JSON documents emitted by the CLI. Arbitrary-precision integers are
//! written as decimal strings; every top-level document carries
//! `schema_version`.

use chordal_bvec::betti::{BettiTable, HomologicalProfile};
use chordal_bvec::claims::{InstanceReport, Invariants};
use chordal_bvec::shifting::ShiftResult;
use chordal_bvec::threshold::ThresholdProfile;
use chordal_bvec::{Graph, VertexSet};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

pub fn decimal(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn decimal_unsigned(v: &[BigUint]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
    v.iter().map(VertexSet::to_vec).collect()
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub chordal: bool,
    pub theorems_applicable: bool,
    pub c_vector: Vec<String>,
    pub b_vector: Vec<String>,
    pub kappa: usize,
    pub kappa_tilde: usize,
    pub d_i: Vec<usize>,
    /// `d_i` under strict containment; `null` where some maximal clique has
    /// order exactly `i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_i_strict: Option<Vec<Option<usize>>>,
    pub maximal_clique_count: usize,
    pub clique_number: usize,
}

impl InvariantsDoc {
    pub fn new(g: &Graph, inv: &Invariants) -> Self {
        InvariantsDoc {
            schema_version: SCHEMA_VERSION,
            n: inv.n,
            m: inv.m,
            chordal: inv.chordal,
            theorems_applicable: inv.chordal && !g.is_complete(),
            c_vector: decimal(inv.c.entries()),
            b_vector: decimal(inv.b.entries()),
            kappa: inv.kappa,
            kappa_tilde: inv.kappa_tilde,
            d_i: inv.dominating.clone(),
            d_i_strict: None,
            maximal_clique_count: inv.maximal_clique_count,
            clique_number: inv.d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTableDoc {
    pub n: usize,
    /// `[i, j, "count"]`, nonzero entries only.
    pub entries: Vec<(usize, usize, String)>,
}

impl From<&BettiTable> for BettiTableDoc {
    fn from(t: &BettiTable) -> Self {
        BettiTableDoc {
            n: t.n(),
            entries: t
                .entries()
                .map(|((i, j), v)| (i, j, v.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProfileDoc {
    pub pd: usize,
    pub depth: usize,
    pub is_two_linear: bool,
    pub kappa_from_betti: usize,
}

impl From<&HomologicalProfile> for ProfileDoc {
    fn from(p: &HomologicalProfile) -> Self {
        ProfileDoc {
            pd: p.pd,
            depth: p.depth,
            is_two_linear: p.is_two_linear,
            kappa_from_betti: p.kappa_from_betti,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ThresholdProfileDoc {
    pub d: usize,
    pub kappa: usize,
    pub minimum_cut: Vec<usize>,
    /// Entry `i - 1`: the maximal cliques of order `i`.
    pub maximal_cliques: Vec<Vec<Vec<usize>>>,
    /// Entry `i - 1`: the `S` vertices of the last `i` subwords.
    pub s_cliques: Vec<Vec<usize>>,
    pub d_i: Vec<usize>,
    pub components_after_cut: usize,
}

impl From<&ThresholdProfile> for ThresholdProfileDoc {
    fn from(p: &ThresholdProfile) -> Self {
        ThresholdProfileDoc {
            d: p.d,
            kappa: p.kappa,
            minimum_cut: p.minimum_cut.to_vec(),
            maximal_cliques: p.maximal_cliques.iter().map(|l| sets(l)).collect(),
            s_cliques: sets(&p.s_cliques),
            d_i: p.dominating.clone(),
            components_after_cut: p.components_after_cut,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WordDoc {
    pub schema_version: u32,
    pub word: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub b_vector: Vec<String>,
    pub clique_vector: Vec<String>,
    pub kappa: usize,
    pub profile_applicable: bool,
    pub profile: Option<ThresholdProfileDoc>,
}

#[derive(Debug, Serialize)]
pub struct ShiftChecks {
    pub threshold: bool,
    pub clique_vector_preserved: bool,
    pub kappa_preserved: bool,
    pub bijection: bool,
}

#[derive(Debug, Serialize)]
pub struct DominationComparison {
    pub graph: Vec<usize>,
    pub shifted: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct ShiftDoc {
    pub schema_version: u32,
    pub word: String,
    pub edges: Vec<(usize, usize)>,
    pub clique_vector: Vec<String>,
    pub b_vector: Vec<String>,
    /// `[[u, v], [a, b]]`: original edge and its image.
    pub edge_map: Vec<((usize, usize), (usize, usize))>,
    pub k_clique: Vec<usize>,
    pub peo: Vec<usize>,
    pub checks: ShiftChecks,
    pub d_i: DominationComparison,
}

impl ShiftDoc {
    pub fn new(
        shift: &ShiftResult,
        c: &[BigInt],
        b: &[BigInt],
        checks: ShiftChecks,
        d_i: DominationComparison,
    ) -> Self {
        ShiftDoc {
            schema_version: SCHEMA_VERSION,
            word: shift.word.to_string(),
            edges: shift.shifted_graph.edges(),
            clique_vector: decimal(c),
            b_vector: decimal(b),
            edge_map: shift.edge_map.clone(),
            k_clique: shift.k_clique.clone(),
            peo: shift.peo_used.order().to_vec(),
            checks,
            d_i,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BettiDoc {
    pub schema_version: u32,
    pub method: String,
    #[serde(flatten)]
    pub table: BettiTableDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<RoutesDoc>,
}

#[derive(Debug, Serialize)]
pub struct RoutesDoc {
    pub hochster: Option<BettiTableDoc>,
    pub hvector: BettiTableDoc,
    pub bvector: BettiTableDoc,
    pub strand: BettiTableDoc,
    pub agreement: Agreement,
}

#[derive(Debug, Serialize)]
pub struct Agreement {
    /// h-vector formula equals b-vector formula.
    pub formulas: bool,
    /// Strand from cut-component sums equals the formula strand.
    pub strand: bool,
    /// Hochster table equals the formula table (absent above the cap).
    pub hochster: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ClaimDoc {
    pub id: &'static str,
    pub status: &'static str,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema_version: u32,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub kappa_tilde: usize,
    pub d: usize,
    pub b_vector: Vec<String>,
    pub d_i: Vec<usize>,
    pub theorems_applicable: bool,
    pub passed: bool,
    pub edges: Vec<(usize, usize)>,
    pub claims: Vec<ClaimDoc>,
}

impl VerifyDoc {
    pub fn new(instance: String, g: &Graph, report: &InstanceReport) -> Self {
        let inv = &report.invariants;
        VerifyDoc {
            schema_version: SCHEMA_VERSION,
            instance,
            n: inv.n,
            m: inv.m,
            kappa: inv.kappa,
            kappa_tilde: inv.kappa_tilde,
            d: inv.d,
            b_vector: decimal(inv.b.entries()),
            d_i: inv.dominating.clone(),
            theorems_applicable: report.theorems_applicable(),
            passed: !report.has_failure(),
            edges: g.edges(),
            claims: report
                .claims
                .iter()
                .map(|c| ClaimDoc {
                    id: c.id,
                    status: c.status.as_str(),
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub schema_version: u32,
    pub summary: SummaryCounts,
}

#[derive(Debug, Serialize)]
pub struct SummaryCounts {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub claim_failures: usize,
}

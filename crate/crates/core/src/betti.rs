//! Graded Betti numbers `β_{i,j}(R/I_Δ)` of Stanley–Reisner rings.
//!
//! Four routes: Hochster's formula over all vertex subsets, the linear strand
//! from cut-component sums, and closed formulas in the h-vector and the
//! b-vector for ideals with a `t`-linear resolution.
//!
//! Indexing: every table here uses the homological index of the quotient
//! `R/I_Δ`, so `β_{0,0} = 1` and the generators of `I_Δ` sit at `i = 1`.
//! The closed formulas in [`betti_from_hvector`] and [`betti_from_bvector`]
//! produce, at formula index `i`, the number `β_{i+1, i+t}(R/I_Δ)` (that is,
//! `β_i` of the ideal itself); [`BettiTable::from_linear_strand`] applies
//! this shift.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::homology;
use crate::subsets::binomial_signed;
use crate::vectors::{BVector, HVector};

/// Default vertex cap for [`full_betti_hochster`].
pub const DEFAULT_HOCHSTER_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl BettiTable {
    /// A table with no entries at all.
    pub fn empty(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// The table of `R/I` for the zero ideal: only `β_{0,0} = 1`.
    pub fn trivial(n: usize) -> Self {
        let mut t = BettiTable::empty(n);
        t.add(0, 0, BigUint::one());
        t
    }

    /// Table with `β_{0,0} = 1` and `β_{i+1, i+t} = values[i]`. `None` if a
    /// value is negative.
    pub fn from_linear_strand(n: usize, t: usize, values: &[BigInt]) -> Option<Self> {
        let mut table = BettiTable::trivial(n);
        for (i, v) in values.iter().enumerate() {
            table.add(i + 1, i + t, v.to_biguint()?);
        }
        Some(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Adds to `β_{i,j}`; zero additions leave no entry.
    pub fn add(&mut self, i: usize, j: usize, value: BigUint) {
        if !value.is_zero() {
            *self.entries.entry((i, j)).or_default() += value;
        }
    }

    /// Adds every entry of `other`.
    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), v) in &other.entries {
            self.add(i, j, v.clone());
        }
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> BigUint {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// `β_{i,i+1}` for `i = 1..n-1`.
    pub fn two_linear_strand(&self) -> Vec<BigUint> {
        (1..self.n).map(|i| self.get(i, i + 1)).collect()
    }
}

/// `β_{i,i+1}(R/I_{Δ(G)}) = Σ_{|Y| = n-i-1} (W(G - Y) - 1)` for
/// `i = 1..n-1`, entry `i - 1`.
pub fn linear_strand_hochster(g: &Graph) -> Vec<BigUint> {
    let n = g.n();
    (1..n)
        .map(|i| graph::cut_component_sum(g, n - i - 1))
        .collect()
}

/// Contributions of one vertex subset `W` (as a mask): pairs
/// `((i + 1, |W|), dim H̃_{|W|-i-2}(Δ|_W))`, nonzero only.
pub fn hochster_contributions(levels: &[Vec<u64>], w: u64) -> Vec<((usize, usize), usize)> {
    let j = w.count_ones() as usize;
    homology::restricted_homology(levels, w)
        .into_iter()
        .enumerate()
        .filter(|&(_, r)| r > 0)
        .map(|(k1, r)| {
            // entry k1 is H~_{k1-1}; k1 - 1 = j - i - 2  =>  i + 1 = j - k1
            ((j - k1, j), r)
        })
        .collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > 63 {
        return Err(Error::CapExceeded {
            what: "Hochster vertices",
            limit: cap.min(63),
            actual: n,
        });
    }
    Ok(())
}

/// Face masks for Hochster enumeration, after the vertex cap check.
pub fn hochster_levels(complex: &SimplicialComplex, cap: usize) -> Result<Vec<Vec<u64>>> {
    check_cap(complex.n(), cap)?;
    homology::face_masks(complex)
}

/// Full table by Hochster's formula,
/// `β_{i+1,j} = Σ_{|W|=j} dim H̃_{j-i-2}(Δ|_W)`, with `W = ∅` giving
/// `β_{0,0} = 1`. Fails when `n > cap`.
pub fn full_betti_hochster(complex: &SimplicialComplex, cap: usize) -> Result<BettiTable> {
    let levels = hochster_levels(complex, cap)?;
    let mut table = BettiTable::empty(complex.n());
    for w in 0u64..1 << complex.n() {
        for ((i, j), r) in hochster_contributions(&levels, w) {
            table.add(i, j, BigUint::from(r));
        }
    }
    Ok(table)
}

/// `β_i = Σ_{ℓ=0}^{t+i} (-1)^{ℓ+i+1} h_{t+i-ℓ} C(n-d, ℓ)` for formula
/// indices `i = 0..n-1`; `h_k = 0` outside `0..=d`. Value `i` is
/// `β_{i+1,i+t}(R/I_Δ)` when `I_Δ` has a `t`-linear resolution.
pub fn betti_from_hvector(h: &HVector, n: usize, d: usize, t: usize) -> Vec<BigInt> {
    let codim = n as i64 - d as i64;
    (0..n as i64)
        .map(|i| {
            (0..=t as i64 + i)
                .map(|l| {
                    let term = h.get(t as i64 + i - l) * binomial_signed(codim, l);
                    if (l + i + 1) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// The h-vector formula with `t = 2` written directly in the b-vector:
///
/// `β_i = Σ_ℓ (-1)^{ℓ+i+1} C(n-d, ℓ) Σ_{j ≤ m} (-1)^{m-j} C(d-j, m-j)
/// Σ_{k=j}^{d} C(k-1, k-j) b_k`, with `m = 2 + i - ℓ` and `b_0 = 1`.
pub fn betti_from_bvector(b: &BVector, n: usize, d: usize) -> Vec<BigInt> {
    let d = d as i64;
    let codim = n as i64 - d;
    let b_at = |k: i64| -> BigInt {
        if k == 0 {
            BigInt::one()
        } else {
            b.get(k as usize).clone()
        }
    };
    let c_at = |j: i64| -> BigInt {
        (j..=d)
            .map(|k| binomial_signed(k - 1, k - j) * b_at(k))
            .sum()
    };
    let sign = |e: i64, x: BigInt| if e % 2 == 0 { x } else { -x };
    (0..n as i64)
        .map(|i| {
            (0..=2 + i)
                .map(|l| {
                    let m = 2 + i - l;
                    let h_m: BigInt = (0..=m)
                        .map(|j| sign(m - j, binomial_signed(d - j, m - j) * c_at(j)))
                        .sum();
                    sign(l + i + 1, h_m * binomial_signed(codim, l))
                })
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologicalProfile {
    pub pd: usize,
    pub depth: usize,
    pub is_two_linear: bool,
    pub kappa_from_betti: usize,
}

/// Projective dimension, depth (Auslander–Buchsbaum), whether all entries
/// with `i >= 1` lie on `j = i + 1`, and
/// `max{k < n : β_{i,i+1} = 0 for all i >= n - k}`.
pub fn homological_profile(table: &BettiTable) -> HomologicalProfile {
    let n = table.n();
    let pd = table.entries().map(|((i, _), _)| i).max().unwrap_or(0);
    let is_two_linear = table.entries().all(|((i, j), _)| i == 0 || j == i + 1);
    let kappa_from_betti = (0..n)
        .rev()
        .find(|&k| (n - k..=n).all(|i| table.get(i, i + 1).is_zero()))
        .unwrap_or(0);
    HomologicalProfile {
        pd,
        depth: n - pd,
        is_two_linear,
        kappa_from_betti,
    }
}

/// Converts formula values (see [`betti_from_hvector`]) to exact
/// nonnegative integers if possible.
pub fn strand_as_usize(values: &[BigInt]) -> Option<Vec<usize>> {
    values
        .iter()
        .map(|v| if v.is_negative() { None } else { v.to_usize() })
        .collect()
}

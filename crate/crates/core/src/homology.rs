//! Reduced simplicial homology ranks over `Q`.
//!
//! Boundary-matrix ranks come from fraction-free elimination with row gcd
//! normalization, in checked `i64` arithmetic first and `BigInt` if that
//! overflows.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::Result;

/// Faces as bit masks, grouped by size (entry `k` has the `k`-faces-by-size,
/// entry `0` is `[0]`).
pub fn face_masks(complex: &SimplicialComplex) -> Result<Vec<Vec<u64>>> {
    Ok(complex
        .faces_by_size()?
        .iter()
        .map(|level| level.iter().map(|f| f.low_mask()).collect())
        .collect())
}

/// `dim H̃_k` for `k = -1, 0, ..., dim`; entry `k + 1` is `H̃_k`.
pub fn reduced_homology(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(homology_of_levels(&face_masks(complex)?))
}

/// Homology of the restriction to the vertex set `w` of the complex whose
/// faces are `levels`.
pub fn restricted_homology(levels: &[Vec<u64>], w: u64) -> Vec<usize> {
    let restricted: Vec<Vec<u64>> = levels
        .iter()
        .map(|l| {
            l.iter()
                .copied()
                .filter(|&f| f & !w == 0)
                .collect::<Vec<u64>>()
        })
        .take_while(|l| !l.is_empty())
        .collect();
    homology_of_levels(&restricted)
}

/// Same as [`reduced_homology`] for faces given by size.
pub fn homology_of_levels(levels: &[Vec<u64>]) -> Vec<usize> {
    // rank[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut rank = alloc::vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        rank[k] = boundary_rank(&levels[k], &levels[k - 1]);
    }
    (0..levels.len())
        .map(|k| levels[k].len() - rank[k] - rank[k + 1])
        .collect()
}

fn boundary_rank(faces: &[u64], facets_below: &[u64]) -> usize {
    if faces.is_empty() || facets_below.is_empty() {
        return 0;
    }
    let index: BTreeMap<u64, usize> = facets_below
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let rows: Vec<Vec<i64>> = faces
        .iter()
        .map(|&f| {
            let mut row = alloc::vec![0i64; facets_below.len()];
            let mut rest = f;
            let mut sign = 1;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                row[index[&(f ^ bit)]] = sign;
                sign = -sign;
            }
            row
        })
        .collect();
    rank(rows)
}

/// Rank over `Q` of an integer matrix.
pub fn rank(rows: Vec<Vec<i64>>) -> usize {
    match eliminate(rows.clone()) {
        Some(r) => r,
        None => eliminate(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect::<Vec<Vec<BigInt>>>(),
        )
        .expect("BigInt arithmetic does not overflow"),
    }
}

trait Entry: Clone + Zero + PartialEq {
    fn combine(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
    fn size_key(&self) -> u64;
    fn is_unit_or_zero(&self) -> bool;
}

impl Entry for i64 {
    /// `p * x - a * y`.
    fn combine(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        let v = p.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)?;
        (v != i64::MIN).then_some(v)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &Self) -> Self {
        self / by
    }
    fn size_key(&self) -> u64 {
        self.unsigned_abs()
    }
    fn is_unit_or_zero(&self) -> bool {
        self.unsigned_abs() <= 1
    }
}

impl Entry for BigInt {
    fn combine(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        Some(p * x - a * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &Self) -> Self {
        self / by
    }
    fn size_key(&self) -> u64 {
        u64::try_from(self.abs()).unwrap_or(u64::MAX)
    }
    fn is_unit_or_zero(&self) -> bool {
        self.size_key() <= 1
    }
}

fn eliminate<T: Entry>(mut rows: Vec<Vec<T>>) -> Option<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let pivot = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].size_key());
        let Some(pivot) = pivot else { continue };
        rows.swap(r, pivot);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let p = prow[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for j in c..cols {
                row[j] = T::combine(&p, &row[j], &a, &prow[j])?;
            }
            let g = row[c..].iter().fold(T::zero(), |g, x| g.gcd_with(x));
            if !g.is_unit_or_zero() {
                for x in row[c..].iter_mut() {
                    *x = x.div_exact(&g);
                }
            }
        }
        r += 1;
    }
    Some(r)
}

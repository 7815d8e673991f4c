//! Exact conversions between clique vectors, b-vectors, f-vectors and
//! h-vectors.
//!
//! * `Σ_i b_i (x+1)^{i-1} = Σ_i c_i x^{i-1}`, which inverts to
//!   `b_j = Σ_{i≥j} (-1)^{i-j} C(i-1, j-1) c_i` and
//!   `c_i = Σ_{j≥i} C(j-1, j-i) b_j`.
//! * `h_j = Σ_{i≤j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` and
//!   `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i`.
//!
//! Every entry is an arbitrary-precision integer.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Rows `0..rows` of Pascal's triangle; `t[n][k] = C(n, k)` for `k <= n`.
fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for k in 1..n {
            row.push(&t[n - 1][k - 1] + &t[n - 1][k]);
        }
        if n > 0 {
            row.push(BigInt::one());
        }
        t.push(row);
    }
    t
}

fn alternating(exponent: usize, value: BigInt) -> BigInt {
    if exponent.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

macro_rules! count_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name(Vec<BigInt>);

        impl $name {
            pub fn from_entries(entries: Vec<BigInt>) -> Self {
                $name(entries)
            }

            pub fn from_i64(entries: &[i64]) -> Self {
                $name(entries.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn entries(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_entries(self) -> Vec<BigInt> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }
        }
    };
}

count_vector! {
    /// `(c_1, ..., c_d)`, stored 0-based: `entries()[i - 1] = c_i`.
    CVector
}

count_vector! {
    /// `(b_1, ..., b_d)`, stored 0-based: `entries()[i - 1] = b_i`.
    BVector
}

count_vector! {
    /// `(f_{-1}, f_0, ..., f_{d-1})`: `entries()[j] = f_{j-1}`.
    FVector
}

count_vector! {
    /// `(h_0, ..., h_d)`.
    HVector
}

impl CVector {
    /// Clique number `d`.
    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// `c_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }

    /// 1-based indices whose entry is `<= 0`; such vectors are not clique
    /// vectors of any graph.
    pub fn nonpositive_entries(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_positive())
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl BVector {
    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// `b_i` with 1-based `i`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }
}

impl FVector {
    /// `d` such that the vector is `f_{-1}..f_{d-1}`.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl HVector {
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `h_k`, zero outside `0..=d`.
    pub fn get(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.0.get(k as usize).cloned().unwrap_or_default()
    }
}

pub fn b_from_c(c: &CVector) -> BVector {
    let d = c.len();
    let t = pascal(d);
    let b = (1..=d)
        .map(|j| {
            (j..=d)
                .map(|i| alternating(i - j, &t[i - 1][j - 1] * &c.0[i - 1]))
                .sum()
        })
        .collect();
    BVector(b)
}

/// Inverse of [`b_from_c`]. Always returns the vector; check
/// [`CVector::nonpositive_entries`] or use [`c_from_b_checked`] to detect
/// b-vectors that no graph realizes.
pub fn c_from_b(b: &BVector) -> CVector {
    let d = b.len();
    let t = pascal(d);
    let c = (1..=d)
        .map(|i| (i..=d).map(|j| &t[j - 1][i - 1] * &b.0[j - 1]).sum())
        .collect();
    CVector(c)
}

pub fn c_from_b_checked(b: &BVector) -> Result<CVector> {
    let c = c_from_b(b);
    match c.nonpositive_entries().first() {
        Some(&index) => Err(Error::NonPositiveEntry { index }),
        None => Ok(c),
    }
}

/// `f = (1, c_1, ..., c_d)`.
pub fn f_from_c(c: &CVector) -> FVector {
    let mut f = Vec::with_capacity(c.len() + 1);
    f.push(BigInt::one());
    f.extend(c.0.iter().cloned());
    FVector(f)
}

pub fn c_from_f(f: &FVector) -> CVector {
    CVector(f.0.iter().skip(1).cloned().collect())
}

/// h-vector of an f-vector of length `d + 1`.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let t = pascal(d + 1);
    let h = (0..f.len())
        .map(|j| {
            (0..=j)
                .map(|i| alternating(j - i, &t[d - i][j - i] * &f.0[i]))
                .sum()
        })
        .collect();
    HVector(h)
}

pub fn f_from_h(h: &HVector) -> FVector {
    let d = h.d();
    let t = pascal(d + 1);
    let f = (0..h.len())
        .map(|j| (0..=j).map(|i| &t[d - i][j - i] * &h.0[i]).sum())
        .collect();
    FVector(f)
}

/// h-vector straight from a b-vector, by composing `c_from_b`, `f_from_c`
/// and `h_from_f`.
pub fn h_from_b(b: &BVector) -> HVector {
    h_from_f(&f_from_c(&c_from_b(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> BigInt {
        BigInt::from(crate::subsets::binomial(n as u64, k as u64))
    }
    use alloc::vec;
    use proptest::prelude::*;

    /// Coefficients of `Σ b_i (x+1)^{i-1}` by repeated polynomial multiplication.
    fn expand_b(b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); b.len()];
        let mut power = vec![BigInt::one()]; // (x+1)^0
        for bi in b {
            for (k, coeff) in power.iter().enumerate() {
                out[k] += bi * coeff;
            }
            let mut next = vec![BigInt::zero(); power.len() + 1];
            for (k, coeff) in power.iter().enumerate() {
                next[k] += coeff;
                next[k + 1] += coeff;
            }
            power = next;
        }
        out
    }

    #[test]
    fn b_from_c_examples() {
        assert_eq!(
            b_from_c(&CVector::from_i64(&[6, 7, 2])),
            BVector::from_i64(&[1, 3, 2])
        );
        assert_eq!(
            b_from_c(&CVector::from_i64(&[3, 3, 1])),
            BVector::from_i64(&[1, 1, 1])
        );
        assert_eq!(
            b_from_c(&CVector::from_i64(&[7, 11, 6, 1])),
            BVector::from_i64(&[1, 2, 3, 1])
        );
    }

    #[test]
    fn c_from_b_examples() {
        assert_eq!(
            c_from_b(&BVector::from_i64(&[1, 3, 2])),
            CVector::from_i64(&[6, 7, 2])
        );
        assert_eq!(
            c_from_b(&BVector::from_i64(&[1, 2, 3, 1])),
            CVector::from_i64(&[7, 11, 6, 1])
        );
        for d in 1..8 {
            let c = c_from_b(&BVector::from_i64(&vec![1; d]));
            for i in 1..=d {
                assert_eq!(c.get(i), &binom(d, i));
            }
        }
    }

    #[test]
    fn c_from_b_reports_unrealizable() {
        let b = BVector::from_i64(&[1, -5]);
        assert_eq!(c_from_b(&b), CVector::from_i64(&[-4, -5]));
        assert_eq!(
            c_from_b_checked(&b),
            Err(Error::NonPositiveEntry { index: 1 })
        );
    }

    #[test]
    fn h_f_examples() {
        // full simplex on d vertices
        for d in 1..7 {
            let f = FVector::from_entries((0..=d).map(|j| binom(d, j)).collect());
            let h = h_from_f(&f);
            let mut expected = vec![0i64; d + 1];
            expected[0] = 1;
            assert_eq!(h, HVector::from_i64(&expected));
            assert_eq!(f_from_h(&h), f);
        }
        assert_eq!(
            h_from_f(&FVector::from_i64(&[1, 3, 2])),
            HVector::from_i64(&[1, 1, 0])
        );
        assert_eq!(
            f_from_h(&HVector::from_i64(&[1, 1, 0])),
            FVector::from_i64(&[1, 3, 2])
        );
        let h = HVector::from_i64(&[1, -3, 2, -7]);
        assert_eq!(h_from_f(&f_from_h(&h)), h);
    }

    #[test]
    fn eq1_expansion_on_examples() {
        let c = CVector::from_i64(&[7, 11, 6, 1]);
        assert_eq!(expand_b(b_from_c(&c).entries()), c.entries());
    }

    proptest! {
        #[test]
        fn b_c_roundtrip(v in proptest::collection::vec(-1_000_000i64..=1_000_000, 0..=20)) {
            let c = CVector::from_i64(&v);
            prop_assert_eq!(c_from_b(&b_from_c(&c)), c);
            let b = BVector::from_i64(&v);
            prop_assert_eq!(b_from_c(&c_from_b(&b)), b);
        }

        #[test]
        fn f_h_roundtrip(v in proptest::collection::vec(-1_000_000i64..=1_000_000, 1..=20)) {
            let f = FVector::from_i64(&v);
            prop_assert_eq!(f_from_h(&h_from_f(&f)), f);
        }

        #[test]
        fn polynomial_identity(v in proptest::collection::vec(1i64..=50, 1..=8)) {
            let c = CVector::from_i64(&v);
            prop_assert_eq!(expand_b(b_from_c(&c).entries()), c.entries().to_vec());
        }
    }
}

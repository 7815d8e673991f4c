//! k-subset enumeration in colexicographic order and exact binomials.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Iterator over the `k`-subsets of `0..n` in colexicographic order.
///
/// Each item is a sorted index vector. `k = 0` yields the empty set once;
/// `k > n` yields nothing.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let k = next.len();
        // colex successor: bump the first entry that has room below its neighbour
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// `C(n, k)` as an exact unsigned integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a possibly negative top argument, `C(n, k) = n(n-1)...(n-k+1)/k!`.
///
/// Negative `k` gives zero. This is the convention under which `C(-1, 0) = 1`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return BigInt::from(binomial(n as u64, k as u64));
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    let magnitude = BigInt::from(binomial((k - n - 1) as u64, k as u64));
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

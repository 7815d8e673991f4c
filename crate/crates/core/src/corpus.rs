//! Seeded random instances.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{self, Graph};
use crate::threshold::{Letter, SdWord};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub index: usize,
    /// Arguments that reproduce the graph through [`graph::random_chordal`].
    pub n: usize,
    pub width: usize,
    pub seed: u64,
    pub graph: Graph,
}

/// `count` non-complete random chordal graphs with `min_n <= n <= max_n`
/// (`min_n` is raised to 2). Orders and attachment widths are drawn from a
/// master generator seeded with `seed`.
pub fn chordal_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<CorpusEntry> {
    let min_n = min_n.max(2);
    assert!(min_n <= max_n, "empty order range");
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = master.gen_range(min_n..=max_n);
        let width = master.gen_range(1..=n - 1);
        let sub = master.gen::<u64>();
        let g = graph::random_chordal(n, width, sub);
        if g.is_complete() {
            continue;
        }
        out.push(CorpusEntry {
            index: out.len(),
            n,
            width,
            seed: sub,
            graph: g,
        });
    }
    out
}

/// Uniformly random word of length `len >= 1` starting with `S`.
pub fn random_word(len: usize, seed: u64) -> SdWord {
    assert!(len >= 1, "words are nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters: Vec<Letter> = (0..len)
        .map(|k| {
            if k == 0 || rng.gen::<bool>() {
                Letter::S
            } else {
                Letter::D
            }
        })
        .collect();
    SdWord::new(letters).expect("nonempty")
}

//! Threshold graphs as words over `{S, D}`.
//!
//! Reading a word left to right, `S` adds a vertex adjacent to every earlier
//! vertex and `D` adds an isolated one; letter `k` becomes vertex `k`. Words
//! always start with `S` (a leading `D` builds the same graph).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vectors::BVector;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Dominating vertex.
    S,
    /// Isolated vertex.
    D,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SdWord {
    letters: Vec<Letter>,
}

impl SdWord {
    /// Canonicalizes the first letter to `S`.
    pub fn new(mut letters: Vec<Letter>) -> Result<Self> {
        match letters.first_mut() {
            None => Err(Error::EmptyWord),
            Some(first) => {
                *first = Letter::S;
                Ok(SdWord { letters })
            }
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of `S` letters, which is the clique number.
    pub fn s_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::S).count()
    }

    /// Length of the final run of `S` letters.
    pub fn trailing_s_run(&self) -> usize {
        self.letters
            .iter()
            .rev()
            .take_while(|&&l| l == Letter::S)
            .count()
    }

    pub fn is_complete(&self) -> bool {
        self.letters.iter().all(|&l| l == Letter::S)
    }

    /// Vertex ids grouped into subwords, each starting at an `S`.
    pub fn subwords(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (k, &l) in self.letters.iter().enumerate() {
            if l == Letter::S || out.is_empty() {
                out.push(Vec::new());
            }
            out.last_mut().expect("pushed above").push(k);
        }
        out
    }

    /// True for words `S D^a S^b`.
    pub fn is_s_d_s_form(&self) -> bool {
        let rest = &self.letters[1..];
        let ds = rest.iter().take_while(|&&l| l == Letter::D).count();
        rest[ds..].iter().all(|&l| l == Letter::S)
    }
}

impl FromStr for SdWord {
    type Err = Error;

    /// Case-insensitive; anything other than `S`/`D` is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch.to_ascii_uppercase() {
                'S' => Ok(Letter::S),
                'D' => Ok(Letter::D),
                _ => Err(Error::InvalidLetter {
                    letter: ch,
                    position,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        SdWord::new(letters)
    }
}

impl fmt::Display for SdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::S => "S",
                Letter::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SdWord({self})")
    }
}

pub fn graph_from_word(w: &SdWord) -> Graph {
    let mut g = Graph::new(w.len());
    for (k, &l) in w.letters.iter().enumerate() {
        if l == Letter::S {
            for u in 0..k {
                g.add_edge(u, k).expect("fresh edge");
            }
        }
    }
    g
}

/// A threshold word for a graph together with the vertex behind each letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub word: SdWord,
    /// `labeling[k]` is the vertex of `g` that letter `k` creates.
    pub labeling: Vec<usize>,
}

/// Degree peeling: repeatedly strip a dominating vertex (preferred, smallest
/// id first) or an isolated one, then read the removals backwards.
pub fn recognize_threshold(g: &Graph) -> Option<Recognition> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut alive = g.vertices();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed: Vec<(Letter, usize)> = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let dominating = alive.iter().find(|&v| degree[v] + 1 == remaining);
        let pick = match dominating {
            Some(v) => (Letter::S, v),
            None => (Letter::D, alive.iter().find(|&v| degree[v] == 0)?),
        };
        let v = pick.1;
        alive.remove(v);
        for u in g.neighbors(v).iter() {
            degree[u] -= 1;
        }
        removed.push(pick);
    }
    removed.reverse();
    let (letters, labeling): (Vec<Letter>, Vec<usize>) = removed.into_iter().unzip();
    Some(Recognition {
        word: SdWord::new(letters).expect("n >= 1"),
        labeling,
    })
}

pub fn is_threshold(g: &Graph) -> bool {
    recognize_threshold(g).is_some()
}

/// `b_i` is the length of the `(d - i + 1)`-th subword.
pub fn bvector_from_word(w: &SdWord) -> BVector {
    let lengths: Vec<i64> = w.subwords().iter().rev().map(|s| s.len() as i64).collect();
    BVector::from_i64(&lengths)
}

/// For `i = d` down to `1`: `S` followed by `b_i - 1` letters `D`.
pub fn word_from_bvector(b: &BVector) -> Result<SdWord> {
    if b.is_empty() {
        return Err(Error::EmptyVector);
    }
    let mut letters = Vec::new();
    for i in (1..=b.d()).rev() {
        let bi = b.get(i);
        if !bi.is_positive() {
            return Err(Error::NonPositiveEntry { index: i });
        }
        letters.push(Letter::S);
        let extra = (bi - BigInt::one()).to_usize().ok_or(Error::CapExceeded {
            what: "word length",
            limit: usize::MAX,
            actual: usize::MAX,
        })?;
        letters.extend(core::iter::repeat_n(Letter::D, extra));
    }
    SdWord::new(letters)
}

/// Closed-form invariants of a non-complete threshold graph read off its
/// word. Index `i - 1` of each per-order list refers to order `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdProfile {
    pub word: SdWord,
    /// Clique number (number of `S` letters).
    pub d: usize,
    /// Vertex connectivity (trailing `S` run).
    pub kappa: usize,
    /// The unique minimum vertex-cut: the trailing `S` run.
    pub minimum_cut: VertexSet,
    pub b: BVector,
    /// `C_i(T)`: maximal cliques of order `i`.
    pub maximal_cliques: Vec<Vec<VertexSet>>,
    /// `C_i^s`: the `S` vertices of the last `i` subwords.
    pub s_cliques: Vec<VertexSet>,
    /// `d_i(T)`, equal to `b_i`.
    pub dominating: Vec<usize>,
    /// `W(T - minimum_cut)`, equal to `b_{κ+1}`.
    pub components_after_cut: usize,
}

impl ThresholdProfile {
    /// The unique minimum dominating `i`-clique family `C_i(T) ∪ {C_i^s}`.
    pub fn dominating_family(&self, i: usize) -> Vec<VertexSet> {
        let mut out = self.maximal_cliques[i - 1].clone();
        let s = &self.s_cliques[i - 1];
        if !out.contains(s) {
            out.push(s.clone());
        }
        out.sort();
        out
    }
}

pub fn threshold_profile(w: &SdWord) -> Result<ThresholdProfile> {
    if w.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let subwords = w.subwords();
    let d = subwords.len();
    let kappa = w.trailing_s_run();
    let n = w.len();
    let minimum_cut: VertexSet = (n - kappa..n).collect();
    let b = bvector_from_word(w);

    // S vertex of each subword, and its D vertices
    let s_of: Vec<usize> = subwords.iter().map(|s| s[0]).collect();
    let d_of: Vec<&[usize]> = subwords.iter().map(|s| &s[1..]).collect();

    let s_cliques: Vec<VertexSet> = (1..=d)
        .map(|i| s_of[d - i..].iter().copied().collect())
        .collect();

    let mut maximal_cliques = vec![Vec::new(); d];
    for i in 1..=d {
        let sub = d - i; // 0-based index of subword d - i + 1
        let later_s: VertexSet = s_of[sub + 1..].iter().copied().collect();
        for &dv in d_of[sub] {
            let mut c = later_s.clone();
            c.insert(dv);
            maximal_cliques[i - 1].push(c);
        }
    }
    maximal_cliques[d - 1].push(s_cliques[d - 1].clone());
    for list in &mut maximal_cliques {
        list.sort();
    }

    let dominating: Vec<usize> = b
        .entries()
        .iter()
        .map(|x| x.to_usize().expect("subword length fits usize"))
        .collect();
    let components_after_cut = dominating[kappa];
    Ok(ThresholdProfile {
        word: w.clone(),
        d,
        kappa,
        minimum_cut,
        b,
        maximal_cliques,
        s_cliques,
        dominating,
        components_after_cut,
    })
}

/// Vertices sorted by increasing degree, ties by id. Under this labeling the
/// clique complex of a threshold graph is shifted (larger label = larger
/// neighbourhood).
pub fn shifting_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    order
}

/// Human-readable word, e.g. for error messages.
pub fn describe(w: &SdWord) -> String {
    use alloc::string::ToString;
    w.to_string()
}

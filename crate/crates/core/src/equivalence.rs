//! k-Abelian equivalence of finite words.
//!
//! Two words are k-Abelian equivalent when every word of length at most `k`
//! occurs equally often in both. For words of length at least `k - 1` this
//! is the same as having equal `(k-1)`-prefixes, equal `(k-1)`-suffixes and
//! equal counts of every length-`k` factor, which is what [`KAbelianKey`]
//! records.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Symbol;

/// Per-letter occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParikhVector(pub Vec<usize>);

impl ParikhVector {
    pub fn of(w: &[Symbol], alphabet_size: usize) -> Self {
        let mut counts = vec![0; alphabet_size];
        for &s in w {
            counts[s as usize] += 1;
        }
        ParikhVector(counts)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Occurrence counts of the length-`k` factors of a word. Only factors that
/// occur are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorCountTable {
    k: usize,
    counts: BTreeMap<Vec<Symbol>, usize>,
}

impl FactorCountTable {
    pub fn of(w: &[Symbol], k: usize) -> Self {
        assert!(k >= 1, "factor length must be positive");
        let mut counts = BTreeMap::new();
        if w.len() >= k {
            for x in w.windows(k) {
                *counts.entry(x.to_vec()).or_insert(0) += 1;
            }
        }
        FactorCountTable { k, counts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, x: &[Symbol]) -> usize {
        self.counts.get(x).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Symbol], usize)> {
        self.counts.iter().map(|(x, &c)| (x.as_slice(), c))
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KeyBody {
    /// Words shorter than `k - 1` are only equivalent to themselves.
    Short(Vec<Symbol>),
    Full {
        prefix: Vec<Symbol>,
        suffix: Vec<Symbol>,
        counts: FactorCountTable,
    },
}

/// Canonical signature of a word's k-Abelian class: two words are
/// k-Abelian equivalent exactly when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KAbelianKey {
    pub k: usize,
    pub body: KeyBody,
}

impl KAbelianKey {
    pub fn is_short(&self) -> bool {
        matches!(self.body, KeyBody::Short(_))
    }
}

/// Number of (possibly overlapping) occurrences of `x` in `u`. The empty
/// word occurs `|u| + 1` times.
pub fn occurrences(u: &[Symbol], x: &[Symbol]) -> usize {
    if x.is_empty() {
        return u.len() + 1;
    }
    if x.len() > u.len() {
        return 0;
    }
    u.windows(x.len()).filter(|w| *w == x).count()
}

/// Decides `u ~_k v` straight from the definition: every word of length
/// `1..=k` must occur equally often in both. Only words that occur in `u`
/// or `v` can have a nonzero count, so those are the ones enumerated.
pub fn k_abelian_eq_naive(u: &[Symbol], v: &[Symbol], k: usize) -> bool {
    (1..=k).all(|len| {
        let candidates: BTreeSet<&[Symbol]> =
            windows_of(u, len).chain(windows_of(v, len)).collect();
        candidates
            .into_iter()
            .all(|x| occurrences(u, x) == occurrences(v, x))
    })
}

fn windows_of(w: &[Symbol], len: usize) -> impl Iterator<Item = &[Symbol]> {
    (len <= w.len()).then(|| w.windows(len)).into_iter().flatten()
}

pub fn k_abelian_key(u: &[Symbol], k: usize) -> KAbelianKey {
    assert!(k >= 1, "k must be positive");
    let body = if u.len() < k - 1 {
        KeyBody::Short(u.to_vec())
    } else {
        KeyBody::Full {
            prefix: u[..k - 1].to_vec(),
            suffix: u[u.len() - (k - 1)..].to_vec(),
            counts: FactorCountTable::of(u, k),
        }
    };
    KAbelianKey { k, body }
}

pub fn k_abelian_eq(u: &[Symbol], v: &[Symbol], k: usize) -> bool {
    k_abelian_key(u, k) == k_abelian_key(v, k)
}

pub fn abelian_eq(u: &[Symbol], v: &[Symbol]) -> bool {
    let size = u.iter().chain(v).map(|&s| s as usize + 1).max().unwrap_or(0);
    ParikhVector::of(u, size) == ParikhVector::of(v, size)
}

/// Counts of the four length-2 factors `00, 01, 10, 11` of a binary word.
pub(crate) fn binary_pair_counts(w: &[Symbol]) -> [usize; 4] {
    let mut counts = [0; 4];
    for p in w.windows(2) {
        counts[(p[0] * 2 + p[1]) as usize] += 1;
    }
    counts
}

/// 2-Abelian equivalence of binary words, decided from the lengths, the
/// counts of `00` and `11`, and the first letters.
pub fn two_abelian_eq_binary(u: &[Symbol], v: &[Symbol]) -> Result<bool> {
    if u.iter().chain(v).any(|&s| s > 1) {
        return Err(Error::parameter("two_abelian_eq_binary needs binary words"));
    }
    let (cu, cv) = (binary_pair_counts(u), binary_pair_counts(v));
    Ok(u.len() == v.len() && cu[0] == cv[0] && cu[3] == cv[3] && u.first() == v.first())
}

use std::fmt::Write as _;

use rustc_hash::FxHashSet;

use serde::Serialize;
use serde_json::json;

use super::index::{FactorIndex, LengthView};
use super::{Level, OnesRange};
use crate::error::{Error, Result};
use crate::generators::WordSpec;
use crate::word::Symbol;

/// How long a prefix to read. Values are computed on prefixes of length
/// `start, 2 start, 4 start, ...` (the last one clipped to `cap`); an entry is
/// converged once two consecutive prefixes agree on it.
///
/// Agreement is evidence, not proof: a longer prefix can only add factors,
/// so the true value is never below the reported one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowPolicy {
    pub start: usize,
    pub cap: usize,
}

impl Default for WindowPolicy {
    fn default() -> Self {
        WindowPolicy {
            start: 4096,
            cap: 1 << 20,
        }
    }
}

impl WindowPolicy {
    fn validate(&self, n_max: usize) -> Result<()> {
        if n_max == 0 {
            return Err(Error::parameter("n_max must be at least 1"));
        }
        if self.start == 0 || self.cap < self.start {
            return Err(Error::parameter(format!(
                "window policy needs 0 < start <= cap, got {} and {}",
                self.start, self.cap
            )));
        }
        if n_max > self.cap {
            return Err(Error::InsufficientWindow {
                requested: n_max,
                available: self.cap,
            });
        }
        Ok(())
    }

    fn lengths(&self) -> impl Iterator<Item = usize> {
        let cap = self.cap;
        let mut next = Some(self.start);
        std::iter::from_fn(move || {
            let cur = next?;
            next = (cur < cap).then(|| cur.saturating_mul(2).min(cap));
            Some(cur)
        })
    }
}

struct Converged<T> {
    values: Vec<T>,
    converged: Vec<bool>,
    window_length: usize,
}

/// Runs `compute` on growing prefixes until every entry has settled or the
/// cap is reached. `compute` gets the prefix and a mask of the entries still
/// wanted, and returns `Some` for each wanted `n` it could evaluate.
fn converge<T: Clone + PartialEq>(
    spec: &WordSpec,
    n_max: usize,
    policy: &WindowPolicy,
    mut compute: impl FnMut(&[Symbol], &[bool]) -> Vec<Option<T>>,
) -> Result<Converged<T>> {
    policy.validate(n_max)?;
    let mut latest: Vec<Option<T>> = vec![None; n_max];
    let mut converged = vec![false; n_max];
    let mut window_length = 0;
    for length in policy.lengths() {
        let word = spec.expand(length)?;
        let wanted: Vec<bool> = converged.iter().map(|c| !c).collect();
        let current = compute(&word, &wanted);
        for i in 0..n_max {
            if converged[i] || current[i].is_none() {
                continue;
            }
            if latest[i].is_some() && latest[i] == current[i] {
                converged[i] = true;
            }
            latest[i] = current[i].clone();
        }
        window_length = length;
        if converged.iter().all(|&c| c) {
            break;
        }
    }
    let values = latest
        .into_iter()
        .map(|v| v.expect("cap covers n_max"))
        .collect();
    Ok(Converged {
        values,
        converged,
        window_length,
    })
}

/// Per-`n` class counts of one word at one level, with convergence flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    spec: WordSpec,
    level: Level,
    values: Vec<usize>,
    converged: Vec<bool>,
    window_length: usize,
}

impl ComplexityProfile {
    pub fn spec(&self) -> &WordSpec {
        &self.spec
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// `values()[n - 1]` is the value at `n`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn converged(&self) -> &[bool] {
        &self.converged
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, n: usize) -> usize {
        self.values[n - 1]
    }

    pub fn is_converged(&self, n: usize) -> bool {
        self.converged[n - 1]
    }

    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }

    pub fn first_unconverged(&self) -> Option<usize> {
        self.converged.iter().position(|&c| !c).map(|i| i + 1)
    }

    /// `n,value,converged` with a header row; every row ends in `\n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value,converged\n");
        for (i, (v, c)) in self.values.iter().zip(&self.converged).enumerate() {
            writeln!(out, "{},{},{}", i + 1, v, c).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<_> = self
            .values
            .iter()
            .zip(&self.converged)
            .enumerate()
            .map(|(i, (v, c))| json!({"n": i + 1, "value": v, "converged": c}))
            .collect();
        json!({
            "spec": self.spec.to_string(),
            "k": self.level,
            "window_length": self.window_length,
            "horizon": self.horizon(),
            "values": values,
        })
    }
}

/// Finite-horizon lower envelope; `values[n - 1] = min over n <= m <= horizon`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerProfile {
    pub horizon: usize,
    pub values: Vec<usize>,
}

/// Bits needed to write `x` in binary, at least 1.
fn bits_for(x: u32) -> u32 {
    (u32::BITS - x.leading_zeros()).max(1)
}

/// Distinct class keys at one length, with buffers reused across lengths.
struct ClassCounter {
    symbol_bits: u32,
    packed: FxHashSet<u128>,
    keys: Vec<u32>,
}

impl ClassCounter {
    fn new(word: &[Symbol]) -> Self {
        let top = word.iter().copied().max().unwrap_or(0);
        ClassCounter {
            symbol_bits: bits_for(top as u32),
            packed: FxHashSet::default(),
            keys: Vec::new(),
        }
    }

    fn count(&mut self, view: &LengthView<'_>, level: Level) -> usize {
        let k = match level {
            Level::Finite(k) if k <= view.n => k,
            _ => return view.len(),
        };
        let edge = k - 1;
        // Counts of length-k factors in a window of length n are at most n.
        let count_bits = bits_for(view.n as u32);
        let packed_bits = 2 * edge as u32 * self.symbol_bits + view.width() as u32 * count_bits;
        if packed_bits <= u128::BITS {
            self.packed.clear();
            for (p, counts) in view.reps() {
                let f = view.factor(p);
                let mut key = 0u128;
                for &a in f[..edge].iter().chain(&f[f.len() - edge..]) {
                    key = (key << self.symbol_bits) | a as u128;
                }
                for &c in counts {
                    key = (key << count_bits) | c as u128;
                }
                self.packed.insert(key);
            }
            return self.packed.len();
        }

        let width = 2 * edge + view.width();
        self.keys.clear();
        for (p, counts) in view.reps() {
            let f = view.factor(p);
            self.keys.extend(f[..edge].iter().map(|&s| s as u32));
            self.keys.extend(f[f.len() - edge..].iter().map(|&s| s as u32));
            self.keys.extend_from_slice(counts);
        }
        self.keys.chunks_exact(width).collect::<FxHashSet<_>>().len()
    }
}

/// Class counts for each wanted `n` on one prefix.
pub(crate) fn class_counts(word: &[Symbol], level: Level, wanted: &[bool]) -> Vec<Option<usize>> {
    let mut out = vec![None; wanted.len()];
    let top = wanted
        .iter()
        .enumerate()
        .filter(|&(i, &w)| w && i < word.len())
        .map(|(i, _)| i + 1)
        .max();
    let Some(top) = top else { return out };
    let k = match level {
        Level::Finite(k) => k,
        Level::Infinite => 1,
    };
    let mut counter = ClassCounter::new(word);
    FactorIndex::new(word).scan(k, top, |view| {
        if wanted[view.n - 1] {
            out[view.n - 1] = Some(counter.count(view, level));
        }
    });
    out
}

/// `k_abelian_complexity(prefix, level, n)` for every `n = 1..=n_max`, from
/// one pass over the suffix array of `prefix`.
pub fn complexity_upto(prefix: &[Symbol], level: Level, n_max: usize) -> Result<Vec<usize>> {
    if n_max > prefix.len() {
        return Err(Error::InsufficientWindow {
            requested: n_max,
            available: prefix.len(),
        });
    }
    if level == Level::Finite(0) {
        return Err(Error::parameter("k must be at least 1"));
    }
    Ok(class_counts(prefix, level, &vec![true; n_max])
        .into_iter()
        .map(|v| v.expect("n within prefix"))
        .collect())
}

/// k-Abelian complexity of `spec` for `n = 1..=n_max`.
pub fn profile(
    spec: &WordSpec,
    level: Level,
    n_max: usize,
    policy: &WindowPolicy,
) -> Result<ComplexityProfile> {
    if level == Level::Finite(0) {
        return Err(Error::parameter("k must be positive"));
    }
    let c = converge(spec, n_max, policy, |word, wanted| class_counts(word, level, wanted))?;
    Ok(ComplexityProfile {
        spec: spec.clone(),
        level,
        values: c.values,
        converged: c.converged,
        window_length: c.window_length,
    })
}

/// Least and greatest 1-counts of the factors of a binary word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnesProfile {
    pub ranges: Vec<OnesRange>,
    pub converged: Vec<bool>,
    pub window_length: usize,
}

impl OnesProfile {
    pub fn range(&self, n: usize) -> OnesRange {
        self.ranges[n - 1]
    }

    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }
}

pub fn ones_range_profile(
    spec: &WordSpec,
    n_max: usize,
    policy: &WindowPolicy,
) -> Result<OnesProfile> {
    if spec.alphabet_size() > 2 {
        return Err(Error::parameter("ones ranges need a binary word"));
    }
    let c = converge(spec, n_max, policy, |word, wanted| {
        let mut out = vec![None; wanted.len()];
        FactorIndex::new(word).scan(1, wanted.len(), |view| {
            if !wanted[view.n - 1] {
                return;
            }
            let col = view.column(&[1]);
            let ones = view.reps().map(|(_, counts)| col.map_or(0, |c| counts[c] as usize));
            let (min, max) = ones.fold((usize::MAX, 0), |(lo, hi), x| (lo.min(x), hi.max(x)));
            out[view.n - 1] = Some(OnesRange { n: view.n, min, max });
        });
        out
    })?;
    Ok(OnesProfile {
        ranges: c.values,
        converged: c.converged,
        window_length: c.window_length,
    })
}

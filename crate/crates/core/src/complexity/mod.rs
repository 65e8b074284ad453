//! Factor, Abelian and k-Abelian complexity computed from finite prefixes.

mod index;
mod profile;

pub use index::{FactorIndex, LengthView};
pub use profile::{
    complexity_upto, ones_range_profile, profile, ComplexityProfile, LowerProfile, OnesProfile, WindowPolicy,
};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Symbol;

/// `k` in `1, 2, 3, ...` or infinity, where infinity-Abelian equivalence is
/// equality of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Finite(usize),
    Infinite,
}

impl Level {
    pub fn finite(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::parameter("k must be positive"));
        }
        Ok(Level::Finite(k))
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(k) => write!(f, "{k}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Level::Infinite),
            t => {
                let k = t
                    .parse()
                    .map_err(|_| Error::parse("k", s, "expected a positive integer or inf"))?;
                Level::finite(k)
            }
        }
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Level::Finite(k) => s.serialize_u64(*k as u64),
            Level::Infinite => s.serialize_str("inf"),
        }
    }
}

/// The complexity every Sturmian word has at each level: `n + 1` up to
/// `n = 2k - 1`, then constantly `2k`.
pub fn q_sturm(level: Level, n: usize) -> usize {
    match level {
        Level::Finite(k) if n >= 2 * k => 2 * k,
        _ => n + 1,
    }
}

/// Least and greatest number of 1s over the length-`n` factors seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OnesRange {
    pub n: usize,
    pub min: usize,
    pub max: usize,
}

impl OnesRange {
    /// `max - min + 1`, the Abelian complexity of a binary word.
    pub fn spread(&self) -> usize {
        self.max - self.min + 1
    }
}

fn check_window(prefix: &[Symbol], n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::parameter("factor length must be positive"));
    }
    if n > prefix.len() {
        return Err(Error::InsufficientWindow {
            requested: n,
            available: prefix.len(),
        });
    }
    Ok(())
}

pub fn factors_of_length(prefix: &[Symbol], n: usize) -> Result<BTreeSet<&[Symbol]>> {
    check_window(prefix, n)?;
    Ok(prefix.windows(n).collect())
}

/// Number of k-Abelian classes among the length-`n` windows of `prefix`.
///
/// Slides one window across the prefix, updating the length-`k` factor
/// counts by the one factor leaving and the one entering.
pub fn k_abelian_complexity(prefix: &[Symbol], level: Level, n: usize) -> Result<usize> {
    check_window(prefix, n)?;
    let k = match level {
        Level::Finite(0) => return Err(Error::parameter("k must be positive")),
        Level::Finite(k) if k <= n => k,
        // Words of length below k are in singleton classes.
        _ => return Ok(prefix.windows(n).collect::<HashSet<_>>().len()),
    };

    let mut columns: HashMap<&[Symbol], usize> = HashMap::new();
    let ids: Vec<usize> = prefix
        .windows(k)
        .map(|x| {
            let next = columns.len();
            *columns.entry(x).or_insert(next)
        })
        .collect();
    let width = columns.len();
    let edge = k - 1;

    let mut counts = vec![0u32; width];
    for &id in &ids[..n - k + 1] {
        counts[id] += 1;
    }
    let mut classes: HashSet<Vec<u32>> = HashSet::new();
    let mut key = Vec::with_capacity(2 * edge + width);
    for start in 0..=prefix.len() - n {
        if start > 0 {
            counts[ids[start - 1]] -= 1;
            counts[ids[start + n - k]] += 1;
        }
        key.clear();
        key.extend(prefix[start..start + edge].iter().map(|&s| s as u32));
        key.extend(prefix[start + n - edge..start + n].iter().map(|&s| s as u32));
        key.extend_from_slice(&counts);
        if !classes.contains(key.as_slice()) {
            classes.insert(key.clone());
        }
    }
    Ok(classes.len())
}

pub fn ones_range(prefix: &[Symbol], n: usize) -> Result<OnesRange> {
    check_window(prefix, n)?;
    if prefix.iter().any(|&s| s > 1) {
        return Err(Error::parameter("ones_range needs a binary word"));
    }
    let mut ones: usize = prefix[..n].iter().map(|&s| s as usize).sum();
    let (mut min, mut max) = (ones, ones);
    for start in 1..=prefix.len() - n {
        ones = ones + prefix[start + n - 1] as usize - prefix[start - 1] as usize;
        min = min.min(ones);
        max = max.max(ones);
    }
    Ok(OnesRange { n, min, max })
}

/// Abelian complexity of a binary word read off the spread of 1-counts.
pub fn abelian_complexity_binary(prefix: &[Symbol], n: usize) -> Result<usize> {
    ones_range(prefix, n).map(|r| r.spread())
}

/// `upper(n) = max_{m <= n} value(m)`.
pub fn upper_profile(p: &ComplexityProfile) -> Vec<usize> {
    p.values()
        .iter()
        .scan(0, |best, &v| {
            *best = v.max(*best);
            Some(*best)
        })
        .collect()
}

/// `lower(n) = min_{n <= m <= horizon} value(m)` for `n = 1..=horizon`.
pub fn lower_profile(p: &ComplexityProfile, horizon: usize) -> Result<LowerProfile> {
    if horizon == 0 || horizon > p.horizon() {
        return Err(Error::parameter(format!(
            "horizon {horizon} outside profile of length {}",
            p.horizon()
        )));
    }
    let mut values = p.values()[..horizon].to_vec();
    for i in (0..horizon.saturating_sub(1)).rev() {
        values[i] = values[i].min(values[i + 1]);
    }
    Ok(LowerProfile { horizon, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::WordSpec;

    fn w(s: &str) -> Vec<Symbol> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn sturm_bound() {
        assert_eq!(q_sturm(Level::Finite(2), 3), 4);
        assert_eq!(q_sturm(Level::Finite(2), 4), 4);
        assert_eq!(q_sturm(Level::Finite(2), 10), 4);
        assert_eq!(q_sturm(Level::Finite(1), 5), 2);
        assert_eq!(q_sturm(Level::Finite(1), 1), 2);
        assert_eq!(q_sturm(Level::Infinite, 100), 101);
    }

    #[test]
    fn level_parsing() {
        assert_eq!("3".parse::<Level>().unwrap(), Level::Finite(3));
        assert_eq!("inf".parse::<Level>().unwrap(), Level::Infinite);
        assert!("0".parse::<Level>().is_err());
        assert!("x".parse::<Level>().is_err());
        assert!(Level::Finite(7) < Level::Infinite);
    }

    #[test]
    fn factor_sets() {
        let u = w("0110");
        let f = factors_of_length(&u, 2).unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert_eq!(factors_of_length(&w("0000"), 3).unwrap().len(), 1);
        assert_eq!(
            factors_of_length(&w("01"), 3),
            Err(Error::InsufficientWindow {
                requested: 3,
                available: 2
            })
        );
        let t = WordSpec::ThueMorse.expand(32).unwrap();
        assert_eq!(factors_of_length(&t, 1).unwrap().len(), 2);
    }

    #[test]
    fn thue_morse_first_values() {
        let t = WordSpec::ThueMorse.expand(4096).unwrap();
        let got: Vec<usize> = (1..=20)
            .map(|n| k_abelian_complexity(&t, Level::Finite(2), n).unwrap())
            .collect();
        assert_eq!(got, [2, 4, 6, 8, 6, 8, 10, 8, 6, 8, 8, 10, 10, 10, 8, 8, 6, 8, 10, 10]);
    }

    #[test]
    fn period_doubling_abelian() {
        let s = WordSpec::PeriodDoubling.expand(4096).unwrap();
        assert_eq!(k_abelian_complexity(&s, Level::Finite(1), 1).unwrap(), 2);
        assert_eq!(k_abelian_complexity(&s, Level::Finite(1), 2).unwrap(), 2);
        for (n, expected) in [(1, 2), (3, 3), (11, 4), (4, 2), (8, 2)] {
            assert_eq!(abelian_complexity_binary(&s, n).unwrap(), expected, "n = {n}");
        }
        let r = ones_range(&s, 4).unwrap();
        assert_eq!(r.spread(), 2);
    }

    #[test]
    fn ones_ranges() {
        assert_eq!(ones_range(&w("0101"), 2).unwrap(), OnesRange { n: 2, min: 1, max: 1 });
        assert_eq!(abelian_complexity_binary(&w("0000"), 2).unwrap(), 1);
        assert!(ones_range(&w("012"), 2).is_err());
        assert!(ones_range(&w("01"), 0).is_err());
    }

    #[test]
    fn single_letter_classes_are_letters() {
        for k in [Level::Finite(1), Level::Finite(3), Level::Infinite] {
            assert_eq!(k_abelian_complexity(&w("0120210"), k, 1).unwrap(), 3);
        }
    }
}

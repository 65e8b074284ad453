//! Distinct-factor enumeration over a fixed prefix.
//!
//! For every length `n` the distinct factors of a prefix are the groups of
//! consecutive suffix-array entries whose longest common prefix is at least
//! `n`. Walking `n` upwards only ever splits groups, so each group keeps one
//! representative position and a running vector of length-`k` factor counts
//! for its window. A new representative inherits the counts of the group it
//! split from, which already describe its first `n - 1` letters.

use std::collections::HashMap;

use crate::word::Symbol;

/// Suffix array by prefix doubling with counting sorts.
pub(crate) fn suffix_array(s: &[Symbol]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    assert!(n < u32::MAX as usize, "word too long to index");
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| s[i as usize]);
    let mut rank = vec![0u32; n];
    for j in 1..n {
        let (a, b) = (sa[j - 1] as usize, sa[j] as usize);
        rank[b] = rank[a] + (s[a] != s[b]) as u32;
    }
    let mut classes = rank[sa[n - 1] as usize] as usize + 1;
    let mut by_second = vec![0u32; n];
    let mut next_rank = vec![0u32; n];
    let mut bucket = vec![0usize; n + 1];
    let mut h = 1;
    while classes < n {
        // Order by the rank at i + h; suffixes with nothing there come first.
        let mut t = 0;
        for i in (n - h)..n {
            by_second[t] = i as u32;
            t += 1;
        }
        for &p in &sa {
            if p as usize >= h {
                by_second[t] = p - h as u32;
                t += 1;
            }
        }
        // Stable counting sort by the rank at i.
        bucket[..=classes].fill(0);
        for &r in &rank {
            bucket[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            bucket[c] += bucket[c - 1];
        }
        for &p in &by_second {
            let r = rank[p as usize] as usize;
            sa[bucket[r]] = p;
            bucket[r] += 1;
        }
        let second = |i: usize| if i + h < n { rank[i + h] as i64 } else { -1 };
        next_rank[sa[0] as usize] = 0;
        for j in 1..n {
            let (a, b) = (sa[j - 1] as usize, sa[j] as usize);
            let differs = rank[a] != rank[b] || second(a) != second(b);
            next_rank[b] = next_rank[a] + differs as u32;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        classes = rank[sa[n - 1] as usize] as usize + 1;
        h *= 2;
    }
    sa
}

/// `lcp[r]` is the longest common prefix of the suffixes at ranks `r - 1`
/// and `r`; `lcp[0] = 0`. Kasai's algorithm.
pub(crate) fn lcp_array(s: &[Symbol], sa: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut rank = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] > 0 {
            let j = sa[rank[i] - 1] as usize;
            while i + h < n && j + h < n && s[i + h] == s[j + h] {
                h += 1;
            }
            lcp[rank[i]] = h as u32;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// Suffix structure of one prefix, reusable for any factor length.
pub struct FactorIndex<'a> {
    word: &'a [Symbol],
    sa: Vec<u32>,
    lcp: Vec<u32>,
}

/// The distinct factors of one length `n`, each with the counts of the
/// length-`k` factors inside it.
pub struct LengthView<'v> {
    pub n: usize,
    word: &'v [Symbol],
    positions: &'v [u32],
    counts: &'v [u32],
    width: usize,
    columns: &'v HashMap<&'v [Symbol], usize>,
}

impl<'v> LengthView<'v> {
    /// Number of distinct factors of length `n`.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Number of count columns (distinct length-`k` factors of the prefix).
    pub fn width(&self) -> usize {
        self.width
    }

    /// One `(start, counts)` per distinct factor; `counts` is indexed by
    /// [`LengthView::column`].
    pub fn reps(&self) -> impl Iterator<Item = (usize, &'v [u32])> + '_ {
        self.positions
            .iter()
            .enumerate()
            .map(|(i, &p)| (p as usize, &self.counts[i * self.width..(i + 1) * self.width]))
    }

    pub fn factor(&self, start: usize) -> &'v [Symbol] {
        &self.word[start..start + self.n]
    }

    pub fn column(&self, x: &[Symbol]) -> Option<usize> {
        self.columns.get(x).copied()
    }
}

impl<'a> FactorIndex<'a> {
    pub fn new(word: &'a [Symbol]) -> Self {
        let sa = suffix_array(word);
        let lcp = lcp_array(word, &sa);
        FactorIndex { word, sa, lcp }
    }

    pub fn word(&self) -> &'a [Symbol] {
        self.word
    }

    /// Visits lengths `1..=n_max` (capped at the prefix length) in order.
    /// Counts in each view are for the length-`k` factors of each window;
    /// they are all zero while `n < k`.
    pub fn scan(&self, k: usize, n_max: usize, mut visit: impl FnMut(&LengthView<'_>)) {
        assert!(k >= 1, "count factor length must be positive");
        let word = self.word;
        let len = word.len();
        let n_max = n_max.min(len);
        if n_max == 0 {
            return;
        }

        let mut columns: HashMap<&[Symbol], usize> = HashMap::new();
        let ids: Vec<u32> = if len >= k {
            word.windows(k)
                .map(|x| {
                    let next = columns.len();
                    *columns.entry(x).or_insert(next) as u32
                })
                .collect()
        } else {
            Vec::new()
        };
        let width = columns.len();

        // Ranks that become group boundaries at length lcp + 1.
        let mut breaks: Vec<Vec<u32>> = vec![Vec::new(); n_max];
        for (r, &l) in self.lcp.iter().enumerate() {
            if (l as usize) < n_max {
                breaks[l as usize].push(r as u32);
            }
        }

        let mut ranks: Vec<u32> = Vec::new();
        let mut positions: Vec<u32> = Vec::new();
        let mut counts: Vec<u32> = Vec::new();
        let mut next_ranks = Vec::new();
        let mut next_positions = Vec::new();
        let mut next_counts = Vec::new();

        for n in 1..=n_max {
            next_ranks.clear();
            next_positions.clear();
            next_counts.clear();

            let fresh = &breaks[n - 1];
            let (mut i, mut j) = (0, 0);
            let mut parent: Option<usize> = None;
            while i < ranks.len() || j < fresh.len() {
                let take_old = j == fresh.len() || (i < ranks.len() && ranks[i] < fresh[j]);
                if take_old {
                    let p = positions[i] as usize;
                    parent = Some(i);
                    if len - p >= n {
                        next_ranks.push(ranks[i]);
                        next_positions.push(positions[i]);
                        next_counts.extend_from_slice(&counts[i * width..(i + 1) * width]);
                    }
                    i += 1;
                } else {
                    let r = fresh[j];
                    let p = self.sa[r as usize];
                    if len - p as usize >= n {
                        next_ranks.push(r);
                        next_positions.push(p);
                        match parent {
                            Some(g) => next_counts.extend_from_slice(&counts[g * width..(g + 1) * width]),
                            None => {
                                debug_assert_eq!(n, 1);
                                next_counts.extend(std::iter::repeat_n(0, width));
                            }
                        }
                    }
                    j += 1;
                }
            }
            std::mem::swap(&mut ranks, &mut next_ranks);
            std::mem::swap(&mut positions, &mut next_positions);
            std::mem::swap(&mut counts, &mut next_counts);

            if n >= k {
                for (row, &p) in positions.iter().enumerate() {
                    let id = ids[p as usize + n - k] as usize;
                    counts[row * width + id] += 1;
                }
            }

            visit(&LengthView {
                n,
                word,
                positions: &positions,
                counts: &counts,
                width,
                columns: &columns,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn naive_sa(s: &[Symbol]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..s.len() as u32).collect();
        sa.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
        sa
    }

    #[test]
    fn suffix_array_matches_sorting() {
        let words: [&[Symbol]; 6] = [
            &[],
            &[0],
            &[1, 1, 1, 1],
            &[0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0],
            &[2, 0, 1, 2, 2, 0, 1, 0],
            &[0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0],
        ];
        for w in words {
            let sa = suffix_array(w);
            assert_eq!(sa, naive_sa(w));
            let lcp = lcp_array(w, &sa);
            for r in 1..w.len() {
                let (a, b) = (&w[sa[r - 1] as usize..], &w[sa[r] as usize..]);
                let l = a.iter().zip(b).take_while(|(x, y)| x == y).count();
                assert_eq!(lcp[r] as usize, l);
            }
        }
    }

    #[test]
    fn views_enumerate_distinct_factors_with_counts() {
        let w: Vec<Symbol> = vec![0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1];
        let index = FactorIndex::new(&w);
        for k in 1..=3 {
            index.scan(k, w.len(), |view| {
                let expected: BTreeSet<&[Symbol]> = w.windows(view.n).collect();
                let got: BTreeSet<&[Symbol]> = view.reps().map(|(p, _)| view.factor(p)).collect();
                assert_eq!(got, expected);
                assert_eq!(view.len(), expected.len());
                for (p, counts) in view.reps() {
                    let f = view.factor(p);
                    for x in f.windows(k) {
                        let c = view.column(x).unwrap();
                        let direct = f.windows(k).filter(|y| *y == x).count();
                        assert_eq!(counts[c] as usize, direct);
                    }
                    let total: u32 = counts.iter().sum();
                    assert_eq!(total as usize, (view.n + 1).saturating_sub(k));
                }
            });
        }
    }
}

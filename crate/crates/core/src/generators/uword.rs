//! Words built from a sequence of block sizes `n_1, n_2, ...` with running
//! products `m_j = n_1 ... n_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Block sizes `n_1, n_2, ...`, all at least 2. The last listed size repeats
/// forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSequence {
    blocks: Vec<u64>,
}

impl BlockSequence {
    pub fn new(blocks: Vec<u64>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::parameter("block sequence is empty"));
        }
        if let Some(b) = blocks.iter().find(|&&b| b < 2) {
            return Err(Error::parameter(format!("block size {b} is below 2")));
        }
        Ok(BlockSequence { blocks })
    }

    pub fn constant(n: u64) -> Result<Self> {
        BlockSequence::new(vec![n])
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// `n_j` for `j >= 1`.
    pub fn block(&self, j: usize) -> u64 {
        assert!(j >= 1, "blocks are indexed from 1");
        self.blocks[(j - 1).min(self.blocks.len() - 1)]
    }

    /// `m_j = n_1 ... n_j`, with `m_0 = 1`. `None` once the product leaves
    /// `u64`, which is past any position we can index.
    pub fn product(&self, j: usize) -> Option<u64> {
        (1..=j).try_fold(1u64, |m, i| m.checked_mul(self.block(i)))
    }

    /// The index `n'` with `m_{n'-1} < n <= m_{n'}`, taken to be at least 1
    /// (so `n = 1` maps to 1, matching the two letters of the word).
    pub fn scale_index(&self, n: u64) -> usize {
        let mut j = 1;
        while self.product(j).is_some_and(|m| m < n) {
            j += 1;
        }
        j
    }

    /// Greatest `j` with `m_j | i`, for `i >= 1`.
    pub fn divisibility_depth(&self, i: u64) -> usize {
        debug_assert!(i >= 1);
        let mut q = i;
        let mut j = 0;
        loop {
            let b = self.block(j + 1);
            if !q.is_multiple_of(b) {
                return j;
            }
            q /= b;
            j += 1;
        }
    }
}

impl fmt::Display for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// First `length` letters of U: position `i` (1-based) holds 0 when the
/// greatest `j` with `m_j | i` is even and 1 otherwise.
pub fn u_word_prefix(blocks: &BlockSequence, length: usize) -> Word {
    let symbols = (1..=length as u64)
        .map(|i| (blocks.divisibility_depth(i) % 2) as u8)
        .collect();
    Word::from_parts_unchecked(symbols, 2)
}

/// Greedily chooses block sizes so that the Abelian complexity bound
/// `n' + 1` of the resulting U-word stays below a sampled budget.
///
/// `budget[i]` is `f(i + 1)`. The bound is enforced for `2 <= n <= budget.len()`;
/// at `n = 1` every binary word has two classes, so `f(1)` is not constrained.
/// Each `n_j` is the smallest size with `f(m_j + 1) >= j + 2`, which is the
/// budget needed when the scale index steps from `j` to `j + 1`. When the
/// budget never grows enough, the last block is made long enough to cover the
/// rest of the sampled range.
pub fn slow_sequence_from_budget(budget: &[u64]) -> Result<BlockSequence> {
    let len = budget.len() as u64;
    if budget.len() < 2 {
        return Err(Error::parameter("budget needs at least two samples"));
    }
    if budget.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::parameter("budget is not increasing"));
    }
    if budget[budget.len() - 1] == budget[0] {
        return Err(Error::parameter("budget is constant over the sampled range"));
    }
    let f = |n: u64| budget[(n - 1) as usize];
    if f(2) < 2 {
        return Err(Error::parameter(
            "budget below 2 at n = 2; no binary aperiodic word fits",
        ));
    }

    let mut blocks = Vec::new();
    let mut m = 1u64;
    let mut j = 1u64;
    loop {
        let chosen = (2..)
            .take_while(|&b| m * b < len)
            .find(|&b| f(m * b + 1) >= j + 2)
            .unwrap_or_else(|| len.div_ceil(m).max(2));
        blocks.push(chosen);
        m *= chosen;
        if m >= len {
            break;
        }
        j += 1;
    }
    BlockSequence::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_scale_index() {
        let b = BlockSequence::new(vec![2, 3]).unwrap();
        assert_eq!(b.product(0), Some(1));
        assert_eq!(b.product(1), Some(2));
        assert_eq!(b.product(3), Some(18));
        assert_eq!(b.scale_index(1), 1);
        assert_eq!(b.scale_index(2), 1);
        assert_eq!(b.scale_index(3), 2);
        assert_eq!(b.scale_index(6), 2);
        assert_eq!(b.scale_index(7), 3);
        assert_eq!(BlockSequence::constant(2).unwrap().product(70), None);
    }

    #[test]
    fn rejects_small_blocks() {
        assert!(BlockSequence::new(vec![2, 1]).is_err());
        assert!(BlockSequence::new(vec![]).is_err());
    }

    #[test]
    fn first_letter_is_zero() {
        for blocks in [vec![2], vec![3], vec![5, 2], vec![7]] {
            let b = BlockSequence::new(blocks).unwrap();
            assert_eq!(u_word_prefix(&b, 1).symbols(), &[0]);
        }
    }

    #[test]
    fn blocks_of_three_by_definition() {
        // Position-by-position evaluation of the divisibility rule:
        // i = 3, 6 are divisible by m_1 = 3 only (j = 1, odd); i = 9 by m_2 = 9.
        let oracle: Vec<u8> = (1..=9u64)
            .map(|i| {
                let mut j = 0;
                let mut m = 1;
                while i % (m * 3) == 0 {
                    m *= 3;
                    j += 1;
                }
                (j % 2) as u8
            })
            .collect();
        let b = BlockSequence::constant(3).unwrap();
        assert_eq!(u_word_prefix(&b, 9).symbols(), &oracle[..]);
        assert_eq!(u_word_prefix(&b, 9).to_string(), "001001000");
    }

    #[test]
    fn identity_budget_gives_twos() {
        let budget: Vec<u64> = (1..=4096).collect();
        let b = slow_sequence_from_budget(&budget).unwrap();
        assert!(b.blocks()[..b.blocks().len() - 1].iter().all(|&n| n == 2));
    }

    #[test]
    fn constant_budget_is_rejected() {
        assert!(slow_sequence_from_budget(&[3; 100]).is_err());
        assert!(slow_sequence_from_budget(&[3, 2, 4]).is_err());
    }
}

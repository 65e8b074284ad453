use std::fmt;

use crate::error::{Error, Result};
use crate::word::{write_symbols, Symbol, Word};

/// A non-erasing morphism on `{0, .., alphabet_size - 1}`, given by the image
/// of each letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    alphabet_size: usize,
    images: Vec<Vec<Symbol>>,
}

impl Morphism {
    pub fn new(images: Vec<Vec<Symbol>>) -> Result<Self> {
        let alphabet_size = images.len();
        if alphabet_size == 0 {
            return Err(Error::parameter("morphism needs at least one letter"));
        }
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::parameter(format!("image of {a} is empty")));
            }
            if let Some(&s) = img.iter().find(|&&s| s as usize >= alphabet_size) {
                return Err(Error::parameter(format!(
                    "image of {a} uses symbol {s} outside the alphabet"
                )));
            }
        }
        Ok(Morphism {
            alphabet_size,
            images,
        })
    }

    /// 0 -> 01, 1 -> 10.
    pub fn thue_morse() -> Self {
        Morphism::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// 0 -> 01, 1 -> 00.
    pub fn period_doubling() -> Self {
        Morphism::new(vec![vec![0, 1], vec![0, 0]]).unwrap()
    }

    /// 0 -> 01, 1 -> 0.
    pub fn fibonacci() -> Self {
        Morphism::new(vec![vec![0, 1], vec![0]]).unwrap()
    }

    /// The binary morphism `0 -> 0^(k+1) 1 0^(k-1) 1`, `1 -> 0^k 1 0^k 1`.
    ///
    /// Both images have length `2k + 2` and the same Parikh vector, and any
    /// two of them are k-Abelian equivalent, so every image word under it is
    /// k-Abelian periodic.
    pub fn perlin(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::parameter("perlin morphism needs k >= 1"));
        }
        let block = |lead: usize, mid: usize| {
            let mut img = vec![0; lead];
            img.push(1);
            img.extend(std::iter::repeat_n(0, mid));
            img.push(1);
            img
        };
        Morphism::new(vec![block(k + 1, k - 1), block(k, k)])
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn image(&self, a: Symbol) -> &[Symbol] {
        &self.images[a as usize]
    }

    /// The common image length, if the morphism is uniform.
    pub fn uniform_length(&self) -> Option<usize> {
        let m = self.images[0].len();
        self.images.iter().all(|img| img.len() == m).then_some(m)
    }

    pub fn is_prolongable_on(&self, seed: Symbol) -> bool {
        (seed as usize) < self.alphabet_size && {
            let img = self.image(seed);
            img.len() >= 2 && img[0] == seed
        }
    }

    pub fn apply(&self, w: &[Symbol]) -> Result<Word> {
        if let Some(&s) = w.iter().find(|&&s| s as usize >= self.alphabet_size) {
            return Err(Error::parameter(format!(
                "symbol {s} outside the morphism's alphabet"
            )));
        }
        let symbols = w.iter().flat_map(|&a| self.image(a).iter().copied()).collect();
        Ok(Word::from_parts_unchecked(symbols, self.alphabet_size))
    }

    /// Prefix of length `length` of the fixed point starting with `seed`.
    ///
    /// Each iterate extends the previous one, so only the new tail is
    /// expanded on every round.
    pub fn fixed_point_prefix(&self, seed: Symbol, length: usize) -> Result<Word> {
        if !self.is_prolongable_on(seed) {
            return Err(Error::parameter(format!(
                "morphism is not prolongable on {seed}"
            )));
        }
        // Invariant: w == h(w[..i]), and w[..i] is a prefix of w.
        let mut w = self.image(seed).to_vec();
        let mut i = 1;
        while w.len() < length {
            let a = w[i];
            w.extend_from_slice(&self.images[a as usize]);
            i += 1;
        }
        w.truncate(length);
        Ok(Word::from_parts_unchecked(w, self.alphabet_size))
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, img) in self.images.iter().enumerate() {
            if a > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}=")?;
            write_symbols(f, img, self.alphabet_size)?;
        }
        Ok(())
    }
}

//! Prefixes of the infinite words under study and the maps between them.

mod mechanical;
mod morphism;
mod spec;
mod uword;

pub use mechanical::{mechanical_word, Rational, SlopeApprox};
pub use morphism::Morphism;
pub use spec::WordSpec;
pub use uword::{slow_sequence_from_budget, u_word_prefix, BlockSequence};

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Adjacent-pair derivative of a binary word: letter `i` of the result is 0
/// when `w[i] != w[i+1]` and 1 when they are equal. The result is one letter
/// shorter (empty for words of length at most 1).
pub fn phi_map(w: &Word) -> Result<Word> {
    if !w.is_binary() {
        return Err(Error::parameter("phi is defined on binary words"));
    }
    let symbols: Vec<Symbol> = w.windows(2).map(|p| (p[0] == p[1]) as u8).collect();
    Ok(Word::binary(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_cases() {
        // pairs of 0110: 01 -> 0, 11 -> 1, 10 -> 0
        assert_eq!(phi_map(&Word::parse("0110").unwrap()).unwrap().to_string(), "010");
        assert!(phi_map(&Word::parse("1").unwrap()).unwrap().is_empty());
        assert!(phi_map(&Word::binary(vec![])).unwrap().is_empty());
        assert!(phi_map(&Word::parse("012").unwrap()).is_err());
    }

    #[test]
    fn phi_carries_thue_morse_to_period_doubling() {
        let t = WordSpec::ThueMorse.expand(17).unwrap();
        let s = WordSpec::PeriodDoubling.expand(16).unwrap();
        assert_eq!(phi_map(&t).unwrap(), s);
    }

    #[test]
    fn morphism_examples() {
        let tau = Morphism::thue_morse();
        let sigma = Morphism::period_doubling();
        let w = Word::parse("01").unwrap();
        assert_eq!(tau.apply(&w).unwrap().to_string(), "0110");
        assert_eq!(sigma.apply(&w).unwrap().to_string(), "0100");
        assert!(tau.apply(&[]).unwrap().is_empty());
        assert!(tau.apply(&[2]).is_err());
    }

    #[test]
    fn fixed_points() {
        let tm = Morphism::thue_morse().fixed_point_prefix(0, 16).unwrap();
        assert_eq!(tm.to_string(), "0110100110010110");
        let pd = Morphism::period_doubling().fixed_point_prefix(0, 16).unwrap();
        assert_eq!(pd.to_string(), "0100010101000100");
        let fib = Morphism::fibonacci().fixed_point_prefix(0, 18).unwrap();
        assert_eq!(fib.to_string(), "010010100100101001");
        assert!(Morphism::fibonacci().fixed_point_prefix(1, 4).is_err());
        assert!(Morphism::thue_morse().fixed_point_prefix(0, 0).unwrap().is_empty());
    }

    #[test]
    fn perlin_images() {
        let h1 = Morphism::perlin(1).unwrap();
        assert_eq!(h1.image(0), &[0, 0, 1, 1]);
        assert_eq!(h1.image(1), &[0, 1, 0, 1]);
        let h2 = Morphism::perlin(2).unwrap();
        assert_eq!(h2.image(0), &[0, 0, 0, 1, 0, 1]);
        assert_eq!(h2.image(1), &[0, 0, 1, 0, 0, 1]);
        assert!(Morphism::perlin(0).is_err());
        for k in 1..=8 {
            let h = Morphism::perlin(k).unwrap();
            assert_eq!(h.uniform_length(), Some(2 * k + 2));
            for a in 0..2 {
                let ones = h.image(a).iter().filter(|&&s| s == 1).count();
                assert_eq!(ones, 2);
            }
        }
    }

    #[test]
    fn golden_mechanical_word_is_fibonacci() {
        // 233/610 is a convergent of (3 - sqrt 5) / 2 within 1.3e-6.
        let alpha = SlopeApprox {
            value: Rational::new(233, 610),
            error: Rational::new(1, 100_000),
        };
        let w = mechanical_word(&alpha, alpha.value, 18).unwrap();
        let fib = Morphism::fibonacci().fixed_point_prefix(0, 18).unwrap();
        assert_eq!(w, fib);
        assert_eq!(w.to_string(), "010010100100101001");
    }
}

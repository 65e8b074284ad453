//! Lower mechanical words `s(n) = floor(a(n+1) + r) - floor(an + r)`.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

pub type Rational = Ratio<i128>;

/// A rational stand-in for a (possibly irrational) slope, together with an
/// upper bound on its distance from the slope it approximates. An error of
/// zero means the slope is exactly this rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlopeApprox {
    pub value: Rational,
    pub error: Rational,
}

impl SlopeApprox {
    pub fn exact(value: Rational) -> Self {
        SlopeApprox {
            value,
            error: Rational::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.value <= Rational::zero() || self.value >= Rational::one() {
            return Err(Error::parameter(format!(
                "slope {} outside (0, 1)",
                self.value
            )));
        }
        if self.error < Rational::zero() {
            return Err(Error::parameter("negative slope error bound"));
        }
        Ok(())
    }
}

/// First `length` letters of the lower mechanical word with the given slope
/// and intercept.
///
/// With a nonzero error bound, the target value at `n` lies somewhere in
/// `[an + r - e n, an + r + e n]`; if that interval touches an integer the
/// floor is not determined by the approximation and a precision error is
/// returned instead of a guess.
pub fn mechanical_word(slope: &SlopeApprox, intercept: Rational, length: usize) -> Result<Word> {
    slope.validate()?;
    let exact = slope.error.is_zero();
    let mut floors = Vec::with_capacity(length + 1);
    for n in 0..=length {
        let nr = Rational::from_integer(n as i128);
        let x = slope.value * nr + intercept;
        let fl = x.floor();
        if !exact && n > 0 {
            let slack = slope.error * nr;
            let frac = x - fl;
            if frac <= slack || Rational::one() - frac <= slack {
                return Err(Error::Precision { n });
            }
        }
        floors.push(fl.to_integer());
    }
    let symbols = floors.windows(2).map(|w| (w[1] - w[0]) as u8).collect();
    Ok(Word::from_parts_unchecked(symbols, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn half_alternates() {
        let w = mechanical_word(&SlopeApprox::exact(r(1, 2)), r(0, 1), 6).unwrap();
        assert_eq!(w.to_string(), "010101");
    }

    #[test]
    fn rejects_bad_slopes() {
        assert!(mechanical_word(&SlopeApprox::exact(r(1, 1)), r(0, 1), 4).is_err());
        assert!(mechanical_word(&SlopeApprox::exact(r(0, 1)), r(0, 1), 4).is_err());
    }

    #[test]
    fn coarse_approximation_fails_loudly() {
        let coarse = SlopeApprox {
            value: r(1, 3),
            error: r(1, 10),
        };
        assert_eq!(
            mechanical_word(&coarse, r(0, 1), 100),
            Err(Error::Precision { n: 3 })
        );
    }

    #[test]
    fn empty_prefix() {
        let w = mechanical_word(&SlopeApprox::exact(r(2, 5)), r(1, 3), 0).unwrap();
        assert!(w.is_empty());
    }
}

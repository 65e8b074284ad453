use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::mechanical::{mechanical_word, Rational, SlopeApprox};
use super::morphism::Morphism;
use super::uword::{u_word_prefix, BlockSequence};
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// A named recipe for an infinite word. Any prefix can be produced with
/// [`WordSpec::expand`], and shorter prefixes are always prefixes of longer ones.
///
/// The canonical text form (used by the CLI) is one of
///
/// ```text
/// thue-morse | period-doubling | fibonacci | champernowne | tau-champernowne
/// staircase
/// fixed-point:0=01,1=00;seed=0
/// uword:2,2,3
/// ult-periodic:pre=0;per=01
/// mechanical:233/610;233/610;err=1/100000
/// image:0=01,1=10;of=champernowne
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WordSpec {
    FixedPoint { morphism: Morphism, seed: Symbol },
    ThueMorse,
    PeriodDoubling,
    Fibonacci,
    /// Binary expansions of 0, 1, 2, 3, ... concatenated.
    ChampernowneBinary,
    /// The Champernowne word under 0 -> 01, 1 -> 10.
    TauChampernowne,
    /// `0 1 0 11 0 111 ...`: each 0 followed by one more 1 than the last.
    Staircase,
    Mechanical {
        slope: SlopeApprox,
        intercept: Rational,
    },
    UWord(BlockSequence),
    UltimatelyPeriodic { preperiod: Word, period: Word },
    MorphicImage {
        morphism: Morphism,
        inner: Box<WordSpec>,
    },
}

impl WordSpec {
    pub fn ultimately_periodic(preperiod: &str, period: &str) -> Result<Self> {
        let spec = WordSpec::UltimatelyPeriodic {
            preperiod: Word::parse(preperiod)?,
            period: Word::parse(period)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn u_word(blocks: Vec<u64>) -> Result<Self> {
        Ok(WordSpec::UWord(BlockSequence::new(blocks)?))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            WordSpec::FixedPoint { morphism, seed } => {
                if !morphism.is_prolongable_on(*seed) {
                    return Err(Error::parameter(format!(
                        "morphism {morphism} is not prolongable on {seed}"
                    )));
                }
            }
            WordSpec::Mechanical { slope, .. } => slope.validate()?,
            WordSpec::UltimatelyPeriodic { period, .. } => {
                if period.is_empty() {
                    return Err(Error::parameter("period must be nonempty"));
                }
            }
            WordSpec::MorphicImage { morphism, inner } => {
                inner.validate()?;
                if inner.alphabet_size() > morphism.alphabet_size() {
                    return Err(Error::parameter(
                        "inner word uses letters outside the morphism's alphabet",
                    ));
                }
            }
            // Block sizes are checked on construction.
            WordSpec::UWord(_)
            | WordSpec::ThueMorse
            | WordSpec::PeriodDoubling
            | WordSpec::Fibonacci
            | WordSpec::ChampernowneBinary
            | WordSpec::TauChampernowne
            | WordSpec::Staircase => {}
        }
        Ok(())
    }

    pub fn alphabet_size(&self) -> usize {
        match self {
            WordSpec::FixedPoint { morphism, .. } | WordSpec::MorphicImage { morphism, .. } => {
                morphism.alphabet_size()
            }
            WordSpec::UltimatelyPeriodic { preperiod, period } => {
                preperiod.alphabet_size().max(period.alphabet_size())
            }
            _ => 2,
        }
    }

    /// The uniform morphism this word is a fixed point of, if known.
    pub fn uniform_generator(&self) -> Option<(Morphism, Symbol)> {
        match self {
            WordSpec::ThueMorse => Some((Morphism::thue_morse(), 0)),
            WordSpec::PeriodDoubling => Some((Morphism::period_doubling(), 0)),
            WordSpec::FixedPoint { morphism, seed } if morphism.uniform_length().is_some() => {
                Some((morphism.clone(), *seed))
            }
            _ => None,
        }
    }

    /// The first `length` letters of the word.
    pub fn expand(&self, length: usize) -> Result<Word> {
        self.validate()?;
        let word = match self {
            WordSpec::FixedPoint { morphism, seed } => {
                morphism.fixed_point_prefix(*seed, length)?
            }
            WordSpec::ThueMorse => Morphism::thue_morse().fixed_point_prefix(0, length)?,
            WordSpec::PeriodDoubling => Morphism::period_doubling().fixed_point_prefix(0, length)?,
            WordSpec::Fibonacci => Morphism::fibonacci().fixed_point_prefix(0, length)?,
            WordSpec::ChampernowneBinary => champernowne(length),
            WordSpec::TauChampernowne => {
                let inner = champernowne(length.div_ceil(2));
                Morphism::thue_morse().apply(&inner)?.prefix(length)
            }
            WordSpec::Staircase => staircase(length),
            WordSpec::Mechanical { slope, intercept } => {
                mechanical_word(slope, *intercept, length)?
            }
            WordSpec::UWord(blocks) => u_word_prefix(blocks, length),
            WordSpec::UltimatelyPeriodic { preperiod, period } => {
                let symbols = preperiod
                    .iter()
                    .chain(period.iter().cycle())
                    .copied()
                    .take(length)
                    .collect();
                Word::from_parts_unchecked(symbols, self.alphabet_size())
            }
            WordSpec::MorphicImage { morphism, inner } => {
                // Images are nonempty, so `length` inner letters always suffice.
                let inner = inner.expand(length)?;
                let mut symbols = Vec::with_capacity(length);
                for &a in inner.iter() {
                    if symbols.len() >= length {
                        break;
                    }
                    symbols.extend_from_slice(morphism.image(a));
                }
                symbols.truncate(length);
                Word::from_parts_unchecked(symbols, morphism.alphabet_size())
            }
        };
        debug_assert_eq!(word.len(), length);
        Ok(word)
    }
}

fn champernowne(length: usize) -> Word {
    let mut symbols = Vec::with_capacity(length + 64);
    let mut n: u64 = 0;
    while symbols.len() < length {
        if n == 0 {
            symbols.push(0);
        } else {
            let bits = 64 - n.leading_zeros();
            symbols.extend((0..bits).rev().map(|b| ((n >> b) & 1) as u8));
        }
        n += 1;
    }
    symbols.truncate(length);
    Word::from_parts_unchecked(symbols, 2)
}

fn staircase(length: usize) -> Word {
    let mut symbols = Vec::with_capacity(length);
    let mut run = 1;
    while symbols.len() < length {
        symbols.push(0);
        symbols.extend(std::iter::repeat_n(1, run));
        run += 1;
    }
    symbols.truncate(length);
    Word::from_parts_unchecked(symbols, 2)
}

fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut images: Vec<Option<Vec<Symbol>>> = Vec::new();
    for part in text.split(',') {
        let (letter, image) = part
            .split_once('=')
            .ok_or_else(|| Error::parse("morphism", text, "expected letter=image"))?;
        let letter: usize = letter
            .trim()
            .parse()
            .map_err(|_| Error::parse("morphism", text, format!("bad letter {letter:?}")))?;
        let image = Word::parse(image)?.into_symbols();
        if images.len() <= letter {
            images.resize(letter + 1, None);
        }
        if images[letter].replace(image).is_some() {
            return Err(Error::parse("morphism", text, format!("letter {letter} given twice")));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(a, img)| img.ok_or_else(|| Error::parse("morphism", text, format!("no image for {a}"))))
        .collect::<Result<_>>()?;
    Morphism::new(images)
}

fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |reason: &str| Error::parse("rational", text, reason);
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: i128 = num.trim().parse().map_err(|_| bad("bad numerator"))?;
    let den: i128 = den.trim().parse().map_err(|_| bad("bad denominator"))?;
    if den == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn key_value<'a>(part: &'a str, key: &str, whole: &str) -> Result<&'a str> {
    part.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::parse("word spec", whole, format!("expected {key}=...")))
}

impl FromStr for WordSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (name, args) = match text.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (text, None),
        };
        let spec = match (name, args) {
            ("thue-morse", None) => WordSpec::ThueMorse,
            ("period-doubling", None) => WordSpec::PeriodDoubling,
            ("fibonacci", None) => WordSpec::Fibonacci,
            ("champernowne", None) => WordSpec::ChampernowneBinary,
            ("tau-champernowne", None) => WordSpec::TauChampernowne,
            ("staircase", None) => WordSpec::Staircase,
            ("fixed-point", Some(args)) => {
                let (images, seed) = args
                    .rsplit_once(';')
                    .ok_or_else(|| Error::parse("word spec", text, "expected ;seed="))?;
                let seed = key_value(seed, "seed", text)?
                    .parse()
                    .map_err(|_| Error::parse("word spec", text, "bad seed"))?;
                WordSpec::FixedPoint {
                    morphism: parse_morphism(images)?,
                    seed,
                }
            }
            ("uword", Some(args)) => {
                let blocks = args
                    .split(',')
                    .map(|b| {
                        b.trim()
                            .parse()
                            .map_err(|_| Error::parse("word spec", text, format!("bad block {b:?}")))
                    })
                    .collect::<Result<_>>()?;
                WordSpec::u_word(blocks)?
            }
            ("ult-periodic", Some(args)) => {
                let (pre, per) = args
                    .split_once(';')
                    .ok_or_else(|| Error::parse("word spec", text, "expected pre=...;per=..."))?;
                WordSpec::UltimatelyPeriodic {
                    preperiod: Word::parse(key_value(pre, "pre", text)?)?,
                    period: Word::parse(key_value(per, "per", text)?)?,
                }
            }
            ("mechanical", Some(args)) => {
                let parts: Vec<&str> = args.split(';').collect();
                let (value, intercept, error) = match parts[..] {
                    [v, i] => (v, i, None),
                    [v, i, e] => (v, i, Some(key_value(e, "err", text)?)),
                    _ => {
                        return Err(Error::parse(
                            "word spec",
                            text,
                            "expected slope;intercept[;err=e]",
                        ))
                    }
                };
                WordSpec::Mechanical {
                    slope: SlopeApprox {
                        value: parse_rational(value)?,
                        error: error.map(parse_rational).transpose()?.unwrap_or_else(Rational::zero),
                    },
                    intercept: parse_rational(intercept)?,
                }
            }
            ("image", Some(args)) => {
                let (images, inner) = args
                    .split_once(";of=")
                    .ok_or_else(|| Error::parse("word spec", text, "expected ;of=<spec>"))?;
                WordSpec::MorphicImage {
                    morphism: parse_morphism(images)?,
                    inner: Box::new(inner.parse()?),
                }
            }
            _ => return Err(Error::parse("word spec", text, "unknown word")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSpec::FixedPoint { morphism, seed } => write!(f, "fixed-point:{morphism};seed={seed}"),
            WordSpec::ThueMorse => f.write_str("thue-morse"),
            WordSpec::PeriodDoubling => f.write_str("period-doubling"),
            WordSpec::Fibonacci => f.write_str("fibonacci"),
            WordSpec::ChampernowneBinary => f.write_str("champernowne"),
            WordSpec::TauChampernowne => f.write_str("tau-champernowne"),
            WordSpec::Staircase => f.write_str("staircase"),
            WordSpec::Mechanical { slope, intercept } => {
                write!(f, "mechanical:{};{intercept}", slope.value)?;
                if !slope.error.is_zero() {
                    write!(f, ";err={}", slope.error)?;
                }
                Ok(())
            }
            WordSpec::UWord(blocks) => write!(f, "uword:{blocks}"),
            WordSpec::UltimatelyPeriodic { preperiod, period } => {
                write!(f, "ult-periodic:pre={preperiod};per={period}")
            }
            WordSpec::MorphicImage { morphism, inner } => write!(f, "image:{morphism};of={inner}"),
        }
    }
}

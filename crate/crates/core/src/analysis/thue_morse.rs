//! Checks on the period-doubling word S and the Thue-Morse word T.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{log_constant, ratio_bounds, ReportBuilder, VerificationReport};
use crate::complexity::{
    lower_profile, ones_range_profile, profile, upper_profile, FactorIndex, Level, WindowPolicy,
};
use crate::equivalence::binary_pair_counts;
use crate::error::{Error, Result};
use crate::generators::{phi_map, Morphism, WordSpec};
use crate::word::Word;

const ABELIAN: Level = Level::Finite(1);
const TWO: Level = Level::Finite(2);

/// The four recurrences for the Abelian complexity of S at `4n - 1 .. 4n + 2`,
/// and the eight recurrences for the least and greatest 1-counts behind them.
pub fn verify_srec(n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::parameter("n_max must be at least 1"));
    }
    let mut r = ReportBuilder::new("srec").param("n_max", n_max);
    let top = 4 * n_max + 2;
    let s = WordSpec::PeriodDoubling;
    let fc = profile(&s, ABELIAN, top, policy)?;
    let ones = ones_range_profile(&s, top, policy)?;
    r.require_converged(&fc);
    if !ones.all_converged() {
        r.inconclusive("ones ranges of S unconverged");
    }
    let conv = |m: usize| fc.is_converged(m) && ones.converged[m - 1];

    for n in 1..=2.min(top) {
        r.check(conv(n), fc.value(n) == 2, Some(ABELIAN), n, 2, fc.value(n));
    }
    for m in 1..=top {
        let spread = ones.range(m).spread();
        r.check(conv(m), spread == fc.value(m), Some(ABELIAN), m, format!("max - min + 1 = {spread}"), fc.value(m));
    }

    for n in 1..=n_max {
        let base = fc.value(n);
        for (m, expected) in [
            (4 * n - 1, base + 1),
            (4 * n, base),
            (4 * n + 1, base + 1),
            (4 * n + 2, base + 1),
        ] {
            let ok = conv(m) && conv(n);
            r.check(ok, fc.value(m) == expected, Some(ABELIAN), m, expected, fc.value(m));
        }

        let (p, q) = (ones.range(n).min, ones.range(n).max);
        let rows = [
            (4 * n - 1, p + n - 1, q + n),
            (4 * n, p + n, q + n),
            (4 * n + 1, p + n, q + n + 1),
            (4 * n + 2, p + n, q + n + 1),
        ];
        for (m, p_expected, q_expected) in rows {
            let got = ones.range(m);
            r.check(
                conv(m) && conv(n),
                got.min == p_expected && got.max == q_expected,
                None,
                m,
                format!("ones in [{p_expected}, {q_expected}]"),
                format!("ones in [{}, {}]", got.min, got.max),
            );
        }
    }
    Ok(r.finish())
}

/// Abelian complexity of S at `(2 4^m + 1) / 3` (expected `m + 2`) for
/// `m <= m_max` and at `2^m` (expected 2) for `m <= 2 m_max`, plus a fitted
/// logarithmic upper bound and the finite-horizon lower envelope.
pub fn verify_s_special_values(m_max: u32, policy: &WindowPolicy) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new("s-special-values").param("m_max", m_max);
    let pow_max = 2 * m_max;
    let peak = |m: u32| (2 * 4usize.pow(m) + 1) / 3;
    let top = peak(m_max).max(1 << pow_max);
    let fc = profile(&WordSpec::PeriodDoubling, ABELIAN, top, policy)?;
    r.require_converged(&fc);

    for m in 0..=m_max {
        let n = peak(m);
        let expected = m as usize + 2;
        r.check(fc.is_converged(n), fc.value(n) == expected, Some(ABELIAN), n, expected, fc.value(n));
    }
    for m in 0..=pow_max {
        let n = 1usize << m;
        r.check(fc.is_converged(n), fc.value(n) == 2, Some(ABELIAN), n, 2, fc.value(n));
    }

    // Every n <= top has a power of two in [n, top], so the lower envelope is 2.
    let lower = lower_profile(&fc, top)?;
    for (i, &v) in lower.values.iter().enumerate() {
        r.check(fc.all_converged(), v == 2, Some(ABELIAN), i + 1, "lower envelope 2", v);
    }
    r.fit("log_c", log_constant(fc.values()) as f64);
    r.note("log_c: smallest integer c with fc(n) <= c log2(n) + c over the range");
    Ok(r.finish())
}

/// `fc1_S(n - 1) <= fc2_T(n) <= 4 fc1_S(n - 1)` for `2 <= n <= n_max`.
pub fn verify_tm_sandwich(n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::parameter("n_max must be at least 2"));
    }
    let mut r = ReportBuilder::new("tm-sandwich").param("n_max", n_max);
    let t = profile(&WordSpec::ThueMorse, TWO, n_max, policy)?;
    let s = profile(&WordSpec::PeriodDoubling, ABELIAN, n_max - 1, policy)?;
    r.require_converged(&t);
    r.require_converged(&s);
    for n in 2..=n_max {
        let (lo, mid) = (s.value(n - 1), t.value(n));
        r.check(
            t.is_converged(n) && s.is_converged(n - 1),
            lo <= mid && mid <= 4 * lo,
            Some(TWO),
            n,
            format!("in [{lo}, {}]", 4 * lo),
            mid,
        );
    }
    let (lo, hi) = ratio_bounds((2..=n_max).map(|n| (t.value(n), s.value(n - 1))));
    r.fit("ratio_min", lo);
    r.fit("ratio_max", hi);
    Ok(r.finish())
}

/// 2-Abelian complexity of T: at most 8 at every `2^m + 1`, strictly growing
/// along `(2 4^m + 4) / 3`, with fitted logarithmic bounds on the upper
/// envelope and the finite-horizon lower envelope at most 8.
pub fn verify_tm_bounds(m_max: u32, policy: &WindowPolicy) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new("tm-bounds").param("m_max", m_max);
    let horizon = (1usize << m_max) + 1;
    let t = profile(&WordSpec::ThueMorse, TWO, horizon, policy)?;
    r.require_converged(&t);

    for m in 0..=m_max {
        let n = (1usize << m) + 1;
        r.check(t.is_converged(n), t.value(n) <= 8, Some(TWO), n, "<= 8", t.value(n));
    }

    let climb: Vec<(u32, usize)> = (0..)
        .map(|m: u32| (m, (2 * 4usize.pow(m) + 4) / 3))
        .take_while(|&(_, n)| n <= horizon)
        .collect();
    for pair in climb.windows(2) {
        let ((_, a), (_, b)) = (pair[0], pair[1]);
        r.check(
            t.is_converged(a) && t.is_converged(b),
            t.value(b) > t.value(a),
            Some(TWO),
            b,
            format!("> {} (value at {a})", t.value(a)),
            t.value(b),
        );
    }
    let (lin_lo, lin_hi) = ratio_bounds(climb.iter().map(|&(m, n)| (t.value(n), m as usize + 1)));
    r.fit("climb_per_step_min", lin_lo);
    r.fit("climb_per_step_max", lin_hi);

    let upper = upper_profile(&t);
    r.fit("upper_log_c", log_constant(&upper) as f64);
    let (log_lo, _) = ratio_bounds(
        upper
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &v)| (v, ((i + 1) as f64).log2().ceil() as usize)),
    );
    r.fit("upper_over_log2_min", log_lo);

    let lower = lower_profile(&t, horizon)?;
    for (i, &v) in lower.values.iter().enumerate() {
        r.check(t.all_converged(), v <= 8, Some(TWO), i + 1, "lower envelope <= 8", v);
    }
    r.fit("lower_max", lower.values.iter().copied().max().unwrap_or(0) as f64);
    r.note(format!("lower envelope over horizon {horizon}"));
    Ok(r.finish())
}

/// Length of a prefix of T on which the set of factors of length `n_max`
/// (and hence of every shorter length) has settled.
fn settled_prefix(spec: &WordSpec, n_max: usize, policy: &WindowPolicy, r: &mut ReportBuilder) -> Result<Word> {
    let p = profile(spec, Level::Infinite, n_max, policy)?;
    r.require_converged(&p);
    spec.expand(p.window_length())
}

/// In τ(w), occurrences of 00 and of 11 alternate.
pub fn alternates(image: &[u8]) -> bool {
    let mut last = None;
    for p in image.windows(2) {
        if p[0] == p[1] {
            if last == Some(p[0]) {
                return false;
            }
            last = Some(p[0]);
        }
    }
    true
}

/// Every factor of T of length at most `n_max` has `| |u|_00 - |u|_11 | <= 1`,
/// and 00 / 11 alternate in τ-images of `trials` random binary words.
pub fn verify_tm_balance(n_max: usize, trials: usize, seed: u64, policy: &WindowPolicy) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::parameter("n_max must be at least 2"));
    }
    let mut r = ReportBuilder::new("tm-balance")
        .param("n_max", n_max)
        .param("trials", trials)
        .param("seed", seed);
    let word = settled_prefix(&WordSpec::ThueMorse, n_max, policy, &mut r)?;
    let index = FactorIndex::new(&word);
    index.scan(2, n_max, |view| {
        let c00 = view.column(&[0, 0]);
        let c11 = view.column(&[1, 1]);
        for (p, counts) in view.reps() {
            let a = c00.map_or(0, |c| counts[c]);
            let b = c11.map_or(0, |c| counts[c]);
            if a.abs_diff(b) > 1 {
                let f = Word::binary(view.factor(p).to_vec());
                r.fail(None, view.n, "| |u|00 - |u|11 | <= 1", format!("{f}: {a} vs {b}"));
            }
        }
    });

    let tau = Morphism::thue_morse();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let len = rng.random_range(1..=64);
        let w: Vec<u8> = (0..len).map(|_| rng.random_range(0..2)).collect();
        let image = tau.apply(&w)?;
        if !alternates(&image) {
            r.fail(None, trial, "00 and 11 alternate", format!("tau({})", Word::binary(w)));
        }
    }
    Ok(r.finish())
}

/// Factors of T whose φ-images are Abelian equivalent fall into at most four
/// 2-Abelian classes, for every length up to `n_max`.
pub fn verify_phi_classes(n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    use std::collections::{HashMap, HashSet};

    if n_max < 2 {
        return Err(Error::parameter("n_max must be at least 2"));
    }
    let mut r = ReportBuilder::new("phi-classes").param("n_max", n_max);
    let word = settled_prefix(&WordSpec::ThueMorse, n_max, policy, &mut r)?;
    let mut widest = 0;
    FactorIndex::new(&word).scan(2, n_max, |view| {
        // |phi(u)|_1 = |u|_00 + |u|_11; the 2-Abelian class is fixed by the
        // first and last letters and the pair counts.
        let mut groups: HashMap<usize, HashSet<(u8, u8, [usize; 4])>> = HashMap::new();
        for (p, _) in view.reps() {
            let f = view.factor(p);
            let pairs = binary_pair_counts(f);
            groups
                .entry(pairs[0] + pairs[3])
                .or_default()
                .insert((f[0], f[f.len() - 1], pairs));
        }
        for (ones, classes) in groups {
            widest = widest.max(classes.len());
            if classes.len() > 4 {
                r.fail(Some(TWO), view.n, format!("<= 4 classes with |phi(u)|_1 = {ones}"), classes.len());
            }
        }
    });
    r.fit("largest_group", widest as f64);
    Ok(r.finish())
}

/// φ(prefix of T of length `n_max + 1`) is the prefix of S of length `n_max`.
pub fn verify_phi_identity(n_max: usize) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new("phi-identity").param("n_max", n_max);
    let t = WordSpec::ThueMorse.expand(n_max + 1)?;
    let s = WordSpec::PeriodDoubling.expand(n_max)?;
    let image = phi_map(&t)?;
    if let Some(i) = image.iter().zip(s.iter()).position(|(a, b)| a != b) {
        r.fail(None, i + 1, s[i], image[i]);
    }
    if image.len() != s.len() {
        r.fail(None, n_max, s.len(), image.len());
    }
    Ok(r.finish())
}

/// For a fixed point of an `m`-uniform morphism, the smallest integer `C`
/// with `fc_k(m^i (n + 1)) <= C fc_2(n)` for `n <= n_max`.
pub fn verify_uniform_scaling(
    spec: &WordSpec,
    morphism: &Morphism,
    k: usize,
    i: u32,
    n_max: usize,
    policy: &WindowPolicy,
) -> Result<VerificationReport> {
    let m = morphism
        .uniform_length()
        .filter(|&m| m >= 2)
        .ok_or_else(|| Error::parameter("morphism must be uniform of length at least 2"))?;
    if k < 2 {
        return Err(Error::parameter("k must be at least 2"));
    }
    let scale = m.checked_pow(i).ok_or_else(|| Error::parameter("m^i overflows"))?;
    if scale < k - 1 {
        return Err(Error::parameter(format!("m^i = {scale} is below k - 1 = {}", k - 1)));
    }
    if n_max == 0 {
        return Err(Error::parameter("n_max must be at least 1"));
    }
    let probe = spec.expand(4096)?;
    let fixed = morphism.fixed_point_prefix(probe[0], 4096);
    if fixed.as_ref().ok() != Some(&probe) {
        return Err(Error::parameter(format!("{spec} is not the fixed point of {morphism}")));
    }

    let mut r = ReportBuilder::new("uniform-scaling")
        .param("spec", spec.to_string())
        .param("morphism", morphism.to_string())
        .param("k", k)
        .param("i", i)
        .param("n_max", n_max);
    let big = profile(spec, Level::Finite(k), scale * (n_max + 1), policy)?;
    let small = profile(spec, TWO, n_max, policy)?;
    let ok = r.require_converged(&big) & r.require_converged(&small);
    let c = (1..=n_max)
        .map(|n| big.value(scale * (n + 1)).div_ceil(small.value(n)))
        .max()
        .unwrap_or(0);
    if ok {
        r.fit("C", c as f64);
    }
    Ok(r.finish())
}

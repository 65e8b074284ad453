//! Checks on U-words, the block morphism with two equal Parikh images, and
//! words whose 1s are sparse.

use std::collections::{HashMap, HashSet};

use super::report::{ratio_bounds, ReportBuilder, VerificationReport};
use crate::complexity::{profile, FactorIndex, Level, WindowPolicy};
use crate::equivalence::{k_abelian_eq, k_abelian_key};
use crate::error::{Error, Result};
use crate::generators::{u_word_prefix, BlockSequence, Morphism, WordSpec};

const ABELIAN: Level = Level::Finite(1);

fn product(blocks: &BlockSequence, j: usize) -> Result<usize> {
    blocks
        .product(j)
        .and_then(|m| usize::try_from(m).ok())
        .ok_or_else(|| Error::parameter(format!("m_{j} overflows")))
}

/// Abelian complexity bounds of U over `n <= horizon`:
/// (a) `fc(m_j) = 2` for `j <= j_max`;
/// (b) `fc(n) <= n' + 1` where `m_{n'-1} < n <= m_{n'}` and `n' >= 1`;
/// (c) at `n = 2 sum_{j <= J} (m_{2j} - m_{2j-1})`, both `2 fc(n) >= n' + 1`
///     and `fc(n) >= J + 1`.
pub fn verify_u_bounds(
    blocks: &BlockSequence,
    j_max: usize,
    horizon: usize,
    policy: &WindowPolicy,
) -> Result<VerificationReport> {
    if j_max == 0 {
        return Err(Error::parameter("j_max must be at least 1"));
    }
    let top = product(blocks, j_max)?;
    if horizon < top {
        return Err(Error::parameter(format!("horizon {horizon} is below m_{j_max} = {top}")));
    }
    let mut r = ReportBuilder::new("u-bounds")
        .param("blocks", blocks.to_string())
        .param("j_max", j_max)
        .param("horizon", horizon);
    let fc = profile(&WordSpec::UWord(blocks.clone()), ABELIAN, horizon, policy)?;
    r.require_converged(&fc);

    for j in 1..=j_max {
        let m = product(blocks, j)?;
        r.check(fc.is_converged(m), fc.value(m) == 2, Some(ABELIAN), m, 2, fc.value(m));
    }

    for n in 1..=horizon {
        let bound = blocks.scale_index(n as u64) + 1;
        r.check(fc.is_converged(n), fc.value(n) <= bound, Some(ABELIAN), n, format!("<= {bound}"), fc.value(n));
    }

    let mut n = 0usize;
    for big_j in 1.. {
        let (Some(hi), Some(lo)) = (blocks.product(2 * big_j), blocks.product(2 * big_j - 1)) else {
            break;
        };
        n += 2 * (hi - lo) as usize;
        if n > horizon {
            break;
        }
        let scale = blocks.scale_index(n as u64);
        let v = fc.value(n);
        r.check(
            fc.is_converged(n),
            2 * v > scale && v > big_j,
            Some(ABELIAN),
            n,
            format!(">= max((n'+1)/2, J+1) with n'={scale}, J={big_j}"),
            v,
        );
    }
    r.note("n' is taken to be at least 1");
    Ok(r.finish())
}

/// Every factor `u` of U with `|u| <= sample_length`, taking the least `j`
/// with `u` inside the prefix of length `m_j - 1`, occurs in every window of
/// length `m_j + |u| - 1` of the prefix of length `horizon`.
pub fn verify_uniform_recurrence(
    blocks: &BlockSequence,
    sample_length: usize,
    horizon: usize,
) -> Result<VerificationReport> {
    if sample_length == 0 || horizon < sample_length {
        return Err(Error::parameter("need 1 <= sample_length <= horizon"));
    }
    let mut r = ReportBuilder::new("uniform-recurrence")
        .param("blocks", blocks.to_string())
        .param("sample_length", sample_length)
        .param("horizon", horizon);
    let u = u_word_prefix(blocks, horizon);
    let mut vacuous = 0;
    let mut checked = 0;
    for len in 1..=sample_length {
        let mut first: HashMap<&[u8], usize> = HashMap::new();
        for (p, f) in u.windows(len).enumerate() {
            first.entry(f).or_insert(p);
        }
        let mut factors: Vec<_> = first.into_iter().collect();
        factors.sort();
        for (f, p0) in factors {
            let mut j = 0;
            while blocks.product(j).is_some_and(|m| (m as usize) < p0 + len + 1) {
                j += 1;
            }
            let Some(m) = blocks.product(j).map(|m| m as usize) else {
                vacuous += 1;
                continue;
            };
            let window = m + len - 1;
            if window > horizon {
                vacuous += 1;
                continue;
            }
            checked += 1;
            // Window starting at s contains f iff f occurs at some p in [s, s + m - 1].
            let mut hits = vec![0usize; horizon - len + 2];
            for (p, g) in u.windows(len).enumerate() {
                hits[p + 1] = hits[p] + usize::from(g == f);
            }
            if let Some(s) = (0..=horizon - window).find(|&s| hits[s + m] == hits[s]) {
                let label = crate::word::Word::binary(f.to_vec());
                r.fail(None, s, format!("{label} within {window} letters"), "missing");
            }
        }
    }
    r.fit("factors_checked", checked as f64);
    if vacuous > 0 {
        r.note(format!("{vacuous} factors need windows longer than the horizon"));
    }
    Ok(r.finish())
}

/// `h(base)` for the morphism `0 -> 0^(k+1) 1 0^(k-1) 1, 1 -> 0^k 1 0^k 1`:
/// (a) its blocks of length `2k + 2` are pairwise `k`-Abelian equivalent;
/// (b) `fc_{k+1}` of the image at `(2k + 2) n` tracks `fc_1` of the base,
///     reported as fitted ratio bounds, and is not constant.
pub fn verify_perlin(k: usize, base: &WordSpec, n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    let h = Morphism::perlin(k)?;
    if base.alphabet_size() != 2 {
        return Err(Error::parameter(format!("{base} is not binary")));
    }
    if n_max == 0 {
        return Err(Error::parameter("n_max must be at least 1"));
    }
    let block = 2 * k + 2;
    let image = WordSpec::MorphicImage {
        morphism: h.clone(),
        inner: Box::new(base.clone()),
    };
    let mut r = ReportBuilder::new("perlin")
        .param("k", k)
        .param("base", base.to_string())
        .param("n_max", n_max);

    let level = Level::Finite(k);
    if !k_abelian_eq(h.image(0), h.image(1), k) {
        r.fail(Some(level), block, "h(0) ~k h(1)", "not equivalent");
    }
    let w = image.expand(block * policy.start)?;
    let reference = k_abelian_key(&w[..block], k);
    for (i, b) in w.chunks_exact(block).enumerate() {
        if k_abelian_key(b, k) != reference {
            r.fail(Some(level), block * (i + 1), "block equivalent to the first", crate::word::Word::binary(b.to_vec()));
        }
    }

    let upper = Level::Finite(k + 1);
    let fc_w = profile(&image, upper, block * n_max, policy)?;
    let fc_base = profile(base, ABELIAN, n_max, policy)?;
    let settled = r.require_converged(&fc_w) & r.require_converged(&fc_base);
    let sampled: Vec<usize> = (1..=n_max).map(|n| fc_w.value(block * n)).collect();
    if settled && n_max > 1 && sampled.iter().all(|&v| v == sampled[0]) {
        r.fail(Some(upper), block * n_max, "non-constant along (2k+2)n", sampled[0]);
    }
    let (lo, hi) = ratio_bounds((1..=n_max).map(|n| (sampled[n - 1], fc_base.value(n))));
    r.fit("ratio_min", lo);
    r.fit("ratio_max", hi);
    r.fit("base_fc1_max", fc_base.values().iter().copied().max().unwrap_or(0) as f64);
    let fc_k = profile(&image, level, block * n_max, policy)?;
    r.require_converged(&fc_k);
    r.fit("image_fck_max", fc_k.values().iter().copied().max().unwrap_or(0) as f64);
    Ok(r.finish())
}

/// For a binary word whose length-`k` factors hold at most one 1: the ratio
/// `fc_k / fc_1` over `n <= n_max` (reported), and that two factors are
/// `k`-Abelian equivalent exactly when they are Abelian equivalent with the
/// same prefix and suffix of length `k - 1`.
pub fn verify_sparse_ones(spec: &WordSpec, k: usize, n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    if k == 0 || n_max == 0 {
        return Err(Error::parameter("k and n_max must be at least 1"));
    }
    if spec.alphabet_size() != 2 {
        return Err(Error::parameter(format!("{spec} is not binary")));
    }
    let mut r = ReportBuilder::new("sparse-ones")
        .param("spec", spec.to_string())
        .param("k", k)
        .param("n_max", n_max);
    let factors = profile(spec, Level::Infinite, n_max.max(k), policy)?;
    r.require_converged(&factors);
    let word = spec.expand(factors.window_length())?;
    if let Some(p) = word.windows(k).position(|f| f.iter().filter(|&&a| a == 1).count() > 1) {
        return Err(Error::parameter(format!(
            "{spec} has two 1s in the length-{k} factor at position {p}"
        )));
    }

    let level = Level::Finite(k);
    let fc_k = profile(spec, level, n_max, policy)?;
    let fc_1 = profile(spec, ABELIAN, n_max, policy)?;
    r.require_converged(&fc_k);
    r.require_converged(&fc_1);
    let (lo, hi) = ratio_bounds((1..=n_max).map(|n| (fc_k.value(n), fc_1.value(n))));
    r.fit("ratio_min", lo);
    r.fit("ratio_max", hi);

    // k-classes always refine the (ones, prefix, suffix) classes, so equal
    // class counts mean the two partitions coincide. Below length k the
    // prefix is the whole factor and the counts are all zero.
    FactorIndex::new(&word).scan(k, n_max, |view| {
        let edge = (k - 1).min(view.n);
        let mut full: HashSet<(&[u8], &[u8], &[u32])> = HashSet::new();
        let mut coarse: HashSet<(&[u8], &[u8], usize)> = HashSet::new();
        for (p, counts) in view.reps() {
            let f = view.factor(p);
            let (pre, suf) = (&f[..edge], &f[f.len() - edge..]);
            let ones = f.iter().filter(|&&a| a == 1).count();
            full.insert((pre, suf, counts));
            coarse.insert((pre, suf, ones));
        }
        if full.len() != coarse.len() {
            r.fail(
                Some(level),
                view.n,
                format!("{} classes by ones, prefix and suffix", coarse.len()),
                full.len(),
            );
        }
    });
    Ok(r.finish())
}

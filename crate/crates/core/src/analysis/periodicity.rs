//! Comparisons against the Sturmian profile q_k.

use serde::Serialize;

use super::report::{ReportBuilder, VerificationReport};
use crate::complexity::{profile, q_sturm, Level, WindowPolicy};
use crate::error::{Error, Result};
use crate::generators::WordSpec;

/// A length `n` at which the `k`-Abelian complexity drops below q_k(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodicityWitness {
    pub k: Level,
    pub n: usize,
    pub observed: usize,
    pub threshold: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum WitnessSearch {
    Found(PeriodicityWitness),
    None,
    /// The scan reached an unconverged entry below the threshold before any
    /// settled witness.
    Inconclusive { k: Level, n: usize },
}

fn levels_up_to(k_max: usize) -> impl Iterator<Item = Level> {
    (1..=k_max).map(Level::Finite).chain(std::iter::once(Level::Infinite))
}

/// Scans `k = 1..=k_max`, then `k = ∞`, and `n = 1..=n_max` in that order
/// for the first `fc_k(n) < q_k(n)`.
///
/// An unconverged value can only grow with a longer prefix, so one already
/// at or above the threshold is safely skipped.
pub fn find_periodicity_witness(
    spec: &WordSpec,
    k_max: usize,
    n_max: usize,
    policy: &WindowPolicy,
) -> Result<WitnessSearch> {
    if n_max == 0 {
        return Err(Error::parameter("n_max must be at least 1"));
    }
    for k in levels_up_to(k_max) {
        let p = profile(spec, k, n_max, policy)?;
        for n in 1..=n_max {
            let threshold = q_sturm(k, n);
            let observed = p.value(n);
            if observed >= threshold {
                continue;
            }
            if !p.is_converged(n) {
                return Ok(WitnessSearch::Inconclusive { k, n });
            }
            return Ok(WitnessSearch::Found(PeriodicityWitness {
                k,
                n,
                observed,
                threshold,
            }));
        }
    }
    Ok(WitnessSearch::None)
}

/// `fc_k(n) = q_k(n)` for `k = 1..=k_max` and `n = 1..=n_max`.
pub fn sturmian_profile_check(spec: &WordSpec, k_max: usize, n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    if k_max == 0 {
        return Err(Error::parameter("k_max must be at least 1"));
    }
    let levels: Vec<Level> = (1..=k_max).map(Level::Finite).collect();
    sturmian_profile_check_at(spec, &levels, n_max, policy)
}

/// [`sturmian_profile_check`] at an explicit list of levels.
pub fn sturmian_profile_check_at(
    spec: &WordSpec,
    levels: &[Level],
    n_max: usize,
    policy: &WindowPolicy,
) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new("sturmian-profile")
        .param("spec", spec.to_string())
        .param("levels", levels)
        .param("n_max", n_max);
    for &k in levels {
        let p = profile(spec, k, n_max, policy)?;
        r.require_converged(&p);
        for n in 1..=n_max {
            let q = q_sturm(k, n);
            r.check(p.is_converged(n), p.value(n) == q, Some(k), n, q, p.value(n));
        }
    }
    r.note("one-sided prefixes only");
    Ok(r.finish())
}

/// The image of the binary Champernowne word under the Thue-Morse morphism
/// has Abelian complexity at most 3.
pub fn verify_tau_champernowne(n_max: usize, policy: &WindowPolicy) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new("tau-champernowne").param("n_max", n_max);
    let p = profile(&WordSpec::TauChampernowne, Level::Finite(1), n_max, policy)?;
    r.require_converged(&p);
    for n in 1..=n_max {
        r.check(p.is_converged(n), p.value(n) <= 3, Some(Level::Finite(1)), n, "<= 3", p.value(n));
    }
    r.fit("max", p.values().iter().copied().max().unwrap_or(0) as f64);
    Ok(r.finish())
}

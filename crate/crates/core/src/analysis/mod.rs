//! Desk-scale verification of the complexity results for the named words.

mod periodicity;
mod report;
mod slow;
mod thue_morse;

pub use periodicity::{
    find_periodicity_witness, sturmian_profile_check, sturmian_profile_check_at,
    verify_tau_champernowne, PeriodicityWitness, WitnessSearch,
};
pub use report::{Status, VerificationReport, Witness};
pub use slow::{verify_perlin, verify_sparse_ones, verify_u_bounds, verify_uniform_recurrence};
pub use thue_morse::{
    alternates, verify_phi_classes, verify_phi_identity, verify_s_special_values, verify_srec,
    verify_tm_balance, verify_tm_bounds, verify_tm_sandwich, verify_uniform_scaling,
};

use crate::complexity::{Level, WindowPolicy};
use crate::error::Result;
use crate::generators::{BlockSequence, Morphism, WordSpec};

/// Names accepted by [`run_default`], in the order [`run_all`] reports them.
pub const CHECKS: &[&str] = &[
    "srec",
    "s-special-values",
    "tm-sandwich",
    "tm-bounds",
    "tm-balance",
    "phi-classes",
    "phi-identity",
    "uniform-scaling",
    "sturmian-profile",
    "tau-champernowne",
    "u-bounds",
    "uniform-recurrence",
    "perlin",
    "sparse-ones",
];

pub const BALANCE_SEED: u64 = 0x5eed;

/// Runs one named check at its default parameters. Some names cover several
/// instances and return one report each. `None` for an unknown name.
pub fn run_default(name: &str, policy: &WindowPolicy) -> Option<Result<Vec<VerificationReport>>> {
    let one = |r: Result<VerificationReport>| r.map(|r| vec![r]);
    let reports = match name {
        "srec" => one(verify_srec(512, policy)),
        "s-special-values" => one(verify_s_special_values(6, policy)),
        "tm-sandwich" => one(verify_tm_sandwich(256, policy)),
        "tm-bounds" => one(verify_tm_bounds(14, policy)),
        "tm-balance" => one(verify_tm_balance(64, 1000, BALANCE_SEED, policy)),
        "phi-classes" => one(verify_phi_classes(64, policy)),
        "phi-identity" => one(verify_phi_identity(10_000)),
        "uniform-scaling" => [
            (WordSpec::ThueMorse, Morphism::thue_morse(), 3),
            (WordSpec::PeriodDoubling, Morphism::period_doubling(), 2),
        ]
        .iter()
        .map(|(spec, m, k)| verify_uniform_scaling(spec, m, *k, 1, 32, policy))
        .collect(),
        "sturmian-profile" => (|| {
            let mut out = vec![sturmian_profile_check(&WordSpec::Fibonacci, 3, 64, policy)?];
            for k in 1..=3 {
                let spec = WordSpec::ultimately_periodic(&"0".repeat(2 * k - 1), "1")?;
                out.push(sturmian_profile_check_at(&spec, &[Level::Finite(k)], 64, policy)?);
            }
            Ok(out)
        })(),
        "tau-champernowne" => one(verify_tau_champernowne(512, policy)),
        "u-bounds" => (|| {
            let three = BlockSequence::constant(3)?;
            one(verify_u_bounds(&three, 4, 243, policy))
        })(),
        "uniform-recurrence" => (|| {
            Ok(vec![
                verify_uniform_recurrence(&BlockSequence::constant(2)?, 8, 4096)?,
                verify_uniform_recurrence(&BlockSequence::constant(3)?, 6, 4096)?,
            ])
        })(),
        "perlin" => (1..=2)
            .map(|k| verify_perlin(k, &WordSpec::Staircase, 32, policy))
            .collect(),
        "sparse-ones" => (|| {
            let spec = WordSpec::u_word(vec![3])?;
            Ok(vec![
                verify_sparse_ones(&spec, 1, 64, policy)?,
                verify_sparse_ones(&spec, 3, 64, policy)?,
            ])
        })(),
        _ => return None,
    };
    Some(reports)
}

/// Every check in [`CHECKS`] at its default parameters, run in parallel.
/// The result order follows [`CHECKS`].
pub fn run_all(policy: &WindowPolicy) -> Result<Vec<VerificationReport>> {
    let batches: Vec<Result<Vec<VerificationReport>>> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|name| s.spawn(move || run_default(name, policy).expect("listed check")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    let mut out = Vec::new();
    for batch in batches {
        out.extend(batch?);
    }
    Ok(out)
}

/// Fail dominates inconclusive, which dominates pass.
pub fn overall(reports: &[VerificationReport]) -> Status {
    reports.iter().fold(Status::Pass, |s, r| s.combine(r.status))
}

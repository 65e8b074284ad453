//! Shared inputs for the benchmarks.

use kabelian::{Word, WordSpec};

/// Named words at a fixed length, in a stable order.
pub fn corpus(length: usize) -> Vec<(&'static str, Word)> {
    [
        ("thue-morse", WordSpec::ThueMorse),
        ("period-doubling", WordSpec::PeriodDoubling),
        ("fibonacci", WordSpec::Fibonacci),
        ("champernowne", WordSpec::ChampernowneBinary),
    ]
    .into_iter()
    .map(|(name, spec)| (name, spec.expand(length).expect("named words expand")))
    .collect()
}

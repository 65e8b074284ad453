//! Prefixes of infinite words, k-Abelian equivalence of finite words, and
//! k-Abelian complexity profiles with checks against known results.
//!
//! ```
//! use kabelian::{profile, Level, WindowPolicy, WordSpec};
//!
//! let p = profile(&WordSpec::ThueMorse, Level::Finite(2), 8, &WindowPolicy::default()).unwrap();
//! assert_eq!(p.values(), &[2, 4, 6, 8, 6, 8, 10, 8]);
//! ```

pub mod analysis;
pub mod complexity;
pub mod equivalence;
pub mod error;
pub mod generators;
pub mod word;

pub use complexity::{
    abelian_complexity_binary, factors_of_length, k_abelian_complexity, lower_profile,
    ones_range, profile, q_sturm, upper_profile, ComplexityProfile, Level, LowerProfile,
    OnesRange, WindowPolicy,
};
pub use equivalence::{
    abelian_eq, k_abelian_eq, k_abelian_eq_naive, k_abelian_key, occurrences,
    two_abelian_eq_binary, KAbelianKey,
};
pub use error::{Error, Result};
pub use generators::{phi_map, BlockSequence, Morphism, WordSpec};
pub use word::{Symbol, Word};

//! Conjugacy relations on finite semigroups.

pub mod bitset;
pub mod canonical;
pub mod cli;
pub mod conjugacy;
pub mod constructors;
pub mod enumerate;
pub mod epigroup;
pub mod format;
pub mod green;
pub mod partition;
pub mod pinj;
pub mod semigroup;
pub mod symbolic;

pub use canonical::{canonical_form, CanonMode};
pub use partition::{EqPartition, PairRelation, Relation};
pub use semigroup::{ExtElement, Semigroup, SemigroupError};

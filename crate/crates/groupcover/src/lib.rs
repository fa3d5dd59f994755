//! Covering numbers of small symmetric and sporadic permutation groups.
//!
//! The library regenerates the maximal-subgroup catalogs of S8, S9, S10, S12,
//! M12 (and loads J1 data), builds the incidence structures between elements
//! generating maximal cyclic subgroups and conjugacy classes of maximal
//! subgroups, solves or bounds the resulting minimum set-cover problems,
//! exports solver-ready LP files, and replays the covering-number deductions
//! as machine-checked reports.

pub mod catalog;
pub mod chain;
pub mod classes;
pub mod cover;
pub mod ekr;
pub mod incidence;
pub mod lpformat;
pub mod perm;
pub mod reference;
pub mod theorems;

mod error;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on the number of elements any single subgroup enumeration may
/// stream. Protects against accidentally walking something S12-sized.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

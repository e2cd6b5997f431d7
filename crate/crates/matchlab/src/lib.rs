//! An exact computational laboratory for extremal hypergraph matching
//! problems at desk scale.
//!
//! The crate provides, over bitmask set families:
//!
//! * exact matching numbers with deterministic witnesses ([`family`]);
//! * the (i,j)-shift operator and stabilization to shift-stable
//!   families ([`shift`]);
//! * the extremal constructions `A_ℓ(n)`, their exact sizes and the
//!   pivotal numbers where the cover construction overtakes the clique
//!   ([`constructions`]);
//! * the trace family, canonical base partition, restrictions, widths,
//!   weights and the exact counting identity ([`trace`]);
//! * structural classification of restriction pairs and triples:
//!   diagonals, transversals, normal/fat/robust profiles and missing-set
//!   counts ([`structure`]);
//! * saturation and an exhaustive branch-and-bound maximizer for
//!   `m(n,k,s)` over stable trace families ([`search`]);
//! * an exact-rational audit of the closed-form inequality catalog
//!   ([`audit`]).
//!
//! All arithmetic that feeds an inequality is exact: integers are
//! checked and weights are big rationals. Nothing here rounds.

pub mod audit;
pub mod constructions;
pub mod error;
pub mod family;
pub mod hyp;
pub mod math;
pub mod report;
pub mod search;
pub mod shift;
pub mod structure;
pub mod trace;

mod set;

pub use error::{Error, Result};
pub use family::{Family, MatchingWitness};
pub use math::Rational;
pub use set::{dominates, k_subsets, k_subsets_of, VertexSet};

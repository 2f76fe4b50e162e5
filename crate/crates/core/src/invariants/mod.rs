//! Move-invariant fingerprints: Fox colorings and Wirtinger homomorphism counts.

mod arcs;
mod coloring;
mod fingerprint;
mod group;
mod hom;

pub use arcs::{arcs, ArcCrossing, ArcStructure};
pub use coloring::{coloring_count, is_odd_prime, InvariantError};
pub use fingerprint::{fingerprint, wgd_fingerprint, FingerprintConfig, InvariantFingerprint};
pub use group::{FiniteGroup, GroupError};
pub use hom::hom_count;

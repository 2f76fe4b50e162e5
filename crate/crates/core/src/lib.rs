//! Welded Gauss diagrams and Gauss codes: conversions, Reidemeister and over-commute rewriting,
//! reversal operators, move-invariant fingerprints and bounded equivalence search.

pub mod convert;
pub mod gen;
pub mod invariants;
pub mod model;
pub mod moves;
pub mod search;
pub mod symmetry;

pub use convert::{gauss_code_to_gauss_diagram, gauss_to_wgd, welded_diagram_of, wgd_to_gauss, wgd_to_gauss_diagram};
pub use invariants::{
    arcs, coloring_count, fingerprint, hom_count, wgd_fingerprint, ArcStructure, FiniteGroup, FingerprintConfig,
    InvariantError, InvariantFingerprint,
};
pub use model::{
    canonical_wgd, decode_code, decode_wgd, encode_code, encode_wgd, validate, CrossingId, DecodeError, GaussCode,
    GaussDiagram, Passage, Role, Sign, Violation, WeldedGaussDiagram,
};
pub use moves::{apply, enumerate_sites, wgd_neighbors, KindSet, MoveError, MoveKind, MoveRecord, MoveSite, Variant};
pub use search::{are_equivalent, build_atlas, simplify, AtlasRecord, Equivalence, MovePath, SearchBudget, SearchError};
pub use symmetry::{bar_code, Reversible};

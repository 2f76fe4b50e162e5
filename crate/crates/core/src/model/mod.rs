//! Core value types: Gauss codes, welded Gauss diagrams, Gauss diagrams and their codecs.

pub mod code;
pub mod codec;
pub mod diagram;
pub mod wgd;

pub use code::{CrossingId, GaussCode, Passage, PassageIndex, Role, Sign, Violation};
pub use codec::{decode_code, decode_wgd, encode_code, encode_wgd, DecodeError};
pub use diagram::{Arrow, DiagramViolation, GaussDiagram};
pub use wgd::{canonical_wgd, IndexedWgd, WeldedGaussDiagram, WgdViolation};

/// Free function form of [`GaussCode::validate`].
pub fn validate(code: &GaussCode) -> Result<(), Violation> {
    code.validate()
}

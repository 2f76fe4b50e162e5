//! Reidemeister moves R1, R2, R3 and the over-commute move, on codes and on welded Gauss diagrams.

mod code;
mod site;
mod transport;
mod welded;

pub use code::{apply, enumerate_sites, replay};
pub use site::{triangle_realizable, KindSet, MoveError, MoveKind, MoveRecord, MoveSite, Variant};
pub use transport::{align, transport, Alignment};
pub use welded::{wgd_moves, wgd_neighbors, MoveFan, WgdMove};

//! Bounded search in the move graph of welded Gauss diagrams.
//!
//! States are canonical diagrams. Each discovered state remembers the representative code and
//! site that reached it, so a path found at the diagram level can be turned back into a
//! replayable sequence of code-level moves.

mod atlas;
mod equiv;
mod simplify;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::invariants::InvariantError;
use crate::model::{GaussCode, Violation, WeldedGaussDiagram};
use crate::moves::{apply, replay, transport, KindSet, MoveError, MoveKind, MoveRecord, MoveSite};

pub use atlas::{build_atlas, enumerate_wgds, Atlas, AtlasRecord};
pub use equiv::{are_equivalent, Equivalence};
pub use simplify::{simplify, Simplified};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SearchBudget {
    /// No intermediate diagram may have more crossings than this.
    pub max_crossings: usize,
    /// Total number of distinct diagrams visited.
    pub max_states: usize,
    /// Total number of moves on a path.
    pub max_depth: usize,
}

impl SearchBudget {
    pub fn new(max_crossings: usize, max_states: usize, max_depth: usize) -> Self {
        SearchBudget { max_crossings, max_states, max_depth }
    }

    /// A budget allowing `extra` crossings above `n`.
    pub fn around(n: usize, extra: usize) -> Self {
        SearchBudget { max_crossings: n + extra, max_states: 20_000, max_depth: 16 }
    }

    pub fn check(&self, endpoints: &[&WeldedGaussDiagram]) -> Result<(), SearchError> {
        if self.max_states == 0 {
            return Err(SearchError::Budget("max_states must be positive".into()));
        }
        if self.max_depth == 0 {
            return Err(SearchError::Budget("max_depth must be positive".into()));
        }
        if let Some(w) = endpoints.iter().find(|w| w.crossing_count() > self.max_crossings) {
            return Err(SearchError::Budget(format!(
                "max_crossings {} is below the {} crossings of an endpoint",
                self.max_crossings,
                w.crossing_count()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid budget: {0}")]
    Budget(String),
    #[error(transparent)]
    Invalid(#[from] Violation),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// Why a search stopped without an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// Every diagram within the crossing cap was visited.
    Exhausted,
    StateCap,
    DepthCap,
}

/// A replayable sequence of code-level moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovePath {
    pub start: GaussCode,
    pub records: Vec<MoveRecord>,
}

impl MovePath {
    pub fn empty(start: GaussCode) -> Self {
        MovePath { start, records: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Number of Reidemeister moves, not counting over-commute moves.
    pub fn reidemeister_moves(&self) -> usize {
        self.records.iter().filter(|r| r.site.kind != MoveKind::Oc).count()
    }

    pub fn replay(&self) -> Result<GaussCode, MoveError> {
        replay(&self.start, &self.records)
    }
}

/// How a state was first reached: the site acted on `rep`, a code of `parent`.
#[derive(Clone, Debug)]
struct Discovery {
    parent: WeldedGaussDiagram,
    rep: GaussCode,
    site: MoveSite,
}

type Tree = HashMap<WeldedGaussDiagram, Option<Discovery>>;

/// Discoveries from the root of `tree` down to `end`.
fn chain<'a>(tree: &'a Tree, end: &WeldedGaussDiagram) -> Vec<&'a Discovery> {
    let mut out = Vec::new();
    let mut at = end;
    while let Some(Some(d)) = tree.get(at) {
        out.push(d);
        at = &d.parent;
    }
    out.reverse();
    out
}

/// Extends `path` along the discoveries leading from the root of `tree` to `end`.
fn follow_forward(path: &mut MovePath, current: &mut GaussCode, tree: &Tree, end: &WeldedGaussDiagram) -> Result<(), MoveError> {
    for d in chain(tree, end) {
        let (records, next) = transport(current, &d.rep, &d.site)?;
        path.records.extend(records);
        *current = next;
    }
    Ok(())
}

/// Extends `path` from `start` back to the root of `tree`, undoing each discovery.
fn follow_backward(
    path: &mut MovePath,
    current: &mut GaussCode,
    tree: &Tree,
    start: &WeldedGaussDiagram,
) -> Result<(), MoveError> {
    for d in chain(tree, start).into_iter().rev() {
        let (reached, _) = apply(&d.rep, &d.site)?;
        let (records, next) = transport(current, &reached, &d.site.inverse())?;
        path.records.extend(records);
        *current = next;
    }
    Ok(())
}

fn shrinking_kinds() -> KindSet {
    [MoveKind::R1Delete, MoveKind::R2Delete, MoveKind::R3].into_iter().collect()
}

fn growing_kinds() -> KindSet {
    [MoveKind::R1Insert, MoveKind::R2Insert].into_iter().collect()
}

/// Every kind that can change the diagram.
fn visible_kinds() -> KindSet {
    shrinking_kinds().with(MoveKind::R1Insert).with(MoveKind::R2Insert)
}

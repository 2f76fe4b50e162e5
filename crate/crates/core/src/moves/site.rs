use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{CrossingId, Sign, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "R1_insert")]
    R1Insert,
    #[serde(rename = "R1_delete")]
    R1Delete,
    #[serde(rename = "R2_insert")]
    R2Insert,
    #[serde(rename = "R2_delete")]
    R2Delete,
    R3,
    #[serde(rename = "OC")]
    Oc,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
        MoveKind::Oc,
    ];

    pub fn is_growth(self) -> bool {
        matches!(self, MoveKind::R1Insert | MoveKind::R2Insert)
    }

    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::R1Insert => MoveKind::R1Delete,
            MoveKind::R1Delete => MoveKind::R1Insert,
            MoveKind::R2Insert => MoveKind::R2Delete,
            MoveKind::R2Delete => MoveKind::R2Insert,
            k => k,
        }
    }

    /// Change in crossing count.
    pub fn delta(self) -> isize {
        match self {
            MoveKind::R1Insert => 1,
            MoveKind::R1Delete => -1,
            MoveKind::R2Insert => 2,
            MoveKind::R2Delete => -2,
            MoveKind::R3 | MoveKind::Oc => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Insert => "R1_insert",
            MoveKind::R1Delete => "R1_delete",
            MoveKind::R2Insert => "R2_insert",
            MoveKind::R2Delete => "R2_delete",
            MoveKind::R3 => "R3",
            MoveKind::Oc => "OC",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of move kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KindSet(u8);

impl KindSet {
    pub const ALL: KindSet = KindSet(0b11_1111);
    pub const NONE: KindSet = KindSet(0);

    pub fn only(kind: MoveKind) -> KindSet {
        KindSet(1 << kind as u8)
    }

    pub fn with(self, kind: MoveKind) -> KindSet {
        KindSet(self.0 | 1 << kind as u8)
    }

    pub fn contains(self, kind: MoveKind) -> bool {
        self.0 & (1 << kind as u8) != 0
    }

    /// Drops the insert kinds unless growth is allowed.
    pub fn restricted(self, growth_allowed: bool) -> KindSet {
        if growth_allowed {
            self
        } else {
            KindSet(self.0 & !(Self::only(MoveKind::R1Insert).0 | Self::only(MoveKind::R2Insert).0))
        }
    }
}

impl FromIterator<MoveKind> for KindSet {
    fn from_iter<I: IntoIterator<Item = MoveKind>>(iter: I) -> Self {
        iter.into_iter().fold(KindSet::NONE, KindSet::with)
    }
}

/// Oriented sub-case of a move.
///
/// * `Kink`: the two passages of one crossing are adjacent; `under_first` gives their order.
/// * `Bigon`: crossings `a, b` with over window `O_a O_b` and under window `U_a U_b` (parallel)
///   or `U_b U_a` (antiparallel); `a` carries `first_sign`, `b` the opposite sign.
/// * `Triangle`: crossings `tm, tb, mb` (top over middle, top over bottom, middle over bottom);
///   each flag says whether the window reads in the forward order
///   `O_tm O_tb`, `U_tm O_mb`, `U_tb U_mb`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Variant {
    Kink { under_first: bool, sign: Sign },
    Bigon { parallel: bool, first_sign: Sign },
    Triangle { top_forward: bool, middle_forward: bool, bottom_forward: bool },
    Commute,
}

/// Whether three strands in the plane can meet with these passage orders and crossing signs.
///
/// Sixteen of the sixty-four combinations occur; the set is closed under reversing all three
/// orders, which is exactly what a third Reidemeister move does.
pub fn triangle_realizable(top_forward: bool, middle_forward: bool, bottom_forward: bool, signs: [Sign; 3]) -> bool {
    let [tm, tb, mb] = signs.map(Sign::is_positive);
    (tm ^ tb) == (middle_forward ^ bottom_forward) && (tb ^ mb) == (top_forward ^ middle_forward)
}

/// Where and how a move applies.
///
/// Positions are indices into the code the site applies to, except for insert kinds, where they
/// are indices into the resulting code. A window starting at `i` covers `i` and `i + 1` taken
/// cyclically, so windows may straddle the basepoint.
///
/// | kind | positions | crossings |
/// |------|-----------|-----------|
/// | R1 | kink window | `[c]` |
/// | R2 | over window, under window | `[a, b]` |
/// | R3 | top, middle, bottom windows | `[tm, tb, mb]` |
/// | OC | swapped pair | `[x, y]` in reading order |
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub positions: Vec<usize>,
    pub crossings: Vec<CrossingId>,
    pub variant: Variant,
}

impl MoveSite {
    /// The site that undoes this one on the code it produces.
    pub fn inverse(&self) -> MoveSite {
        let mut inv = self.clone();
        inv.kind = self.kind.inverse();
        match &mut inv.variant {
            Variant::Triangle { top_forward, middle_forward, bottom_forward } => {
                *top_forward = !*top_forward;
                *middle_forward = !*middle_forward;
                *bottom_forward = !*bottom_forward;
            }
            Variant::Commute => inv.crossings.reverse(),
            _ => {}
        }
        inv
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

/// A move as applied: the site plus the crossing labels it created or destroyed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveRecord {
    pub site: MoveSite,
    pub introduced: Vec<CrossingId>,
    pub removed: Vec<CrossingId>,
}

impl MoveRecord {
    pub fn inverse(&self) -> MoveRecord {
        MoveRecord {
            site: self.site.inverse(),
            introduced: self.removed.clone(),
            removed: self.introduced.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("stale site: {0}")]
    Stale(String),
    #[error("crossing {0} already exists")]
    LabelInUse(CrossingId),
    #[error("site is malformed: {0}")]
    Malformed(String),
    #[error(transparent)]
    Invalid(#[from] Violation),
}

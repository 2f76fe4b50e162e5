use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::code::{CrossingId, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WgdViolation {
    #[error("label {0} appears more than once in the order")]
    RepeatedLabel(CrossingId),
    #[error("crossing labels must be positive")]
    NonPositiveLabel,
    #[error("label {0} is in the order but has no map entry")]
    MissingEntry(CrossingId),
    #[error("map entry {0} is not in the order")]
    UnorderedEntry(CrossingId),
    #[error("map sends {from} to unknown label {to}")]
    UnknownHead { from: CrossingId, to: CrossingId },
}

/// A welded Gauss diagram: a cyclically ordered crossing set `C` with a map `C -> C x {+1, -1}`.
///
/// `order` is the cyclic order of under passages read from the basepoint; `map[c] = (head, sign)`
/// where `head` is the crossing whose under passage most recently precedes the over passage of `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WgdRepr", into = "WgdRepr")]
pub struct WeldedGaussDiagram {
    order: Vec<CrossingId>,
    map: BTreeMap<CrossingId, (CrossingId, Sign)>,
}

#[derive(Serialize, Deserialize)]
struct WgdRepr {
    order: Vec<CrossingId>,
    map: BTreeMap<CrossingId, (CrossingId, Sign)>,
}

impl TryFrom<WgdRepr> for WeldedGaussDiagram {
    type Error = WgdViolation;

    fn try_from(r: WgdRepr) -> Result<Self, WgdViolation> {
        WeldedGaussDiagram::new(r.order, r.map)
    }
}

impl From<WeldedGaussDiagram> for WgdRepr {
    fn from(w: WeldedGaussDiagram) -> Self {
        WgdRepr { order: w.order, map: w.map }
    }
}

impl WeldedGaussDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(
        order: Vec<CrossingId>,
        map: BTreeMap<CrossingId, (CrossingId, Sign)>,
    ) -> Result<Self, WgdViolation> {
        let mut labels = BTreeSet::new();
        for &c in &order {
            if c.0 == 0 {
                return Err(WgdViolation::NonPositiveLabel);
            }
            if !labels.insert(c) {
                return Err(WgdViolation::RepeatedLabel(c));
            }
        }
        for &c in &order {
            if !map.contains_key(&c) {
                return Err(WgdViolation::MissingEntry(c));
            }
        }
        for (&c, &(h, _)) in &map {
            if !labels.contains(&c) {
                return Err(WgdViolation::UnorderedEntry(c));
            }
            if !labels.contains(&h) {
                return Err(WgdViolation::UnknownHead { from: c, to: h });
            }
        }
        Ok(WeldedGaussDiagram { order, map })
    }

    /// Convenience constructor from `(label, head, sign)` triples listed in cyclic order.
    pub fn from_entries(entries: &[(u32, u32, Sign)]) -> Result<Self, WgdViolation> {
        let order = entries.iter().map(|e| CrossingId(e.0)).collect();
        let map = entries.iter().map(|&(c, h, s)| (CrossingId(c), (CrossingId(h), s))).collect();
        Self::new(order, map)
    }

    pub fn order(&self) -> &[CrossingId] {
        &self.order
    }

    pub fn map(&self) -> &BTreeMap<CrossingId, (CrossingId, Sign)> {
        &self.map
    }

    pub fn crossing_count(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn head(&self, c: CrossingId) -> CrossingId {
        self.map[&c].0
    }

    pub fn sign(&self, c: CrossingId) -> Sign {
        self.map[&c].1
    }

    /// Position-indexed view: crossing `i` is `order[i]`.
    pub fn indexed(&self) -> IndexedWgd {
        let position: BTreeMap<CrossingId, usize> =
            self.order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let (heads, signs) = self
            .order
            .iter()
            .map(|c| {
                let (h, s) = self.map[c];
                (position[&h], s)
            })
            .unzip();
        IndexedWgd { heads, signs }
    }

    /// Relabels `order` to `1..n`, keeping the current basepoint.
    pub fn from_indexed(ix: &IndexedWgd) -> Self {
        let order = (1..=ix.len() as u32).map(CrossingId).collect();
        let map = ix
            .heads
            .iter()
            .zip(&ix.signs)
            .enumerate()
            .map(|(i, (&h, &s))| (CrossingId(i as u32 + 1), (CrossingId(h as u32 + 1), s)))
            .collect();
        WeldedGaussDiagram { order, map }
    }

    /// The unique representative of the rotation/relabeling orbit: labels `1..n` in order,
    /// starting at the rotation whose `(head, sign)` sequence is lexicographically least.
    pub fn canonical(&self) -> Self {
        Self::from_indexed(&self.indexed().canonical())
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Flips every sign; order and heads are untouched.
    pub fn with_signs_flipped(&self) -> Self {
        WeldedGaussDiagram {
            order: self.order.clone(),
            map: self.map.iter().map(|(&c, &(h, s))| (c, (h, s.flip()))).collect(),
        }
    }
}

/// Free function form of [`WeldedGaussDiagram::canonical`].
pub fn canonical_wgd(w: &WeldedGaussDiagram) -> WeldedGaussDiagram {
    w.canonical()
}

/// A welded Gauss diagram with crossings identified by their position in the cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedWgd {
    pub heads: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl IndexedWgd {
    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn pred(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn succ(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    /// Crossings whose over passage sits after the under passage of `i`, in ascending position.
    pub fn gap(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.heads[j] == i).collect()
    }

    /// The basepoint moved to position `r`.
    pub fn rotated(&self, r: usize) -> IndexedWgd {
        let n = self.len();
        let heads = (0..n).map(|i| (self.heads[(r + i) % n] + n - r) % n).collect();
        let signs = (0..n).map(|i| self.signs[(r + i) % n]).collect();
        IndexedWgd { heads, signs }
    }

    fn rotation_less(&self, a: usize, b: usize) -> bool {
        let n = self.len();
        for i in 0..n {
            let ka = ((self.heads[(a + i) % n] + n - a) % n, self.signs[(a + i) % n]);
            let kb = ((self.heads[(b + i) % n] + n - b) % n, self.signs[(b + i) % n]);
            if ka != kb {
                return ka < kb;
            }
        }
        false
    }

    /// Rotation with the least `(head, sign)` sequence; the earliest such rotation on ties.
    pub fn canonical_rotation(&self) -> usize {
        (1..self.len()).fold(0, |best, r| if self.rotation_less(r, best) { r } else { best })
    }

    pub fn canonical(&self) -> IndexedWgd {
        if self.is_empty() {
            return self.clone();
        }
        self.rotated(self.canonical_rotation())
    }
}

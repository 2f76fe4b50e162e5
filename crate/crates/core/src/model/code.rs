use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Label of a classical crossing. Labels are positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Crossing sign. `Plus` sorts before `Minus` in canonical encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// One passage of the oriented circle through a classical crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Passage {
    pub crossing: CrossingId,
    pub role: Role,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Passage { crossing: CrossingId(crossing), role, sign }
    }

    pub fn over(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Role::Over, sign)
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Self::new(crossing, Role::Under, sign)
    }

    pub fn is_over(&self) -> bool {
        self.role == Role::Over
    }

    pub fn is_under(&self) -> bool {
        self.role == Role::Under
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.crossing, self.sign)
    }
}

/// First violated Gauss code invariant, with the offending position where one exists.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("passage {position}: crossing labels must be positive")]
    NonPositiveLabel { position: usize },
    #[error("passage {position}: crossing {crossing} has a second {role:?} passage")]
    DuplicatePassage { position: usize, crossing: CrossingId, role: Role },
    #[error("passage {position}: sign mismatch on crossing {crossing}")]
    SignMismatch { position: usize, crossing: CrossingId },
    #[error("crossing {crossing} has no {missing:?} passage")]
    MissingPassage { crossing: CrossingId, missing: Role },
}

/// A virtual knot diagram modulo detour moves: the cyclic word of its classical passages.
///
/// The sequence is stored linearly; index 0 is the basepoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussCode {
    passages: Vec<Passage>,
}

impl GaussCode {
    pub fn empty() -> Self {
        GaussCode::default()
    }

    /// Builds a code, rejecting sequences that break the pairing or sign invariants.
    pub fn new(passages: Vec<Passage>) -> Result<Self, Violation> {
        let code = GaussCode { passages };
        code.validate()?;
        Ok(code)
    }

    /// Wraps a sequence without checking it; use [`GaussCode::validate`] to inspect it later.
    pub fn from_passages_unchecked(passages: Vec<Passage>) -> Self {
        GaussCode { passages }
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    pub fn into_passages(self) -> Vec<Passage> {
        self.passages
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.passages.len() / 2
    }

    pub fn max_label(&self) -> u32 {
        self.passages.iter().map(|p| p.crossing.0).max().unwrap_or(0)
    }

    /// Checks every invariant, reporting the first violation in reading order.
    pub fn validate(&self) -> Result<(), Violation> {
        let mut seen: HashMap<CrossingId, (Option<Sign>, Option<Sign>)> = HashMap::new();
        for (position, p) in self.passages.iter().enumerate() {
            if p.crossing.0 == 0 {
                return Err(Violation::NonPositiveLabel { position });
            }
            let entry = seen.entry(p.crossing).or_default();
            let (mine, other) = match p.role {
                Role::Over => (&mut entry.0, entry.1),
                Role::Under => (&mut entry.1, entry.0),
            };
            if mine.is_some() {
                return Err(Violation::DuplicatePassage { position, crossing: p.crossing, role: p.role });
            }
            if other.is_some_and(|s| s != p.sign) {
                return Err(Violation::SignMismatch { position, crossing: p.crossing });
            }
            *mine = Some(p.sign);
        }
        for p in &self.passages {
            let (over, under) = seen[&p.crossing];
            if over.is_none() {
                return Err(Violation::MissingPassage { crossing: p.crossing, missing: Role::Over });
            }
            if under.is_none() {
                return Err(Violation::MissingPassage { crossing: p.crossing, missing: Role::Under });
            }
        }
        Ok(())
    }

    /// Positions of the over and under passage of every crossing.
    pub fn positions(&self) -> PassageIndex {
        let mut index = BTreeMap::new();
        for (i, p) in self.passages.iter().enumerate() {
            let slot = index.entry(p.crossing).or_insert([usize::MAX; 2]);
            slot[p.role as usize] = i;
        }
        PassageIndex { index }
    }

    /// Renames crossings 1..n by order of their first under passage from the basepoint.
    pub fn normalized(&self) -> GaussCode {
        let mut rename = HashMap::new();
        for p in self.passages.iter().filter(|p| p.is_under()) {
            let next = rename.len() as u32 + 1;
            rename.entry(p.crossing).or_insert(CrossingId(next));
        }
        self.relabeled(|c| rename[&c])
    }

    pub fn relabeled(&self, mut f: impl FnMut(CrossingId) -> CrossingId) -> GaussCode {
        GaussCode {
            passages: self.passages.iter().map(|p| Passage { crossing: f(p.crossing), ..*p }).collect(),
        }
    }

    /// Moves the basepoint forward by `k` passages.
    pub fn rotated(&self, k: usize) -> GaussCode {
        let mut passages = self.passages.clone();
        if !passages.is_empty() {
            let k = k % passages.len();
            passages.rotate_left(k);
        }
        GaussCode { passages }
    }

    /// Index `i + 1` on the cycle.
    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.passages.len()
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.passages.len() - 1) % self.passages.len()
    }
}

impl std::ops::Index<usize> for GaussCode {
    type Output = Passage;

    fn index(&self, i: usize) -> &Passage {
        &self.passages[i]
    }
}

/// Lookup from crossing to the positions of its two passages.
#[derive(Clone, Debug)]
pub struct PassageIndex {
    index: BTreeMap<CrossingId, [usize; 2]>,
}

impl PassageIndex {
    pub fn over(&self, c: CrossingId) -> Option<usize> {
        self.index.get(&c).map(|s| s[Role::Over as usize])
    }

    pub fn under(&self, c: CrossingId) -> Option<usize> {
        self.index.get(&c).map(|s| s[Role::Under as usize])
    }

    pub fn contains(&self, c: CrossingId) -> bool {
        self.index.contains_key(&c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        GaussCode::from_passages_unchecked(crate::model::codec::parse_passages(s).unwrap())
    }

    #[test]
    fn trefoil_is_valid() {
        assert_eq!(code("O1+ U2+ O3+ U1+ O2+ U3+").validate(), Ok(()));
    }

    #[test]
    fn empty_is_valid() {
        assert_eq!(GaussCode::empty().validate(), Ok(()));
    }

    #[test]
    fn sign_mismatch_names_crossing() {
        let err = code("O1+ U1-").validate().unwrap_err();
        assert_eq!(err, Violation::SignMismatch { position: 1, crossing: CrossingId(1) });
    }

    #[test]
    fn duplicate_and_missing_passages() {
        assert_eq!(
            code("O1+ O1+").validate().unwrap_err(),
            Violation::DuplicatePassage { position: 1, crossing: CrossingId(1), role: Role::Over }
        );
        assert_eq!(
            code("O1+ U2+ O2+").validate().unwrap_err(),
            Violation::MissingPassage { crossing: CrossingId(1), missing: Role::Under }
        );
        assert_eq!(code("O0+ U0+").validate().unwrap_err(), Violation::NonPositiveLabel { position: 0 });
    }

    #[test]
    fn normalization_follows_under_order() {
        let c = code("O7+ U9- O9- U7+").normalized();
        assert_eq!(c, code("O2+ U1- O1- U2+"));
    }
}

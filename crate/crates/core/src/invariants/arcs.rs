use serde::Serialize;

use crate::model::{CrossingId, GaussCode, Sign, Violation};

/// One crossing seen from the arcs: the under strand runs from `in_arc` into `out_arc`
/// beneath `over_arc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcCrossing {
    pub crossing: CrossingId,
    pub over_arc: usize,
    pub in_arc: usize,
    pub out_arc: usize,
    pub sign: Sign,
}

/// Wirtinger arcs of a code. Arc `j` starts at the `j`-th under passage; over passages do not
/// break arcs. A code without crossings has a single arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcStructure {
    pub arc_count: usize,
    /// Indexed by arc: the crossing whose under passage starts that arc.
    pub crossings: Vec<ArcCrossing>,
}

pub fn arcs(code: &GaussCode) -> Result<ArcStructure, Violation> {
    code.validate()?;
    Ok(arcs_of_valid(code))
}

pub(crate) fn arcs_of_valid(code: &GaussCode) -> ArcStructure {
    let n = code.crossing_count();
    if n == 0 {
        return ArcStructure { arc_count: 1, crossings: Vec::new() };
    }
    // passages before the first under passage belong to the last arc
    let mut arc = n - 1;
    let mut over_arc = std::collections::HashMap::with_capacity(n);
    let mut unders = Vec::with_capacity(n);
    for p in code.passages() {
        if p.is_under() {
            arc = unders.len();
            unders.push(*p);
        } else {
            over_arc.insert(p.crossing, arc);
        }
    }
    let crossings = unders
        .iter()
        .enumerate()
        .map(|(j, p)| ArcCrossing {
            crossing: p.crossing,
            over_arc: over_arc[&p.crossing],
            in_arc: (j + n - 1) % n,
            out_arc: j,
            sign: p.sign,
        })
        .collect();
    ArcStructure { arc_count: n, crossings }
}

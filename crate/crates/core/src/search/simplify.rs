use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::{follow_forward, growing_kinds, shrinking_kinds, Discovery, MovePath, SearchBudget, SearchError, Tree};
use crate::convert::wgd_to_gauss;
use crate::model::WeldedGaussDiagram;
use crate::moves::wgd_moves;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplified {
    /// Canonical form of the smallest diagram found.
    pub diagram: WeldedGaussDiagram,
    /// Moves from a code of the input to a code of `diagram`.
    pub path: MovePath,
    pub states: usize,
    /// True when the search stopped because nothing smaller is possible or every reachable
    /// diagram within budget was visited.
    pub complete: bool,
}

/// Best-first search for a smaller diagram.
///
/// States are expanded fewest crossings first using only moves that do not add crossings; a
/// state gets a second, growing expansion only once no state is left awaiting its first.
pub fn simplify(w: &WeldedGaussDiagram, budget: &SearchBudget) -> Result<Simplified, SearchError> {
    budget.check(&[w])?;
    let root = w.canonical();
    let mut tree = Tree::new();
    let mut depth = std::collections::HashMap::new();
    tree.insert(root.clone(), None);
    depth.insert(root.clone(), 0usize);
    // (growth pass, crossings, sequence number)
    let mut heap = BinaryHeap::new();
    let mut seq = 0usize;
    heap.push(Reverse((false, root.crossing_count(), seq, root.clone())));
    let mut best = root.clone();
    let mut complete = true;

    'search: while let Some(Reverse((growth, _, _, state))) = heap.pop() {
        if best.crossing_count() == 0 {
            break;
        }
        let d = depth[&state];
        if d >= budget.max_depth {
            continue;
        }
        let kinds = if growth { growing_kinds() } else { shrinking_kinds() };
        let fan = wgd_moves(&state, kinds, growth, Some(budget.max_crossings));
        for m in fan.moves {
            if tree.contains_key(&m.target) {
                continue;
            }
            if tree.len() >= budget.max_states {
                complete = false;
                break 'search;
            }
            let discovery = Discovery { parent: fan.source.clone(), rep: fan.reps[m.rep].clone(), site: m.site };
            tree.insert(m.target.clone(), Some(discovery));
            depth.insert(m.target.clone(), d + 1);
            if m.target.crossing_count() < best.crossing_count() {
                best = m.target.clone();
            }
            seq += 1;
            heap.push(Reverse((false, m.target.crossing_count(), seq, m.target)));
        }
        if !growth {
            seq += 1;
            heap.push(Reverse((true, state.crossing_count(), seq, state)));
        }
    }

    let start = wgd_to_gauss(w);
    let mut path = MovePath::empty(start.clone());
    let mut current = start;
    follow_forward(&mut path, &mut current, &tree, &best)?;
    Ok(Simplified { diagram: best, path, states: tree.len(), complete: complete || heap.is_empty() })
}

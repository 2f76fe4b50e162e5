use rayon::prelude::*;
use serde::Serialize;

use super::{follow_backward, follow_forward, visible_kinds, Discovery, MovePath, SearchBudget, SearchError, StopReason, Tree};
use crate::convert::wgd_to_gauss;
use crate::model::WeldedGaussDiagram;
use crate::moves::{wgd_moves, MoveFan};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Equivalence {
    /// The path starts at a code of the first diagram and ends at a code of the second.
    Equivalent { path: MovePath },
    /// The budget ran out. This is not evidence of inequivalence.
    Unknown { reason: StopReason, states: usize },
}

struct Side {
    tree: Tree,
    frontier: Vec<WeldedGaussDiagram>,
    depth: usize,
}

impl Side {
    fn new(root: WeldedGaussDiagram) -> Self {
        let mut tree = Tree::new();
        tree.insert(root.clone(), None);
        Side { tree, frontier: vec![root], depth: 0 }
    }
}

enum Step {
    Met(WeldedGaussDiagram),
    Capped,
    Continue,
}

/// Expands one whole level of `side`, stopping at the first state already seen by `other`.
fn expand(side: &mut Side, other: &Side, budget: &SearchBudget, total: &mut usize) -> Step {
    let fans: Vec<MoveFan> = side
        .frontier
        .par_iter()
        .map(|w| wgd_moves(w, visible_kinds(), true, Some(budget.max_crossings)))
        .collect();
    let mut next = Vec::new();
    for fan in fans {
        for m in fan.moves {
            if side.tree.contains_key(&m.target) {
                continue;
            }
            let met = other.tree.contains_key(&m.target);
            let discovery = Discovery { parent: fan.source.clone(), rep: fan.reps[m.rep].clone(), site: m.site };
            side.tree.insert(m.target.clone(), Some(discovery));
            *total += 1;
            if met {
                return Step::Met(m.target);
            }
            if *total >= budget.max_states {
                return Step::Capped;
            }
            next.push(m.target);
        }
    }
    side.frontier = next;
    side.depth += 1;
    Step::Continue
}

/// Bidirectional breadth-first search for a move path from `w1` to `w2`.
///
/// Levels are expanded whole, the smaller frontier first; within a level the fans are computed
/// in parallel and merged in frontier order, so the result does not depend on scheduling.
pub fn are_equivalent(
    w1: &WeldedGaussDiagram,
    w2: &WeldedGaussDiagram,
    budget: &SearchBudget,
) -> Result<Equivalence, SearchError> {
    budget.check(&[w1, w2])?;
    let start = wgd_to_gauss(w1);
    let (a, b) = (w1.canonical(), w2.canonical());
    if a == b {
        return Ok(Equivalence::Equivalent { path: MovePath::empty(start) });
    }
    let mut fwd = Side::new(a);
    let mut bwd = Side::new(b);
    let mut total = 2;
    let met = loop {
        if fwd.depth + bwd.depth >= budget.max_depth {
            return Ok(Equivalence::Unknown { reason: StopReason::DepthCap, states: total });
        }
        let forward_first = match (fwd.frontier.is_empty(), bwd.frontier.is_empty()) {
            (true, true) => return Ok(Equivalence::Unknown { reason: StopReason::Exhausted, states: total }),
            (false, true) => true,
            (true, false) => false,
            (false, false) => fwd.frontier.len() <= bwd.frontier.len(),
        };
        let step = if forward_first {
            expand(&mut fwd, &bwd, budget, &mut total)
        } else {
            expand(&mut bwd, &fwd, budget, &mut total)
        };
        match step {
            Step::Met(m) => break m,
            Step::Capped => return Ok(Equivalence::Unknown { reason: StopReason::StateCap, states: total }),
            Step::Continue => {}
        }
    };
    let mut path = MovePath::empty(start.clone());
    let mut current = start;
    follow_forward(&mut path, &mut current, &fwd.tree, &met)?;
    follow_backward(&mut path, &mut current, &bwd.tree, &met)?;
    Ok(Equivalence::Equivalent { path })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::gauss_to_wgd;
    use crate::model::{GaussCode, Sign};

    fn wgd(text: &str) -> WeldedGaussDiagram {
        gauss_to_wgd(&text.parse().unwrap()).unwrap()
    }

    fn check_path(path: &MovePath, from: &WeldedGaussDiagram, to: &WeldedGaussDiagram) {
        assert_eq!(gauss_to_wgd(&path.start).unwrap(), from.canonical());
        assert_eq!(gauss_to_wgd(&path.replay().unwrap()).unwrap(), to.canonical());
    }

    #[test]
    fn identical_inputs_need_no_moves() {
        let w = wgd("O1+ U2+ O3+ U1+ O2+ U3+");
        let budget = SearchBudget::new(3, 1, 1);
        match are_equivalent(&w, &w, &budget).unwrap() {
            Equivalence::Equivalent { path } => assert!(path.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn kink_reduces_to_empty() {
        let kink = WeldedGaussDiagram::from_entries(&[(1, 1, Sign::Minus)]).unwrap();
        let empty = WeldedGaussDiagram::empty();
        match are_equivalent(&kink, &empty, &SearchBudget::new(1, 100, 4)).unwrap() {
            Equivalence::Equivalent { path } => {
                assert_eq!(path.len(), 1);
                assert_eq!(path.records[0].site.kind, crate::moves::MoveKind::R1Delete);
                check_path(&path, &kink, &empty);
            }
            other => panic!("{other:?}"),
        }
        // and the other way round
        match are_equivalent(&empty, &kink, &SearchBudget::new(1, 100, 4)).unwrap() {
            Equivalence::Equivalent { path } => check_path(&path, &empty, &kink),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trefoil_is_not_shown_trivial() {
        let trefoil = wgd("O1+ U2+ O3+ U1+ O2+ U3+");
        let result = are_equivalent(&trefoil, &WeldedGaussDiagram::empty(), &SearchBudget::new(4, 300, 6)).unwrap();
        assert!(matches!(result, Equivalence::Unknown { .. }));
    }

    #[test]
    fn finds_longer_paths() {
        // a bigon next to a kink, against the empty diagram
        let code: GaussCode = "O1+ O2- U1+ U2- O3+ U3+".parse().unwrap();
        let w = gauss_to_wgd(&code).unwrap();
        match are_equivalent(&w, &WeldedGaussDiagram::empty(), &SearchBudget::new(3, 5000, 6)).unwrap() {
            Equivalence::Equivalent { path } => check_path(&path, &w, &WeldedGaussDiagram::empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_budget() {
        let w = wgd("O1+ U1+");
        assert!(are_equivalent(&w, &WeldedGaussDiagram::empty(), &SearchBudget::new(0, 10, 2)).is_err());
    }

    #[test]
    fn deterministic() {
        let a = wgd("O1+ O2- U1+ U2- O3+ U3+");
        let b = wgd("O1- U1-");
        let budget = SearchBudget::new(4, 3000, 6);
        assert_eq!(are_equivalent(&a, &b, &budget).unwrap(), are_equivalent(&a, &b, &budget).unwrap());
    }
}

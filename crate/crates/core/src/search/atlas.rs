use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{visible_kinds, SearchBudget, SearchError};
use crate::invariants::{wgd_fingerprint, FingerprintConfig, InvariantFingerprint};
use crate::model::{encode_wgd, IndexedWgd, Sign, WeldedGaussDiagram};
use crate::moves::wgd_moves;
use crate::symmetry::Reversible;

/// One canonical diagram of the atlas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub wgd: WeldedGaussDiagram,
    pub fingerprint: InvariantFingerprint,
    /// Members connected by moves found within budget share a class.
    pub class: usize,
    /// Smallest class id among the classes joined by global reversal.
    pub orbit: usize,
    /// The exploration from this diagram hit the state or depth cap.
    #[serde(skip)]
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    /// Sorted by crossing count, then by encoding.
    pub records: Vec<AtlasRecord>,
}

impl Atlas {
    pub fn class_count(&self) -> usize {
        self.records.iter().map(|r| r.class).collect::<HashSet<_>>().len()
    }

    pub fn orbit_count(&self) -> usize {
        self.records.iter().map(|r| r.orbit).collect::<HashSet<_>>().len()
    }

    pub fn capped_count(&self) -> usize {
        self.records.iter().filter(|r| r.capped).count()
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }
}

/// Every canonical diagram with exactly `n` crossings, sorted by encoding.
pub fn enumerate_wgds(n: usize) -> Vec<WeldedGaussDiagram> {
    if n == 0 {
        return vec![WeldedGaussDiagram::empty()];
    }
    let total = n.pow(n as u32) << n;
    let mut out: Vec<WeldedGaussDiagram> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut x = code;
            let heads = (0..n)
                .map(|_| {
                    let h = x % n;
                    x /= n;
                    h
                })
                .collect();
            let signs = (0..n)
                .map(|_| {
                    let s = if x % 2 == 0 { Sign::Plus } else { Sign::Minus };
                    x /= 2;
                    s
                })
                .collect();
            let ix = IndexedWgd { heads, signs };
            (ix.canonical_rotation() == 0).then(|| WeldedGaussDiagram::from_indexed(&ix))
        })
        .collect();
    out.sort_by_cached_key(encode_wgd);
    out.dedup();
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            x = std::mem::replace(&mut self.0[x], root);
        }
        root
    }

    /// Keeps the smaller index as the root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Breadth-first exploration from `w`; returns the atlas members seen and whether a cap was hit.
fn explore(w: &WeldedGaussDiagram, members: &HashMap<WeldedGaussDiagram, usize>, budget: &SearchBudget) -> (Vec<usize>, bool) {
    let mut seen: HashSet<WeldedGaussDiagram> = HashSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    let mut reached = Vec::new();
    for _ in 0..budget.max_depth {
        let mut next = Vec::new();
        for state in &frontier {
            for target in wgd_moves(state, visible_kinds(), true, Some(budget.max_crossings)).targets() {
                if seen.contains(target) {
                    continue;
                }
                if seen.len() >= budget.max_states {
                    return (reached, true);
                }
                seen.insert(target.clone());
                if let Some(&i) = members.get(target) {
                    reached.push(i);
                }
                next.push(target.clone());
            }
        }
        if next.is_empty() {
            return (reached, false);
        }
        frontier = next;
    }
    (reached, true)
}

/// All canonical diagrams with at most `n_max` crossings, clustered into move classes and
/// global-reversal orbits.
///
/// Each member is explored within `budget` and joined with every other member it reaches.
/// Classes are therefore lower bounds on true equivalence: two classes may still be equivalent
/// through paths the budget did not allow.
pub fn build_atlas(n_max: usize, budget: &SearchBudget, config: &FingerprintConfig) -> Result<Atlas, SearchError> {
    if budget.max_states == 0 || budget.max_depth == 0 {
        return Err(SearchError::Budget("max_states and max_depth must be positive".into()));
    }
    if budget.max_crossings < n_max {
        return Err(SearchError::Budget(format!("max_crossings {} is below n_max {n_max}", budget.max_crossings)));
    }
    let wgds: Vec<WeldedGaussDiagram> = (0..=n_max).flat_map(enumerate_wgds).collect();
    let index: HashMap<WeldedGaussDiagram, usize> = wgds.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let explored: Vec<(Vec<usize>, bool)> = wgds.par_iter().map(|w| explore(w, &index, budget)).collect();
    let fingerprints = wgds
        .par_iter()
        .map(|w| wgd_fingerprint(w, config))
        .collect::<Result<Vec<_>, _>>()?;

    let mut classes = UnionFind::new(wgds.len());
    for (i, (reached, _)) in explored.iter().enumerate() {
        for &j in reached {
            classes.union(i, j);
        }
    }
    // number classes by their first member
    let mut class_of = vec![0; wgds.len()];
    let mut ids = HashMap::new();
    for i in 0..wgds.len() {
        let root = classes.find(i);
        let next = ids.len();
        class_of[i] = *ids.entry(root).or_insert(next);
    }

    let mut orbits = UnionFind::new(ids.len());
    for (i, w) in wgds.iter().enumerate() {
        let j = index[&w.global_reversal()];
        orbits.union(class_of[i], class_of[j]);
    }

    let records = wgds
        .into_iter()
        .zip(fingerprints)
        .zip(explored)
        .enumerate()
        .map(|(i, ((wgd, fingerprint), (_, capped)))| AtlasRecord {
            wgd,
            fingerprint,
            class: class_of[i],
            orbit: orbits.find(class_of[i]),
            capped,
        })
        .collect();
    Ok(Atlas { records })
}

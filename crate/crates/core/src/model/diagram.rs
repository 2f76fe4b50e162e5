use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::code::Sign;

/// Signed arrow of a Gauss diagram, pointing from the over point to the under point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: u32,
    pub head: u32,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramViolation {
    #[error("point {0} is used by {1} arrow ends")]
    PointUse(u32, usize),
    #[error("arrow end {0} is not a marked point")]
    UnknownPoint(u32),
}

/// A classical Gauss diagram: marked points on an oriented circle and signed arrows between them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussDiagram {
    pub points: Vec<u32>,
    pub arrows: Vec<Arrow>,
}

impl GaussDiagram {
    pub fn validate(&self) -> Result<(), DiagramViolation> {
        let mut uses = vec![0usize; self.points.len()];
        let slot = |p: u32| self.points.iter().position(|&q| q == p);
        for a in &self.arrows {
            for end in [a.tail, a.head] {
                match slot(end) {
                    Some(i) => uses[i] += 1,
                    None => return Err(DiagramViolation::UnknownPoint(end)),
                }
            }
        }
        for (i, &u) in uses.iter().enumerate() {
            if u != 1 {
                return Err(DiagramViolation::PointUse(self.points[i], u));
            }
        }
        Ok(())
    }

    /// Normal form up to rotation, relabeling and commutation of adjacent arrow tails.
    ///
    /// Each entry is `(is_head, index, sign)`: head points carry their rank among heads, tail
    /// points carry the rank of the head they point to (relative to the chosen start). Runs of
    /// consecutive tails are sorted, and the least rotation starting at a head point wins.
    pub fn tail_normal_form(&self) -> Vec<(bool, usize, Sign)> {
        let len = self.points.len();
        let position = |p: u32| self.points.iter().position(|&q| q == p).unwrap();
        // per point: Some(arrow index, is head end)
        let mut ends = vec![(0usize, false); len];
        for (k, a) in self.arrows.iter().enumerate() {
            ends[position(a.tail)] = (k, false);
            ends[position(a.head)] = (k, true);
        }
        let head_points: Vec<usize> = (0..len).filter(|&i| ends[i].1).collect();
        let mut best: Option<Vec<(bool, usize, Sign)>> = None;
        for &start in &head_points {
            let mut rank = vec![usize::MAX; self.arrows.len()];
            let mut r = 0;
            for i in 0..len {
                let (k, is_head) = ends[(start + i) % len];
                if is_head {
                    rank[k] = r;
                    r += 1;
                }
            }
            let mut form = Vec::with_capacity(len);
            let mut run: Vec<(bool, usize, Sign)> = Vec::new();
            for i in 0..len {
                let (k, is_head) = ends[(start + i) % len];
                let sign = self.arrows[k].sign;
                if is_head {
                    run.sort();
                    form.append(&mut run);
                    form.push((true, rank[k], sign));
                } else {
                    run.push((false, rank[k], sign));
                }
            }
            run.sort();
            form.append(&mut run);
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
        }
        best.unwrap_or_default()
    }
}

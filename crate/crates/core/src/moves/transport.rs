//! Carrying a site from one representative code to another.
//!
//! Two codes with the same welded Gauss diagram differ by over-commute moves, a relabeling and a
//! shift of the basepoint. [`transport`] spells out the over-commute moves, then re-expresses the
//! site in the labels and positions of the aligned code.

use std::collections::HashMap;

use crate::convert::welded_diagram_of;
use crate::model::{CrossingId, GaussCode};

use super::code::apply;
use super::site::{MoveError, MoveRecord, MoveSite, Variant};

/// Over passages sitting after the under passage at `at`, in reading order.
fn gap_after(code: &GaussCode, at: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = code.next(at);
    while i != at && code[i].is_over() {
        out.push(i);
        i = code.next(i);
    }
    out
}

/// Alignment moves, the aligned code, the relabeling and the basepoint shift.
pub type Alignment = (Vec<MoveRecord>, GaussCode, HashMap<CrossingId, CrossingId>, usize);

/// Rewrites `current` by over-commute moves until it equals `source` up to relabeling and a
/// basepoint shift. Returns the moves, the rewritten code, the relabeling `source -> current`
/// and the shift `k` with `aligned[(j + k) % len] = relabel(source[j])`.
pub fn align(
    current: &GaussCode,
    source: &GaussCode,
) -> Result<Alignment, MoveError> {
    let wx = welded_diagram_of(current)?;
    let wy = welded_diagram_of(source)?;
    let mismatch = || MoveError::Stale("codes represent different welded diagrams".into());
    let n = wx.crossing_count();
    if n != wy.crossing_count() {
        return Err(mismatch());
    }
    let (ix, iy) = (wx.indexed(), wy.indexed());
    let r = (0..n.max(1))
        .find(|&r| {
            (0..n).all(|i| ix.heads[(i + r) % n] == (iy.heads[i] + r) % n && ix.signs[(i + r) % n] == iy.signs[i])
        })
        .ok_or_else(mismatch)?;
    let sigma: HashMap<CrossingId, CrossingId> =
        (0..n).map(|i| (wy.order()[i], wx.order()[(i + r) % n])).collect();

    let mut code = current.clone();
    let mut records = Vec::new();
    let y_index = source.positions();
    for i in 0..n {
        let want: Vec<CrossingId> = gap_after(source, y_index.under(wy.order()[i]).unwrap())
            .into_iter()
            .map(|p| sigma[&source[p].crossing])
            .collect();
        let owner = wx.order()[(i + r) % n];
        for (t, &wanted) in want.iter().enumerate() {
            loop {
                let at = code.positions().under(owner).unwrap();
                let slots = gap_after(&code, at);
                let have: Vec<CrossingId> = slots.iter().map(|&p| code[p].crossing).collect();
                let pos = have.iter().position(|&c| c == wanted).ok_or_else(mismatch)?;
                if pos == t {
                    break;
                }
                let site = MoveSite {
                    kind: super::MoveKind::Oc,
                    positions: vec![slots[pos - 1]],
                    crossings: vec![have[pos - 1], have[pos]],
                    variant: Variant::Commute,
                };
                let (next, record) = apply(&code, &site)?;
                code = next;
                records.push(record);
            }
        }
    }

    let len = code.len();
    let k = if len == 0 {
        0
    } else {
        let first = source[0];
        let target = crate::model::Passage { crossing: sigma[&first.crossing], ..first };
        let k = code.passages().iter().position(|&p| p == target).ok_or_else(mismatch)?;
        let ok = (0..len).all(|j| {
            let p = source[j];
            code[(j + k) % len] == crate::model::Passage { crossing: sigma[&p.crossing], ..p }
        });
        if !ok {
            return Err(mismatch());
        }
        k
    };
    Ok((records, code, sigma, k))
}

/// Applies to `current` the move that `site` performs on `source`.
///
/// Both codes must represent the same welded Gauss diagram. The returned records (over-commute
/// alignment followed by the move itself) replay on `current`; the code they produce has the same
/// welded Gauss diagram as `apply(source, site)`.
pub fn transport(
    current: &GaussCode,
    source: &GaussCode,
    site: &MoveSite,
) -> Result<(Vec<MoveRecord>, GaussCode), MoveError> {
    let (mut records, aligned, mut sigma, k) = align(current, source)?;
    let len = aligned.len();
    let mapped = if site.kind.is_growth() {
        let (grown, _) = apply(source, site)?;
        let mut fresh = aligned.max_label();
        for &c in &site.crossings {
            fresh += 1;
            sigma.insert(c, CrossingId(fresh));
        }
        let out_len = grown.len();
        // position, in the grown code, of the passage that becomes index 0 of the aligned code
        let q = if len == 0 {
            0
        } else {
            let j0 = (len - k) % len;
            (0..out_len)
                .filter(|&i| !site.crossings.contains(&grown[i].crossing))
                .nth(j0)
                .expect("grown code keeps every original passage")
        };
        MoveSite {
            kind: site.kind,
            positions: site.positions.iter().map(|&p| (p + out_len - q) % out_len).collect(),
            crossings: site.crossings.iter().map(|c| sigma[c]).collect(),
            variant: site.variant,
        }
    } else {
        if len == 0 {
            return Err(MoveError::Stale("no passages to act on".into()));
        }
        let crossings = site
            .crossings
            .iter()
            .map(|c| sigma.get(c).copied().ok_or_else(|| MoveError::Stale(format!("unknown crossing {c}"))))
            .collect::<Result<_, _>>()?;
        MoveSite {
            kind: site.kind,
            positions: site.positions.iter().map(|&p| (p + k) % len).collect(),
            crossings,
            variant: site.variant,
        }
    };
    let (out, record) = apply(&aligned, &mapped)?;
    records.push(record);
    Ok((records, out))
}

//! Conversions between Gauss codes, welded Gauss diagrams and Gauss diagrams.

use std::collections::HashMap;

use crate::model::{
    Arrow, CrossingId, GaussCode, GaussDiagram, IndexedWgd, Passage, Violation, WeldedGaussDiagram,
};

/// Reads the welded Gauss diagram of a code while keeping the code's own labels and basepoint.
///
/// `order` lists crossings by their under passage, running forward from the basepoint. The head
/// of `c` is the crossing of the last under passage met strictly before the over passage of `c`,
/// read cyclically, so a lone kink `U1 O1` or `O1 U1` has head `1 -> 1`.
pub fn welded_diagram_of(code: &GaussCode) -> Result<WeldedGaussDiagram, Violation> {
    code.validate()?;
    let passages = code.passages();
    let Some(last) = passages.iter().rev().find(|p| p.is_under()) else {
        return Ok(WeldedGaussDiagram::empty());
    };
    let mut last_under = last.crossing;
    let mut order = Vec::with_capacity(code.crossing_count());
    let mut map = std::collections::BTreeMap::new();
    for p in passages {
        if p.is_under() {
            order.push(p.crossing);
            last_under = p.crossing;
        } else {
            map.insert(p.crossing, (last_under, p.sign));
        }
    }
    Ok(WeldedGaussDiagram::new(order, map).expect("a valid code yields a valid diagram"))
}

/// Position-indexed welded diagram of a code already known to be valid.
pub(crate) fn indexed_of_valid(code: &GaussCode) -> IndexedWgd {
    let passages = code.passages();
    let n = code.crossing_count();
    let mut slot: HashMap<CrossingId, usize> = HashMap::with_capacity(n);
    for p in passages.iter().filter(|p| p.is_under()) {
        let k = slot.len();
        slot.insert(p.crossing, k);
    }
    let mut heads = vec![0; n];
    let mut signs = vec![crate::model::Sign::Plus; n];
    let mut last_under = n.wrapping_sub(1);
    for p in passages {
        let k = slot[&p.crossing];
        if p.is_under() {
            last_under = k;
            signs[k] = p.sign;
        } else {
            heads[k] = last_under;
        }
    }
    IndexedWgd { heads, signs }
}

/// Canonical welded diagram of a code already known to be valid.
pub(crate) fn canonical_of_valid(code: &GaussCode) -> WeldedGaussDiagram {
    WeldedGaussDiagram::from_indexed(&indexed_of_valid(code).canonical())
}

/// The welded Gauss diagram of a Gauss code, in canonical form.
pub fn gauss_to_wgd(code: &GaussCode) -> Result<WeldedGaussDiagram, Violation> {
    code.validate()?;
    Ok(canonical_of_valid(code))
}

/// A Gauss code realizing `w`, keeping its labels.
///
/// Under passages follow the cyclic order of `w`. The over passage of `c` goes between the under
/// passage of `head(c)` and the next under passage; over passages sharing an interval are sorted
/// by their crossing's position in the order.
pub fn wgd_to_gauss(w: &WeldedGaussDiagram) -> GaussCode {
    let ix = w.indexed();
    code_from_gaps(w.order(), &ix, |i| ix.gap(i))
}

/// Builds a representative code with caller-chosen interval orderings.
pub(crate) fn code_from_gaps(
    labels: &[CrossingId],
    ix: &IndexedWgd,
    mut gap: impl FnMut(usize) -> Vec<usize>,
) -> GaussCode {
    let mut passages = Vec::with_capacity(2 * ix.len());
    for i in 0..ix.len() {
        passages.push(Passage { crossing: labels[i], role: crate::model::Role::Under, sign: ix.signs[i] });
        for j in gap(i) {
            passages.push(Passage { crossing: labels[j], role: crate::model::Role::Over, sign: ix.signs[j] });
        }
    }
    GaussCode::from_passages_unchecked(passages)
}

/// The classical Gauss diagram associated with a welded Gauss diagram.
///
/// One base point per crossing in cyclic order; after the base point of `c`, one extra point for
/// each crossing with head `c` (by ascending label). The arrow of `x` runs from its extra point to
/// its base point and carries the sign of `x`.
pub fn wgd_to_gauss_diagram(w: &WeldedGaussDiagram) -> GaussDiagram {
    let mut next = 1u32;
    let mut base = HashMap::new();
    let mut extra = HashMap::new();
    let mut points = Vec::with_capacity(2 * w.crossing_count());
    for &c in w.order() {
        base.insert(c, next);
        points.push(next);
        next += 1;
        // map is keyed by label, so this iterates in ascending label order
        for (&x, _) in w.map().iter().filter(|(_, &(h, _))| h == c) {
            extra.insert(x, next);
            points.push(next);
            next += 1;
        }
    }
    let arrows = w
        .order()
        .iter()
        .map(|&x| Arrow { tail: extra[&x], head: base[&x], sign: w.sign(x) })
        .collect();
    GaussDiagram { points, arrows }
}

/// Gauss diagram read directly off a code: one point per passage, arrows from over to under.
pub fn gauss_code_to_gauss_diagram(code: &GaussCode) -> Result<GaussDiagram, Violation> {
    code.validate()?;
    let points = (1..=code.len() as u32).collect();
    let index = code.positions();
    let mut arrows: Vec<Arrow> = code
        .passages()
        .iter()
        .filter(|p| p.is_under())
        .map(|p| Arrow {
            tail: index.over(p.crossing).unwrap() as u32 + 1,
            head: index.under(p.crossing).unwrap() as u32 + 1,
            sign: p.sign,
        })
        .collect();
    arrows.sort_by_key(|a| a.head);
    Ok(GaussDiagram { points, arrows })
}

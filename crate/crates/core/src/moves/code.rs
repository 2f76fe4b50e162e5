//! Reidemeister and over-commute rewrites on Gauss codes.

use crate::model::{CrossingId, GaussCode, Passage, Role, Sign};

use super::site::{triangle_realizable, KindSet, MoveError, MoveKind, MoveRecord, MoveSite, Variant};

pub(crate) const KINKS: [(bool, Sign); 4] = [(false, Sign::Plus), (false, Sign::Minus), (true, Sign::Plus), (true, Sign::Minus)];
pub(crate) const BIGONS: [(bool, Sign); 4] = [(true, Sign::Plus), (true, Sign::Minus), (false, Sign::Plus), (false, Sign::Minus)];

fn kink_passages(c: CrossingId, under_first: bool, sign: Sign) -> [Passage; 2] {
    let o = Passage { crossing: c, role: Role::Over, sign };
    let u = Passage { crossing: c, role: Role::Under, sign };
    if under_first {
        [u, o]
    } else {
        [o, u]
    }
}

/// Over window then under window of a bigon.
fn bigon_passages(a: CrossingId, b: CrossingId, parallel: bool, first_sign: Sign) -> [Passage; 4] {
    let (sa, sb) = (first_sign, first_sign.flip());
    let oa = Passage { crossing: a, role: Role::Over, sign: sa };
    let ob = Passage { crossing: b, role: Role::Over, sign: sb };
    let ua = Passage { crossing: a, role: Role::Under, sign: sa };
    let ub = Passage { crossing: b, role: Role::Under, sign: sb };
    if parallel {
        [oa, ob, ua, ub]
    } else {
        [oa, ob, ub, ua]
    }
}

fn insertion_slots(len: usize) -> std::ops::Range<usize> {
    0..len.max(1)
}

pub(crate) fn r1_insert_site(at: usize, label: CrossingId, under_first: bool, sign: Sign) -> MoveSite {
    MoveSite {
        kind: MoveKind::R1Insert,
        positions: vec![at],
        crossings: vec![label],
        variant: Variant::Kink { under_first, sign },
    }
}

/// R2 insertion with the over window placed at input slot `over_slot` and the under window at
/// `under_slot`; when the slots coincide `over_first` orders the two windows.
pub(crate) fn r2_insert_site(
    over_slot: usize,
    under_slot: usize,
    over_first: bool,
    labels: [CrossingId; 2],
    parallel: bool,
    first_sign: Sign,
) -> MoveSite {
    let (o, u) = if over_slot < under_slot || (over_slot == under_slot && over_first) {
        (over_slot, under_slot + 2)
    } else {
        (over_slot + 2, under_slot)
    };
    MoveSite {
        kind: MoveKind::R2Insert,
        positions: vec![o, u],
        crossings: labels.to_vec(),
        variant: Variant::Bigon { parallel, first_sign },
    }
}

pub(crate) fn r1_delete_at(code: &GaussCode, i: usize) -> Option<MoveSite> {
    if code.len() < 2 {
        return None;
    }
    let (p, q) = (code[i], code[code.next(i)]);
    (p.crossing == q.crossing).then(|| MoveSite {
        kind: MoveKind::R1Delete,
        positions: vec![i],
        crossings: vec![p.crossing],
        variant: Variant::Kink { under_first: p.is_under(), sign: p.sign },
    })
}

/// R2 deletion whose over window starts at `i`, if there is one.
pub(crate) fn r2_delete_at(code: &GaussCode, i: usize, index: &crate::model::PassageIndex) -> Option<MoveSite> {
    if code.len() < 4 {
        return None;
    }
    let (p, q) = (code[i], code[code.next(i)]);
    if !(p.is_over() && q.is_over()) || p.crossing == q.crossing || p.sign == q.sign {
        return None;
    }
    let (ua, ub) = (index.under(p.crossing)?, index.under(q.crossing)?);
    let (parallel, u) = if code.next(ua) == ub {
        (true, ua)
    } else if code.next(ub) == ua {
        (false, ub)
    } else {
        return None;
    };
    Some(MoveSite {
        kind: MoveKind::R2Delete,
        positions: vec![i, u],
        crossings: vec![p.crossing, q.crossing],
        variant: Variant::Bigon { parallel, first_sign: p.sign },
    })
}

/// R3 site with the given strand roles, if the three windows are present and realizable.
pub(crate) fn r3_at(
    code: &GaussCode,
    index: &crate::model::PassageIndex,
    [tm, tb, mb]: [CrossingId; 3],
) -> Option<MoveSite> {
    let (o_tm, o_tb, o_mb) = (index.over(tm)?, index.over(tb)?, index.over(mb)?);
    let (u_tm, u_tb, u_mb) = (index.under(tm)?, index.under(tb)?, index.under(mb)?);
    let window = |first: usize, second: usize| -> Option<(usize, bool)> {
        if code.next(first) == second {
            Some((first, true))
        } else if code.next(second) == first {
            Some((second, false))
        } else {
            None
        }
    };
    let (t, top_forward) = window(o_tm, o_tb)?;
    let (m, middle_forward) = window(u_tm, o_mb)?;
    let (b, bottom_forward) = window(u_tb, u_mb)?;
    let signs = [code[o_tm].sign, code[o_tb].sign, code[o_mb].sign];
    triangle_realizable(top_forward, middle_forward, bottom_forward, signs).then(|| MoveSite {
        kind: MoveKind::R3,
        positions: vec![t, m, b],
        crossings: vec![tm, tb, mb],
        variant: Variant::Triangle { top_forward, middle_forward, bottom_forward },
    })
}

pub(crate) fn oc_at(code: &GaussCode, i: usize) -> Option<MoveSite> {
    if code.len() < 2 {
        return None;
    }
    let (p, q) = (code[i], code[code.next(i)]);
    (p.is_over() && q.is_over() && p.crossing != q.crossing).then(|| MoveSite {
        kind: MoveKind::Oc,
        positions: vec![i],
        crossings: vec![p.crossing, q.crossing],
        variant: Variant::Commute,
    })
}

/// Every applicable site of the requested kinds; insert kinds only when `growth_allowed`.
///
/// Inserts are listed once per cyclic insertion slot and variant, with fresh labels above the
/// current maximum. Sites come out grouped by kind in the order R1, R2, R3, OC.
pub fn enumerate_sites(code: &GaussCode, kinds: KindSet, growth_allowed: bool) -> Vec<MoveSite> {
    let kinds = kinds.restricted(growth_allowed);
    let len = code.len();
    let fresh = code.max_label() + 1;
    let index = code.positions();
    let mut sites = Vec::new();

    if kinds.contains(MoveKind::R1Delete) {
        sites.extend((0..len).filter_map(|i| r1_delete_at(code, i)));
    }
    if kinds.contains(MoveKind::R1Insert) {
        for slot in insertion_slots(len) {
            for (under_first, sign) in KINKS {
                sites.push(r1_insert_site(slot, CrossingId(fresh), under_first, sign));
            }
        }
    }
    if kinds.contains(MoveKind::R2Delete) {
        sites.extend((0..len).filter_map(|i| r2_delete_at(code, i, &index)));
    }
    if kinds.contains(MoveKind::R2Insert) {
        let labels = [CrossingId(fresh), CrossingId(fresh + 1)];
        for over_slot in insertion_slots(len) {
            for under_slot in insertion_slots(len) {
                let orders: &[bool] = if over_slot == under_slot { &[true, false] } else { &[true] };
                for &over_first in orders {
                    for (parallel, first_sign) in BIGONS {
                        sites.push(r2_insert_site(over_slot, under_slot, over_first, labels, parallel, first_sign));
                    }
                }
            }
        }
    }
    if kinds.contains(MoveKind::R3) {
        for i in 0..len {
            let (p, q) = (code[i], code[code.next(i)]);
            if !(p.is_over() && q.is_over()) || p.crossing == q.crossing {
                continue;
            }
            for (tm, tb) in [(p.crossing, q.crossing), (q.crossing, p.crossing)] {
                let u = index.under(tm).unwrap();
                for nb in [code.prev(u), code.next(u)] {
                    let mb = code[nb].crossing;
                    if code[nb].is_over() && mb != tm && mb != tb {
                        if let Some(site) = r3_at(code, &index, [tm, tb, mb]) {
                            // the top window is the pair read at i
                            if site.positions[0] == i {
                                sites.push(site);
                            }
                        }
                    }
                }
            }
        }
    }
    if kinds.contains(MoveKind::Oc) {
        sites.extend((0..len).filter_map(|i| oc_at(code, i)));
    }
    sites
}

fn remove_positions(code: &GaussCode, positions: &[usize]) -> GaussCode {
    let passages = code
        .passages()
        .iter()
        .enumerate()
        .filter(|(i, _)| !positions.contains(i))
        .map(|(_, p)| *p)
        .collect();
    GaussCode::from_passages_unchecked(passages)
}

/// Places `placed` at their indices in a code of length `len + placed.len()` and fills the
/// remaining indices with `code` in order.
fn insert_positions(code: &GaussCode, placed: &[(usize, Passage)]) -> Result<GaussCode, MoveError> {
    let out_len = code.len() + placed.len();
    let mut slots: Vec<Option<Passage>> = vec![None; out_len];
    for &(i, p) in placed {
        if i >= out_len || slots[i].is_some() {
            return Err(MoveError::Malformed(format!("insert position {i} out of range or repeated")));
        }
        slots[i] = Some(p);
    }
    let mut rest = code.passages().iter();
    let passages = slots
        .into_iter()
        .map(|s| s.unwrap_or_else(|| *rest.next().expect("counts agree")))
        .collect();
    Ok(GaussCode::from_passages_unchecked(passages))
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<(), MoveError> {
    if cond {
        Ok(())
    } else {
        Err(MoveError::Stale(what()))
    }
}

fn arity(site: &MoveSite, positions: usize, crossings: usize) -> Result<(), MoveError> {
    if site.positions.len() != positions || site.crossings.len() != crossings {
        return Err(MoveError::Malformed(format!(
            "{} needs {positions} positions and {crossings} crossings",
            site.kind
        )));
    }
    Ok(())
}

fn check_window(code: &GaussCode, start: usize, expected: [Passage; 2]) -> Result<[usize; 2], MoveError> {
    if start >= code.len() {
        return Err(MoveError::Malformed(format!("position {start} out of range")));
    }
    let w = [start, code.next(start)];
    expect(code[w[0]] == expected[0] && code[w[1]] == expected[1], || {
        format!("expected {} {} at {}", expected[0], expected[1], start)
    })?;
    Ok(w)
}

/// Applies a site, returning the rewritten code and the record needed to replay or undo it.
pub fn apply(code: &GaussCode, site: &MoveSite) -> Result<(GaussCode, MoveRecord), MoveError> {
    let record = |introduced: Vec<CrossingId>, removed: Vec<CrossingId>| MoveRecord {
        site: site.clone(),
        introduced,
        removed,
    };
    let sign_of = |c: CrossingId| code.passages().iter().find(|p| p.crossing == c).map(|p| p.sign);
    let out = match (site.kind, site.variant) {
        (MoveKind::R1Delete, Variant::Kink { under_first, sign }) => {
            arity(site, 1, 1)?;
            let c = site.crossings[0];
            let w = check_window(code, site.positions[0], kink_passages(c, under_first, sign))?;
            (remove_positions(code, &w), record(vec![], vec![c]))
        }
        (MoveKind::R1Insert, Variant::Kink { under_first, sign }) => {
            arity(site, 1, 1)?;
            let c = site.crossings[0];
            if sign_of(c).is_some() {
                return Err(MoveError::LabelInUse(c));
            }
            let out_len = code.len() + 2;
            let at = site.positions[0];
            let [first, second] = kink_passages(c, under_first, sign);
            let placed = [(at, first), ((at + 1) % out_len, second)];
            (insert_positions(code, &placed)?, record(vec![c], vec![]))
        }
        (MoveKind::R2Delete, Variant::Bigon { parallel, first_sign }) => {
            arity(site, 2, 2)?;
            let (a, b) = (site.crossings[0], site.crossings[1]);
            let [oa, ob, u1, u2] = bigon_passages(a, b, parallel, first_sign);
            let wo = check_window(code, site.positions[0], [oa, ob])?;
            let wu = check_window(code, site.positions[1], [u1, u2])?;
            (remove_positions(code, &[wo[0], wo[1], wu[0], wu[1]]), record(vec![], vec![a, b]))
        }
        (MoveKind::R2Insert, Variant::Bigon { parallel, first_sign }) => {
            arity(site, 2, 2)?;
            let (a, b) = (site.crossings[0], site.crossings[1]);
            for c in [a, b] {
                if sign_of(c).is_some() {
                    return Err(MoveError::LabelInUse(c));
                }
            }
            if a == b || a.0 == 0 || b.0 == 0 {
                return Err(MoveError::Malformed("bigon labels must be distinct and positive".into()));
            }
            let out_len = code.len() + 4;
            let [oa, ob, u1, u2] = bigon_passages(a, b, parallel, first_sign);
            let (o, u) = (site.positions[0], site.positions[1]);
            let placed = [(o, oa), ((o + 1) % out_len, ob), (u, u1), ((u + 1) % out_len, u2)];
            (insert_positions(code, &placed)?, record(vec![a, b], vec![]))
        }
        (MoveKind::R3, Variant::Triangle { top_forward, middle_forward, bottom_forward }) => {
            arity(site, 3, 3)?;
            let [tm, tb, mb] = [site.crossings[0], site.crossings[1], site.crossings[2]];
            let signs = [tm, tb, mb].map(|c| sign_of(c).unwrap_or(Sign::Plus));
            let pass = |c, role| Passage { crossing: c, role, sign: sign_of(c).unwrap_or(Sign::Plus) };
            let ordered = |forward: bool, x: Passage, y: Passage| if forward { [x, y] } else { [y, x] };
            let windows = [
                ordered(top_forward, pass(tm, Role::Over), pass(tb, Role::Over)),
                ordered(middle_forward, pass(tm, Role::Under), pass(mb, Role::Over)),
                ordered(bottom_forward, pass(tb, Role::Under), pass(mb, Role::Under)),
            ];
            expect(
                triangle_realizable(top_forward, middle_forward, bottom_forward, signs),
                || "crossing signs do not form a Reidemeister III triangle".into(),
            )?;
            let mut passages = code.passages().to_vec();
            for (k, expected) in windows.into_iter().enumerate() {
                let w = check_window(code, site.positions[k], expected)?;
                passages.swap(w[0], w[1]);
            }
            (GaussCode::from_passages_unchecked(passages), record(vec![], vec![]))
        }
        (MoveKind::Oc, Variant::Commute) => {
            arity(site, 1, 2)?;
            let (x, y) = (site.crossings[0], site.crossings[1]);
            expect(x != y, || "over commute needs two crossings".into())?;
            let (sx, sy) = (sign_of(x), sign_of(y));
            let (Some(sx), Some(sy)) = (sx, sy) else {
                return Err(MoveError::Stale("unknown crossing".into()));
            };
            let w = check_window(
                code,
                site.positions[0],
                [Passage { crossing: x, role: Role::Over, sign: sx }, Passage { crossing: y, role: Role::Over, sign: sy }],
            )?;
            let mut passages = code.passages().to_vec();
            passages.swap(w[0], w[1]);
            (GaussCode::from_passages_unchecked(passages), record(vec![], vec![]))
        }
        _ => return Err(MoveError::Malformed(format!("variant does not fit {}", site.kind))),
    };
    Ok(out)
}

/// Applies records in sequence.
pub fn replay<'a>(code: &GaussCode, records: impl IntoIterator<Item = &'a MoveRecord>) -> Result<GaussCode, MoveError> {
    records.into_iter().try_fold(code.clone(), |c, r| apply(&c, &r.site).map(|(next, _)| next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::gauss_to_wgd;
    use crate::model::{decode_code, WeldedGaussDiagram};

    fn code(s: &str) -> GaussCode {
        decode_code(s).unwrap()
    }

    fn count(sites: &[MoveSite], kind: MoveKind) -> usize {
        sites.iter().filter(|s| s.kind == kind).count()
    }

    #[test]
    fn empty_code_sites() {
        let sites = enumerate_sites(&GaussCode::empty(), KindSet::ALL, true);
        assert_eq!(count(&sites, MoveKind::R1Insert), 4);
        for k in [MoveKind::R1Delete, MoveKind::R2Delete, MoveKind::R3, MoveKind::Oc] {
            assert_eq!(count(&sites, k), 0);
        }
        let sites = enumerate_sites(&GaussCode::empty(), KindSet::ALL, false);
        assert!(sites.is_empty());
    }

    #[test]
    fn single_oc_site() {
        let c = code("O1+ O2+ U1+ U2+");
        let oc: Vec<_> = enumerate_sites(&c, KindSet::ALL, false)
            .into_iter()
            .filter(|s| s.kind == MoveKind::Oc)
            .collect();
        assert_eq!(oc.len(), 1);
        assert_eq!(oc[0].positions, vec![0]);
        assert_eq!(oc[0].crossings, vec![CrossingId(1), CrossingId(2)]);
        let (out, _) = apply(&c, &oc[0]).unwrap();
        assert_eq!(out, code("O2+ O1+ U1+ U2+"));
        assert_eq!(gauss_to_wgd(&out).unwrap(), gauss_to_wgd(&c).unwrap());
    }

    #[test]
    fn kink_deletes() {
        let sites = enumerate_sites(&code("O1+ U1+"), KindSet::only(MoveKind::R1Delete), false);
        assert_eq!(sites.len(), 2); // both cyclic windows of a two-letter word
        for s in &sites {
            let (out, rec) = apply(&code("O1+ U1+"), s).unwrap();
            assert!(out.is_empty());
            assert_eq!(rec.removed, vec![CrossingId(1)]);
        }
    }

    #[test]
    fn kink_insert_on_empty() {
        for s in enumerate_sites(&GaussCode::empty(), KindSet::only(MoveKind::R1Insert), true) {
            let (out, _) = apply(&GaussCode::empty(), &s).unwrap();
            let Variant::Kink { sign, .. } = s.variant else { unreachable!() };
            let expected = WeldedGaussDiagram::from_entries(&[(1, 1, sign)]).unwrap();
            assert_eq!(gauss_to_wgd(&out).unwrap(), expected);
        }
    }

    #[test]
    fn wrapped_kink_inverts_exactly() {
        let c = code("U1+ O2- U2- O1+");
        let site = r1_delete_at(&c, 3).unwrap();
        let (out, rec) = apply(&c, &site).unwrap();
        assert_eq!(out, code("O2- U2-"));
        let (back, _) = apply(&out, &rec.inverse().site).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn bigon_insert_then_delete_is_identity() {
        let base = code("O1+ U2+ O3+ U1+ O2+ U3+");
        for s in enumerate_sites(&base, KindSet::only(MoveKind::R2Insert), true) {
            let (grown, rec) = apply(&base, &s).unwrap();
            grown.validate().unwrap();
            assert_eq!(grown.crossing_count(), 5);
            let inv = rec.inverse();
            assert!(enumerate_sites(&grown, KindSet::only(MoveKind::R2Delete), false).contains(&inv.site));
            assert_eq!(apply(&grown, &inv.site).unwrap().0, base);
        }
    }

    #[test]
    fn stale_sites_are_rejected() {
        let c = code("O1+ O2+ U1+ U2+");
        let site = oc_at(&c, 0).unwrap();
        let (swapped, _) = apply(&c, &site).unwrap();
        assert!(matches!(apply(&swapped, &site), Err(MoveError::Stale(_))));
        let mut wrong = site.clone();
        wrong.kind = MoveKind::R3;
        assert!(matches!(apply(&c, &wrong), Err(MoveError::Malformed(_))));
        let ins = r1_insert_site(0, CrossingId(1), false, Sign::Plus);
        assert_eq!(apply(&c, &ins).unwrap_err(), MoveError::LabelInUse(CrossingId(1)));
    }

    #[test]
    fn r3_on_standard_triangle() {
        // three strands: top 1,2 ; middle U1 O3 ; bottom U2 U3, with realizable signs
        let c = code("O1+ O2+ U1+ O3+ U2+ U3+");
        let sites = enumerate_sites(&c, KindSet::only(MoveKind::R3), false);
        assert_eq!(sites.len(), 1, "{sites:?}");
        let (out, rec) = apply(&c, &sites[0]).unwrap();
        assert_eq!(out, code("O2+ O1+ O3+ U1+ U3+ U2+"));
        assert_eq!(apply(&out, &rec.inverse().site).unwrap().0, c);
    }
}

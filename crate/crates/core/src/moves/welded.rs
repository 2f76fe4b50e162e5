//! Moves on welded Gauss diagrams.
//!
//! A welded Gauss diagram is a Gauss code modulo over-commute moves, so a Reidemeister move
//! applies to it whenever it applies to *some* code in that class. Every site below is realized
//! on a representative code whose over-passage intervals are arranged to expose it, and the
//! code-level engine performs the rewrite.

use std::collections::BTreeSet;

use crate::convert::{canonical_of_valid, code_from_gaps};
use crate::model::{CrossingId, GaussCode, IndexedWgd, WeldedGaussDiagram};

use super::code::{apply, oc_at, r1_delete_at, r1_insert_site, r2_delete_at, r2_insert_site, r3_at, BIGONS, KINKS};
use super::site::{KindSet, MoveKind, MoveSite};

/// One move out of a welded Gauss diagram, witnessed by a code-level site on `reps[rep]`.
#[derive(Clone, Debug)]
pub struct WgdMove {
    pub rep: usize,
    pub site: MoveSite,
    pub target: WeldedGaussDiagram,
}

/// All moves out of one diagram together with the representative codes they act on.
#[derive(Clone, Debug, Default)]
pub struct MoveFan {
    pub source: WeldedGaussDiagram,
    pub reps: Vec<GaussCode>,
    pub moves: Vec<WgdMove>,
}

impl MoveFan {
    pub fn targets(&self) -> impl Iterator<Item = &WeldedGaussDiagram> {
        self.moves.iter().map(|m| &m.target)
    }
}

struct Builder<'a> {
    labels: &'a [CrossingId],
    ix: &'a IndexedWgd,
    gaps: Vec<Vec<usize>>,
    fan: MoveFan,
}

impl Builder<'_> {
    fn rep(&self, overrides: &[(usize, Vec<usize>)]) -> GaussCode {
        code_from_gaps(self.labels, self.ix, |i| match overrides.iter().find(|(g, _)| *g == i) {
            Some((_, order)) => order.clone(),
            None => self.gaps[i].clone(),
        })
    }

    fn push_rep(&mut self, rep: GaussCode) -> usize {
        self.fan.reps.push(rep);
        self.fan.reps.len() - 1
    }

    fn push(&mut self, rep: usize, site: Option<MoveSite>) {
        let site = site.expect("arranged representative exposes the site");
        let (out, _) = apply(&self.fan.reps[rep], &site).expect("enumerated sites apply");
        let target = canonical_of_valid(&out);
        self.fan.moves.push(WgdMove { rep, site, target });
    }

    fn without(&self, g: usize, drop: &[usize]) -> Vec<usize> {
        self.gaps[g].iter().copied().filter(|x| !drop.contains(x)).collect()
    }

    fn label(&self, i: usize) -> CrossingId {
        self.labels[i]
    }
}

/// Every move of the requested kinds out of `w` (taken up to canonical form), with witnesses.
///
/// Insert kinds are included only when `growth_allowed`, and only while the result stays within
/// `max_crossings`.
pub fn wgd_moves(w: &WeldedGaussDiagram, kinds: KindSet, growth_allowed: bool, max_crossings: Option<usize>) -> MoveFan {
    let source = w.canonical();
    let ix = source.indexed();
    let labels = source.order().to_vec();
    let n = ix.len();
    let gaps = (0..n).map(|i| ix.gap(i)).collect();
    let mut b = Builder {
        labels: &labels,
        ix: &ix,
        gaps,
        fan: MoveFan { source: source.clone(), ..MoveFan::default() },
    };
    let kinds = kinds.restricted(growth_allowed);
    let fits = |delta: usize| max_crossings.is_none_or(|m| n + delta <= m);

    if kinds.contains(MoveKind::R1Delete) {
        for c in 0..n {
            if ix.heads[c] == c {
                let mut order = vec![c];
                order.extend(b.without(c, &[c]));
                let rep = b.push_rep(b.rep(&[(c, order)]));
                let at = b.fan.reps[rep].positions().under(b.label(c)).unwrap();
                let site = r1_delete_at(&b.fan.reps[rep], at);
                b.push(rep, site);
            }
            let p = ix.pred(c);
            if ix.heads[c] == p && p != c {
                let mut order = b.without(p, &[c]);
                order.push(c);
                let rep = b.push_rep(b.rep(&[(p, order)]));
                let code = &b.fan.reps[rep];
                let at = code.prev(code.positions().under(b.label(c)).unwrap());
                let site = r1_delete_at(code, at);
                b.push(rep, site);
            }
        }
    }

    if kinds.contains(MoveKind::R2Delete) {
        for a in 0..n {
            for c in 0..n {
                let adjacent = ix.succ(a) == c && b.gaps[a].is_empty();
                if a == c || ix.heads[a] != ix.heads[c] || ix.signs[a] == ix.signs[c] || !adjacent {
                    continue;
                }
                // a's under passage comes first; lay the over window out in the same order
                let g = ix.heads[a];
                let mut order = vec![a, c];
                order.extend(b.without(g, &[a, c]));
                let rep = b.push_rep(b.rep(&[(g, order)]));
                let code = &b.fan.reps[rep];
                let index = code.positions();
                let site = r2_delete_at(code, index.over(b.label(a)).unwrap(), &index);
                b.push(rep, site);
            }
        }
    }

    if kinds.contains(MoveKind::R3) {
        for tm in 0..n {
            for tb in 0..n {
                if tm == tb || ix.heads[tm] != ix.heads[tb] {
                    continue;
                }
                for mb in 0..n {
                    if mb == tm || mb == tb {
                        continue;
                    }
                    let middle = if ix.heads[mb] == tm {
                        Some(true)
                    } else if ix.heads[mb] == ix.pred(tm) {
                        Some(false)
                    } else {
                        None
                    };
                    let Some(middle_forward) = middle else { continue };
                    let bottoms = [
                        (ix.succ(tb) == mb && b.gaps[tb].is_empty(), true),
                        (ix.succ(mb) == tb && b.gaps[mb].is_empty(), false),
                    ];
                    for (ok, bottom_forward) in bottoms {
                        if !ok {
                            continue;
                        }
                        let [e_tm, e_tb, e_mb] = [tm, tb, mb].map(|i| ix.signs[i].is_positive());
                        if (e_tm ^ e_tb) != (middle_forward ^ bottom_forward) {
                            continue;
                        }
                        let top_forward = (e_tb ^ e_mb) ^ middle_forward;
                        let pair = if top_forward { [tm, tb] } else { [tb, tm] };
                        let g = ix.heads[tm];
                        let h = if middle_forward { tm } else { ix.pred(tm) };
                        let overrides = if g == h {
                            let rest = b.without(g, &[tm, tb, mb]);
                            let order = if middle_forward {
                                [vec![mb], pair.to_vec(), rest].concat()
                            } else {
                                [rest, pair.to_vec(), vec![mb]].concat()
                            };
                            vec![(g, order)]
                        } else {
                            let top = [pair.to_vec(), b.without(g, &pair)].concat();
                            let mid = if middle_forward {
                                [vec![mb], b.without(h, &[mb])].concat()
                            } else {
                                [b.without(h, &[mb]), vec![mb]].concat()
                            };
                            vec![(g, top), (h, mid)]
                        };
                        let rep = b.push_rep(b.rep(&overrides));
                        let code = &b.fan.reps[rep];
                        let site = r3_at(code, &code.positions(), [tm, tb, mb].map(|i| b.label(i)));
                        b.push(rep, site);
                    }
                }
            }
        }
    }

    if kinds.contains(MoveKind::Oc) && b.gaps.iter().any(|g| g.len() >= 2) {
        let rep = b.push_rep(b.rep(&[]));
        let code = &b.fan.reps[rep];
        let site = (0..code.len()).find_map(|i| oc_at(code, i));
        b.push(rep, site);
    }

    let r1 = kinds.contains(MoveKind::R1Insert) && fits(1);
    let r2 = kinds.contains(MoveKind::R2Insert) && fits(2);
    if r1 || r2 {
        let mut points: Vec<(GaussCode, usize)> = Vec::new();
        if n == 0 {
            points.push((GaussCode::empty(), 0));
        }
        for g in 0..n {
            let members = b.gaps[g].clone();
            for mask in 0u32..(1 << members.len()) {
                let (before, after): (Vec<(usize, &usize)>, Vec<(usize, &usize)>) =
                    members.iter().enumerate().partition(|(k, _)| mask & (1 << k) != 0);
                let order: Vec<usize> = before.iter().chain(&after).map(|(_, &x)| x).collect();
                let rep = b.rep(&[(g, order)]);
                let slot = (rep.positions().under(b.label(g)).unwrap() + 1 + before.len()) % rep.len();
                points.push((rep, slot));
            }
        }
        let fresh = [CrossingId(n as u32 + 1), CrossingId(n as u32 + 2)];
        for (rep, slot) in points {
            let len = rep.len();
            let rep = b.push_rep(rep);
            if r1 {
                for (under_first, sign) in KINKS {
                    b.push(rep, Some(r1_insert_site(slot, fresh[0], under_first, sign)));
                }
            }
            if r2 {
                for over_slot in 0..len.max(1) {
                    let orders: &[bool] = if over_slot == slot { &[true, false] } else { &[true] };
                    for &over_first in orders {
                        for (parallel, first_sign) in BIGONS {
                            let site = r2_insert_site(over_slot, slot, over_first, fresh, parallel, first_sign);
                            b.push(rep, Some(site));
                        }
                    }
                }
            }
        }
    }
    b.fan
}

/// Diagrams one move away from `w`, as canonical forms.
pub fn wgd_neighbors(w: &WeldedGaussDiagram, kinds: KindSet, growth_allowed: bool) -> BTreeSet<WeldedGaussDiagram> {
    wgd_moves(w, kinds, growth_allowed, None).moves.into_iter().map(|m| m.target).collect()
}

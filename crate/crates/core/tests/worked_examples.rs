use std::collections::BTreeSet;

use welded::convert::{gauss_to_wgd, wgd_to_gauss, wgd_to_gauss_diagram};
use welded::invariants::{arcs, fingerprint, hom_count, FiniteGroup, FingerprintConfig};
use welded::model::{decode_code, CrossingId, GaussCode, Sign::*, Violation, WeldedGaussDiagram};
use welded::moves::{apply, enumerate_sites, wgd_neighbors, KindSet, MoveKind};
use welded::symmetry::Reversible;

/// The six-crossing diagram a..f: a->(c,+) b->(c,+) c->(b,-) d->(e,-) e->(b,-) f->(b,+).
fn six() -> WeldedGaussDiagram {
    WeldedGaussDiagram::from_entries(&[
        (1, 3, Plus),
        (2, 3, Plus),
        (3, 2, Minus),
        (4, 5, Minus),
        (5, 2, Minus),
        (6, 2, Plus),
    ])
    .unwrap()
}

fn trefoil() -> GaussCode {
    decode_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap()
}

#[test]
fn validation_examples() {
    assert!(trefoil().validate().is_ok());
    assert!(GaussCode::empty().validate().is_ok());
    let err = GaussCode::new(vec![
        welded::Passage::over(1, Plus),
        welded::Passage::under(1, Minus),
    ])
    .unwrap_err();
    assert!(matches!(err, Violation::SignMismatch { crossing: CrossingId(1), .. }));
}

#[test]
fn six_crossing_round_trip() {
    let w = six();
    assert_eq!(gauss_to_wgd(&wgd_to_gauss(&w)).unwrap(), w.canonical());
}

#[test]
fn six_crossing_gauss_diagram() {
    let w = six();
    let d = wgd_to_gauss_diagram(&w);
    assert_eq!(d.points.len(), 12);
    assert_eq!(d.arrows.len(), 6);
    // tails sit right after the base point of the head crossing
    let base: Vec<u32> = d.arrows.iter().map(|a| a.head).collect();
    let owner = |point: u32| *base.iter().filter(|&&b| b < point).max().unwrap();
    let tails_after = |c: usize| -> BTreeSet<usize> {
        d.arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| owner(a.tail) == base[c - 1])
            .map(|(i, _)| i + 1)
            .collect()
    };
    assert_eq!(tails_after(2), BTreeSet::from([3, 5, 6]));
    assert_eq!(tails_after(3), BTreeSet::from([1, 2]));
    assert_eq!(tails_after(5), BTreeSet::from([4]));
    assert!(tails_after(1).is_empty());
}

#[test]
fn six_crossing_reversals() {
    let w = six();
    let g = w.global_reversal();
    assert_eq!(g, w.bar().reverse());
    assert_eq!(g.crossing_count(), 6);
    assert_eq!(g.global_reversal(), w.canonical());
}

#[test]
fn convert_kink() {
    let w = gauss_to_wgd(&decode_code("O1+ U1+").unwrap()).unwrap();
    assert_eq!(w, WeldedGaussDiagram::from_entries(&[(1, 1, Plus)]).unwrap());
}

#[test]
fn move_examples() {
    let sites = enumerate_sites(&GaussCode::empty(), KindSet::ALL, true);
    assert!(sites.iter().all(|s| s.kind.is_growth()));
    assert_eq!(sites.iter().filter(|s| s.kind == MoveKind::R1Insert).count(), 4);
    for s in sites.iter().filter(|s| s.kind == MoveKind::R1Insert) {
        let (out, _) = apply(&GaussCode::empty(), s).unwrap();
        let w = gauss_to_wgd(&out).unwrap();
        assert_eq!(w.head(CrossingId(1)), CrossingId(1));
    }

    let code = decode_code("O1+ O2+ U1+ U2+").unwrap();
    let oc: Vec<_> = enumerate_sites(&code, KindSet::ALL, true).into_iter().filter(|s| s.kind == MoveKind::Oc).collect();
    assert_eq!(oc.len(), 1);
    assert_eq!(oc[0].positions, vec![0]);
    let (out, _) = apply(&code, &oc[0]).unwrap();
    assert_eq!(out.to_string(), "O2+ O1+ U1+ U2+");
    assert_eq!(gauss_to_wgd(&out).unwrap(), gauss_to_wgd(&code).unwrap());

    let kink = decode_code("O1+ U1+").unwrap();
    assert!(enumerate_sites(&kink, KindSet::ALL, false)
        .iter()
        .any(|s| s.kind == MoveKind::R1Delete && s.crossings == vec![CrossingId(1)]));
}

#[test]
fn r2_insert_then_delete_is_identity_for_every_variant() {
    for text in ["", "O1+ U1+", "O1+ U2+ O3+ U1+ O2+ U3+"] {
        let code = decode_code(text).unwrap();
        for site in enumerate_sites(&code, KindSet::only(MoveKind::R2Insert), true) {
            let (grown, record) = apply(&code, &site).unwrap();
            let (back, _) = apply(&grown, &record.inverse().site).unwrap();
            assert_eq!(back, code, "{site}");
            let deletes = enumerate_sites(&grown, KindSet::only(MoveKind::R2Delete), false);
            assert!(deletes.contains(&record.inverse().site), "{site}");
        }
    }
}

#[test]
fn wgd_move_examples() {
    let empty = WeldedGaussDiagram::empty();
    let ones: BTreeSet<_> = [Plus, Minus].map(|s| WeldedGaussDiagram::from_entries(&[(1, 1, s)]).unwrap()).into();
    let grown = wgd_neighbors(&empty, KindSet::ALL, true);
    assert!(ones.is_subset(&grown));
    assert_eq!(wgd_neighbors(&six(), KindSet::only(MoveKind::Oc), false), BTreeSet::from([six().canonical()]));
}

#[test]
fn arc_and_count_examples() {
    assert_eq!(arcs(&trefoil()).unwrap().arc_count, 3);
    let s3 = FiniteGroup::symmetric3();
    assert_eq!(hom_count(&trefoil(), &s3).unwrap(), 12);
    assert_eq!(hom_count(&decode_code("U1- O1-").unwrap(), &s3).unwrap(), 6);
    let config = FingerprintConfig::new(vec![3, 5], &[] as &[&str]).unwrap();
    assert_eq!(fingerprint(&trefoil(), &config).unwrap().to_string(), "{3: 9, 5: 5}");
    assert_eq!(fingerprint(&GaussCode::empty(), &config).unwrap().to_string(), "{3: 3, 5: 5}");
}

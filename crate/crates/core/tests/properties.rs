use proptest::prelude::*;

use welded::gen::{random_code, random_walk, random_wgd, seeded};
use welded::invariants::{coloring_count, hom_count, FiniteGroup};
use welded::model::{decode_code, decode_wgd, encode_code, encode_wgd, CrossingId, WeldedGaussDiagram};
use welded::moves::{apply, enumerate_sites, wgd_neighbors, KindSet, MoveKind};
use welded::symmetry::{bar_code, Reversible};
use welded::{gauss_code_to_gauss_diagram, gauss_to_wgd, wgd_to_gauss, wgd_to_gauss_diagram};

fn code_strategy(max_n: usize) -> impl Strategy<Value = welded::GaussCode> {
    (any::<u64>(), 0..=max_n).prop_map(|(seed, n)| random_code(&mut seeded(seed), n))
}

fn wgd_strategy(max_n: usize) -> impl Strategy<Value = WeldedGaussDiagram> {
    (any::<u64>(), 0..=max_n).prop_map(|(seed, n)| random_wgd(&mut seeded(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_is_idempotent(w in wgd_strategy(8)) {
        let c = w.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c);
    }

    #[test]
    fn canonical_ignores_rotation_and_labels(w in wgd_strategy(8), shift in 0usize..8, offset in 1u32..50) {
        let code = wgd_to_gauss(&w);
        let moved = code.relabeled(|c| CrossingId(c.0 + offset));
        let moved = if moved.is_empty() { moved } else { moved.rotated(shift % moved.len()) };
        prop_assert_eq!(gauss_to_wgd(&moved).unwrap(), w.canonical());
    }

    #[test]
    fn codecs_round_trip(code in code_strategy(8), w in wgd_strategy(8)) {
        prop_assert_eq!(decode_code(&encode_code(&code)).unwrap(), code);
        prop_assert_eq!(decode_wgd(&encode_wgd(&w)).unwrap(), w);
    }

    #[test]
    fn generated_codes_pair_passages(code in code_strategy(8)) {
        let index = code.positions();
        for p in code.passages() {
            prop_assert!(index.over(p.crossing).is_some() && index.under(p.crossing).is_some());
        }
        prop_assert_eq!(code.len(), 2 * code.crossing_count());
    }

    #[test]
    fn realizations_sit_in_their_intervals(w in wgd_strategy(8)) {
        let code = wgd_to_gauss(&w);
        prop_assert!(code.validate().is_ok());
        let raw = welded::welded_diagram_of(&code).unwrap();
        prop_assert_eq!(raw, w);
    }

    #[test]
    fn gauss_diagram_sizes(w in wgd_strategy(8)) {
        let d = wgd_to_gauss_diagram(&w);
        prop_assert_eq!(d.arrows.len(), w.crossing_count());
        prop_assert_eq!(d.points.len(), 2 * w.crossing_count());
        prop_assert!(d.validate().is_ok());
    }

    #[test]
    fn both_gauss_diagram_paths_agree(code in code_strategy(7)) {
        let direct = gauss_code_to_gauss_diagram(&code).unwrap();
        let via = wgd_to_gauss_diagram(&gauss_to_wgd(&code).unwrap());
        prop_assert_eq!(direct.tail_normal_form(), via.tail_normal_form());
    }

    #[test]
    fn applied_moves_are_valid_and_invertible(code in code_strategy(6), pick in any::<prop::sample::Index>()) {
        let sites = enumerate_sites(&code, KindSet::ALL, true);
        let site = pick.get(&sites);
        let (out, record) = apply(&code, site).unwrap();
        prop_assert!(out.validate().is_ok());
        prop_assert_eq!(
            out.crossing_count() as isize - code.crossing_count() as isize,
            site.kind.delta()
        );
        let (back, _) = apply(&out, &record.inverse().site).unwrap();
        prop_assert_eq!(back, code);
    }

    #[test]
    fn oc_is_invisible(code in code_strategy(8)) {
        let w = gauss_to_wgd(&code).unwrap();
        for site in enumerate_sites(&code, KindSet::only(MoveKind::Oc), false) {
            let (out, _) = apply(&code, &site).unwrap();
            prop_assert_eq!(gauss_to_wgd(&out).unwrap(), w.clone());
        }
    }

    #[test]
    fn reversal_laws(w in wgd_strategy(8)) {
        let c = w.canonical();
        prop_assert_eq!(w.reverse().reverse(), c.clone());
        prop_assert_eq!(w.bar().bar(), w.clone());
        prop_assert_eq!(w.global_reversal().global_reversal(), c);
        prop_assert_eq!(w.reverse().bar().canonical(), w.bar().reverse());
    }

    #[test]
    fn bar_contract(code in code_strategy(8)) {
        prop_assert_eq!(gauss_to_wgd(&bar_code(&code)).unwrap(), gauss_to_wgd(&code).unwrap().bar().canonical());
    }

    #[test]
    fn invariants_survive_walks(seed in any::<u64>(), n in 0usize..=5) {
        let mut rng = seeded(seed);
        let start = random_code(&mut rng, n);
        let (end, _) = random_walk(&mut rng, &start, 10, n + 4);
        let s3 = FiniteGroup::symmetric3();
        for p in [3, 5, 7] {
            prop_assert_eq!(coloring_count(&start, p).unwrap(), coloring_count(&end, p).unwrap());
        }
        prop_assert_eq!(hom_count(&start, &s3).unwrap(), hom_count(&end, &s3).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn global_reversal_is_move_equivariant(w in wgd_strategy(4), pick in any::<prop::sample::Index>()) {
        let neighbors: Vec<_> = wgd_neighbors(&w, KindSet::ALL, true).into_iter().collect();
        let v = pick.get(&neighbors);
        prop_assert!(wgd_neighbors(&w.global_reversal(), KindSet::ALL, true).contains(&v.global_reversal()));
    }
}

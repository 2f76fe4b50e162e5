//! Seeded random codes, diagrams and move sequences for tests, benchmarks and demos.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{CrossingId, GaussCode, Passage, Role, Sign, WeldedGaussDiagram};
use crate::moves::{apply, enumerate_sites, KindSet, MoveKind, MoveRecord};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A uniformly shuffled valid code with `n` crossings labeled `1..=n`.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GaussCode {
    let mut passages = Vec::with_capacity(2 * n);
    for c in 1..=n as u32 {
        let sign = random_sign(rng);
        passages.push(Passage::new(c, Role::Over, sign));
        passages.push(Passage::new(c, Role::Under, sign));
    }
    passages.shuffle(rng);
    GaussCode::from_passages_unchecked(passages)
}

/// A diagram with `n` crossings, random heads and signs and shuffled labels (not canonical).
pub fn random_wgd<R: Rng + ?Sized>(rng: &mut R, n: usize) -> WeldedGaussDiagram {
    let mut order: Vec<CrossingId> = (1..=n as u32).map(CrossingId).collect();
    order.shuffle(rng);
    let map = order
        .iter()
        .map(|&c| (c, (order[rng.gen_range(0..n)], random_sign(rng))))
        .collect();
    WeldedGaussDiagram::new(order, map).expect("labels and heads are drawn from the order")
}

/// One random move: a kind is chosen uniformly among the kinds with a site, then a site of that
/// kind. Growth moves are skipped when they would exceed `max_crossings`.
pub fn random_move<R: Rng + ?Sized>(
    rng: &mut R,
    code: &GaussCode,
    kinds: KindSet,
    max_crossings: usize,
) -> Option<(GaussCode, MoveRecord)> {
    let n = code.crossing_count() as isize;
    let cap = max_crossings.min(isize::MAX as usize) as isize;
    let sites = enumerate_sites(code, kinds, true);
    let available: Vec<MoveKind> = MoveKind::ALL
        .into_iter()
        .filter(|&k| n + k.delta() <= cap && sites.iter().any(|s| s.kind == k))
        .collect();
    let kind = *available.choose(rng)?;
    let of_kind: Vec<_> = sites.iter().filter(|s| s.kind == kind).collect();
    let site = of_kind.choose(rng)?;
    Some(apply(code, site).expect("enumerated sites apply"))
}

/// A random walk of at most `len` moves.
pub fn random_walk<R: Rng + ?Sized>(
    rng: &mut R,
    start: &GaussCode,
    len: usize,
    max_crossings: usize,
) -> (GaussCode, Vec<MoveRecord>) {
    let mut code = start.clone();
    let mut records = Vec::with_capacity(len);
    for _ in 0..len {
        let Some((next, record)) = random_move(rng, &code, KindSet::ALL, max_crossings) else { break };
        code = next;
        records.push(record);
    }
    (code, records)
}

/// The unknot after `growth_moves` random R1/R2 insertions.
pub fn scramble_unknot<R: Rng + ?Sized>(rng: &mut R, growth_moves: usize) -> (GaussCode, Vec<MoveRecord>) {
    let kinds = KindSet::only(MoveKind::R1Insert).with(MoveKind::R2Insert);
    let mut code = GaussCode::empty();
    let mut records = Vec::with_capacity(growth_moves);
    for _ in 0..growth_moves {
        let (next, record) = random_move(rng, &code, kinds, usize::MAX).expect("inserts always apply");
        code = next;
        records.push(record);
    }
    (code, records)
}

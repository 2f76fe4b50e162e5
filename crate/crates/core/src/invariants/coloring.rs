use thiserror::Error;

use super::arcs::{arcs_of_valid, ArcStructure};
use crate::model::{GaussCode, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("count {base}^{exp} does not fit in 64 bits")]
    Overflow { base: u64, exp: u32 },
    #[error(transparent)]
    Invalid(#[from] Violation),
    #[error(transparent)]
    Group(#[from] super::group::GroupError),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
}

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3 && !p.is_multiple_of(2) && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank of a matrix over Z/p.
fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..cols {
                    rows[r][c] = (rows[r][c] + p * p - f * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the space of Fox `p`-colorings: `x_out - 2 x_over + x_in = 0` at every crossing.
pub(crate) fn coloring_dimension(structure: &ArcStructure, p: u64) -> usize {
    let rows = structure
        .crossings
        .iter()
        .map(|c| {
            let mut row = vec![0u64; structure.arc_count];
            row[c.out_arc] = (row[c.out_arc] + 1) % p;
            row[c.in_arc] = (row[c.in_arc] + 1) % p;
            row[c.over_arc] = (row[c.over_arc] + p - 2) % p;
            row
        })
        .collect();
    structure.arc_count - rank_mod(rows, p)
}

/// Number of Fox `p`-colorings of the arcs.
pub fn coloring_count(code: &GaussCode, p: u64) -> Result<u64, InvariantError> {
    if !is_odd_prime(p) {
        return Err(InvariantError::NotOddPrime(p));
    }
    code.validate()?;
    let exp = coloring_dimension(&arcs_of_valid(code), p) as u32;
    p.checked_pow(exp).ok_or(InvariantError::Overflow { base: p, exp })
}

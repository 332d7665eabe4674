use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fpring::{GradedPoly, RingElement};

/// Largest supported matrix dimension; column subsets are `u64` masks.
pub const MAX_DIMENSION: usize = 63;

/// Determinant over a commutative ring by cofactor expansion along rows,
/// memoized on the set of columns already used.
///
/// Only column subsets reachable through nonzero entries are visited, so
/// banded and triangular matrices cost far less than the `2^n · n` worst
/// case. Signs follow the usual alternation; in characteristic 2 they are
/// no-ops.
pub fn determinant<R: RingElement>(rows: &[Vec<R>]) -> Result<R> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Structural("empty matrix".into()));
    }
    if n > MAX_DIMENSION {
        return Err(Error::Structural(format!(
            "dimension {n} exceeds the supported maximum {MAX_DIMENSION}"
        )));
    }
    let anchor = &rows[0][0];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Structural(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|e| !e.compatible(anchor)) {
            return Err(Error::Structural(format!(
                "entry ({i}, {j}) lives in a different ring"
            )));
        }
    }
    let mut memo = HashMap::new();
    Ok(expand(rows, 0, 0, &mut memo))
}

fn expand<R: RingElement>(rows: &[Vec<R>], row: usize, used: u64, memo: &mut HashMap<u64, R>) -> R {
    let n = rows.len();
    if row == n {
        return rows[0][0].one_like();
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let mut acc = rows[0][0].zero_like();
    let mut free_before = 0usize;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &rows[row][col];
        if !entry.is_zero() {
            let minor = expand(rows, row + 1, used | (1 << col), memo);
            if !minor.is_zero() {
                let term = entry.times(&minor);
                acc = if free_before.is_multiple_of(2) {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Exact determinant of a square matrix of classes sharing one ring.
pub fn ring_determinant(entries: &[Vec<GradedPoly>]) -> Result<GradedPoly> {
    determinant(entries)
}

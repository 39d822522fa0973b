//! Λ-shaped members of a class.
//!
//! A Λ-shaped permutation is fixed by the set `S` of letters left of `n`:
//! `S` increasing, then `n`, then the rest decreasing. A pair `x < y` is
//! an inversion unless `x` lies in `S`, so
//! `inv = C(n, 2) - sum_{x in S} (n - x)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::ClassKey;

/// The Λ-shaped permutation whose increasing part (before `n`) is `left`.
pub fn lambda_word(left: &BTreeSet<u8>, n: usize) -> Permutation {
    let n8 = n as u8;
    let tail = (1..n8).rev().filter(|l| !left.contains(l));
    let word = left.iter().copied().chain([n8]).chain(tail).collect();
    Permutation::from_vec_unchecked(word)
}

/// All Λ-shaped permutations in the class with the given key.
pub fn lambda_members(key: &ClassKey) -> BTreeSet<Permutation> {
    let n = key.n;
    assert!(n <= 40, "2^(n-1) enumeration");
    let total = n * (n - 1) / 2;
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << (n - 1) {
        // bit x-1 set means letter x is left of n
        if (mask & 1 == 1) != key.one_before_n {
            continue;
        }
        let free: usize = (1..n).filter(|x| mask >> (x - 1) & 1 == 1).map(|x| n - x).sum();
        if total - free != key.inv {
            continue;
        }
        let left = (1..n as u8).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        out.insert(lambda_word(&left, n));
    }
    out
}

/// One step of the rewriting chain from a Λ-shaped permutation toward the
/// canonical member of its class.
///
/// Picks the largest `b` in the increasing part (`b > 1`, or `b > 2` when
/// `n` precedes `1`) whose predecessor `b-1` is absent and which has a
/// larger companion `c < n` in the part; `c` is the next such letter. With
/// `d` the least letter above `c` missing from the part, `(b, d-1)` is
/// replaced by `(b-1, d)`; without such `d`, `b` becomes `b-1` and `n-1`
/// is dropped. Returns `None` exactly on canonical permutations.
pub fn next_lambda_down(p: &Permutation) -> Result<Option<Permutation>> {
    if !p.is_lambda() {
        return Err(Error::NotLambda(p.to_string()));
    }
    let n = p.len();
    if n < 3 {
        return Ok(None);
    }
    let n8 = n as u8;
    let peak = p.position(n8).expect("permutation contains n");
    let mut left: BTreeSet<u8> = p.as_slice()[..peak].iter().copied().collect();
    let floor = if left.contains(&1) { 1 } else { 2 };

    let b = left
        .iter()
        .rev()
        .copied()
        .filter(|&b| b > floor && b < n8 && !left.contains(&(b - 1)))
        .find(|&b| left.range(b + 1..n8).next().is_some());
    let Some(b) = b else {
        return Ok(None);
    };
    let c = *left.range(b + 1..n8).next().expect("checked above");
    let d = (c + 1..n8).find(|x| !left.contains(x));

    left.remove(&b);
    left.insert(b - 1);
    match d {
        Some(d) => {
            left.remove(&(d - 1));
            left.insert(d);
        }
        None => {
            left.remove(&(n8 - 1));
        }
    }
    Ok(Some(lambda_word(&left, n)))
}

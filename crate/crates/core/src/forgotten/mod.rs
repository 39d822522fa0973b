//! Forgotten classes of permutations.
//!
//! On permutations the forgotten relations act on three consecutive letters
//! `a < b < c` as `acb <-> bac` and `bca <-> cab`. A class is determined by
//! its [`ClassKey`]: the size, the inversion number, and whether `1` comes
//! before `n`.

mod canonical;
mod lambda;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use canonical::{
    canonical_of, classes_count, insert, is_canonical, lex_enumerate, CanonicalForm, Family,
};
pub use lambda::{lambda_members, lambda_word, next_lambda_down};

/// Image of a window `xyz` under the two permutation rules, if any.
fn rewrite_window(x: u8, y: u8, z: u8) -> Option<[u8; 3]> {
    // acb <-> bac
    if x < z && z < y {
        return Some([z, x, y]);
    }
    if y < x && x < z {
        return Some([y, z, x]);
    }
    // bca <-> cab
    if z < x && x < y {
        return Some([y, z, x]);
    }
    if y < z && z < x {
        return Some([z, x, y]);
    }
    None
}

fn for_each_move(w: &[u8], mut f: impl FnMut(Vec<u8>)) {
    for i in 0..w.len().saturating_sub(2) {
        if let Some(img) = rewrite_window(w[i], w[i + 1], w[i + 2]) {
            let mut v = w.to_vec();
            v[i..i + 3].copy_from_slice(&img);
            f(v);
        }
    }
}

/// Every permutation one elementary rewriting away from `p`.
pub fn elementary_moves(p: &Permutation) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    for_each_move(p.as_slice(), |v| {
        out.insert(Permutation::from_vec_unchecked(v));
    });
    out
}

/// The full forgotten class of `p`, by breadth-first search.
pub fn class_closure(p: &Permutation) -> BTreeSet<Permutation> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(p.as_slice().to_vec());
    let mut queue = VecDeque::from([p.as_slice().to_vec()]);
    while let Some(w) = queue.pop_front() {
        for_each_move(&w, |v| {
            if !seen.contains(&v) {
                seen.insert(v.clone());
                queue.push_back(v);
            }
        });
    }
    seen.into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect()
}

/// Partition of `S_n` into forgotten classes, by closure alone.
///
/// Classes are sorted by their minimal element; each class is sorted.
pub fn all_classes(n: usize) -> Vec<Vec<Permutation>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut classes = Vec::new();
    // S_n is visited in lexicographic order, so each class is discovered
    // from its minimal element.
    for p in Permutation::all(n) {
        if seen.contains(p.as_slice()) {
            continue;
        }
        let mut class = vec![p.as_slice().to_vec()];
        seen.insert(p.as_slice().to_vec());
        let mut head = 0;
        while head < class.len() {
            let w = class[head].clone();
            head += 1;
            for_each_move(&w, |v| {
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    class.push(v);
                }
            });
        }
        let mut class: Vec<_> = class
            .into_iter()
            .map(Permutation::from_vec_unchecked)
            .collect();
        class.sort();
        classes.push(class);
    }
    classes
}

/// Complete invariant of a forgotten class of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassKey {
    pub n: usize,
    pub inv: usize,
    pub one_before_n: bool,
}

impl ClassKey {
    /// Validates the inversion range allowed by the order of `1` and `n`.
    pub fn new(n: usize, inv: usize, one_before_n: bool) -> Result<Self> {
        let key = ClassKey {
            n,
            inv,
            one_before_n,
        };
        if n < 2 {
            return Err(Error::InvalidKey(format!("n = {n} < 2")));
        }
        let range = key.inv_range();
        if !range.contains(&inv) {
            return Err(Error::InvalidKey(format!(
                "inv = {inv} outside {}..={} for {key}",
                range.start(),
                range.end()
            )));
        }
        Ok(key)
    }

    /// Inversion counts realized by classes with this `n` and sign.
    pub fn inv_range(&self) -> std::ops::RangeInclusive<usize> {
        let n = self.n;
        if self.one_before_n {
            0..=(n - 1) * (n - 2) / 2
        } else {
            n - 1..=n * (n - 1) / 2
        }
    }

    pub fn of(p: &Permutation) -> Result<Self> {
        let n = p.len();
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        Ok(ClassKey {
            n,
            inv: p.inversions(),
            one_before_n: one_before_n(p),
        })
    }

    /// All keys of `S_n`: the sign-`+` keys by inversions, then sign `-`.
    pub fn all(n: usize) -> Vec<ClassKey> {
        [true, false]
            .into_iter()
            .flat_map(|one_before_n| {
                let probe = ClassKey {
                    n,
                    inv: 0,
                    one_before_n,
                };
                probe.inv_range().map(move |inv| ClassKey {
                    n,
                    inv,
                    one_before_n,
                })
            })
            .collect()
    }

    pub fn family(&self) -> Family {
        if self.one_before_n {
            Family::Sigma
        } else {
            Family::Tau
        }
    }

    /// The lexicographically minimal member.
    pub fn canonical(&self) -> Permutation {
        CanonicalForm::from_inversions(self.family(), self.inv, self.n)
            .expect("validated key")
            .word()
    }

    /// Parses `n,inv,sign` with sign one of `1n`/`+`/`true` (1 before n)
    /// or `n1`/`-`/`false`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("class key {s:?}: expected n,inv,1n|n1"));
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, inv, sign] = fields.as_slice() else {
            return Err(bad());
        };
        let n: usize = n.parse().map_err(|_| bad())?;
        let inv: usize = inv.parse().map_err(|_| bad())?;
        let one_before_n = match *sign {
            "1n" | "+" | "true" => true,
            "n1" | "-" | "false" => false,
            _ => return Err(bad()),
        };
        ClassKey::new(n, inv, one_before_n)
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.inv, self.one_before_n)
    }
}

pub(crate) fn one_before_n(p: &Permutation) -> bool {
    let n = p.len() as u8;
    p.position(1) <= p.position(n)
}

/// Forgotten equivalence via the class invariant.
pub fn equivalent(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    if p.len() < 2 {
        return Ok(true);
    }
    Ok(ClassKey::of(p)? == ClassKey::of(q)?)
}

/// Equivalence under the relations acting on inverses.
pub fn coforgotten_equivalent(p: &Permutation, q: &Permutation) -> Result<bool> {
    equivalent(&p.inverse(), &q.inverse())
}

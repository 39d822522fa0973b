//! Canonical (lexicographically minimal) class members and the insertion
//! algorithm.
//!
//! Every canonical permutation has one of the compact forms
//!
//! ```text
//! sigma(k, a) = 1 2 ... k  a  n  (remaining letters decreasing)
//! tau(k, a)   = 2 3 ... k  a  n  (remaining letters decreasing)
//! ```
//!
//! with the identifications `x(k, n) = x(k-1, k)`. After normalization
//! each family is indexed by `{(k, a) : 1 <= k <= n-2, k < a <= n-1}`
//! together with the point `(1, n)`, which is `C(n-1, 2) + 1` forms, one
//! per inversion count available to the family.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::one_before_n;

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Whether `1` precedes `n` (`Sigma`) or follows it (`Tau`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sigma,
    Tau,
}

impl Family {
    pub fn of(p: &Permutation) -> Family {
        if one_before_n(p) {
            Family::Sigma
        } else {
            Family::Tau
        }
    }

    /// Inversion counts of the family in `S_n` (`n >= 2`).
    pub fn inv_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::Sigma => 0..=binom2(n - 1),
            Family::Tau => n - 1..=binom2(n),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Sigma => "sigma",
            Family::Tau => "tau",
        }
    }
}

/// A normalized `sigma(k, a)` or `tau(k, a)` in `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    family: Family,
    k: usize,
    a: usize,
    n: usize,
}

impl CanonicalForm {
    /// Builds a form, applying `(k, n) -> (k-1, k)` for `k >= 2` and
    /// `(0, 1) -> (1, n)`; anything outside the normalized domain is an error.
    pub fn new(family: Family, k: usize, a: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        let (k, a) = match (k, a) {
            (0, 1) => (1, n),
            (k, a) if a == n && k >= 2 => (k - 1, k),
            other => other,
        };
        let interior = (1..=n.saturating_sub(2)).contains(&k) && k < a && a < n;
        if !(interior || (k == 1 && a == n)) {
            return Err(Error::out_of_range(
                "(k, a)",
                (k * 1000 + a) as i64,
                format!("normalized domain for n = {n} (got k = {k}, a = {a})"),
            ));
        }
        Ok(CanonicalForm { family, k, a, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every normalized form of one family, in `(k, a)` order.
    pub fn all(family: Family, n: usize) -> Vec<CanonicalForm> {
        let mut out = vec![CanonicalForm { family, k: 1, a: n, n }];
        for k in 1..=n.saturating_sub(2) {
            for a in k + 1..n {
                out.push(CanonicalForm { family, k, a, n });
            }
        }
        out
    }

    pub fn word(&self) -> Permutation {
        let n = self.n;
        let lo = match self.family {
            Family::Sigma => 1,
            Family::Tau => 2,
        };
        let mut head: Vec<usize> = (lo..=self.k).collect();
        if self.a != n {
            head.push(self.a);
        }
        head.push(n);
        let mut used = vec![false; n + 1];
        for &l in &head {
            used[l] = true;
        }
        let tail = (1..=n).rev().filter(|&l| !used[l]);
        let word = head.iter().copied().chain(tail).map(|l| l as u8).collect();
        Permutation::from_vec_unchecked(word)
    }

    /// `C(n-k, 2) + a - n` for sigma, `C(n-k, 2) + a - 1` for tau.
    pub fn inversions(&self) -> usize {
        let base = binom2(self.n - self.k) + self.a;
        match self.family {
            Family::Sigma => base - self.n,
            Family::Tau => base - 1,
        }
    }

    /// Inverse of [`CanonicalForm::inversions`] on one family.
    ///
    /// Writes the offset `j` of `i` within the family's range as
    /// `C(m, 2) + b` with `m` maximal (`0 <= b < m`); then
    /// `k = n - m - 1` and `a = n + b - m`, for either family.
    pub fn from_inversions(family: Family, i: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        let range = family.inv_range(n);
        if !range.contains(&i) {
            return Err(Error::out_of_range(
                "inversions",
                i as i64,
                format!("{}..={} for {} family", range.start(), range.end(), family.name()),
            ));
        }
        let j = i - range.start();
        let mut m = 1;
        while binom2(m + 1) <= j {
            m += 1;
        }
        let b = j - binom2(m);
        CanonicalForm::new(family, n - m - 1, n + b - m, n)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{};n={})",
            self.family.name(),
            self.k,
            self.a,
            self.n
        )
    }
}

/// The lexicographically minimal member of the class of `p`.
pub fn canonical_of(p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    Ok(CanonicalForm::from_inversions(Family::of(p), p.inversions(), n)?.word())
}

/// `n^2 - 3n + 4` for `n >= 2`.
pub fn classes_count(n: usize) -> usize {
    match n {
        0 | 1 => 1,
        _ => n * n + 4 - 3 * n,
    }
}

/// The canonical permutations of `S_n`, sorted.
pub fn lex_enumerate(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return vec![Permutation::identity(n)];
    }
    let mut out: Vec<Permutation> = [Family::Sigma, Family::Tau]
        .into_iter()
        .flat_map(|f| CanonicalForm::all(f, n))
        .map(|c| c.word())
        .collect();
    out.sort();
    out
}

const FORBIDDEN: [&[u8]; 4] = [&[2, 1, 3], &[3, 1, 2], &[1, 3, 4, 5, 2], &[3, 4, 5, 2, 1]];

/// True iff `p` avoids 213, 312, 13452 and 34521.
pub fn is_canonical(p: &Permutation) -> bool {
    FORBIDDEN
        .iter()
        .all(|pat| p.avoids(&Permutation::from_vec_unchecked(pat.to_vec())))
}

/// Inserts the letter `i` (`0 <= i <= n-1`) into a canonical `w` of size
/// `n-1`, producing the canonical member of the class of the
/// standardization of `w i`.
pub fn insert(w: &Permutation, i: usize) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    if !is_canonical(w) {
        return Err(Error::NotCanonical(w.to_string()));
    }
    let n = w.len() + 1;
    if i > n - 1 {
        return Err(Error::out_of_range(
            "inserted letter",
            i as i64,
            format!("0..={}", n - 1),
        ));
    }
    let family = match (Family::of(w), i) {
        (Family::Sigma, 0) => Family::Tau,
        (Family::Tau, i) if i == n - 1 => Family::Sigma,
        (f, _) => f,
    };
    let target = w.inversions() + n - 1 - i;
    Ok(CanonicalForm::from_inversions(family, target, n)?.word())
}

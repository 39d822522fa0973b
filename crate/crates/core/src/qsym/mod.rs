//! Quasi-symmetric functions at desk scale.
//!
//! Functions of degree `n` are realized as polynomials in `m` commuting
//! variables; with `m >= n` two quasi-symmetric functions of degree `n`
//! agree iff their truncations do.

mod foata;
mod poly;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forgotten::{class_closure, lambda_word, ClassKey};
use crate::perm::{Composition, Permutation};
use crate::scalar::Ring;

pub use foata::{foata_phi, ns_map};
pub use poly::TruncatedPolynomial;

fn subset_mask(d: &BTreeSet<usize>) -> u64 {
    d.iter().fold(0, |m, &i| m | 1 << i)
}

/// Gessel's fundamental function `F_{n,D}` in `m` variables: the sum of
/// `x_{i_1} ... x_{i_n}` over `i_1 <= ... <= i_n <= m` with `i_j < i_{j+1}`
/// whenever `j` is in `D`.
pub fn gessel_f<C: Ring>(n: usize, d: &BTreeSet<usize>, m: usize) -> TruncatedPolynomial<C> {
    gessel_f_mask(n, subset_mask(d), m)
}

fn gessel_f_mask<C: Ring>(n: usize, mask: u64, m: usize) -> TruncatedPolynomial<C> {
    let mut out = TruncatedPolynomial::zero(m, n);
    let mut exp = vec![0u32; m];
    fill_f(1, n, mask, 1, &mut exp, &mut out);
    out
}

/// Chooses `i_j` for `j = pos..=n`; `lo` is the least admissible index.
fn fill_f<C: Ring>(
    pos: usize,
    n: usize,
    mask: u64,
    lo: usize,
    exp: &mut [u32],
    out: &mut TruncatedPolynomial<C>,
) {
    if pos > n {
        out.add_term(exp.to_vec(), C::one());
        return;
    }
    let m = exp.len();
    for i in lo..=m {
        exp[i - 1] += 1;
        let next_lo = if mask >> pos & 1 == 1 { i + 1 } else { i };
        fill_f(pos + 1, n, mask, next_lo, exp, out);
        exp[i - 1] -= 1;
    }
}

/// Caches the descent sets of each recoil class of `S_n` and the
/// fundamental functions in `m` variables.
pub struct RibbonEvaluator<C> {
    n: usize,
    m: usize,
    by_recoil: HashMap<Composition, BTreeMap<u64, u64>>,
    f_cache: HashMap<u64, TruncatedPolynomial<C>>,
}

impl<C: Ring> RibbonEvaluator<C> {
    /// Scans `S_n` once.
    pub fn new(n: usize, m: usize) -> Self {
        let mut by_recoil: HashMap<Composition, BTreeMap<u64, u64>> = HashMap::new();
        for p in Permutation::all(n) {
            *by_recoil
                .entry(p.recoil_composition())
                .or_default()
                .entry(p.descent_mask())
                .or_default() += 1;
        }
        RibbonEvaluator {
            n,
            m,
            by_recoil,
            f_cache: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    fn f(&mut self, mask: u64) -> &TruncatedPolynomial<C> {
        let (n, m) = (self.n, self.m);
        self.f_cache
            .entry(mask)
            .or_insert_with(|| gessel_f_mask(n, mask, m))
    }

    /// `sum_D count(D) F_{n,D}` for a multiset of descent masks.
    fn sum_masks(&mut self, counts: &BTreeMap<u64, u64>) -> TruncatedPolynomial<C> {
        let mut out = TruncatedPolynomial::zero(self.m, self.n);
        for (&mask, &count) in counts {
            let scale = C::from_count(count);
            let f = self.f(mask).clone();
            out.add_scaled(&f, &scale).expect("same shape");
        }
        out
    }

    /// `r_I = sum over Recoil(p) = I of F_{n,Des(p)}`.
    pub fn ribbon(&mut self, comp: &Composition) -> TruncatedPolynomial<C> {
        assert_eq!(comp.size(), self.n);
        let counts = self.by_recoil.get(comp).cloned().unwrap_or_default();
        self.sum_masks(&counts)
    }

    pub fn ribbon_sum(&mut self, sum: &RibbonSum) -> TruncatedPolynomial<C> {
        let mut out = TruncatedPolynomial::zero(self.m, self.n);
        for comp in &sum.compositions {
            let r = self.ribbon(comp);
            out.add_scaled(&r, &C::one()).expect("same shape");
        }
        out
    }

    /// `sum over p in S of F_{n,Des(p)}` for an explicit set of permutations.
    pub fn sum_over<'a>(
        &mut self,
        perms: impl IntoIterator<Item = &'a Permutation>,
    ) -> TruncatedPolynomial<C> {
        let mut counts = BTreeMap::new();
        for p in perms {
            *counts.entry(p.descent_mask()).or_insert(0) += 1;
        }
        self.sum_masks(&counts)
    }

    /// Left side of the ribbon expansion: summed over the closure of the
    /// canonical member of `key`.
    pub fn class_sum(&mut self, key: &ClassKey) -> TruncatedPolynomial<C> {
        assert_eq!(key.n, self.n);
        let class = class_closure(&key.canonical());
        self.sum_over(&class)
    }
}

/// The ribbon Schur function `r_I` truncated to `m` variables.
pub fn ribbon_r<C: Ring>(comp: &Composition, m: usize) -> TruncatedPolynomial<C> {
    RibbonEvaluator::new(comp.size(), m).ribbon(comp)
}

/// `sum over the class of key of F_{n,Des}`, in `m` variables.
pub fn class_sum_f<C: Ring>(key: &ClassKey, m: usize) -> TruncatedPolynomial<C> {
    RibbonEvaluator::new(key.n, m).class_sum(key)
}

/// Which compositions of maj `k` a sign selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LastPart {
    All,
    EndsInOne,
    NotEndsInOne,
}

/// Compositions of `n` with `maj = k`, filtered by their last part.
pub fn compositions_with_maj(n: usize, k: usize, filter: LastPart) -> BTreeSet<Composition> {
    Composition::all(n)
        .into_iter()
        .filter(|c| c.maj() == k)
        .filter(|c| match filter {
            LastPart::All => true,
            LastPart::EndsInOne => c.ends_in_one(),
            LastPart::NotEndsInOne => !c.ends_in_one(),
        })
        .collect()
}

/// Pairing of class signs with composition filters in the maj-composition
/// description of the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SignPairing {
    /// `1` before `n` pairs with compositions not ending in 1.
    PlusNotEndingInOne,
    /// `1` before `n` pairs with compositions ending in 1.
    PlusEndingInOne,
    /// Neither pairing reproduces the class sums.
    Neither,
}

impl SignPairing {
    /// The pairing used by [`ribbon_expansion`].
    pub const ADOPTED: SignPairing = SignPairing::PlusNotEndingInOne;

    pub fn filter(self, one_before_n: bool) -> Option<LastPart> {
        let plus = match self {
            SignPairing::PlusNotEndingInOne => LastPart::NotEndsInOne,
            SignPairing::PlusEndingInOne => LastPart::EndsInOne,
            SignPairing::Neither => return None,
        };
        Some(match (plus, one_before_n) {
            (p, true) => p,
            (LastPart::EndsInOne, false) => LastPart::NotEndsInOne,
            (_, false) => LastPart::EndsInOne,
        })
    }
}

/// Decides by brute force which pairing makes
/// `class sum = sum of r_I over the selected maj compositions` hold for
/// every class of `S_n`, `n` in `sizes`.
pub fn determine_sign_pairing(sizes: impl IntoIterator<Item = usize>) -> SignPairing {
    let mut candidates = vec![SignPairing::PlusNotEndingInOne, SignPairing::PlusEndingInOne];
    for n in sizes {
        let mut eval = RibbonEvaluator::<num_bigint::BigInt>::new(n, n);
        for key in ClassKey::all(n) {
            let lhs = eval.class_sum(&key);
            candidates.retain(|pairing| {
                let filter = pairing.filter(key.one_before_n).expect("concrete pairing");
                let sum = RibbonSum {
                    n,
                    compositions: compositions_with_maj(n, key.inv, filter),
                };
                eval.ribbon_sum(&sum) == lhs
            });
        }
    }
    candidates.first().copied().unwrap_or(SignPairing::Neither)
}

/// A 0-1 sum of ribbon Schur functions `r_I`, `I` compositions of `n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RibbonSum {
    pub n: usize,
    pub compositions: BTreeSet<Composition>,
}

impl fmt::Display for RibbonSum {
    /// `r[1,1,3] + r[3,2]`; the empty sum prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.compositions.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .compositions
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.parts().iter().map(usize::to_string).collect();
                format!("r[{}]", inner.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for RibbonSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonSum({self})")
    }
}

/// The three descriptions of a class's ribbon expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionMethods {
    /// Reversed recoil compositions of the Λ-shaped members.
    pub lambda: Vec<Composition>,
    /// Recoil compositions of the V-shaped members.
    pub v: Vec<Composition>,
    /// Compositions of maj `inv`, filtered by the adopted sign pairing.
    pub maj: BTreeSet<Composition>,
}

impl ExpansionMethods {
    pub fn compute(key: &ClassKey) -> Self {
        let n = key.n;
        let mut lambda = Vec::new();
        let mut v = Vec::new();
        for mask in 0u64..1 << (n - 1) {
            let left = (1..n as u8).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
            let up = lambda_word(&left, n);
            // the complement of a Λ-shape is a V-shape; both enumerations
            // cover all 2^(n-1) shapes
            let down = up.complement();
            if ClassKey::of(&up).ok() == Some(*key) {
                lambda.push(up.recoil_composition().reversed());
            }
            if ClassKey::of(&down).ok() == Some(*key) {
                v.push(down.recoil_composition());
            }
        }
        lambda.sort();
        v.sort();
        let filter = SignPairing::ADOPTED
            .filter(key.one_before_n)
            .expect("concrete pairing");
        ExpansionMethods {
            lambda,
            v,
            maj: compositions_with_maj(n, key.inv, filter),
        }
    }

    /// All three agree as sets and neither shape list repeats.
    pub fn agree(&self) -> bool {
        let distinct = |xs: &[Composition]| xs.windows(2).all(|w| w[0] != w[1]);
        let as_set = |xs: &[Composition]| xs.iter().cloned().collect::<BTreeSet<_>>();
        distinct(&self.lambda)
            && distinct(&self.v)
            && as_set(&self.lambda) == self.maj
            && as_set(&self.v) == self.maj
    }
}

/// The compositions `I` with `sum over the class of F_{n,Des} = sum r_I`.
///
/// All three descriptions are computed; disagreement is an
/// [`Error::Invariant`].
pub fn ribbon_expansion(key: &ClassKey) -> Result<RibbonSum> {
    let key = ClassKey::new(key.n, key.inv, key.one_before_n)?;
    let methods = ExpansionMethods::compute(&key);
    if !methods.agree() {
        return Err(Error::Invariant(format!(
            "ribbon expansion methods disagree for {key}: {methods:?}"
        )));
    }
    Ok(RibbonSum {
        n: key.n,
        compositions: methods.maj,
    })
}

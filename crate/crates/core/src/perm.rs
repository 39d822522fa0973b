//! Permutations, words and compositions with their elementary statistics.
//!
//! Permutations are stored in one-line notation over the letters `1..=n`
//! (`n <= 255`). Positions exposed by the statistics (descents, patterns)
//! are 1-based, matching the usual combinatorial conventions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Validates that `word` contains each of `1..=word.len()` exactly once.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation { word, n });
        }
        let mut seen = vec![false; n + 1];
        for &l in &word {
            let l = l as usize;
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidPermutation { word, n });
            }
            seen[l] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.word
    }

    /// 0-based position of `letter`.
    pub fn position(&self, letter: u8) -> Option<usize> {
        self.word.iter().position(|&l| l == letter)
    }

    /// Number of pairs `i < j` with `p_i > p_j`.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{i : p_i > p_{i+1}}`, 1-based.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        descents_of(&self.word)
    }

    pub(crate) fn descent_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, pair) in self.word.windows(2).enumerate() {
            if pair[0] > pair[1] {
                mask |= 1 << (i + 1);
            }
        }
        mask
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_subset_unchecked(&self.descent_set(), self.len())
    }

    /// Descent composition of the inverse.
    pub fn recoil_composition(&self) -> Composition {
        self.inverse().descent_composition()
    }

    /// Major index: the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &l) in self.word.iter().enumerate() {
            inv[l as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// `x -> n + 1 - x` on every letter.
    pub fn complement(&self) -> Self {
        let n1 = self.len() as u8 + 1;
        Permutation {
            word: self.word.iter().map(|&l| n1 - l).collect(),
        }
    }

    /// Schützenberger involution: complement of the reversal.
    pub fn schuetzenberger(&self) -> Self {
        self.reverse().complement()
    }

    /// Increases to a peak, then strictly decreases. Monotone words qualify.
    pub fn is_lambda(&self) -> bool {
        is_unimodal(&self.word, |a, b| a < b)
    }

    /// Decreases to a valley, then strictly increases. Monotone words qualify.
    pub fn is_v(&self) -> bool {
        is_unimodal(&self.word, |a, b| a > b)
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k > self.len() {
            return false;
        }
        if k == 0 {
            return true;
        }
        let mut chosen = Vec::with_capacity(k);
        contains_from(&self.word, &pattern.word, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Comma-separated form, regardless of size.
    pub fn to_comma_string(&self) -> String {
        join(&self.word, ",")
    }
}

fn contains_from(text: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=text.len() - remaining {
        let letter = text[pos];
        // relative order of the new letter against every chosen one must
        // match the pattern
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &pc)| (c < letter) == (pc < pattern[depth]));
        if consistent {
            chosen.push(letter);
            if contains_from(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn is_unimodal(w: &[u8], rising: impl Fn(u8, u8) -> bool) -> bool {
    let mut i = 0;
    while i + 1 < w.len() && rising(w[i], w[i + 1]) {
        i += 1;
    }
    while i + 1 < w.len() && rising(w[i + 1], w[i]) {
        i += 1;
    }
    i + 1 >= w.len()
}

pub(crate) fn descents_of<T: Ord>(w: &[T]) -> BTreeSet<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i + 1)
        .collect()
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// The permutation with the same relative order as `letters`, equal
/// letters ranked left to right.
pub fn standardize<T: Ord>(letters: &[T]) -> Result<Permutation> {
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    if letters.len() > u8::MAX as usize {
        return Err(Error::out_of_range(
            "word length",
            letters.len() as i64,
            "1..=255",
        ));
    }
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by(|&i, &j| letters[i].cmp(&letters[j]));
    let mut word = vec![0u8; letters.len()];
    for (rank, &pos) in order.iter().enumerate() {
        word[pos] = (rank + 1) as u8;
    }
    Ok(Permutation { word })
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.word.clone();
        if next_lex(&mut w) {
            self.next = Some(Permutation { word: w });
        }
        Some(current)
    }
}

fn next_lex(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Digit string when `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for l in &self.word {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = parse_letters(s)?;
        Permutation::new(letters).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

fn parse_letters(s: &str) -> Result<Vec<u8>> {
    let bad = || Error::Parse(format!("cannot read letters from {s:?}"));
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect()
    } else if s.bytes().all(|b| b.is_ascii_digit()) {
        Ok(s.bytes().map(|b| b - b'0').collect())
    } else {
        Err(bad())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<u8>::deserialize(d)?;
        Permutation::new(word).map_err(D::Error::custom)
    }
}

/// A word over the ordered alphabet `{1..=q}`; repeats and the empty word
/// are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    q: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, q: u8) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > q) {
            return Err(Error::LetterOutOfAlphabet { letter, q });
        }
        Ok(Word { letters, q })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u8>, q: u8) -> Self {
        Word { letters, q }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Pairs `i < j` with `w_i > w_j`.
    pub fn inversions(&self) -> usize {
        let w = &self.letters;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&l| l < w[i]).count())
            .sum()
    }

    /// Positions of strict descents; the composition is made of the
    /// maximal weakly increasing factors.
    pub fn descent_composition(&self) -> Option<Composition> {
        if self.is_empty() {
            return None;
        }
        Some(Composition::from_subset_unchecked(
            &descents_of(&self.letters),
            self.len(),
        ))
    }

    /// All words of length `len` over `{1..=q}` in lexicographic order.
    pub fn all(len: usize, q: u8) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u8>| {
                    (1..=q).map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|letters| Word { letters, q }).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.letters, ","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}/{}", self.q)
    }
}

/// An ordered sequence of positive parts summing to `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    /// The composition whose partial sums (other than `n`) are `subset`.
    pub fn from_subset(subset: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if let Some(&element) = subset.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::SubsetOutOfRange { element, n });
        }
        Ok(Self::from_subset_unchecked(subset, n))
    }

    pub(crate) fn from_subset_unchecked(subset: &BTreeSet<usize>, n: usize) -> Self {
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &d in subset.iter().chain(std::iter::once(&n)) {
            parts.push(d - prev);
            prev = d;
        }
        Composition { parts }
    }

    pub(crate) fn from_mask(mask: u64, n: usize) -> Self {
        let subset = (1..n).filter(|&i| mask >> i & 1 == 1).collect();
        Self::from_subset_unchecked(&subset, n)
    }

    /// Partial sums, excluding the total.
    pub fn to_subset(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        self.parts[..self.parts.len() - 1]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// All compositions of `n`, in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Composition> {
        assert!((1..=64).contains(&n));
        let mut out: Vec<_> = (0..1u64 << (n - 1))
            .map(|m| Composition::from_mask(m << 1, n))
            .collect();
        out.sort();
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum_i (len - i) * c_i`, i.e. the sum of the partial sums.
    pub fn maj(&self) -> usize {
        let l = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &c)| (l - 1 - i) * c)
            .sum()
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    pub fn ends_in_one(&self) -> bool {
        self.parts.last() == Some(&1)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts, ","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `(1,1,3)`, `[1,1,3]`, `1,1,3`, or `113` (single-digit parts).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| s.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
            .unwrap_or(s);
        let parts: Vec<usize> = parse_letters(inner)?
            .into_iter()
            .map(usize::from)
            .collect();
        Composition::new(parts).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Composition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(Permutation::identity(6).inversions(), 0);
        assert_eq!(p("4321").inversions(), 6);
        assert_eq!(p("3142").inversions(), 3);
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(5).descent_set().is_empty());
        assert_eq!(p("3142").descent_set(), set(&[1, 3]));
        assert_eq!(p("12543").descent_set(), set(&[3, 4]));
        assert_eq!(Permutation::identity(4).descent_composition().parts(), &[4]);
        assert_eq!(p("3142").recoil_composition().parts(), &[2, 2]);
        assert_eq!(p("12543").recoil_composition().parts(), &[3, 1, 1]);
        assert_eq!(p("3142").maj(), 4);
    }

    #[test]
    fn subset_composition_examples() {
        assert_eq!(
            Composition::from_subset(&set(&[]), 4).unwrap().parts(),
            &[4]
        );
        assert_eq!(
            Composition::from_subset(&set(&[2]), 4).unwrap().parts(),
            &[2, 2]
        );
        let c: Composition = "(1,1,3)".parse().unwrap();
        assert_eq!(c.to_subset(), set(&[1, 2]));
        assert!(matches!(
            Composition::from_subset(&set(&[4]), 4),
            Err(Error::SubsetOutOfRange { element: 4, n: 4 })
        ));
        assert!(Composition::from_subset(&set(&[0]), 4).is_err());
    }

    #[test]
    fn composition_maj_examples() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert_eq!(c("(1,1,1,1,4)").maj(), 10);
        assert_eq!(c("(7)").maj(), 0);
        assert_eq!(c("(3,2)").maj(), 3);
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("842956137").schuetzenberger(), p("379451862"));
        assert_eq!(Permutation::identity(7).schuetzenberger(), Permutation::identity(7));
        assert_eq!(p("2341").inverse(), p("4123"));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 4, 9]).unwrap(), Permutation::identity(3));
        assert_eq!(standardize(&[1, 2, 1]).unwrap(), p("132"));
        assert_eq!(standardize(&[1, 3, 6, 5, 4, 2, 0]).unwrap(), p("2476531"));
        assert_eq!(standardize::<u8>(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn shapes() {
        assert!(Permutation::identity(5).is_lambda());
        assert!(Permutation::longest(5).is_lambda());
        assert!(p("13452").is_lambda());
        assert!(p("41235").is_v());
        assert!(!p("3142").is_lambda());
        assert!(!p("3142").is_v());
        assert!(!p("13452").is_v());
    }

    #[test]
    fn pattern_examples() {
        assert!(!p("213").avoids(&p("213")));
        for pat in ["213", "312", "13452", "34521"] {
            assert!(p("12453").avoids(&p(pat)), "{pat}");
        }
        assert!(!p("13452").avoids(&p("13452")));
        assert!(p("132").contains_pattern(&p("12")));
        assert!(p("12").avoids(&p("123")));
    }

    #[test]
    fn parse_and_display() {
        let long: Permutation = "8,4,2,9,5,6,1,3,7,10".parse().unwrap();
        assert_eq!(long.to_string(), "8,4,2,9,5,6,1,3,7,10");
        assert_eq!(p("8,4,2,9,5,6,1,3,7").to_string(), "842956137");
        assert!("1223".parse::<Permutation>().unwrap_err().is_parse());
        assert!("1a".parse::<Permutation>().unwrap_err().is_parse());
        let json = serde_json::to_string(&p("312")).unwrap();
        assert_eq!(json, "[3,1,2]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p("312"));
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    #[test]
    fn all_permutations_in_lex_order() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn all_compositions() {
        let comps = Composition::all(4);
        assert_eq!(comps.len(), 8);
        assert_eq!(comps[0].parts(), &[1, 1, 1, 1]);
        assert_eq!(comps[7].parts(), &[4]);
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![1, 3], 2).is_err());
        assert!(Word::new(vec![], 2).unwrap().is_empty());
        let w = Word::new(vec![2, 1, 2], 2).unwrap();
        assert_eq!(w.inversions(), 1);
        assert_eq!(w.descent_composition().unwrap().parts(), &[1, 2]);
        assert_eq!(w.to_string(), "(2,1,2)");
    }
}

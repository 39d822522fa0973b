//! The general forgotten relations on words with repeated letters.
//!
//! ```text
//! aba = baa, bab = bba   (a < b)
//! acb = bac, bca = cab   (a < b < c)
//! ```
//!
//! Normal forms are lexicographically minimal class members, found by
//! exhaustive closure. No orientation of the relations is assumed to be
//! confluent.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::perm::Word;

/// Images of a window `xyz` under the four rules, in either direction.
fn rewrite_window(x: u8, y: u8, z: u8) -> Option<[u8; 3]> {
    if x < y && z == x {
        // aba -> baa
        return Some([y, x, x]);
    }
    if x > y && z == y {
        // baa -> aba
        return Some([y, x, y]);
    }
    if x > y && z == x {
        // bab -> bba
        return Some([x, x, y]);
    }
    if x == y && z < x {
        // bba -> bab
        return Some([x, z, x]);
    }
    if x < z && z < y || y < z && z < x {
        // acb -> bac, cab -> bca
        return Some([z, x, y]);
    }
    if y < x && x < z || z < x && x < y {
        // bac -> acb, bca -> cab
        return Some([y, z, x]);
    }
    None
}

pub(crate) fn for_each_move(w: &[u8], mut f: impl FnMut(Vec<u8>)) {
    for i in 0..w.len().saturating_sub(2) {
        if let Some(img) = rewrite_window(w[i], w[i + 1], w[i + 2]) {
            let mut v = w.to_vec();
            v[i..i + 3].copy_from_slice(&img);
            f(v);
        }
    }
}

/// Every word one rewriting away from `w`.
pub fn general_moves(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for_each_move(w.letters(), |v| {
        out.insert(Word::from_vec_unchecked(v, w.alphabet()));
    });
    out
}

fn closure_raw(w: &[u8]) -> Vec<Vec<u8>> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for_each_move(&u, |v| {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        });
    }
    seen.into_iter().collect()
}

/// The forgotten class of `w`.
pub fn word_closure(w: &Word) -> BTreeSet<Word> {
    closure_raw(w.letters())
        .into_iter()
        .map(|v| Word::from_vec_unchecked(v, w.alphabet()))
        .collect()
}

/// Lexicographically minimal member of the class of `w`.
pub fn word_normal_form(w: &Word) -> Word {
    let min = closure_raw(w.letters()).swap_remove(0);
    Word::from_vec_unchecked(min, w.alphabet())
}

/// Memoized normal forms; every member of a computed class is recorded at
/// once.
#[derive(Debug, Default, Clone)]
pub struct NormalForms {
    memo: HashMap<Vec<u8>, Vec<u8>>,
}

impl NormalForms {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn normal_form(&mut self, w: &[u8]) -> Vec<u8> {
        if let Some(nf) = self.memo.get(w) {
            return nf.clone();
        }
        let class = closure_raw(w);
        let nf = class[0].clone();
        for member in class {
            self.memo.insert(member, nf.clone());
        }
        nf
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// All word classes of words of length `len` over `{1..=q}`.
pub fn all_word_classes(len: usize, q: u8) -> Vec<Vec<Word>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in Word::all(len, q) {
        if seen.contains(w.letters()) {
            continue;
        }
        let class = closure_raw(w.letters());
        seen.extend(class.iter().cloned());
        out.push(
            class
                .into_iter()
                .map(|v| Word::from_vec_unchecked(v, q))
                .collect(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u8], q: u8) -> Word {
        Word::new(letters.to_vec(), q).unwrap()
    }

    #[test]
    fn repeated_letter_rules_change_inversions() {
        // content is kept but the inversion count moves by one
        let a = w(&[1, 2, 1], 2);
        let b = w(&[2, 1, 1], 2);
        assert!(general_moves(&a).contains(&b));
        assert_eq!((a.inversions(), b.inversions()), (1, 2));
    }

    #[test]
    fn moves_examples() {
        assert!(general_moves(&w(&[1, 1, 1], 1)).is_empty());
        assert_eq!(general_moves(&w(&[1, 2, 1], 2)), BTreeSet::from([w(&[2, 1, 1], 2)]));
        assert_eq!(general_moves(&w(&[1, 3, 2], 3)), BTreeSet::from([w(&[2, 1, 3], 3)]));
        assert_eq!(general_moves(&w(&[2, 1, 1], 2)), BTreeSet::from([w(&[1, 2, 1], 2)]));
        assert_eq!(general_moves(&w(&[2, 2, 1], 2)), BTreeSet::from([w(&[2, 1, 2], 2)]));
        assert!(general_moves(&w(&[1, 1, 2], 2)).is_empty());
        assert_eq!(general_moves(&w(&[1, 2, 1, 2], 2)).len(), 2);
    }

    #[test]
    fn closure_examples() {
        let inc = w(&[1, 2, 3, 4], 4);
        assert_eq!(word_closure(&inc), BTreeSet::from([inc.clone()]));
        assert_eq!(word_normal_form(&inc), inc);
        assert_eq!(
            word_closure(&w(&[1, 2, 1], 2)),
            BTreeSet::from([w(&[1, 2, 1], 2), w(&[2, 1, 1], 2)])
        );
        assert_eq!(word_normal_form(&w(&[2, 1, 1], 2)), w(&[1, 2, 1], 2));
        assert_eq!(
            word_closure(&w(&[2, 1, 2], 2)),
            BTreeSet::from([w(&[2, 1, 2], 2), w(&[2, 2, 1], 2)])
        );
        assert_eq!(word_normal_form(&w(&[2, 2, 1], 2)), w(&[2, 1, 2], 2));
    }

    #[test]
    fn memo_agrees_with_direct() {
        let mut nf = NormalForms::new();
        for u in Word::all(5, 3) {
            assert_eq!(nf.normal_form(u.letters()), word_normal_form(&u).letters());
        }
        assert_eq!(nf.len(), 243);
    }

    #[test]
    fn word_classes_partition() {
        let classes = all_word_classes(4, 3);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 81);
    }
}

//! Noncommutative polynomials over a finite ordered alphabet and their
//! image in the forgotten quotient.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Word;
use crate::scalar::{self, Ring};
use crate::words::NormalForms;

/// Formal sum of words over `{1..=q}` with coefficients in `C`.
///
/// Terms are kept in lexicographic word order with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPolynomial<C> {
    q: u8,
    terms: BTreeMap<Vec<u8>, C>,
}

impl<C: Ring> NcPolynomial<C> {
    pub fn zero(q: u8) -> Self {
        NcPolynomial {
            q,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient one.
    pub fn one(q: u8) -> Self {
        Self::monomial(Word::from_vec_unchecked(Vec::new(), q), C::one())
    }

    pub fn monomial(w: Word, coeff: C) -> Self {
        let mut p = Self::zero(w.alphabet());
        p.add_term(w.letters().to_vec(), coeff);
        p
    }

    /// `e_k`: every strictly decreasing word of length `k`, coefficient one.
    pub fn elementary(k: usize, q: u8) -> Self {
        let mut p = Self::zero(q);
        let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            if w.len() == k {
                p.terms.insert(w, C::one());
                continue;
            }
            let top = w.last().map_or(q, |&l| l - 1);
            for l in 1..=top {
                let mut next = w.clone();
                next.push(l);
                stack.push(next);
            }
        }
        p
    }

    pub fn alphabet(&self) -> u8 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[u8]) -> C {
        self.terms.get(word).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &C)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    fn add_term(&mut self, word: Vec<u8>, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of concatenation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = Self::zero(self.q);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    /// Image in the quotient: every word replaced by its normal form.
    pub fn reduce(&self) -> Self {
        self.reduce_with(&mut NormalForms::new())
    }

    pub fn reduce_with(&self, forms: &mut NormalForms) -> Self {
        let mut out = Self::zero(self.q);
        for (w, c) in &self.terms {
            out.add_term(forms.normal_form(w), c.clone());
        }
        out
    }

    /// Reads the text form over an explicit alphabet.
    pub fn parse_with_alphabet(s: &str, q: u8) -> Result<Self> {
        let mut out = Self::zero(q);
        for (word, coeff) in parse_terms::<C>(s)? {
            let word = Word::new(word, q)?;
            out.add_term(word.letters().to_vec(), coeff);
        }
        Ok(out)
    }
}

/// `e_i e_j - e_j e_i` over `{1..=q}`.
pub fn commutator<C: Ring>(i: usize, j: usize, q: u8) -> NcPolynomial<C> {
    let ei = NcPolynomial::<C>::elementary(i, q);
    let ej = NcPolynomial::<C>::elementary(j, q);
    let ab = ei.mul(&ej).expect("same alphabet");
    let ba = ej.mul(&ei).expect("same alphabet");
    ab.sub(&ba).expect("same alphabet")
}

/// True iff `e_i` and `e_j` commute in the quotient over `{1..=q}`.
pub fn commute_check(i: usize, j: usize, q: u8) -> bool {
    commutator::<num_bigint::BigInt>(i, j, q).reduce().is_zero()
}

fn parse_terms<C: Ring>(s: &str) -> Result<Vec<(Vec<u8>, C)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let bad = |t: &str| Error::Parse(format!("polynomial term {t:?}: expected <coeff>*(<letters>)"));
    s.split_whitespace()
        .map(|tok| {
            let (coeff, word) = tok.split_once('*').ok_or_else(|| bad(tok))?;
            let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
            let coeff = C::from_str(coeff).map_err(|_| bad(tok))?;
            let inner = word
                .strip_prefix('(')
                .and_then(|w| w.strip_suffix(')'))
                .ok_or_else(|| bad(tok))?;
            let letters = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|l| l.parse::<u8>().map_err(|_| bad(tok)))
                    .collect::<Result<Vec<_>>>()?
            };
            Ok((letters, coeff))
        })
        .collect()
}

fn inferred_alphabet<'a>(words: impl Iterator<Item = &'a Vec<u8>>) -> u8 {
    words.flatten().copied().max().unwrap_or(1).max(1)
}

impl<C: Ring> fmt::Display for NcPolynomial<C> {
    /// `+1*(1,2,1) -1*(2,1,1)`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            let c = c.to_string();
            if !c.starts_with('-') {
                f.write_str("+")?;
            }
            let letters: Vec<String> = w.iter().map(u8::to_string).collect();
            write!(f, "{c}*({})", letters.join(","))?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for NcPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPolynomial[q={}]({self})", self.q)
    }
}

impl<C: Ring> FromStr for NcPolynomial<C> {
    type Err = Error;

    /// The alphabet is taken to be `{1..=max letter}`.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms::<C>(s)?;
        let q = inferred_alphabet(terms.iter().map(|(w, _)| w));
        Self::parse_with_alphabet(s, q)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "C: Ring")]
struct TermRepr<C> {
    word: Vec<u8>,
    #[serde(with = "scalar::json")]
    coeff: C,
}

impl<C: Ring> Serialize for NcPolynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<C>> = self
            .terms
            .iter()
            .map(|(w, c)| TermRepr {
                word: w.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, C: Ring> Deserialize<'de> for NcPolynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr<C>>::deserialize(d)?;
        let q = inferred_alphabet(terms.iter().map(|t| &t.word));
        let mut out = Self::zero(q);
        for t in terms {
            if t.word.contains(&0) {
                return Err(D::Error::custom("letter 0 in word"));
            }
            out.add_term(t.word, t.coeff);
        }
        Ok(out)
    }
}

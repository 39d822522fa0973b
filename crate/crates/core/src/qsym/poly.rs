use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Ring};

/// Homogeneous polynomial of degree `degree` in `m` commuting variables,
/// keyed by exponent vector.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial<C> {
    m: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> TruncatedPolynomial<C> {
    pub fn zero(m: usize, degree: usize) -> Self {
        TruncatedPolynomial {
            m,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from explicit terms, checking shape and degree.
    pub fn from_terms(
        m: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(m, degree);
        for (exp, c) in terms {
            if exp.len() != m {
                return Err(Error::SizeMismatch {
                    left: exp.len(),
                    right: m,
                });
            }
            let total: u32 = exp.iter().sum();
            if total as usize != degree {
                return Err(Error::out_of_range(
                    "monomial degree",
                    total as i64,
                    format!("exactly {degree}"),
                ));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn coeff(&self, exp: &[u32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub(crate) fn add_term(&mut self, exp: Vec<u32>, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::SizeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &Self, scale: &C) -> Result<()> {
        self.check_shape(other)?;
        if self.is_zero() {
            self.degree = other.degree;
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone() * scale.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &C::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one())?;
        Ok(out)
    }

    /// Invariant under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.m.saturating_sub(1)).all(|j| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(j, j + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }
}

impl<C: Ring> fmt::Display for TruncatedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let c = c.to_string();
            match (idx, c.strip_prefix('-')) {
                (0, Some(abs)) => write!(f, "-{abs}")?,
                (_, Some(abs)) => write!(f, " - {abs}")?,
                (0, None) => write!(f, "{c}")?,
                (_, None) => write!(f, " + {c}")?,
            }
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for TruncatedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPolynomial[m={},deg={}]({self})", self.m, self.degree)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "C: Ring")]
struct TermRepr<C> {
    exp: Vec<u32>,
    #[serde(with = "scalar::json")]
    coeff: C,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "C: Ring")]
struct PolyRepr<C> {
    m: usize,
    degree: usize,
    terms: Vec<TermRepr<C>>,
}

impl<C: Ring> Serialize for TruncatedPolynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            m: self.m,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Ring> Deserialize<'de> for TruncatedPolynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::<C>::deserialize(d)?;
        Self::from_terms(
            repr.m,
            repr.degree,
            repr.terms.into_iter().map(|t| (t.exp, t.coeff)),
        )
        .map_err(D::Error::custom)
    }
}

//! Coefficient rings for the polynomial types.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_traits::Num;

/// A commutative ring usable as polynomial coefficients.
///
/// Anything implementing [`num_traits::Num`] with negation and a textual
/// form qualifies: `i64`, `i128`, `BigInt`, `BigRational`, ...
pub trait Ring: Num + Clone + Eq + Neg<Output = Self> + Debug + Display + FromStr {
    /// Small integer embedding, used to build counts.
    fn from_count(count: u64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut c = count;
        while c > 0 {
            if c & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            c >>= 1;
        }
        acc
    }
}

impl<T> Ring for T where T: Num + Clone + Eq + Neg<Output = T> + Debug + Display + FromStr {}

pub(crate) mod json {
    //! Coefficients travel as JSON numbers when their textual form is one,
    //! otherwise as strings (e.g. `"1/2"` for rationals).

    use std::str::FromStr;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::{Number, Value};

    use super::Ring;

    pub fn serialize<C: Ring, S: Serializer>(c: &C, s: S) -> Result<S::Ok, S::Error> {
        let text = c.to_string();
        match Number::from_str(&text) {
            Ok(num) => num.serialize(s),
            Err(_) => text.serialize(s),
        }
    }

    pub fn deserialize<'de, C: Ring, D: Deserializer<'de>>(d: D) -> Result<C, D::Error> {
        let text = match Value::deserialize(d)? {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s,
            other => return Err(D::Error::custom(format!("bad coefficient {other}"))),
        };
        C::from_str(&text).map_err(|_| D::Error::custom(format!("bad coefficient {text}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn from_count_matches_native() {
        for c in [0u64, 1, 2, 7, 64, 1000] {
            assert_eq!(i64::from_count(c), c as i64);
            assert_eq!(BigInt::from_count(c), BigInt::from(c));
        }
    }
}

//! Exact rational helpers shared by every module.
//!
//! Rationals are [`BigRational`]. On the wire they are `{"num": p, "den": q}`
//! with `den > 0` and the fraction in lowest terms; numbers that do not fit an
//! `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::Deserialize;

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` text form; integers print without a denominator.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::MalformedRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Exact integer square root of a non-negative integer, if it is a square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a non-negative rational, if both parts are squares.
pub fn qsqrt_exact(x: &Q) -> Option<Q> {
    let n = isqrt_exact(x.numer())?;
    let d = isqrt_exact(x.denom())?;
    Some(BigRational::new(n, d))
}

pub fn to_integer(x: &Q) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

struct Wire<'a>(&'a BigInt);

impl serde::Serialize for Wire<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_bigint(self.0, s)
    }
}

/// Serde adapter: `#[serde(with = "crate::rational::json")]`.
pub mod json {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &Wire(x.numer()))?;
        st.serialize_field("den", &Wire(x.denom()))?;
        st.end()
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum IntRepr {
        Int(i64),
        Text(String),
    }

    impl IntRepr {
        fn big<E: de::Error>(self) -> std::result::Result<BigInt, E> {
            match self {
                IntRepr::Int(v) => Ok(BigInt::from(v)),
                IntRepr::Text(t) => t.parse().map_err(E::custom),
            }
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Pair { num: IntRepr, den: IntRepr },
        Int(i64),
        Text(String),
    }

    /// Accepts `{"num", "den"}`, a bare integer, or a `"p/q"` string.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Pair { num, den } => {
                let den = den.big()?;
                if den.is_zero() {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(BigRational::new(num.big()?, den))
            }
            Repr::Int(v) => Ok(qi(v)),
            Repr::Text(t) => parse_q(&t).map_err(de::Error::custom),
        }
    }
}

/// Serde adapter for `Vec<Q>`.
pub mod json_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    struct One<'a>(&'a Q);

    impl serde::Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            json::serialize(self.0, s)
        }
    }

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&One(x))?;
        }
        seq.end()
    }
}

/// Serde adapter for `BigInt` as a JSON number (string when it overflows `i64`).
pub mod json_int {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser_bigint(n, s)
    }
}

/// `Option<BigInt>` variant of [`json_int`].
pub mod json_opt_int {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match n {
            Some(n) => ser_bigint(n, s),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("7/5").unwrap(), q(7, 5));
        assert_eq!(parse_q("-14/7").unwrap(), qi(-2));
        assert_eq!(fmt_q(&q(6, 4)), "3/2");
        assert_eq!(fmt_q(&qi(-2)), "-2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(isqrt_exact(&BigInt::from(441)), Some(BigInt::from(21)));
        assert_eq!(isqrt_exact(&BigInt::from(308)), None);
        assert_eq!(qsqrt_exact(&q(4, 9)), Some(q(2, 3)));
        assert_eq!(qsqrt_exact(&q(4, 7)), None);
    }

    #[test]
    fn json_shape() {
        #[derive(serde::Serialize, serde::Deserialize)]
        struct W {
            #[serde(with = "json")]
            x: Q,
        }
        let s = serde_json::to_string(&W { x: q(-3, 7) }).unwrap();
        assert_eq!(s, r#"{"x":{"num":-3,"den":7}}"#);
        let back: W = serde_json::from_str(&s).unwrap();
        assert_eq!(back.x, q(-3, 7));
        let w: W = serde_json::from_str(r#"{"x":"9/7"}"#).unwrap();
        assert_eq!(w.x, q(9, 7));
        let w: W = serde_json::from_str(r#"{"x":3}"#).unwrap();
        assert_eq!(w.x, qi(3));
    }
}

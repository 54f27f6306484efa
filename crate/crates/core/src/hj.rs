//! Hirzebruch–Jung continued fractions `[n_1, ..., n_l] = n_1 - 1/(n_2 - 1/(... - 1/n_l))`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;

/// An admissible string: non-empty, every entry at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HjString(Vec<i64>);

impl HjString {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyString);
        }
        if let Some(&bad) = entries.iter().find(|&&n| n < 2) {
            return Err(Error::EntryTooSmall(bad));
        }
        Ok(HjString(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|w|`: numerator of the value, i.e. the order of the singularity.
    pub fn order(&self) -> i64 {
        continuant(&self.0)
    }

    pub fn value(&self) -> Q {
        let num = continuant(&self.0);
        let den = continuant(&self.0[1..]);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn reversed(&self) -> HjString {
        HjString(self.0.iter().rev().copied().collect())
    }

    /// True when every entry is 2 (a du Val string).
    pub fn is_du_val(&self) -> bool {
        self.0.iter().all(|&n| n == 2)
    }
}

impl fmt::Display for HjString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// Determinant of the string `[n_1..n_k]`, with `|[]| = 1`.
fn continuant(entries: &[i64]) -> i64 {
    let (mut prev, mut cur) = (0i64, 1i64);
    for &n in entries.iter().rev() {
        let next = n * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Parses `2,2,3` (brackets optional).
pub fn parse_string(s: &str) -> Result<HjString> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let entries = body
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::MalformedRational(s.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    HjString::new(entries)
}

/// Exact value `q/q_1` of the continued fraction, in lowest terms.
pub fn hj_eval(entries: &[i64]) -> Result<Q> {
    Ok(HjString::new(entries.to_vec())?.value())
}

/// The admissible string with value `q/a`, by the ceiling recursion
/// `n = ceil(q/a)`, `(q, a) -> (a, n*a - q)`.
pub fn hj_expand(q: i64, a: i64) -> Result<HjString> {
    if !(q > a && a >= 1) || q.gcd(&a) != 1 {
        return Err(Error::InvalidSingularity { q, a });
    }
    let (mut num, mut den) = (q, a);
    let mut out = Vec::new();
    while den > 0 {
        let n = (num + den - 1) / den;
        out.push(n);
        let rem = n * den - num;
        num = den;
        den = rem;
    }
    HjString::new(out)
}

/// The `u_j` / `v_j` tables of a string, indexed `0..=l+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UvSequences {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub q: i64,
}

impl UvSequences {
    pub fn u(&self, j: usize) -> i64 {
        self.u[j]
    }

    pub fn v(&self, j: usize) -> i64 {
        self.v[j]
    }
}

pub fn uv_sequences(s: &HjString) -> UvSequences {
    let n = s.entries();
    let l = n.len();
    let mut u = vec![0i64; l + 2];
    let mut v = vec![0i64; l + 2];
    u[1] = 1;
    for j in 1..=l {
        u[j + 1] = n[j - 1] * u[j] - u[j - 1];
    }
    v[l] = 1;
    for j in (1..=l).rev() {
        v[j - 1] = n[j - 1] * v[j] - v[j + 1];
    }
    debug_assert_eq!(u[l + 1], v[0]);
    UvSequences { q: u[l + 1], u, v }
}

/// All admissible strings with `1..=max_len` entries, each in `2..=max_entry`.
pub fn admissible_strings(max_len: usize, max_entry: i64) -> Vec<HjString> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for n in 2..=max_entry {
                let mut s = prefix.clone();
                s.push(n);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned().map(HjString));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use num_traits::ToPrimitive;

    /// Independent evaluation by folding the fraction from the tail.
    fn fold_eval(entries: &[i64]) -> Q {
        let mut acc = crate::rational::qi(*entries.last().unwrap());
        for &n in entries.iter().rev().skip(1) {
            acc = crate::rational::qi(n) - acc.recip();
        }
        acc
    }

    #[test]
    fn eval_examples() {
        assert_eq!(hj_eval(&[2, 2, 3]).unwrap(), q(7, 5));
        assert_eq!(hj_eval(&[2]).unwrap(), q(2, 1));
        assert_eq!(hj_eval(&[2, 2]).unwrap(), q(3, 2));
    }

    #[test]
    fn eval_rejects_bad_input() {
        assert_eq!(hj_eval(&[]), Err(Error::EmptyString));
        assert_eq!(hj_eval(&[2, 1, 3]), Err(Error::EntryTooSmall(1)));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(hj_expand(7, 5).unwrap().entries(), &[2, 2, 3]);
        assert_eq!(hj_expand(2, 1).unwrap().entries(), &[2]);
        assert_eq!(hj_expand(3, 2).unwrap().entries(), &[2, 2]);
        assert_eq!(hj_expand(5, 2).unwrap().entries(), &[3, 2]);
    }

    #[test]
    fn expand_rejects_bad_input() {
        assert!(hj_expand(6, 4).is_err());
        assert!(hj_expand(5, 5).is_err());
        assert!(hj_expand(5, 0).is_err());
        assert!(hj_expand(3, 7).is_err());
    }

    #[test]
    fn expand_matches_exhaustive_search() {
        // every string of length <= 3 with entries <= 3 whose value is 3/2
        let hits: Vec<_> = admissible_strings(3, 3)
            .into_iter()
            .filter(|s| fold_eval(s.entries()) == q(3, 2))
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0], hj_expand(3, 2).unwrap());
    }

    #[test]
    fn uv_examples() {
        let uv = uv_sequences(&hj_expand(7, 5).unwrap());
        assert_eq!(uv.u, vec![0, 1, 2, 3, 7]);
        assert_eq!(uv.v, vec![7, 5, 3, 1, 0]);
        let uv = uv_sequences(&HjString::new(vec![2]).unwrap());
        assert_eq!((uv.u, uv.v), (vec![0, 1, 2], vec![2, 1, 0]));
        let uv = uv_sequences(&HjString::new(vec![2, 2]).unwrap());
        assert_eq!((uv.u, uv.v), (vec![0, 1, 2, 3], vec![3, 2, 1, 0]));
    }

    #[test]
    fn uv_agrees_with_prefix_and_suffix_values() {
        for s in admissible_strings(4, 4) {
            let n = s.entries();
            let l = n.len();
            let uv = uv_sequences(&s);
            for j in 2..=l + 1 {
                assert_eq!(uv.u[j], fold_eval(&n[..j - 1]).numer().to_i64().unwrap());
            }
            for j in 0..l {
                assert_eq!(uv.v[j], fold_eval(&n[j..]).numer().to_i64().unwrap());
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let s = parse_string("[2, 2,3]").unwrap();
        assert_eq!(s.to_string(), "[2,2,3]");
        assert!(parse_string("2,x").is_err());
    }
}

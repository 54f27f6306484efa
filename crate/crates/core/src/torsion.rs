//! Finite abelian groups as products of cyclic factors.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TorsionGroup {
    pub cyclic_orders: Vec<u64>,
}

/// Residues, one per cyclic factor.
pub type TorsionElement = Vec<u64>;

impl TorsionGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if let Some(&d) = cyclic_orders.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {d}")));
        }
        Ok(TorsionGroup { cyclic_orders })
    }

    pub fn trivial() -> Self {
        TorsionGroup { cyclic_orders: Vec::new() }
    }

    /// `C_2^k`.
    pub fn elementary_two(k: usize) -> Self {
        TorsionGroup { cyclic_orders: vec![2; k] }
    }

    /// Parses `2,2,2`; an empty string, `1` or `trivial` is the trivial group.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" || s == "trivial" {
            return Ok(Self::trivial());
        }
        let orders = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidGroup(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.cyclic_orders.iter().fold(1, |a, &d| a.lcm(&d))
    }

    pub fn zero(&self) -> TorsionElement {
        vec![0; self.cyclic_orders.len()]
    }

    pub fn is_zero(&self, t: &[u64]) -> bool {
        t.iter().all(|&r| r == 0)
    }

    pub fn contains(&self, t: &[u64]) -> bool {
        t.len() == self.cyclic_orders.len() && t.iter().zip(&self.cyclic_orders).all(|(r, d)| r < d)
    }

    pub fn add(&self, s: &[u64], t: &[u64]) -> TorsionElement {
        s.iter().zip(t).zip(&self.cyclic_orders).map(|((a, b), d)| (a + b) % d).collect()
    }

    pub fn scale(&self, n: i64, t: &[u64]) -> TorsionElement {
        t.iter()
            .zip(&self.cyclic_orders)
            .map(|(&r, &d)| (n.rem_euclid(d as i64) as u64 * r) % d)
            .collect()
    }

    /// All elements in mixed-radix order.
    pub fn elements(&self) -> Vec<TorsionElement> {
        let mut out = vec![Vec::new()];
        for &d in &self.cyclic_orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |r| {
                        let mut e = prefix.clone();
                        e.push(r);
                        e
                    })
                })
                .collect();
        }
        out
    }

    /// `|{s : n s = 0}| = prod gcd(n, d_i)`.
    pub fn count_killed_by(&self, n: u64) -> u64 {
        self.cyclic_orders.iter().map(|&d| n.gcd(&d)).product()
    }

    pub fn has_torsion_of(&self, p: u64) -> bool {
        self.count_killed_by(p) > 1
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.cyclic_orders.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Every abelian group of order `n` once, in invariant-factor form
/// `d_1 | d_2 | ... | d_k`.
pub fn abelian_groups_of_order(n: u64) -> Vec<TorsionGroup> {
    fn go(remaining: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<TorsionGroup>) {
        if remaining == 1 {
            out.push(TorsionGroup { cyclic_orders: acc.clone() });
            return;
        }
        // next factor is a multiple of the previous one and divides what is left
        let mut d = min;
        while d <= remaining {
            if remaining % d == 0 && (acc.is_empty() || d % acc[acc.len() - 1] == 0) {
                let rest = remaining / d;
                // all later factors are multiples of d, so d must divide rest
                if rest == 1 || rest % d == 0 {
                    acc.push(d);
                    go(rest, d, acc, out);
                    acc.pop();
                }
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Torsion groups `H_1(X, Z)` of the fake projective planes with
/// automorphism group `7:3`.
pub fn torsion_groups_aut21() -> Vec<TorsionGroup> {
    vec![
        TorsionGroup::elementary_two(3),
        TorsionGroup::elementary_two(4),
        TorsionGroup::elementary_two(6),
    ]
}

/// Torsion groups of the fake projective planes with automorphism group `C_3^2`.
pub fn torsion_groups_aut9() -> Vec<TorsionGroup> {
    vec![
        TorsionGroup { cyclic_orders: vec![7] },
        TorsionGroup { cyclic_orders: vec![14] },
        TorsionGroup { cyclic_orders: vec![2, 2, 13] },
    ]
}

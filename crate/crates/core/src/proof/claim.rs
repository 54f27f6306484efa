//! Where an invariant curve `C in |2L|` can meet the three fixed points of an
//! order-3 automorphism, read on the resolution of `X/C_3`.
//!
//! At the `k`-th `1/3(1,2)` point the proper transform meets `A_k1, A_k2` in
//! `a, b`; then `C_k = ((2a+b) A_k1 + (a+2b) A_k2) / 3` and
//! `C_k^2 = -(2/3)(a^2 + ab + b^2)`. With `C'^2 = 4/3` the proper transform
//! has `C~^2 = 4/3 + sum C_k^2`, which must be an integer.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::rational::{q as rat, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Profile {
    pub a: u32,
    pub b: u32,
}

impl Profile {
    pub const ZERO: Profile = Profile { a: 0, b: 0 };

    pub fn new(a: u32, b: u32) -> Self {
        Profile { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn quadratic_form(self) -> i64 {
        let (a, b) = (self.a as i64, self.b as i64);
        a * a + a * b + b * b
    }

    /// Coefficients of `A_k1, A_k2` in `C_k`.
    pub fn coefficients(self) -> (Q, Q) {
        let (a, b) = (self.a as i64, self.b as i64);
        (rat(2 * a + b, 3), rat(a + 2 * b, 3))
    }

    pub fn c_sq(self) -> Q {
        rat(-2 * self.quadratic_form(), 3)
    }

    /// Weakest multiplicity of `C` at the point the profile allows: 0 off
    /// the curve, 1 exactly when `a + b = 1`, otherwise at least 2.
    pub fn mult_lower_bound(self) -> u32 {
        match self.a + self.b {
            0 => 0,
            1 => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `C~^2` for a triple of profiles.
pub fn c_tilde_sq(profiles: &[Profile; 3]) -> Q {
    profiles.iter().fold(rat(4, 3), |acc, p| acc + p.c_sq())
}

/// `sigma'^*(C).C >= sum_k mult_{x_k}(sigma'^* C) mult_{x_k}(C)`, where
/// `sigma'` rotates the points so `mult_{x_k}(sigma'^* C) = mult_{x_{k+1}}(C)`.
pub fn cyclic_multiplicity_sum(profiles: &[Profile; 3]) -> u32 {
    let m = profiles.map(Profile::mult_lower_bound);
    (0..3).map(|k| m[(k + 1) % 3] * m[k]).sum()
}

/// `sigma'^*(C).C = (2L)^2`.
pub const SELF_TRANSLATE_INTERSECTION: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSurvivor {
    pub profiles: [Profile; 3],
    #[serde(with = "crate::rational::json")]
    pub c_tilde_sq: Q,
}

impl ClaimSurvivor {
    pub fn touched(&self) -> usize {
        self.profiles.iter().filter(|p| !p.is_zero()).count()
    }

    /// Two touched points with `a + b = 1` each and the third untouched.
    pub fn is_minimal_two_point(&self) -> bool {
        self.touched() == 2 && self.profiles.iter().all(|p| p.a + p.b <= 1)
    }
}

impl fmt::Display for ClaimSurvivor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.profiles;
        write!(f, "{p} {q} {r}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub bound: u32,
    pub examined: usize,
    pub rejected_integrality: usize,
    pub rejected_multiplicity: usize,
    pub survivors: Vec<ClaimSurvivor>,
    /// Survivor count by number of touched points.
    pub touched_histogram: BTreeMap<usize, usize>,
}

impl ClaimOutcome {
    /// Every survivor passes through exactly two of the three points.
    pub fn exactly_two_points(&self) -> bool {
        !self.survivors.is_empty() && self.touched_histogram.keys().all(|&t| t == 2)
    }

    pub fn only_minimal_two_point(&self) -> bool {
        !self.survivors.is_empty() && self.survivors.iter().all(ClaimSurvivor::is_minimal_two_point)
    }
}

/// All triples with `a_k, b_k <= bound` through the integrality filter and
/// then the multiplicity bound, in lexicographic order.
pub fn claim_enumeration(bound: u32) -> ClaimOutcome {
    let singles: Vec<Profile> =
        (0..=bound).flat_map(|a| (0..=bound).map(move |b| Profile::new(a, b))).collect();
    let mut out = ClaimOutcome {
        bound,
        examined: 0,
        rejected_integrality: 0,
        rejected_multiplicity: 0,
        survivors: Vec::new(),
        touched_histogram: BTreeMap::new(),
    };
    for &p in &singles {
        for &q in &singles {
            for &r in &singles {
                out.examined += 1;
                let profiles = [p, q, r];
                let c2 = c_tilde_sq(&profiles);
                if !c2.is_integer() {
                    out.rejected_integrality += 1;
                    continue;
                }
                if cyclic_multiplicity_sum(&profiles) > SELF_TRANSLATE_INTERSECTION {
                    out.rejected_multiplicity += 1;
                    continue;
                }
                let s = ClaimSurvivor { profiles, c_tilde_sq: c2 };
                *out.touched_histogram.entry(s.touched()).or_default() += 1;
                out.survivors.push(s);
            }
        }
    }
    out
}

/// Distinct values of `C_k^2` over non-zero profiles with `a + b <= max_sum`,
/// largest first.
pub fn c_sq_values(max_sum: u32) -> Vec<Q> {
    let mut vals: Vec<Q> = (0..=max_sum)
        .flat_map(|a| (0..=max_sum - a).map(move |b| Profile::new(a, b)))
        .filter(|p| !p.is_zero())
        .map(Profile::c_sq)
        .collect();
    vals.sort_by(|x, y| y.cmp(x));
    vals.dedup();
    vals
}

/// `4/3 + C_k^2` is never an integer for a single point.
pub fn single_point_never_integral(bound: u32) -> bool {
    (0..=bound).all(|a| (0..=bound).all(|b| !(rat(4, 3) + Profile::new(a, b).c_sq()).is_integer()))
}

/// `C~^2` when all three points carry multiplicity one.
pub fn all_three_simple_c_tilde_sq() -> Q {
    c_tilde_sq(&[Profile::new(1, 0); 3])
}

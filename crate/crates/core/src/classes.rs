//! Numerical divisor classes `m L + t` on a fake projective plane: Riemann–Roch,
//! cube roots of `K`, invariant torsion and the multiplicity exclusions.
//!
//! Classes are written relative to a cube root `L_0` of `K` where one exists,
//! so `K = 3 L_0` has zero torsion part. `chi(O) = 1`, `K = 3L` numerically.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fiber::{b_curve_incidence, solve, FiberScenario, Orientation, Y_LABELS};
use crate::proof::sections::{
    four_monomials, section_independence, IndependenceCertificate, SectionSpec, VanishingPattern,
};
use crate::rational::{fmt_q, q as rat, qi, qsqrt_exact, Q};
use crate::surface::{k2_of, model_y};
use crate::torsion::{TorsionElement, TorsionGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassOnFpp {
    pub m: i64,
    pub t: TorsionElement,
}

impl ClassOnFpp {
    pub fn new(m: i64, t: TorsionElement) -> Self {
        ClassOnFpp { m, t }
    }

    pub fn untwisted(group: &TorsionGroup, m: i64) -> Self {
        ClassOnFpp { m, t: group.zero() }
    }

    pub fn self_intersection(&self) -> i64 {
        self.m * self.m
    }
}

/// `chi(mL + t) = chi(O) + D(D - K)/2 = 1 + m(m - 3)/2`.
pub fn chi(cls: &ClassOnFpp) -> i64 {
    chi_m(cls.m)
}

pub fn chi_m(m: i64) -> i64 {
    1 + m * (m - 3) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum H0 {
    Exact(i64),
    AtLeast(i64),
    Undetermined,
}

impl std::fmt::Display for H0 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            H0::Exact(n) => write!(f, "{n}"),
            H0::AtLeast(n) => write!(f, ">={n}"),
            H0::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// `h^0` where Riemann–Roch and Kodaira vanishing decide it.
///
/// `m >= 4`: `h^0 = chi`. `m = 3`: 0 for `K` itself (`p_g = 0`), otherwise at
/// least `chi = 1`. `m < 0`: 0. `m = 0`: 1 for the trivial class, else 0.
pub fn h0_large(cls: &ClassOnFpp, canonical: &ClassOnFpp) -> H0 {
    match cls.m {
        m if m >= 4 => H0::Exact(chi_m(m)),
        3 if cls == canonical => H0::Exact(0),
        3 => H0::AtLeast(1),
        m if m < 0 => H0::Exact(0),
        0 => H0::Exact(i64::from(cls.t.iter().all(|&r| r == 0))),
        _ => H0::Undetermined,
    }
}

/// Which vanishing theorem covers a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremCover {
    /// `Aut = 7:3`: `H^0(2L) = 0` for every ample generator, hence `H^0(L) = 0`.
    Aut21,
    /// `Aut = C_3^2`: `H^0(2L) = 0` for `L = L_0 + s`, `2s = 0`.
    Aut9,
}

/// [`h0_large`], with `m = 1, 2` resolved when a vanishing theorem applies.
pub fn h0_with_theorem(
    group: &TorsionGroup,
    cls: &ClassOnFpp,
    canonical: &ClassOnFpp,
    cover: Option<TheoremCover>,
) -> H0 {
    let base = h0_large(cls, canonical);
    if base != H0::Undetermined {
        return base;
    }
    let covered = match cover {
        None => false,
        Some(TheoremCover::Aut21) => matches!(cls.m, 1 | 2),
        Some(TheoremCover::Aut9) => match cls.m {
            2 => group.is_zero(&cls.t),
            1 => group.is_zero(&group.scale(2, &cls.t)),
            _ => false,
        },
    };
    if covered {
        H0::Exact(0)
    } else {
        H0::Undetermined
    }
}

/// Number of `L_0` with `3 L_0 = K`. Without 3-torsion `K` is 3-divisible with
/// one root; otherwise divisibility must be supplied.
pub fn cube_roots_of_k(group: &TorsionGroup, k_divisible: Option<bool>) -> Result<u64> {
    let three_torsion = group.count_killed_by(3);
    if three_torsion == 1 {
        return Ok(1);
    }
    match k_divisible {
        Some(true) => Ok(three_torsion),
        Some(false) => Ok(0),
        None => Err(Error::DivisibilityUnknown),
    }
}

/// Every torsion class is 2-torsion, so `sigma^*(2L) = 2L` for every automorphism.
pub fn two_torsion_pullback_check(group: &TorsionGroup) -> bool {
    group.cyclic_orders.iter().all(|&d| d == 2)
}

/// Bound on the non-trivial torsion classes invariant under an automorphism
/// whose quotient has fundamental group of order `pi1_quotient_order`: none for
/// a simply connected quotient, at most one (a 2-torsion) for `C_2`.
pub fn invariant_torsion_count(
    group: &TorsionGroup,
    automorphism_order: u64,
    pi1_quotient_order: u64,
) -> Result<u64> {
    if automorphism_order < 2 {
        return Err(Error::InvalidGroup(format!("automorphism of order {automorphism_order}")));
    }
    match pi1_quotient_order {
        1 => Ok(0),
        2 => Ok(1.min(group.count_killed_by(2) - 1)),
        other => Err(Error::UnsupportedQuotient(other)),
    }
}

/// One numerical identity used in a certificate; `lhs` and `rhs` must agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRelation {
    pub statement: String,
    #[serde(with = "crate::rational::json")]
    pub lhs: Q,
    #[serde(with = "crate::rational::json")]
    pub rhs: Q,
}

impl ClassRelation {
    fn new(statement: impl Into<String>, lhs: Q, rhs: Q) -> Self {
        ClassRelation { statement: statement.into(), lhs, rhs }
    }

    pub fn balanced(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Contradiction {
    /// Each `pi^* B'_j` is `K_X`, so `K_X` is effective against `p_g = 0`.
    CanonicalEffective { h0_k: i64 },
    /// Four independent sections of `4L` against `h^0(4L) = 3`.
    TooManySections { independent: usize, h0_4l: i64, certificate: IndependenceCertificate },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclusionCertificate {
    pub case: String,
    pub mu: u32,
    pub group: String,
    /// `d` with `pi^* B'_j = d L + t`.
    pub per_curve_degree: i64,
    pub invariant_torsion_bound: u64,
    pub relations: Vec<ClassRelation>,
    pub contradiction: Contradiction,
}

impl ExclusionCertificate {
    pub fn balanced(&self) -> bool {
        self.relations.iter().all(ClassRelation::balanced)
    }
}

/// Points `y_i` met by `B_j`, read from its incidence.
pub fn fibre_pattern(k: &crate::fiber::KMatrix) -> Result<VanishingPattern> {
    let points: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
    let sections = (0..3)
        .map(|j| {
            let inc = b_curve_incidence(k, j, Orientation::Forward);
            let through = Y_LABELS
                .iter()
                .enumerate()
                .filter(|(_, l)| (1..=3).any(|c| inc.hit(l, c) > 0))
                .map(|(i, _)| i)
                .collect();
            SectionSpec { label: format!("g{}", j + 1), vanishing: through }
        })
        .collect();
    VanishingPattern::new(points, sections)
}

/// Replays the class arithmetic showing that the `I_9` fibre cannot have
/// multiplicity `mu > 1` when the per-curve class `pi^* B'_j` is `2L + t` or `3L + t`.
pub fn multiplicity2_exclusion(
    scenario: &FiberScenario,
    group: &TorsionGroup,
) -> Result<ExclusionCertificate> {
    let n = scenario.fiber_kclass as i64;
    let mu = scenario.mu as i64;
    if mu == 1 {
        return Err(Error::NoContradiction(format!("{} with mu = 1 is admissible", scenario.case)));
    }
    let r = n / mu;
    let k2_y = k2_of(&model_y());
    let mut relations = vec![
        ClassRelation::new(format!("F = {n} K and F = {mu} F_0, so F_0 = {r} K"), qi(mu * r), qi(n)),
        // (pi^* D)^2 = 7 D^2 for the degree-7 quotient map
        ClassRelation::new(
            format!("(pi^*({r} K_Y))^2 = 7 ({r} K_Y)^2 = ({} L)^2", 3 * r),
            qi(7) * qi(r * r) * &k2_y,
            qi(9 * r * r),
        ),
        ClassRelation::new(
            format!("sigma_3 permutes pi^*B'_j, so each is {r} L + t"),
            qi(3 * r),
            qi(3 * r),
        ),
        ClassRelation::new(
            format!("(pi^*B'_1)^2 = 7 ((1/3) {r} K_Y)^2"),
            qi(7) * rat(r * r, 9) * &k2_y,
            qi(r * r),
        ),
    ];
    let bound = invariant_torsion_count(group, 7, scenario.case.pi1_order())?;
    let canonical = ClassOnFpp::untwisted(group, 3);
    let contradiction = match r {
        3 => {
            if cube_roots_of_k(group, None)? != 1 {
                return Err(Error::NoContradiction("K has no unique cube root".into()));
            }
            if bound != 0 {
                return Err(Error::NoContradiction(
                    "an invariant torsion may twist the class away from K".into(),
                ));
            }
            let cls = ClassOnFpp::untwisted(group, r);
            relations.push(ClassRelation::new("pi^*B'_1 = 3 L_0 = K_X", qi(cls.m), qi(canonical.m)));
            let H0::Exact(h0_k) = h0_large(&cls, &canonical) else {
                unreachable!("h0(K) is exact");
            };
            relations.push(ClassRelation::new("p_g = h0(K) = 0", qi(h0_k), qi(0)));
            Contradiction::CanonicalEffective { h0_k }
        }
        2 => {
            // an invariant torsion is 2-torsion, so the squares land in 4L
            relations.push(ClassRelation::new("2 (2L + t) = 4L", qi(2 * r), qi(4)));
            let sols = solve(*scenario);
            let [only] = sols.as_slice() else {
                return Err(Error::NoContradiction(format!(
                    "{} solutions for k_ij, expected exactly one",
                    sols.len()
                )));
            };
            let pattern = fibre_pattern(&only.k)?;
            let certificate = section_independence(&pattern, &four_monomials())?;
            let h0_4l = match h0_large(&ClassOnFpp::untwisted(group, 4), &canonical) {
                H0::Exact(v) => v,
                _ => unreachable!("m = 4 is in the Kodaira range"),
            };
            if certificate.independent as i64 <= h0_4l {
                return Err(Error::NoContradiction("sections do not exceed h0(4L)".into()));
            }
            Contradiction::TooManySections { independent: certificate.independent, h0_4l, certificate }
        }
        _ => {
            return Err(Error::NoContradiction(format!(
                "per-curve class {r} L is handled by the fibre enumeration"
            )))
        }
    };
    Ok(ExclusionCertificate {
        case: scenario.case.to_string(),
        mu: scenario.mu,
        group: group.to_string(),
        per_curve_degree: r,
        invariant_torsion_bound: bound,
        relations,
        contradiction,
    })
}

/// `h^i(2L_0)` and `h^i(L_0)` for `i = 0, 1, 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingTable {
    pub two_l0: [i64; 3],
    pub l0: [i64; 3],
}

/// `(O, -L_0, -2L_0)` is exceptional iff every entry vanishes.
pub fn exceptional_sequence_check(table: &VanishingTable) -> bool {
    table.two_l0.iter().chain(&table.l0).all(|&h| h == 0)
}

/// From `h^0(2L_0) = 0` alone, with `K = 3 L_0`: `h^0(L_0) = 0` (squares),
/// `h^2(2L_0) = h^0(L_0)`, `h^2(L_0) = h^0(2L_0)`, `h^1 = h^0 + h^2 - chi`.
pub fn table_from_h0_vanishing() -> VanishingTable {
    let h0_2 = 0;
    let h0_1 = 0;
    let h2_2 = h0_1;
    let h2_1 = h0_2;
    let h1_2 = h0_2 + h2_2 - chi_m(2);
    let h1_1 = h0_1 + h2_1 - chi_m(1);
    VanishingTable { two_l0: [h0_2, h1_2, h2_2], l0: [h0_1, h1_1, h2_1] }
}

/// For an ample generator `L` with `h^0(2L) = 0` for every generator:
/// `h^2(2L) = h^0(K - 2L)` where `K - 2L` is again a generator, and
/// `h^1(2L) = -chi(2L)`. Returns `[h^0, h^1, h^2]` of `2L`.
pub fn all_generators_chain() -> [i64; 3] {
    let h0 = 0;
    let h2 = 0;
    [h0, h0 + h2 - chi_m(2), h2]
}

/// `C'` on the quotient with `C'^2 = 4/|G|` written as `lambda K_Y`.
pub fn invariant_curve_multiple(c_sq: &Q, k2_y: &Q) -> Option<Q> {
    qsqrt_exact(&(c_sq / k2_y))
}

pub fn describe_h0(h: H0) -> String {
    h.to_string()
}

pub fn fmt_relation(r: &ClassRelation) -> String {
    format!("{}: {} = {}", r.statement, fmt_q(&r.lhs), fmt_q(&r.rhs))
}

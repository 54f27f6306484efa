//! Intersection matrices `k_ij = A_{i3}.B_j` between the (-3)-curves over the
//! three 1/7(1,5) points and the non-exceptional components `B_j` of the
//! `I_9` fibre `A_11, A_12, B_1, A_21, A_22, B_2, A_31, A_32, B_3`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::classes::{multiplicity2_exclusion, ExclusionCertificate};
use crate::error::{Error, Result};
use crate::intersection::{
    prop3_divisibility, prop3_sum_bound, ExceptionalIncidence, IntersectionContext,
};
use crate::rational::{qi, Q};
use crate::surface::{model_y, SurfaceModel};
use crate::torsion::torsion_groups_aut21;

/// An `(a,b)`-elliptic surface: relatively minimal over the line, `c_2 = 12`,
/// multiple fibres of multiplicities `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EllipticCase {
    #[serde(rename = "2,3")]
    TwoThree,
    #[serde(rename = "2,4")]
    TwoFour,
    #[serde(rename = "3,3")]
    ThreeThree,
}

impl EllipticCase {
    pub const ALL: [EllipticCase; 3] =
        [EllipticCase::TwoThree, EllipticCase::TwoFour, EllipticCase::ThreeThree];

    pub fn multiplicities(self) -> (u32, u32) {
        match self {
            EllipticCase::TwoThree => (2, 3),
            EllipticCase::TwoFour => (2, 4),
            EllipticCase::ThreeThree => (3, 3),
        }
    }

    /// `n` with `F = n K`, from `K = (1 - 1/a - 1/b) F`.
    pub fn fibre_k_multiple(self) -> u32 {
        let (a, b) = self.multiplicities();
        let k_over_f = qi(1) - Q::new(1.into(), a.into()) - Q::new(1.into(), b.into());
        let n = k_over_f.recip();
        debug_assert!(n.is_integer());
        n.to_integer().try_into().expect("small")
    }

    /// Order of the fundamental group, `gcd(a, b)`.
    pub fn pi1_order(self) -> u64 {
        let (a, b) = self.multiplicities();
        a.gcd(&b) as u64
    }

    /// Possible multiplicities of the `I_9` fibre: 1, `a`, `b`.
    pub fn candidate_multiplicities(self) -> Vec<u32> {
        let (a, b) = self.multiplicities();
        let mut v = vec![1, a, b];
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.replace(['(', ')', ' '], "").as_str() {
            "2,3" => Ok(EllipticCase::TwoThree),
            "2,4" => Ok(EllipticCase::TwoFour),
            "3,3" => Ok(EllipticCase::ThreeThree),
            other => Err(Error::InvalidScenario(format!("unknown elliptic case `{other}`"))),
        }
    }
}

impl fmt::Display for EllipticCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.multiplicities();
        write!(f, "({a},{b})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberScenario {
    pub case: EllipticCase,
    pub mu: u32,
    pub fiber_kclass: u32,
    pub row_sum: u32,
}

impl FiberScenario {
    pub fn new(case: EllipticCase, mu: u32) -> Result<Self> {
        let n = case.fibre_k_multiple();
        if mu == 0 || n % mu != 0 {
            return Err(Error::InvalidScenario(format!("mu = {mu} does not divide {n}")));
        }
        if !case.candidate_multiplicities().contains(&mu) {
            return Err(Error::InvalidScenario(format!(
                "a {case}-elliptic surface has no fibre of multiplicity {mu}"
            )));
        }
        // A_{i3}.F_0 = n/mu and A_{i3} meets A_{i2} inside F_0 once.
        Ok(FiberScenario { case, mu, fiber_kclass: n, row_sum: n / mu - 1 })
    }
}

pub type KMatrix = [[i64; 3]; 3];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FiberSolution {
    pub k: KMatrix,
    pub m: [i64; 3],
}

impl FiberSolution {
    pub fn from_matrix(k: KMatrix) -> Self {
        let m = [0, 1, 2].map(|j| column(&k, j).iter().sum::<i64>() + 1);
        FiberSolution { k, m }
    }

    pub fn is_identity(&self) -> bool {
        self.k == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    }
}

impl fmt::Display for FiberSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .k
            .iter()
            .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

fn column(k: &KMatrix, j: usize) -> [i64; 3] {
    [k[0][j], k[1][j], k[2][j]]
}

/// Direction of the circular order of the `I_9` fibre. `Forward` is
/// `B_j` adjacent to `A_{j,2}` and `A_{j+1,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    Reversed,
}

impl Orientation {
    fn neighbour(self, j: usize) -> usize {
        match self {
            Orientation::Forward => (j + 1) % 3,
            Orientation::Reversed => (j + 2) % 3,
        }
    }
}

/// Labels used for the three points of the order-7 quotient.
pub const Y_LABELS: [&str; 3] = ["y1", "y2", "y3"];

/// Incidence of `B_j` (0-based `j`) read off a `k` matrix.
pub fn b_curve_incidence(k: &KMatrix, j: usize, orientation: Orientation) -> ExceptionalIncidence {
    let col = column(k, j);
    let mut inc = ExceptionalIncidence::new(qi(col.iter().sum::<i64>() + 1))
        .with_hit(Y_LABELS[j], 2, 1)
        .with_hit(Y_LABELS[orientation.neighbour(j)], 1, 1);
    for (i, &n) in col.iter().enumerate() {
        inc.add(Y_LABELS[i], 3, n as u64);
    }
    inc
}

/// Counters from one exhaustive run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub candidates: usize,
    pub fail_sum_bound: usize,
    pub fail_divisibility: usize,
    pub fail_quadratic: usize,
    /// Quadratic survivors for which `E.K = 0, E^2 = -2` disagreed.
    pub cross_check_disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub scenario: FiberScenario,
    pub stats: SolveStats,
    pub solutions: Vec<FiberSolution>,
}

/// Non-negative triples summing to `total`, lexicographic.
fn compositions(total: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            out.push([a, b, total - a - b]);
        }
    }
    out
}

fn column_quadratic_holds(k: &KMatrix, j: usize, orientation: Orientation) -> bool {
    let col = column(k, j);
    let m: i64 = col.iter().sum::<i64>() + 1;
    let squares: i64 = col.iter().map(|x| x * x).sum();
    m * m + 14 == 3 * squares + 11 + 4 * col[j] + 2 * col[orientation.neighbour(j)]
}

pub fn solve_with(
    scenario: FiberScenario,
    orientation: Orientation,
    model: &SurfaceModel,
) -> Result<SolveOutcome> {
    crate::intersection::ensure_three_seven_model(model)?;
    let ctx = IntersectionContext::new(model)?;
    let rows = compositions(scenario.row_sum as i64);
    let mut stats = SolveStats::default();
    let mut solutions = Vec::new();
    for r1 in &rows {
        for r2 in &rows {
            for r3 in &rows {
                let k: KMatrix = [*r1, *r2, *r3];
                stats.candidates += 1;
                let incs: Vec<_> = (0..3).map(|j| b_curve_incidence(&k, j, orientation)).collect();
                if !incs.iter().all(prop3_sum_bound) {
                    stats.fail_sum_bound += 1;
                    continue;
                }
                if !incs.iter().all(prop3_divisibility) {
                    stats.fail_divisibility += 1;
                    continue;
                }
                if !(0..3).all(|j| column_quadratic_holds(&k, j, orientation)) {
                    stats.fail_quadratic += 1;
                    continue;
                }
                let agrees = incs.iter().all(|inc| {
                    ctx.ek(inc).map(|v| v == qi(0)).unwrap_or(false)
                        && ctx.e2(inc).map(|v| v == qi(-2)).unwrap_or(false)
                });
                if !agrees {
                    stats.cross_check_disagreements += 1;
                    continue;
                }
                solutions.push(FiberSolution::from_matrix(k));
            }
        }
    }
    Ok(SolveOutcome { scenario, stats, solutions })
}

pub fn solve_outcome(scenario: FiberScenario) -> SolveOutcome {
    solve_with(scenario, Orientation::Forward, &model_y()).expect("preset Y has the right shape")
}

/// Every `k` matrix compatible with the scenario, in lexicographic order.
pub fn solve(scenario: FiberScenario) -> Vec<FiberSolution> {
    solve_outcome(scenario).solutions
}

/// `(i,j) -> (i+1,j+1)` applied to the matrix.
pub fn rotate(k: &KMatrix) -> KMatrix {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[(i + 1) % 3][(j + 1) % 3] = k[i][j];
        }
    }
    out
}

/// `(i,j) -> (-i,-j)` mod 3; swaps the two circular orders.
pub fn reflect(k: &KMatrix) -> KMatrix {
    let r = |i: usize| (3 - i) % 3;
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[r(i)][r(j)] = k[i][j];
        }
    }
    out
}

/// Solutions fixed by the simultaneous rotation of rows and columns.
pub fn symmetric_solutions(scenario: FiberScenario) -> Vec<FiberSolution> {
    solve(scenario).into_iter().filter(|s| rotate(&s.k) == s.k).collect()
}

/// How one candidate multiplicity of the `I_9` fibre is disposed of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum MuVerdict {
    /// No `k` matrix survives the enumeration.
    CombinatoriallyInfeasible { stats: SolveStats },
    /// The matrices exist; the class arithmetic on `X` rules them out, once
    /// per torsion group of the order-21 surfaces.
    ExcludedByTorsion { solutions: usize, certificates: Vec<ExclusionCertificate> },
    Admissible { solutions: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuClassification {
    pub mu: u32,
    pub row_sum: u32,
    #[serde(flatten)]
    pub verdict: MuVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    pub case: EllipticCase,
    pub entries: Vec<MuClassification>,
    pub admissible: Vec<u32>,
}

/// Classifies every candidate multiplicity of the `I_9` fibre. Per-curve
/// class `d L` with `d = n / mu`: `d = 1` must die in the enumeration,
/// `d = 2, 3` go to the torsion argument. A multiplicity nothing rules out
/// stays admissible.
pub fn exclusion_report(case: EllipticCase) -> ExclusionReport {
    let mut entries = Vec::new();
    for mu in case.candidate_multiplicities() {
        let scenario = FiberScenario::new(case, mu).expect("candidate multiplicity");
        let outcome = solve_outcome(scenario);
        let d = scenario.fiber_kclass / mu;
        let verdict = if mu == 1 {
            MuVerdict::Admissible { solutions: outcome.solutions.len() }
        } else if outcome.solutions.is_empty() {
            MuVerdict::CombinatoriallyInfeasible { stats: outcome.stats }
        } else if d >= 2 {
            let certificates: Result<Vec<_>> = torsion_groups_aut21()
                .iter()
                .map(|g| multiplicity2_exclusion(&scenario, g))
                .collect();
            match certificates {
                Ok(c) if c.iter().all(ExclusionCertificate::balanced) => {
                    MuVerdict::ExcludedByTorsion { solutions: outcome.solutions.len(), certificates: c }
                }
                _ => MuVerdict::Admissible { solutions: outcome.solutions.len() },
            }
        } else {
            MuVerdict::Admissible { solutions: outcome.solutions.len() }
        };
        entries.push(MuClassification { mu, row_sum: scenario.row_sum, verdict });
    }
    let admissible = entries
        .iter()
        .filter(|e| matches!(e.verdict, MuVerdict::Admissible { .. }))
        .map(|e| e.mu)
        .collect();
    ExclusionReport { case, entries, admissible }
}

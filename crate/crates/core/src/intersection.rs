//! `E.K_{S'}` and `E^2` of a divisor on the resolution from its leading
//! coefficient `m` and its intersection numbers with the exceptional curves.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q as rat, qi, Q};
use crate::singularity::discrepancy;
use crate::surface::{compute_invariants, KSign, SurfaceInvariants, SurfaceModel};

/// Intersection numbers `E.A_{j,p}` (1-based `j`) and the coefficient `m` of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExceptionalIncidence {
    pub m: Q,
    pub hits: BTreeMap<(String, usize), u64>,
}

impl ExceptionalIncidence {
    pub fn new(m: Q) -> Self {
        ExceptionalIncidence { m, hits: BTreeMap::new() }
    }

    pub fn with_hit(mut self, label: &str, j: usize, n: u64) -> Self {
        self.add(label, j, n);
        self
    }

    pub fn add(&mut self, label: &str, j: usize, n: u64) {
        *self.hits.entry((label.to_string(), j)).or_insert(0) += n;
    }

    pub fn hit(&self, label: &str, j: usize) -> u64 {
        self.hits.get(&(label.to_string(), j)).copied().unwrap_or(0)
    }

    /// Parses `y1:2=1,y2:1=1`. Negative values are rejected.
    pub fn parse_hits(m: Q, text: &str) -> Result<Self> {
        let mut inc = ExceptionalIncidence::new(m);
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::ModelFile(format!("bad hit `{item}`, expected label:index=count"));
            let (key, val) = item.split_once('=').ok_or_else(bad)?;
            let (label, j) = key.split_once(':').ok_or_else(bad)?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            let n: u64 = val.trim().parse().map_err(|_| bad())?;
            inc.add(label.trim(), j, n);
        }
        Ok(inc)
    }

    pub fn total(&self) -> u64 {
        self.hits.values().sum()
    }

    pub fn validate(&self, model: &SurfaceModel) -> Result<()> {
        for (label, j) in self.hits.keys() {
            let p = model.point(label)?;
            if *j == 0 || *j > p.len() {
                return Err(Error::ComponentOutOfRange {
                    label: label.clone(),
                    index: *j,
                    len: p.len(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExceptionalIncidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", fmt_q(&self.m))?;
        for ((label, j), n) in self.hits.iter().filter(|(_, &n)| n > 0) {
            write!(f, " {label}:{j}={n}")?;
        }
        Ok(())
    }
}

/// `G_{jk} = v_{max(j,k)} u_{min(j,k)} / q` for one singular point (0-based storage).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalPairingMatrix {
    pub label: String,
    #[serde(skip)]
    pub entries: Vec<Vec<Q>>,
}

impl LocalPairingMatrix {
    pub fn for_point(p: &crate::singularity::SingularityType) -> Self {
        let uv = p.uv();
        let l = p.len();
        let entries = (1..=l)
            .map(|j| {
                (1..=l)
                    .map(|k| rat(uv.v(j.max(k)) * uv.u(j.min(k)), uv.q))
                    .collect()
            })
            .collect();
        LocalPairingMatrix { label: p.label.clone(), entries }
    }

    pub fn get(&self, j: usize, k: usize) -> &Q {
        &self.entries[j - 1][k - 1]
    }
}

/// Per-model data both formulas need, computed once.
#[derive(Debug, Clone)]
pub struct IntersectionContext {
    pub model: SurfaceModel,
    pub invariants: SurfaceInvariants,
    discrepancies: BTreeMap<String, Vec<Q>>,
    pairings: BTreeMap<String, LocalPairingMatrix>,
}

impl IntersectionContext {
    pub fn new(model: &SurfaceModel) -> Result<Self> {
        let invariants = compute_invariants(model)?;
        let discrepancies = model
            .singularities
            .iter()
            .map(|p| (p.label.clone(), discrepancy(p).coefficients))
            .collect();
        let pairings = model
            .singularities
            .iter()
            .map(|p| (p.label.clone(), LocalPairingMatrix::for_point(p)))
            .collect();
        Ok(IntersectionContext { model: model.clone(), invariants, discrepancies, pairings })
    }

    pub fn pairing(&self, label: &str) -> Result<&LocalPairingMatrix> {
        self.pairings.get(label).ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    fn d_prime(&self) -> Result<Q> {
        self.invariants
            .d_prime
            .clone()
            .map(Q::from_integer)
            .ok_or_else(|| Error::MissingIndex(self.model.name.clone()))
    }

    fn sqrt_d_prime(&self) -> Result<Q> {
        let dp = self.d_prime()?;
        self.invariants
            .sqrt_d_prime
            .clone()
            .map(Q::from_integer)
            .ok_or_else(|| Error::DPrimeNotSquare(fmt_q(&dp)))
    }

    /// `E.K_{S'} = m/sqrt(D') K_S^2 - sum_p sum_j a_{j,p} E.A_{j,p}`.
    pub fn ek(&self, inc: &ExceptionalIncidence) -> Result<Q> {
        inc.validate(&self.model)?;
        let mut total = if inc.m.is_zero() {
            Q::zero()
        } else {
            &inc.m / self.sqrt_d_prime()? * &self.invariants.k2_s
        };
        for ((label, j), &n) in &inc.hits {
            total -= &self.discrepancies[label][j - 1] * qi(n as i64);
        }
        Ok(total)
    }

    /// `E^2 = m^2/D' K_S^2 - sum_p x_p^T G_p x_p`.
    pub fn e2(&self, inc: &ExceptionalIncidence) -> Result<Q> {
        inc.validate(&self.model)?;
        let mut total = if inc.m.is_zero() {
            Q::zero()
        } else {
            &inc.m * &inc.m / self.d_prime()? * &self.invariants.k2_s
        };
        for p in &self.model.singularities {
            let g = &self.pairings[&p.label];
            let x: Vec<i64> = (1..=p.len()).map(|j| inc.hit(&p.label, j) as i64).collect();
            for j in 1..=p.len() {
                for k in 1..=p.len() {
                    if x[j - 1] != 0 && x[k - 1] != 0 {
                        total -= g.get(j, k) * qi(x[j - 1] * x[k - 1]);
                    }
                }
            }
        }
        Ok(total)
    }
}

pub fn ek(model: &SurfaceModel, inc: &ExceptionalIncidence) -> Result<Q> {
    IntersectionContext::new(model)?.ek(inc)
}

pub fn e2(model: &SurfaceModel, inc: &ExceptionalIncidence) -> Result<Q> {
    IntersectionContext::new(model)?.e2(inc)
}

/// Checks that `model` has exactly three points of type 1/7(1,5) and `D' = 9`.
pub fn ensure_three_seven_model(model: &SurfaceModel) -> Result<()> {
    let shape_ok = model.singularities.len() == 3
        && model.singularities.iter().all(|p| p.string.entries() == [2, 2, 3]);
    if !shape_ok {
        return Err(Error::WrongModelShape(format!(
            "`{}` is not three points of type 1/7(1,5)",
            model.name
        )));
    }
    let inv = compute_invariants(model)?;
    if inv.d_prime != Some(9.into()) {
        return Err(Error::WrongModelShape(format!("`{}` does not have D' = 9", model.name)));
    }
    Ok(())
}

/// Both sides of `m^2 + 14 = 3 sum k_i^2 + 11 + 4 k_jj + 2 k_{j+1,j}` with
/// `m = sum k_i + 1`. `column[i]` is `k_{i+1, j}`; `j` is 1-based and wraps.
pub fn specialized_b_curve_equation(
    model: &SurfaceModel,
    column: [i64; 3],
    j: usize,
) -> Result<(Q, Q)> {
    ensure_three_seven_model(model)?;
    if !(1..=3).contains(&j) {
        return Err(Error::WrongModelShape(format!("column index {j} out of 1..=3")));
    }
    Ok(specialized_sides(column, j))
}

pub(crate) fn specialized_sides(column: [i64; 3], j: usize) -> (Q, Q) {
    let m: i64 = column.iter().sum::<i64>() + 1;
    let squares: i64 = column.iter().map(|k| k * k).sum();
    let k_jj = column[j - 1];
    let k_next = column[j % 3];
    (qi(m * m + 14), qi(3 * squares + 11 + 4 * k_jj + 2 * k_next))
}

/// `sum_i (E.A_{i1} + 2 E.A_{i2})` is divisible by 3.
pub fn prop3_divisibility(inc: &ExceptionalIncidence) -> bool {
    let s: u64 = inc
        .hits
        .iter()
        .map(|((_, j), &n)| match j {
            1 => n,
            2 => 2 * n,
            _ => 0,
        })
        .sum();
    s % 3 == 0
}

/// `sum_i (E.A_{i1} + E.A_{i2} + E.A_{i3}) >= 3`.
pub fn prop3_sum_bound(inc: &ExceptionalIncidence) -> bool {
    inc.hits.iter().filter(|((_, j), _)| (1..=3).contains(j)).map(|(_, &n)| n).sum::<u64>() >= 3
}

/// Whether effective classes not supported on the exceptional locus need `m > 0`.
pub fn requires_positive_m(model: &SurfaceModel) -> bool {
    model.k_sign == KSign::Ample
}

/// Sign constraint on `m` for an effective class that is not exceptional.
pub fn effective_m_sign_ok(model: &SurfaceModel, m: &Q) -> bool {
    use num_traits::Signed;
    match model.k_sign {
        KSign::Ample => m.is_positive(),
        KSign::AntiAmple => m.is_negative(),
        KSign::Other => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{model_y, preset};

    /// Incidence of the fibre component meeting `A_{j,2}` and `A_{j+1,1}`.
    fn b_curve(column: [i64; 3], j: usize) -> ExceptionalIncidence {
        let m = column.iter().sum::<i64>() + 1;
        let lab = |i: usize| format!("y{}", (i - 1) % 3 + 1);
        let mut inc = ExceptionalIncidence::new(qi(m))
            .with_hit(&lab(j), 2, 1)
            .with_hit(&lab(j + 1), 1, 1);
        for (i, &k) in column.iter().enumerate() {
            inc.add(&lab(i + 1), 3, k as u64);
        }
        inc
    }

    #[test]
    fn ek_of_b_curve_vanishes() {
        let y = model_y();
        for j in 1..=3 {
            for col in [[1, 0, 0], [0, 1, 0], [2, 2, 1], [5, 0, 0]] {
                assert_eq!(ek(&y, &b_curve(col, j)).unwrap(), Q::zero());
            }
        }
    }

    #[test]
    fn ek_examples() {
        let y = model_y();
        assert_eq!(ek(&y, &ExceptionalIncidence::new(qi(0))).unwrap(), Q::zero());
        assert_eq!(ek(&y, &ExceptionalIncidence::new(qi(3))).unwrap(), rat(9, 7));
    }

    #[test]
    fn e2_examples() {
        let y = model_y();
        let mut id = [0; 3];
        for j in 1..=3 {
            id[j - 1] = 1;
            assert_eq!(e2(&y, &b_curve(id, j)).unwrap(), qi(-2));
            id[j - 1] = 0;
        }
        assert_eq!(e2(&y, &ExceptionalIncidence::new(qi(0))).unwrap(), Q::zero());
        let single = ExceptionalIncidence::new(qi(0)).with_hit("y1", 3, 1);
        assert_eq!(e2(&y, &single).unwrap(), rat(-3, 7));
    }

    #[test]
    fn pairing_matrix_for_seven_five() {
        let y = model_y();
        let g = LocalPairingMatrix::for_point(&y.singularities[0]);
        let want = [[5, 3, 1], [3, 6, 2], [1, 2, 3]];
        for j in 1..=3 {
            for k in 1..=3 {
                assert_eq!(*g.get(j, k), rat(want[j - 1][k - 1], 7));
            }
        }
    }

    #[test]
    fn specialized_examples() {
        let y = model_y();
        assert_eq!(specialized_b_curve_equation(&y, [1, 0, 0], 1).unwrap(), (qi(18), qi(18)));
        assert_eq!(specialized_b_curve_equation(&y, [0, 0, 0], 1).unwrap(), (qi(15), qi(11)));
        assert_eq!(specialized_b_curve_equation(&y, [2, 2, 1], 1).unwrap(), (qi(50), qi(50)));
        let z = preset("Z").unwrap().model;
        assert!(matches!(
            specialized_b_curve_equation(&z, [1, 0, 0], 1),
            Err(Error::WrongModelShape(_))
        ));
    }

    #[test]
    fn prop3_predicates() {
        let b = ExceptionalIncidence::new(qi(1)).with_hit("y1", 2, 1).with_hit("y2", 1, 1);
        assert!(prop3_divisibility(&b));
        assert!(!prop3_sum_bound(&b));
        assert!(prop3_divisibility(&ExceptionalIncidence::default()));
        assert!(!prop3_sum_bound(&ExceptionalIncidence::default()));
        assert!(!prop3_divisibility(&ExceptionalIncidence::new(qi(0)).with_hit("y1", 1, 1)));
        assert!(prop3_sum_bound(&b_curve([1, 0, 0], 1)));
    }

    #[test]
    fn invalid_incidence() {
        let y = model_y();
        let bad = ExceptionalIncidence::new(qi(0)).with_hit("y9", 1, 1);
        assert_eq!(ek(&y, &bad), Err(Error::UnknownPoint("y9".into())));
        let bad = ExceptionalIncidence::new(qi(0)).with_hit("y1", 4, 1);
        assert!(matches!(e2(&y, &bad), Err(Error::ComponentOutOfRange { .. })));
        let z = preset("Z").unwrap().model;
        assert!(matches!(ek(&z, &ExceptionalIncidence::new(qi(1))), Err(Error::MissingIndex(_))));
    }

    #[test]
    fn parse_hits_text() {
        let inc = ExceptionalIncidence::parse_hits(qi(2), "y1:2=1, y2:1=1,y1:3=1").unwrap();
        assert_eq!(inc.hit("y1", 2), 1);
        assert_eq!(inc.total(), 3);
        assert!(ExceptionalIncidence::parse_hits(qi(0), "y1:2=-1").is_err());
        assert!(ExceptionalIncidence::parse_hits(qi(0), "y1=1").is_err());
    }

    #[test]
    fn m_sign_predicate() {
        assert!(requires_positive_m(&model_y()));
        assert!(effective_m_sign_ok(&model_y(), &qi(2)));
        assert!(!effective_m_sign_ok(&model_y(), &qi(0)));
    }
}

//! Cyclic quotient singularities `1/q(1,a)` and their discrepancy divisors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hj::{hj_expand, uv_sequences, HjString, UvSequences};
use crate::rational::{q as rat, qi, Q};

/// A cyclic quotient singular point. The resolution string is `hj_expand(q, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityType {
    pub label: String,
    pub q: i64,
    pub a: i64,
    pub string: HjString,
}

/// Wire form in model files: `{"label": "y1", "q": 7, "a": 5}`.
#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct SingularitySpec {
    pub label: String,
    pub q: i64,
    pub a: i64,
}

impl SingularityType {
    pub fn new(label: impl Into<String>, q: i64, a: i64) -> Result<Self> {
        let string = hj_expand(q, a)?;
        Ok(SingularityType { label: label.into(), q, a, string })
    }

    pub fn from_spec(spec: &SingularitySpec) -> Result<Self> {
        Self::new(spec.label.clone(), spec.q, spec.a)
    }

    pub fn spec(&self) -> SingularitySpec {
        SingularitySpec { label: self.label.clone(), q: self.q, a: self.a }
    }

    /// Number of exceptional curves over the point.
    pub fn len(&self) -> usize {
        self.string.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn uv(&self) -> UvSequences {
        uv_sequences(&self.string)
    }
}

/// `D_p = sum a_j A_j` together with `D_p.K` and `D_p^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyDivisor {
    #[serde(with = "crate::rational::json_vec")]
    pub coefficients: Vec<Q>,
    #[serde(with = "crate::rational::json")]
    pub dpk: Q,
    #[serde(with = "crate::rational::json")]
    pub dp2: Q,
}

impl DiscrepancyDivisor {
    fn from_coefficients(s: &HjString, coefficients: Vec<Q>) -> Self {
        let dpk: Q = coefficients
            .iter()
            .zip(s.entries())
            .map(|(a, &n)| a * qi(n - 2))
            .sum();
        DiscrepancyDivisor { dp2: -dpk.clone(), dpk, coefficients }
    }
}

/// Closed form `a_j = 1 - (v_j + u_j)/q`.
pub fn discrepancy(s: &SingularityType) -> DiscrepancyDivisor {
    let uv = s.uv();
    let coefficients = (1..=s.len())
        .map(|j| qi(1) - rat(uv.v(j) + uv.u(j), uv.q))
        .collect();
    DiscrepancyDivisor::from_coefficients(&s.string, coefficients)
}

/// Solves `D_p . A_j = 2 + A_j^2` for every curve of the string.
pub fn discrepancy_by_linear_solve(s: &SingularityType) -> Result<DiscrepancyDivisor> {
    let m = intersection_matrix(&s.string);
    let rhs: Vec<Q> = s.string.entries().iter().map(|&n| qi(2 - n)).collect();
    let a: Vec<Vec<Q>> = m.iter().map(|row| row.iter().map(|&x| qi(x)).collect()).collect();
    let coefficients = solve_dense(a, rhs)?;
    Ok(DiscrepancyDivisor::from_coefficients(&s.string, coefficients))
}

/// Intersection matrix of the string: `-n_j` on the diagonal, 1 between neighbours.
pub fn intersection_matrix(s: &HjString) -> Vec<Vec<i64>> {
    let l = s.len();
    let mut m = vec![vec![0i64; l]; l];
    for (j, &n) in s.entries().iter().enumerate() {
        m[j][j] = -n;
        if j + 1 < l {
            m[j][j + 1] = 1;
            m[j + 1][j] = 1;
        }
    }
    m
}

/// Determinant of a tridiagonal matrix by the three-term recurrence.
pub fn tridiagonal_det(m: &[Vec<i64>]) -> i64 {
    let (mut prev, mut cur) = (0i64, 1i64);
    for k in 0..m.len() {
        let off = if k == 0 { 0 } else { m[k][k - 1] * m[k - 1][k] };
        let next = m[k][k] * cur - off * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `|det R_p|`, which equals the order `q` of the point.
pub fn local_discriminant_order(s: &SingularityType) -> i64 {
    tridiagonal_det(&intersection_matrix(&s.string)).abs()
}

/// Gaussian elimination over the rationals.
pub(crate) fn solve_dense(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Result<Vec<Q>> {
    use num_traits::Zero;
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

//! Q-homology projective planes with cyclic quotient singularities: `K_S^2`,
//! `|det R|`, `D` and `D'`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, isqrt_exact, qi, to_integer, Q};
use crate::singularity::{discrepancy, local_discriminant_order, SingularitySpec, SingularityType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KSign {
    Ample,
    AntiAmple,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    pub name: String,
    /// `K^2` of the minimal resolution.
    pub k2_resolution: Q,
    pub singularities: Vec<SingularityType>,
    /// Index of `R` in its primitive closure. `None` when it is not known.
    pub c: Option<u64>,
    pub k_sign: KSign,
}

/// JSON model file layout.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceModelFile {
    pub name: String,
    #[serde(with = "crate::rational::json")]
    pub k2_resolution: Q,
    pub singularities: Vec<SingularitySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    #[serde(default = "default_sign")]
    pub k_ample_sign: KSign,
}

fn default_sign() -> KSign {
    KSign::Ample
}

impl SurfaceModel {
    pub fn new(
        name: impl Into<String>,
        k2_resolution: Q,
        singularities: Vec<SingularityType>,
        c: Option<u64>,
        k_sign: KSign,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for s in &singularities {
            if !seen.insert(s.label.as_str()) {
                return Err(Error::DuplicateLabel(s.label.clone()));
            }
        }
        if c == Some(0) {
            return Err(Error::InvalidIndex { c: 0, d: "?".into() });
        }
        Ok(SurfaceModel { name: name.into(), k2_resolution, singularities, c, k_sign })
    }

    pub fn from_file(file: &SurfaceModelFile) -> Result<Self> {
        let sings = file
            .singularities
            .iter()
            .map(SingularityType::from_spec)
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.name.clone(), file.k2_resolution.clone(), sings, file.c, file.k_ample_sign)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SurfaceModelFile =
            serde_json::from_str(text).map_err(|e| Error::ModelFile(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> SurfaceModelFile {
        SurfaceModelFile {
            name: self.name.clone(),
            k2_resolution: self.k2_resolution.clone(),
            singularities: self.singularities.iter().map(SingularityType::spec).collect(),
            c: self.c,
            k_ample_sign: self.k_sign,
        }
    }

    pub fn point(&self, label: &str) -> Result<&SingularityType> {
        self.singularities
            .iter()
            .find(|s| s.label == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn with_c(mut self, c: u64) -> Self {
        self.c = Some(c);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    #[serde(with = "crate::rational::json")]
    pub k2_s: Q,
    #[serde(with = "crate::rational::json_int")]
    pub det_r: BigInt,
    #[serde(with = "crate::rational::json_int")]
    pub d: BigInt,
    #[serde(with = "crate::rational::json_int")]
    pub sqrt_d: BigInt,
    #[serde(with = "crate::rational::json_opt_int")]
    pub d_prime: Option<BigInt>,
    #[serde(with = "crate::rational::json_opt_int")]
    pub sqrt_d_prime: Option<BigInt>,
}

/// `K_S^2 = K_{S'}^2 + sum D_p K_{S'}`.
pub fn k2_of(model: &SurfaceModel) -> Q {
    model
        .singularities
        .iter()
        .fold(model.k2_resolution.clone(), |acc, s| acc + discrepancy(s).dpk)
}

pub fn compute_invariants(model: &SurfaceModel) -> Result<SurfaceInvariants> {
    let k2_s = k2_of(model);
    let det_r = model
        .singularities
        .iter()
        .map(|s| BigInt::from(local_discriminant_order(s)))
        .fold(BigInt::one(), |a, b| a * b);
    if model.k_sign == KSign::Ample && !k2_s.is_positive() {
        return Err(Error::NotQHomologyCandidate(format!(
            "K_S is ample but K_S^2 = {}",
            fmt_q(&k2_s)
        )));
    }
    let d_q = Q::from_integer(det_r.clone()) * &k2_s;
    let d = to_integer(&d_q).ok_or_else(|| {
        Error::NotQHomologyCandidate(format!("D = {} is not an integer", fmt_q(&d_q)))
    })?;
    if d.is_zero() {
        return Err(Error::NotQHomologyCandidate("D = 0".into()));
    }
    let sqrt_d = isqrt_exact(&d)
        .ok_or_else(|| Error::NotQHomologyCandidate(format!("D = {d} is not a square")))?;
    let (d_prime, sqrt_d_prime) = match model.c {
        None => (None, None),
        Some(c) => {
            let c2 = BigInt::from(c) * BigInt::from(c);
            if !(&d % &c2).is_zero() {
                return Err(Error::InvalidIndex { c, d: d.to_string() });
            }
            let dp = &d / &c2;
            let root = isqrt_exact(&dp);
            (Some(dp), root)
        }
    };
    Ok(SurfaceInvariants { k2_s, det_r, d, sqrt_d, d_prime, sqrt_d_prime })
}

/// A quotient of a fake projective plane by a group of automorphisms.
#[derive(Debug, Clone)]
pub struct QuotientPreset {
    pub name: &'static str,
    pub group_order: u64,
    pub model: SurfaceModel,
}

fn points(prefix: &str, types: &[(i64, i64)]) -> Vec<SingularityType> {
    types
        .iter()
        .enumerate()
        .map(|(i, &(q, a))| SingularityType::new(format!("{prefix}{}", i + 1), q, a).unwrap())
        .collect()
}

/// The four quotient types `X/C3`, `X/C3^2`, `X/C7` and `X/(7:3)`.
pub fn quotient_presets() -> Vec<QuotientPreset> {
    let build = |name: &'static str, k2: i64, prefix: &str, types: &[(i64, i64)], c| {
        SurfaceModel::new(name, qi(k2), points(prefix, types), c, KSign::Ample).unwrap()
    };
    vec![
        QuotientPreset {
            name: "X/C3",
            group_order: 3,
            model: build("X/C3", 3, "x", &[(3, 2); 3], None),
        },
        QuotientPreset {
            name: "X/C3^2",
            group_order: 9,
            model: build("X/C3^2", 1, "x", &[(3, 2); 4], None),
        },
        QuotientPreset {
            name: "X/C7",
            group_order: 7,
            model: build("X/C7", 0, "y", &[(7, 5); 3], Some(7)),
        },
        QuotientPreset {
            name: "X/(7:3)",
            group_order: 21,
            model: build("X/(7:3)", 0, "z", &[(3, 2), (3, 2), (3, 2), (7, 5)], None),
        },
    ]
}

/// Looks up a preset by name; `Y` and `Z` are aliases for `X/C7` and `X/(7:3)`.
pub fn preset(name: &str) -> Result<QuotientPreset> {
    let canonical = match name {
        "Y" | "y" => "X/C7",
        "Z" | "z" | "X/7:3" => "X/(7:3)",
        other => other,
    };
    quotient_presets()
        .into_iter()
        .find(|p| p.name == canonical)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// The order-7 quotient `Y` with three points of type 1/7(1,5) and `c = 7`.
pub fn model_y() -> SurfaceModel {
    preset("X/C7").unwrap().model
}

/// A fake projective plane itself: smooth, `K^2 = 9`, `c = 1`.
pub fn smooth_fpp() -> SurfaceModel {
    SurfaceModel::new("X", qi(9), Vec::new(), Some(1), KSign::Ample).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn model_y_invariants() {
        let inv = compute_invariants(&model_y()).unwrap();
        assert_eq!(inv.k2_s, q(9, 7));
        assert_eq!(inv.det_r, BigInt::from(343));
        assert_eq!(inv.d, BigInt::from(441));
        assert_eq!(inv.d_prime, Some(BigInt::from(9)));
        assert_eq!(inv.sqrt_d_prime, Some(BigInt::from(3)));
    }

    #[test]
    fn smooth_invariants() {
        let inv = compute_invariants(&smooth_fpp()).unwrap();
        assert_eq!(inv.k2_s, qi(9));
        assert_eq!(inv.d, BigInt::from(9));
        assert_eq!(inv.d_prime, Some(BigInt::from(9)));
    }

    #[test]
    fn model_z_with_supplied_c() {
        let z = preset("Z").unwrap().model.with_c(3);
        let inv = compute_invariants(&z).unwrap();
        assert_eq!(inv.k2_s, q(3, 7));
        assert_eq!(inv.det_r, BigInt::from(189));
        assert_eq!(inv.d, BigInt::from(81));
        assert_eq!(inv.d_prime, Some(BigInt::from(9)));
    }

    #[test]
    fn presets_descend_from_k2_nine() {
        for p in quotient_presets() {
            let inv = compute_invariants(&p.model).unwrap();
            assert_eq!(inv.k2_s, q(9, p.group_order as i64), "{}", p.name);
        }
    }

    #[test]
    fn bad_index_is_rejected() {
        let y = model_y().with_c(2);
        assert!(matches!(compute_invariants(&y), Err(Error::InvalidIndex { c: 2, .. })));
    }

    #[test]
    fn mutated_order_fails_squareness() {
        let mut y = model_y();
        y.singularities[0] = SingularityType::new("y1", 5, 3).unwrap();
        assert!(matches!(compute_invariants(&y), Err(Error::NotQHomologyCandidate(_))));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let pts = vec![
            SingularityType::new("p", 3, 2).unwrap(),
            SingularityType::new("p", 3, 2).unwrap(),
        ];
        assert!(SurfaceModel::new("bad", qi(1), pts, None, KSign::Ample).is_err());
    }

    #[test]
    fn order_independent() {
        let z = preset("Z").unwrap().model;
        let mut rev = z.clone();
        rev.singularities.reverse();
        assert_eq!(compute_invariants(&z).unwrap(), compute_invariants(&rev).unwrap());
    }

    #[test]
    fn json_model_round_trip() {
        let text = r#"{"name":"Y","k2_resolution":0,"c":7,
            "singularities":[{"label":"y1","q":7,"a":5},{"label":"y2","q":7,"a":5},{"label":"y3","q":7,"a":5}]}"#;
        let m = SurfaceModel::from_json(text).unwrap();
        assert_eq!(m, model_y().clone_named("Y"));
        let again = serde_json::to_string(&m.to_file()).unwrap();
        assert_eq!(SurfaceModel::from_json(&again).unwrap(), m);
        assert!(SurfaceModel::from_json(r#"{"name":"x","k2_resolution":0,"singularities":[],"bogus":1}"#).is_err());
    }

    impl SurfaceModel {
        fn clone_named(&self, name: &str) -> SurfaceModel {
            SurfaceModel { name: name.into(), ..self.clone() }
        }
    }
}

//! Why an invariant curve `C in |2L|` cannot live on the elliptic quotient:
//! `K.C~` is squeezed to 0, so `C~` sits in fibres, and no union of fibre
//! components pulls back to `2L`.

use serde::Serialize;

use crate::fiber::EllipticCase;
use crate::rational::{q as rat, qi, Q};
use crate::surface::{k2_of, model_y};

/// A fibre piece and the multiple of `L` its pullback to `X` is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibreGenerator {
    pub name: String,
    pub l_multiple: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KcCertificate {
    pub case: EllipticCase,
    /// `K_Y.C' = (2/3) K_Y^2`, the upper bound for `K.C~`.
    #[serde(with = "crate::rational::json")]
    pub kc_upper: Q,
    /// The only non-negative integer below the bound.
    pub kc_value: i64,
    pub generators: Vec<FibreGenerator>,
    pub target: u32,
    pub target_representable: bool,
}

/// Multiples of `L` reachable as non-negative combinations of `gens`, up to `limit`.
pub fn representable(gens: &[u32], limit: u32) -> Vec<bool> {
    let mut reach = vec![false; limit as usize + 1];
    reach[0] = true;
    for n in 1..=limit as usize {
        reach[n] = gens.iter().any(|&g| g as usize <= n && g > 0 && reach[n - g as usize]);
    }
    reach
}

/// Pullbacks of fibre pieces with `F = n K` on the resolution, the `I_9`
/// fibre non-multiple, and `pi^* K_Y = K_X = 3L`.
pub fn fibre_generators(case: EllipticCase) -> Vec<FibreGenerator> {
    let n = case.fibre_k_multiple();
    let (a, b) = case.multiplicities();
    let mut gens = vec![FibreGenerator { name: "pi^*B'_j".into(), l_multiple: n }];
    let mut seen = Vec::new();
    for m in [a, b] {
        if seen.contains(&m) {
            continue;
        }
        seen.push(m);
        gens.push(FibreGenerator {
            name: format!("pi^*F_1' (multiplicity {m})"),
            l_multiple: 3 * n / m,
        });
    }
    gens.push(FibreGenerator { name: "general fibre".into(), l_multiple: 3 * n });
    gens
}

pub fn kc_nonneg_fiber_argument(case: EllipticCase) -> KcCertificate {
    let kc_upper = rat(2, 3) * k2_of(&model_y());
    let kc_value = (0..)
        .take_while(|&v| qi(v) <= kc_upper)
        .last()
        .expect("the bound is non-negative");
    let generators = fibre_generators(case);
    let gens: Vec<u32> = generators.iter().map(|g| g.l_multiple).collect();
    let target = 2;
    let target_representable = representable(&gens, target)[target as usize];
    KcCertificate { case, kc_upper, kc_value, generators, target, target_representable }
}

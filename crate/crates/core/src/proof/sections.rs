//! Linear independence of products of sections, certified by evaluating a
//! putative linear relation at marked points.
//!
//! A section is known only through the set of marked points where it
//! vanishes. If at some point exactly one surviving monomial is non-zero, its
//! coefficient in any relation must vanish; a single remaining monomial is a
//! non-zero section and so independent on its own.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionSpec {
    pub label: String,
    /// Indices into the pattern's marked points.
    pub vanishing: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingPattern {
    pub points: Vec<String>,
    pub sections: Vec<SectionSpec>,
}

impl VanishingPattern {
    pub fn new(points: Vec<String>, sections: Vec<SectionSpec>) -> Result<Self> {
        if points.is_empty() || sections.is_empty() {
            return Err(Error::InvalidPattern("need at least one point and one section".into()));
        }
        for s in &sections {
            if s.vanishing.iter().any(|&i| i >= points.len()) {
                return Err(Error::InvalidPattern(format!("`{}` names an unknown point", s.label)));
            }
            if s.vanishing.len() == points.len() {
                return Err(Error::InvalidPattern(format!(
                    "`{}` vanishes at every marked point",
                    s.label
                )));
            }
        }
        Ok(VanishingPattern { points, sections })
    }

    /// Points `x1..xn` and sections `g1..` with the given 0-based vanishing sets.
    pub fn indexed(n_points: usize, vanishing: &[&[usize]]) -> Result<Self> {
        let points = (1..=n_points).map(|i| format!("x{i}")).collect();
        let sections = vanishing
            .iter()
            .enumerate()
            .map(|(i, v)| SectionSpec { label: format!("g{}", i + 1), vanishing: v.iter().copied().collect() })
            .collect();
        Self::new(points, sections)
    }

    fn nonzero_at(&self, m: Monomial, point: usize) -> bool {
        !self.sections[m.0].vanishing.contains(&point) && !self.sections[m.1].vanishing.contains(&point)
    }

    pub fn monomial_label(&self, m: Monomial) -> String {
        let (a, b) = (&self.sections[m.0].label, &self.sections[m.1].label);
        if m.0 == m.1 {
            format!("{a}^2")
        } else {
            format!("{a}{b}")
        }
    }
}

/// Product of two sections, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial(pub usize, pub usize);

impl Monomial {
    pub fn new(a: usize, b: usize) -> Self {
        Monomial(a.min(b), a.max(b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == self.1 {
            write!(f, "g{}^2", self.0 + 1)
        } else {
            write!(f, "g{}g{}", self.0 + 1, self.1 + 1)
        }
    }
}

pub fn all_quadratic_monomials(n_sections: usize) -> Vec<Monomial> {
    (0..n_sections).flat_map(|a| (a..n_sections).map(move |b| Monomial(a, b))).collect()
}

/// `g1^2, g2^2, g1 g2, g3^2`.
pub fn four_monomials() -> Vec<Monomial> {
    vec![Monomial(0, 0), Monomial(1, 1), Monomial(0, 1), Monomial(2, 2)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationStep {
    pub point: String,
    pub monomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    pub monomials: Vec<String>,
    pub steps: Vec<EliminationStep>,
    /// The monomial left over at the end, independent on its own.
    pub remainder: Option<String>,
    pub independent: usize,
}

impl IndependenceCertificate {
    /// `x3:g1^2, x1:g2^2, x2:g3^2 | g1g2`.
    pub fn trace(&self) -> String {
        let steps: Vec<String> = self.steps.iter().map(|s| format!("{}:{}", s.point, s.monomial)).collect();
        match &self.remainder {
            Some(r) => format!("{} | {r}", steps.join(", ")),
            None => steps.join(", "),
        }
    }
}

/// Greedy elimination over `monomials` in the listed order: repeatedly take
/// the first surviving monomial that is the only non-zero one at some marked
/// point (first such point), and drop it.
pub fn section_independence(
    pattern: &VanishingPattern,
    monomials: &[Monomial],
) -> Result<IndependenceCertificate> {
    if let Some(m) = monomials.iter().find(|m| m.1 >= pattern.sections.len()) {
        return Err(Error::InvalidPattern(format!("monomial {m} uses an unknown section")));
    }
    let mut alive: Vec<Monomial> = Vec::new();
    for &m in monomials {
        if !alive.contains(&m) {
            alive.push(m);
        }
    }
    let labels = alive.iter().map(|&m| pattern.monomial_label(m)).collect();
    let mut steps = Vec::new();
    while alive.len() > 1 {
        let found = alive.iter().enumerate().find_map(|(idx, &m)| {
            (0..pattern.points.len())
                .find(|&x| {
                    pattern.nonzero_at(m, x)
                        && alive.iter().filter(|&&o| pattern.nonzero_at(o, x)).count() == 1
                })
                .map(|x| (idx, x))
        });
        let Some((idx, x)) = found else {
            return Err(Error::Inconclusive { eliminated: steps.len() });
        };
        let m = alive.remove(idx);
        steps.push(EliminationStep {
            point: pattern.points[x].clone(),
            monomial: pattern.monomial_label(m),
        });
    }
    let remainder = alive.first().map(|&m| pattern.monomial_label(m));
    Ok(IndependenceCertificate {
        monomials: labels,
        independent: steps.len() + usize::from(remainder.is_some()),
        steps,
        remainder,
    })
}

/// Largest number of monomials certified independent: over every subset of
/// the sections, all quadratic monomials in that subset, keeping complete
/// eliminations only. Monotone in the set of sections.
pub fn certified_independent_count(pattern: &VanishingPattern) -> Result<(usize, IndependenceCertificate)> {
    let n = pattern.sections.len();
    if n > 12 {
        return Err(Error::InvalidPattern(format!("{n} sections is too many to search")));
    }
    let mut best: Option<(usize, IndependenceCertificate)> = None;
    for mask in 1u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let monos: Vec<Monomial> = all_quadratic_monomials(chosen.len())
            .into_iter()
            .map(|m| Monomial(chosen[m.0], chosen[m.1]))
            .collect();
        if best.as_ref().is_some_and(|(c, _)| *c >= monos.len()) {
            continue;
        }
        if let Ok(cert) = section_independence(pattern, &monos) {
            best = Some((cert.independent, cert));
        }
    }
    Ok(best.expect("a single section always resolves"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibre_pattern_order() {
        // g_j vanishes at x_j and x_{j+1}
        let p = VanishingPattern::indexed(3, &[&[0, 1], &[1, 2], &[2, 0]]).unwrap();
        let cert = section_independence(&p, &four_monomials()).unwrap();
        assert_eq!(cert.independent, 4);
        assert_eq!(cert.trace(), "x3:g1^2, x1:g2^2, x2:g3^2 | g1g2");
    }

    #[test]
    fn invariant_curve_pattern_order() {
        // C through x1,x2; its rotates through x3,x1 and x2,x3
        let p = VanishingPattern::indexed(3, &[&[0, 1], &[2, 0], &[1, 2]]).unwrap();
        let cert = section_independence(&p, &four_monomials()).unwrap();
        assert_eq!(cert.independent, 4);
        assert_eq!(cert.trace(), "x3:g1^2, x2:g2^2, x1:g3^2 | g1g2");
    }

    #[test]
    fn single_section() {
        let p = VanishingPattern::indexed(1, &[&[]]).unwrap();
        let cert = section_independence(&p, &[Monomial(0, 0)]).unwrap();
        assert_eq!(cert.independent, 1);
        assert!(cert.steps.is_empty());
    }

    #[test]
    fn stall_is_inconclusive() {
        // two sections with the same zeros: g1^2, g2^2, g1g2 look alike everywhere
        let p = VanishingPattern::indexed(2, &[&[0], &[0]]).unwrap();
        let err = section_independence(&p, &all_quadratic_monomials(2)).unwrap_err();
        assert_eq!(err, Error::Inconclusive { eliminated: 0 });
        let (count, _) = certified_independent_count(&p).unwrap();
        assert_eq!(count, 1);
    }

    #[test]
    fn degenerate_patterns_rejected() {
        assert!(VanishingPattern::indexed(2, &[&[0, 1]]).is_err());
        assert!(VanishingPattern::indexed(2, &[&[5]]).is_err());
        assert!(VanishingPattern::indexed(2, &[]).is_err());
    }
}

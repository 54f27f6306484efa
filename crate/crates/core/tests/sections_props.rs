use std::collections::BTreeSet;

use fppkit_core::proof::sections::{
    certified_independent_count, four_monomials, section_independence, SectionSpec, VanishingPattern,
};
use proptest::prelude::*;

fn pattern(n_points: usize, masks: &[u8]) -> Option<VanishingPattern> {
    let points = (1..=n_points).map(|i| format!("x{i}")).collect();
    let sections = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| SectionSpec {
            label: format!("g{}", i + 1),
            vanishing: (0..n_points).filter(|b| m & (1 << b) != 0).collect::<BTreeSet<_>>(),
        })
        .collect();
    VanishingPattern::new(points, sections).ok()
}

proptest! {
    #[test]
    fn adding_a_section_never_lowers_the_count(
        n in 2usize..=4,
        masks in prop::collection::vec(0u8..16, 1..=4),
        extra in 0u8..16,
    ) {
        let full = (1u8 << n) - 1;
        let masks: Vec<u8> = masks.iter().map(|m| m & full).collect();
        let extra = extra & full;
        if let (Some(p), Some(q)) = (pattern(n, &masks), pattern(n, &[masks.clone(), vec![extra]].concat())) {
            let (a, _) = certified_independent_count(&p).unwrap();
            let (b, _) = certified_independent_count(&q).unwrap();
            prop_assert!(b >= a);
        }
    }
}

#[test]
fn both_fixed_point_patterns_certify_four() {
    let seven = VanishingPattern::indexed(3, &[&[0, 1], &[1, 2], &[2, 0]]).unwrap();
    let c = section_independence(&seven, &four_monomials()).unwrap();
    assert_eq!(c.independent, 4);
    assert_eq!(c.trace(), "x3:g1^2, x1:g2^2, x2:g3^2 | g1g2");

    let nine = VanishingPattern::indexed(3, &[&[0, 1], &[2, 0], &[1, 2]]).unwrap();
    let c = section_independence(&nine, &four_monomials()).unwrap();
    assert_eq!(c.independent, 4);
    assert_eq!(c.trace(), "x3:g1^2, x2:g2^2, x1:g3^2 | g1g2");
}

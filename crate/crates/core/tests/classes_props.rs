use fppkit_core::classes::{chi, chi_m, cube_roots_of_k, ClassOnFpp};
use fppkit_core::torsion::{abelian_groups_of_order, TorsionGroup};
use num_integer::Integer;
use proptest::prelude::*;

proptest! {
    #[test]
    fn chi_symmetric_about_half_k(m in -10_000i64..10_000) {
        prop_assert_eq!(chi_m(m), chi_m(3 - m));
    }

    #[test]
    fn chi_ignores_torsion(m in -50i64..50, t in prop::collection::vec(0u64..2, 4)) {
        let g = TorsionGroup::elementary_two(4);
        prop_assert_eq!(chi(&ClassOnFpp::new(m, t)), chi(&ClassOnFpp::untwisted(&g, m)));
    }
}

#[test]
fn cube_roots_over_small_groups() {
    for n in 1..=60u64 {
        for g in abelian_groups_of_order(n) {
            let brute = g.elements().iter().filter(|e| g.is_zero(&g.scale(3, e))).count() as u64;
            assert_eq!(cube_roots_of_k(&g, Some(true)).unwrap(), brute, "{g}");
            let product: u64 = g.cyclic_orders.iter().map(|d| d.gcd(&3)).product();
            assert_eq!(brute, product);
            if n % 3 != 0 {
                assert_eq!(cube_roots_of_k(&g, None).unwrap(), 1);
            }
        }
    }
}

#[test]
fn riemann_roch_values() {
    assert_eq!(chi_m(4), 3);
    assert_eq!(chi_m(2), 0);
    assert_eq!(chi_m(3), 1);
    assert_eq!(chi_m(0), 1);
    assert_eq!(chi_m(1), 0);
}

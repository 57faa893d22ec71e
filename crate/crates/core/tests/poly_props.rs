use onecrit_core::rational::int;
use onecrit_core::resultant::{resultant_y, resultant_y_prs};
use onecrit_core::{homogenize, BivariatePoly, Chart};
use proptest::prelude::*;

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -5i64..=5), 1..=max_terms).prop_map(|ts| {
        ts.into_iter()
            .fold(BivariatePoly::zero(), |acc, ((i, j), c)| acc.add(&BivariatePoly::monomial(int(c), i, j)))
    })
}

fn nonconstant_in_y(max_deg: u32) -> impl Strategy<Value = BivariatePoly> {
    poly(max_deg, 4).prop_filter("depends on y", |p| p.deg_y() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributive_and_commutative(f in poly(3, 5), g in poly(3, 5), h in poly(3, 5)) {
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn leibniz_rule(f in poly(3, 4), g in poly(3, 4)) {
        let lhs = f.mul(&g).partial_x();
        prop_assert_eq!(lhs, f.partial_x().mul(&g).add(&f.mul(&g.partial_x())));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in nonconstant_in_y(2),
        b in nonconstant_in_y(2),
        c in poly(1, 3),
        share in any::<bool>(),
    ) {
        let common = BivariatePoly::y().add(&c);
        prop_assume!(common.deg_y() > 0);
        let (f, g) = if share { (a.mul(&common), b.mul(&common)) } else { (a, b) };
        let r = resultant_y(&f, &g).unwrap();
        prop_assert_eq!(&r, &resultant_y_prs(&f, &g).unwrap());
        let shares_y_factor = f.gcd(&g).deg_y() > 0;
        prop_assert_eq!(r.is_zero(), shares_y_factor);
        if share {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn homogenize_round_trip(f in poly(4, 6)) {
        let d = f.degree().unwrap_or(0);
        prop_assert_eq!(homogenize(&f, d).unwrap().dehomogenize_at(Chart::Z), f);
    }
}

use onecrit_core::automorphism::{apply_automorphism, Generator, TameAutomorphism};
use onecrit_core::bifurcation::{affine_critical_values, census_oracle_check, component_census, ValueSet};
use onecrit_core::classify::bounded_grid;
use onecrit_core::rational::int;
use onecrit_core::{BivariatePoly, Rational};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -3i64..=3), 1..6).prop_filter_map("nonconstant", |terms| {
        let p = BivariatePoly::from_terms(terms.into_iter().map(|((i, j), c)| ((i, j), int(c))));
        (!p.is_constant() && p.degree().unwrap() <= 4).then_some(p)
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        ((-2i64..=2).prop_filter("nonzero", |l| *l != 0), 0u32..=2).prop_map(|(l, mu)| Generator::triangular(int(l), mu)),
        Just(Generator::swap()),
        (-2i64..=2, -2i64..=2, -2i64..=2).prop_filter_map("invertible", |(a, b, t)| {
            Generator::affine([[int(1), int(a)], [int(b), int(1 + a * b + 1)]], [int(t), int(-t)]).ok()
        }),
    ]
}

fn tame() -> impl Strategy<Value = TameAutomorphism> {
    prop::collection::vec(generator(), 1..=3).prop_map(|g| TameAutomorphism::new(g).unwrap())
}

fn shift(v: &ValueSet, c: &Rational) -> Vec<Rational> {
    v.rational_values.iter().map(|x| x + c).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tame_invariance(f in small_poly(), phi in tame()) {
        let g = apply_automorphism(&f, &phi).unwrap();
        prop_assert_eq!(affine_critical_values(&f).unwrap(), affine_critical_values(&g).unwrap());
    }

    #[test]
    fn constant_shift(f in small_poly(), c in -5i64..=5, d in 1i64..=3) {
        let c = Rational::new(c.into(), d.into());
        let base = affine_critical_values(&f).unwrap();
        let moved = affine_critical_values(&f.add(&BivariatePoly::constant(c.clone()))).unwrap();
        prop_assert_eq!(&moved.rational_values, &shift(&base, &c));
        prop_assert_eq!(moved.count(), base.count());
        if let Some(p) = &base.algebraic_part {
            // roots move by c: p(t - c) is a multiple of the new algebraic part
            let back = p.compose(&onecrit_core::UnivariatePoly::from_coeffs(vec![-c.clone(), int(1)]));
            let q = moved.algebraic_part.clone().unwrap();
            prop_assert!(back.rem(&q).is_zero());
        }
    }
}

#[test]
fn grid_critical_values_match_the_table() {
    for inst in bounded_grid() {
        let v = affine_critical_values(&inst.expand_unchecked()).unwrap();
        if inst.tag.has_affine_critical_value() {
            assert_eq!(v.rational_values, vec![int(0)], "{inst}");
            assert!(v.algebraic_part.is_none(), "{inst}");
        } else {
            assert!(v.is_empty(), "{inst}: {v}");
        }
    }
}

#[test]
fn grid_census_has_chi_one_and_matches_branch_counts() {
    for inst in bounded_grid() {
        assert_eq!(component_census(&inst).unwrap().chi(), 1, "{inst}");
        assert_eq!(census_oracle_check(&inst), Ok(true), "{inst}");
    }
}

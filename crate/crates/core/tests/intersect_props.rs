use onecrit_core::infinity::{puiseux_branches, CurveGerm};
use onecrit_core::intersect::{imult, imult_param, Method};
use onecrit_core::IntersectError;
use onecrit_core::rational::int;
use onecrit_core::BivariatePoly;
use proptest::prelude::*;

fn germ(p: BivariatePoly) -> CurveGerm {
    CurveGerm::new(p).unwrap()
}

fn m0(f: &BivariatePoly, g: &BivariatePoly) -> u64 {
    let r = imult(&germ(f.clone()), &germ(g.clone())).unwrap();
    assert_eq!(r.method, Method::CrossChecked, "{f} vs {g}");
    r.value
}

fn x() -> BivariatePoly {
    BivariatePoly::x()
}

fn z_pow(c: i64, e: u32) -> BivariatePoly {
    BivariatePoly::monomial(int(c), 0, e)
}

/// `x + a_{s-1} z² + ... + a_0 z^{s+1}` with `a_k = k + 1`; `z` sits in the second slot.
fn l1(s: u32) -> BivariatePoly {
    (0..s).fold(x(), |acc, k| acc.add(&z_pow(k as i64 + 1, s + 1 - k)))
}

/// `x^s + a_{s-1} x^{s-1} z² + ... + a_0 z^{s+1}` with `a_k = k + 1`.
fn l2(s: u32) -> BivariatePoly {
    (0..s).fold(x().pow(s), |acc, k| acc.add(&BivariatePoly::monomial(int(k as i64 + 1), k, s + 1 - k)))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn closed_form_grid() {
    for s in 1..=3u32 {
        let (l1, l2) = (l1(s), l2(s));
        assert_eq!(m0(&x(), &l2), s as u64 + 1);
        for p in 1..=5u32 {
            for q in 1..=5u32 {
                if gcd(p, q) != 1 {
                    continue;
                }
                let n = p + q * (s + 1);
                let big = n as u64;
                let first: Vec<BivariatePoly> = (1..=2).map(|a| l1.pow(q).sub(&z_pow(a, n))).collect();
                let second: Vec<BivariatePoly> = (1..=2).map(|a| x().pow(p).mul(&l2.pow(q)).sub(&z_pow(a, n))).collect();
                for a in 0..2 {
                    assert_eq!(m0(&l1, &first[a]), big, "s={s} p={p} q={q}");
                    assert_eq!(m0(&x(), &second[a]), big, "s={s} p={p} q={q}");
                    assert_eq!(m0(&l2, &second[a]), s as u64 * big, "s={s} p={p} q={q}");
                }
                assert_eq!(m0(&first[0], &first[1]), q as u64 * big, "s={s} p={p} q={q}");
                assert_eq!(m0(&second[0], &second[1]), (p + q * s) as u64 * big, "s={s} p={p} q={q}");
            }
        }
    }
}

/// Small polynomials vanishing at the origin.
fn small_germ() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -2i64..=2), 1..5).prop_filter_map("germ", |terms| {
        let p = BivariatePoly::from_terms(
            terms.into_iter().filter(|((i, j), _)| i + j > 0).map(|((i, j), c)| ((i, j), int(c))),
        );
        (!p.is_zero() && p.is_reduced()).then_some(p)
    })
}

fn admissible(r: &Result<onecrit_core::intersect::MultiplicityResult, IntersectError>) -> Option<u64> {
    match r {
        Ok(m) => Some(m.value),
        Err(IntersectError::CommonComponent) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric(f in small_germ(), g in small_germ()) {
        let a = admissible(&imult(&germ(f.clone()), &germ(g.clone())));
        let b = admissible(&imult(&germ(g), &germ(f)));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn additive(f1 in small_germ(), f2 in small_germ(), g in small_germ()) {
        let prod = f1.mul(&f2);
        let whole = admissible(&imult(&germ(prod), &germ(g.clone())));
        let parts = admissible(&imult(&germ(f1), &germ(g.clone())))
            .zip(admissible(&imult(&germ(f2), &germ(g))));
        if let (Some(w), Some((a, b))) = (whole, parts) {
            prop_assert_eq!(w, a + b);
        }
    }

    #[test]
    fn valuation_matches(f in small_germ(), g in small_germ()) {
        let Some(m) = admissible(&imult(&germ(f.clone()), &germ(g.clone()))) else { return Ok(()); };
        let gg = germ(g);
        // truncation past the Bezout bound certifies every order
        let trunc = (f.degree().unwrap() * gg.poly().degree().unwrap() + 1).max(4);
        let branches = puiseux_branches(&gg, trunc).unwrap();
        let ff = germ(f);
        let total: u64 = branches.iter().map(|b| imult_param(&ff, b).unwrap()).sum();
        prop_assert_eq!(total, m);
    }

    #[test]
    fn pencil(f in small_germ(), g in small_germ(), t in -3i64..=3, t2 in 1i64..=3) {
        prop_assume!(t != t2);
        let a = f.add(&g.scale(&int(t)));
        let b = f.add(&g.scale(&int(t2)));
        prop_assume!(!a.is_zero() && !b.is_zero() && a.is_reduced() && b.is_reduced());
        let lhs = admissible(&imult(&germ(a), &germ(b.clone())));
        let rhs = admissible(&imult(&germ(f), &germ(b)));
        prop_assert_eq!(lhs, rhs);
    }
}

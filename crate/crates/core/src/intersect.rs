//! Intersection multiplicities of plane curve germs at the origin.
//!
//! Two independent computations: Puiseux parameterizations of both germs, where `m₀` is the sum of
//! `ord_t f(γ(t))` over the branches `γ` of `g` and is read off the pairwise contact of branches,
//! and the order at `0` of a resultant after checking that the projection isolates the origin.

use std::fmt;

use crate::error::{IntersectError, LocalError};
use crate::infinity::{
    compose_valuation, cross_multiplicities, default_truncation, puiseux_branches, CurveGerm, PuiseuxBranch,
};
use crate::poly::BivariatePoly;
use crate::resultant::resultant_y_prs;
use crate::upoly::UnivariatePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Parameterization,
    ResultantOrder,
    CrossChecked,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Parameterization => "parameterization",
            Method::ResultantOrder => "resultant",
            Method::CrossChecked => "cross-checked",
        })
    }
}

/// A finite intersection number; a shared component is reported as an error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub value: u64,
    pub method: Method,
}

/// Upper bound on the `t`-degree of `f` along an exact branch.
fn exact_degree_bound(f: &BivariatePoly, b: &PuiseuxBranch) -> usize {
    let vdeg = b.series.last().map_or(0, |(k, _)| *k as usize);
    f.terms().map(|((i, j), _)| *i as usize * b.n as usize + *j as usize * vdeg).max().unwrap_or(0)
}

/// `t`-order of `f` along the branch, summed over its conjugates.
fn valuation_along(f: &BivariatePoly, b: &PuiseuxBranch) -> Result<u64, IntersectError> {
    let mut work = vec![b.clone()];
    let mut total = 0u64;
    while let Some(b) = work.pop() {
        let m = if b.exact { exact_degree_bound(f, &b) + 1 } else { b.truncation as usize + 1 };
        match compose_valuation(f, &b, m) {
            Ok(Some(v)) => total += v as u64 * b.conjugates() as u64,
            Ok(None) => return Err(IntersectError::BranchContainedInCurve),
            Err(split) => {
                let md = b.modulus.clone().expect("splits only occur over extensions");
                let cof = md.div_exact(&split.0).expect("factor of the modulus").monic();
                work.push(b.restrict(&split.0));
                work.push(b.restrict(&cof));
            }
        }
    }
    Ok(total)
}

/// `m₀(f, B)` for a branch `B`, as the `t`-order of `f` along it. A branch standing for several
/// conjugates counts each of them.
pub fn imult_param(f: &CurveGerm, branch: &PuiseuxBranch) -> Result<u64, IntersectError> {
    valuation_along(f.poly(), branch)
}

fn is_monomial(p: &UnivariatePoly) -> bool {
    p.order() == p.degree()
}

/// Order at `u = 0` of `Res_v(f, g)`, or why the projection to `u` does not isolate the origin.
fn projected_order(f: &BivariatePoly, g: &BivariatePoly) -> Result<Result<u64, String>, IntersectError> {
    let zero = crate::rational::int(0);
    let (a, b) = (f.eval_x(&zero), g.eval_x(&zero));
    let common = match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(IntersectError::CommonComponent),
        (true, false) => b,
        (false, true) => a,
        (false, false) => a.gcd(&b),
    };
    if !is_monomial(&common) {
        return Ok(Err(format!("common zeros {} = 0 away from the origin", common.fmt_var("v"))));
    }
    let lead = |p: &BivariatePoly| p.y_coeffs().last().map_or(zero.clone(), |c| c.coeff(0));
    if num_traits::Zero::is_zero(&lead(f)) && num_traits::Zero::is_zero(&lead(g)) {
        return Ok(Err("both curves pass through the point at infinity of u = 0".into()));
    }
    let r = resultant_y_prs(f, g).map_err(|_| IntersectError::CommonComponent)?;
    match r.order() {
        Some(k) => Ok(Ok(k as u64)),
        None => Err(IntersectError::CommonComponent),
    }
}

/// Removes a common factor missing the origin; a common factor through it is an error.
fn coprime_parts(f: &BivariatePoly, g: &BivariatePoly) -> Result<(BivariatePoly, BivariatePoly), IntersectError> {
    let h = f.gcd(g);
    if h.is_constant() {
        return Ok((f.clone(), g.clone()));
    }
    if num_traits::Zero::is_zero(&h.constant_term()) {
        return Err(IntersectError::CommonComponent);
    }
    Ok((f.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides")))
}

/// `m₀(f, g)` as the order of a resultant, projecting along `v` and failing that along `u`.
pub fn imult_resultant(f: &CurveGerm, g: &CurveGerm) -> Result<u64, IntersectError> {
    let (f, g) = coprime_parts(f.poly(), g.poly())?;
    let first = match projected_order(&f, &g)? {
        Ok(k) => return Ok(k),
        Err(why) => why,
    };
    match projected_order(&f.swap(), &g.swap())? {
        Ok(k) => Ok(k),
        Err(why) => Err(IntersectError::LocalizationFailure(format!("{first}; after swapping: {why}"))),
    }
}

/// Squarefree parts through the origin with their multiplicities.
fn local_parts(f: &BivariatePoly) -> Vec<(u64, CurveGerm)> {
    f.squarefree_decomposition()
        .into_iter()
        .filter_map(|(m, p)| CurveGerm::new(p).ok().map(|g| (m as u64, g)))
        .collect()
}

/// Sum of the intersection numbers between the branches of `f` and those of `g`, read off the
/// expansion chains, raising the truncation until every pair separates. Repeated factors count
/// with their multiplicity.
fn by_parameterization(f: &CurveGerm, g: &CurveGerm) -> Result<u64, IntersectError> {
    let df = f.poly().degree().unwrap_or(0);
    let dg = g.poly().degree().unwrap_or(0);
    // pairs separate below the Bezout bound
    let cap = default_truncation(f).max(default_truncation(g)).max(df * dg + 1);
    let (fs, gs) = (local_parts(f.poly()), local_parts(g.poly()));
    let mut trunc = 16u32.min(cap);
    'retry: loop {
        let mut total = 0;
        for (i, fi) in &fs {
            for (j, gj) in &gs {
                let attempt = puiseux_branches(fi, trunc)
                    .and_then(|a| Ok((a, puiseux_branches(gj, trunc)?)))
                    .and_then(|(a, b)| cross_multiplicities(&a, &b));
                match attempt {
                    Ok(v) => total += i * j * v.iter().sum::<u64>(),
                    Err(LocalError::TruncationTooSmall(_)) if trunc < cap => {
                        trunc = (trunc * 2).min(cap);
                        continue 'retry;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        return Ok(total);
    }
}

/// `m₀(f, g)`, by both methods whenever both apply.
pub fn imult(f: &CurveGerm, g: &CurveGerm) -> Result<MultiplicityResult, IntersectError> {
    coprime_parts(f.poly(), g.poly())?;
    let res = match imult_resultant(f, g) {
        Ok(v) => Some(v),
        Err(IntersectError::LocalizationFailure(_)) => None,
        Err(e) => return Err(e),
    };
    let par = match by_parameterization(f, g) {
        Ok(v) => Some(v),
        Err(IntersectError::Local(LocalError::ExtensionTowerRequired(_))) if res.is_some() => None,
        Err(e) => return Err(e),
    };
    match (par, res) {
        (Some(p), Some(r)) if p == r => Ok(MultiplicityResult { value: p, method: Method::CrossChecked }),
        (Some(p), Some(r)) => Err(IntersectError::MethodDisagreement { param: p, resultant: r }),
        (Some(p), None) => Ok(MultiplicityResult { value: p, method: Method::Parameterization }),
        (None, Some(r)) => Ok(MultiplicityResult { value: r, method: Method::ResultantOrder }),
        (None, None) => unreachable!("parameterization errors propagate without a resultant value"),
    }
}

/// Whether `m₀(f₁f₂, g) = m₀(f₁, g) + m₀(f₂, g)`.
pub fn imult_additive_check(f1: &CurveGerm, f2: &CurveGerm, g: &CurveGerm) -> Result<bool, IntersectError> {
    let prod = CurveGerm::new(f1.poly().mul(f2.poly()))?;
    Ok(imult(&prod, g)?.value == imult(f1, g)?.value + imult(f2, g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::int;

    fn germ(s: &str) -> CurveGerm {
        CurveGerm::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn valuation_along_parameterizations() {
        let cusp = PuiseuxBranch::parametric(2, int(1), vec![(3, int(1))]);
        assert_eq!(imult_param(&germ("x"), &cusp), Ok(2));
        assert_eq!(imult_param(&germ("y^2 - x^3"), &cusp), Err(IntersectError::BranchContainedInCurve));
        let axis = puiseux_branches(&germ("y"), 8).unwrap();
        assert_eq!(imult_param(&germ("y^3 - x^8"), &axis[0]), Ok(8));
        assert_eq!(imult_param(&germ("y - x^2"), &PuiseuxBranch::vertical()), Ok(1));
    }

    #[test]
    fn resultant_orders() {
        assert_eq!(imult_resultant(&germ("x"), &germ("y")), Ok(1));
        assert_eq!(imult_resultant(&germ("y^2 - x^3"), &germ("y^2 - 2*x^3")), Ok(6));
        assert_eq!(imult_resultant(&germ("y"), &germ("y^3 - x^11")), Ok(11));
        assert_eq!(imult_resultant(&germ("x*y"), &germ("x*(y - 1)")), Err(IntersectError::CommonComponent));
    }

    #[test]
    fn far_common_factor_is_ignored() {
        // the common factor y - 1 misses the origin
        assert_eq!(imult(&germ("x*(y - 1)"), &germ("y*(y - 1)")).unwrap().value, 1);
    }

    #[test]
    fn localization_failure_falls_back() {
        // both curves also meet at (1:0) and (0:1); the circle is tangent to x + y at the origin
        let (f, g) = (germ("x^2 + y^2 - x - y"), germ("(x + y)*(x + y - 1)"));
        assert!(matches!(imult_resultant(&f, &g), Err(IntersectError::LocalizationFailure(_))));
        assert_eq!(imult(&f, &g), Ok(MultiplicityResult { value: 2, method: Method::Parameterization }));
    }

    #[test]
    fn closed_forms() {
        // z in the y slot
        let r = imult(&germ("x"), &germ("x^3 + y^4")).unwrap();
        assert_eq!(r, MultiplicityResult { value: 4, method: Method::CrossChecked });
        assert_eq!(imult(&germ("x + y^2"), &germ("x^2*(x + y^2)^3 - y^8")).unwrap().value, 8);
        let a = germ("x^2*(x + y^2)^3 - y^8");
        let b = germ("x^2*(x + y^2)^3 - 2*y^8");
        assert_eq!(imult(&a, &b).unwrap().value, 40);
    }

    #[test]
    fn additivity_and_pencil() {
        assert_eq!(imult(&germ("x*(y - x^2)"), &germ("y")).unwrap().value, 3);
        assert_eq!(imult_additive_check(&germ("x"), &germ("y - x^2"), &germ("y")), Ok(true));
        assert_eq!(imult(&germ("(y - x^2)^2"), &germ("x")).unwrap().value, 2);
        assert_eq!(imult_additive_check(&germ("y - x^2"), &germ("y - x^2"), &germ("x")), Ok(true));
        // f = v², g = -u³, t = 1, t' = 2
        let lhs = imult(&germ("y^2 - x^3"), &germ("y^2 - 2*x^3")).unwrap().value;
        let rhs = imult(&germ("y^2"), &germ("y^2 - 2*x^3")).unwrap().value;
        assert_eq!((lhs, rhs), (6, 6));
    }

    #[test]
    fn irrational_branches_count_conjugates() {
        assert_eq!(imult(&germ("x"), &germ("y^2 - 2*x^2")).unwrap().value, 2);
        assert_eq!(imult(&germ("y - x"), &germ("y^2 - 2*x^2 - x^3")).unwrap().value, 2);
    }
}

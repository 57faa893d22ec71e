//! Points at infinity of an affine plane curve and local analysis of its projective closure there.

mod branch;
mod compose;
mod newton;
mod puiseux;

use std::fmt;

use num_traits::Zero;

pub use branch::{
    branch_data_at_infinity, cross_multiplicities, pairwise_multiplicities, BranchDataAtInfinity, BranchSummary, PointBranches,
};
pub use newton::{newton_polygon, NewtonEdge, NewtonPolygon};
pub use compose::compose_valuation;
pub use puiseux::{default_truncation, puiseux_branches, puiseux_branches_adaptive, PathStep, PuiseuxBranch};

use crate::error::LocalError;
use crate::homog::{homogenize, Chart};
use crate::poly::BivariatePoly;
use crate::rational::{to_text, Rational};
use crate::upoly::UnivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinityPoint {
    /// `(x : y : 0)` with the first nonzero coordinate equal to 1.
    Rational { x: Rational, y: Rational },
    /// `(a : 1 : 0)` where `a` is one of the roots of `minpoly`, none of them rational.
    Algebraic { minpoly: UnivariatePoly, index: usize },
}

impl InfinityPoint {
    pub fn is_rational(&self) -> bool {
        matches!(self, InfinityPoint::Rational { .. })
    }
}

impl fmt::Display for InfinityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinityPoint::Rational { x, y } => write!(f, "({}:{}:0)", to_text(x), to_text(y)),
            InfinityPoint::Algebraic { minpoly, index } => {
                write!(f, "(a{index}:1:0) where {} = 0", minpoly.fmt_var("a"))
            }
        }
    }
}

/// A germ at the origin of local coordinates `(u, v)`: the polynomial's `x` slot holds `u`, its
/// `y` slot holds `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGerm {
    poly: BivariatePoly,
    names: [String; 2],
    /// `u = 0` is the line at infinity.
    infinity_is_u: bool,
}

impl CurveGerm {
    pub fn new(poly: BivariatePoly) -> Result<Self, LocalError> {
        Self::with_names(poly, ["u", "v"], false)
    }

    pub fn with_names(poly: BivariatePoly, names: [&str; 2], infinity_is_u: bool) -> Result<Self, LocalError> {
        if poly.is_zero() {
            return Err(LocalError::ZeroGerm);
        }
        if !poly.constant_term().is_zero() {
            return Err(LocalError::UnitGerm);
        }
        Ok(CurveGerm { poly, names: names.map(String::from), infinity_is_u })
    }

    pub fn poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn names(&self) -> [&str; 2] {
        [&self.names[0], &self.names[1]]
    }

    pub fn infinity_is_u(&self) -> bool {
        self.infinity_is_u
    }
}

impl fmt::Display for CurveGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.fmt_vars(self.names()))
    }
}

fn top_form(f: &BivariatePoly) -> Result<(u32, BivariatePoly), LocalError> {
    if f.is_constant() {
        return Err(LocalError::ConstantPolynomial);
    }
    let d = f.degree().unwrap();
    Ok((d, f.homogeneous_part(d)))
}

/// Zeros of the top-degree form on `z = 0`: rational points ordered as `(1:c:0)` by `c`, then
/// `(0:1:0)`, then one algebraic point per irrational root.
pub fn points_at_infinity(f: &BivariatePoly) -> Result<Vec<InfinityPoint>, LocalError> {
    let (d, top) = top_form(f)?;
    // top(1, c) and top(a, 1)
    let in_c = UnivariatePoly::from_coeffs((0..=d).map(|j| top.coeff(d - j, j)).collect());
    let in_a = UnivariatePoly::from_coeffs((0..=d).map(|i| top.coeff(i, d - i)).collect());
    let mut out: Vec<InfinityPoint> = in_c
        .rational_roots()
        .into_iter()
        .map(|c| InfinityPoint::Rational { x: Rational::from_integer(1.into()), y: c })
        .collect();
    if top.coeff(0, d).is_zero() {
        out.push(InfinityPoint::Rational { x: Rational::zero(), y: Rational::from_integer(1.into()) });
    }
    let mut rest = in_a.squarefree_part();
    for r in in_a.rational_roots() {
        rest = rest.div_exact(&UnivariatePoly::from_roots(&[r])).expect("root divides");
    }
    if rest.deg() > 0 {
        let minpoly = UnivariatePoly::from_coeffs(
            rest.primitive_integer().into_iter().map(Rational::from_integer).collect(),
        );
        for index in 0..minpoly.deg() {
            out.push(InfinityPoint::Algebraic { minpoly: minpoly.clone(), index });
        }
    }
    Ok(out)
}

/// The projective closure near `p`, in the chart `x = 1` (for `(1:c:0)`, coordinates
/// `(z, y - c)`) or `y = 1` (for `(0:1:0)`, coordinates `(z, x)`).
pub fn localize(f: &BivariatePoly, p: &InfinityPoint) -> Result<CurveGerm, LocalError> {
    let (d, _) = top_form(f)?;
    let big_f = homogenize(f, d).expect("degree matches");
    match p {
        InfinityPoint::Algebraic { minpoly, .. } => Err(LocalError::NonRationalPoint(minpoly.fmt_var("a"))),
        InfinityPoint::Rational { x, y } if !x.is_zero() => {
            let c = y / x;
            // slots (y, z) -> (z, y), then recentre y at c
            let g = big_f.dehomogenize_at(Chart::X).swap();
            let shifted = g.substitute(&BivariatePoly::x(), &BivariatePoly::y().add(&BivariatePoly::constant(c)));
            CurveGerm::with_names(shifted, ["z", "y"], true)
        }
        InfinityPoint::Rational { .. } => {
            let g = big_f.dehomogenize_at(Chart::Y).swap();
            CurveGerm::with_names(g, ["z", "x"], true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::int;

    fn p(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    fn rat(x: i64, y: i64) -> InfinityPoint {
        InfinityPoint::Rational { x: int(x), y: int(y) }
    }

    #[test]
    fn points_of_examples() {
        assert_eq!(points_at_infinity(&p("x*(x^2*y+1)")).unwrap(), vec![rat(1, 0), rat(0, 1)]);
        assert_eq!(points_at_infinity(&p("x^2 - y^3")).unwrap(), vec![rat(1, 0)]);
        let alg = points_at_infinity(&p("x^2 - 2*y^2")).unwrap();
        assert_eq!(alg.len(), 2);
        for pt in &alg {
            match pt {
                InfinityPoint::Algebraic { minpoly, .. } => assert_eq!(*minpoly, UnivariatePoly::from_i64s(&[-2, 0, 1])),
                other => panic!("unexpected {other}"),
            }
        }
        assert_eq!(points_at_infinity(&p("3")), Err(LocalError::ConstantPolynomial));
    }

    #[test]
    fn local_equations() {
        let f = p("x*(x^2*y+1)");
        // u = z in the x slot, v in the y slot
        assert_eq!(localize(&f, &rat(1, 0)).unwrap().poly(), &p("y + x^3"));
        assert_eq!(localize(&f, &rat(0, 1)).unwrap().poly(), &p("y^3 + y*x^3"));
        assert_eq!(localize(&p("x*y - 1"), &rat(1, 0)).unwrap().poly(), &p("y - x^2"));
        let alg = points_at_infinity(&p("x^2 - 2*y^2")).unwrap();
        assert!(matches!(localize(&p("x^2 - 2*y^2"), &alg[0]), Err(LocalError::NonRationalPoint(_))));
    }

    #[test]
    fn recentred_point() {
        // top form (y - 2x)(y + x): points (1:-1:0), (1:2:0)
        let f = p("(y - 2*x)*(y + x) + 1");
        let pts = points_at_infinity(&f).unwrap();
        assert_eq!(pts, vec![rat(1, -1), rat(1, 2)]);
        let g = localize(&f, &pts[1]).unwrap();
        assert!(g.poly().constant_term().is_zero());
    }
}

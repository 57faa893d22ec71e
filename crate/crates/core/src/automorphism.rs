//! Tame automorphisms of the plane as words in affine and triangular generators.
//!
//! A word `[g1, g2, ..., gk]` is the map `p -> gk(...g2(g1(p)))`: generators act left to right.

use num_traits::Zero;

use crate::error::PolyError;
use crate::poly::BivariatePoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `(x, y) -> (m00*x + m01*y + t0, m10*x + m11*y + t1)`, with `det m != 0`.
    Affine { m: [[Rational; 2]; 2], t: [Rational; 2] },
    /// `(x, y) -> (x, y + lambda*x^mu)`.
    Triangular { lambda: Rational, mu: u32 },
}

impl Generator {
    pub fn affine(m: [[Rational; 2]; 2], t: [Rational; 2]) -> Result<Self, PolyError> {
        let g = Generator::Affine { m, t };
        g.check()?;
        Ok(g)
    }

    pub fn triangular(lambda: Rational, mu: u32) -> Self {
        Generator::Triangular { lambda, mu }
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap() -> Self {
        let (o, z) = (Rational::from_integer(1.into()), Rational::zero());
        Generator::Affine { m: [[z.clone(), o.clone()], [o, z.clone()]], t: [z.clone(), z] }
    }

    fn check(&self) -> Result<(), PolyError> {
        if let Generator::Affine { m, .. } = self {
            if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                return Err(PolyError::NonInvertibleAffine);
            }
        }
        Ok(())
    }

    /// Coordinate functions `(X(x,y), Y(x,y))`.
    pub fn components(&self) -> (BivariatePoly, BivariatePoly) {
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        match self {
            Generator::Affine { m, t } => (
                x.scale(&m[0][0]).add(&y.scale(&m[0][1])).add(&BivariatePoly::constant(t[0].clone())),
                x.scale(&m[1][0]).add(&y.scale(&m[1][1])).add(&BivariatePoly::constant(t[1].clone())),
            ),
            Generator::Triangular { lambda, mu } => {
                let shear = BivariatePoly::monomial(lambda.clone(), *mu, 0);
                (x, y.add(&shear))
            }
        }
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        self.check()?;
        Ok(match self {
            Generator::Affine { m, t } => {
                let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
                let inv = [
                    [&m[1][1] / &det, -&m[0][1] / &det],
                    [-&m[1][0] / &det, &m[0][0] / &det],
                ];
                let t_inv = [
                    -(&inv[0][0] * &t[0] + &inv[0][1] * &t[1]),
                    -(&inv[1][0] * &t[0] + &inv[1][1] * &t[1]),
                ];
                Generator::Affine { m: inv, t: t_inv }
            }
            Generator::Triangular { lambda, mu } => Generator::Triangular { lambda: -lambda, mu: *mu },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TameAutomorphism {
    gens: Vec<Generator>,
}

impl TameAutomorphism {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(gens: Vec<Generator>) -> Result<Self, PolyError> {
        for g in &gens {
            g.check()?;
        }
        Ok(Self { gens })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &TameAutomorphism) -> TameAutomorphism {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        TameAutomorphism { gens }
    }

    pub fn invert(&self) -> Result<TameAutomorphism, PolyError> {
        let gens = self.gens.iter().rev().map(Generator::inverse).collect::<Result<_, _>>()?;
        Ok(TameAutomorphism { gens })
    }

    /// Coordinate functions of the whole map.
    pub fn components(&self) -> (BivariatePoly, BivariatePoly) {
        let mut cur = (BivariatePoly::x(), BivariatePoly::y());
        for g in &self.gens {
            let (gx, gy) = g.components();
            cur = (gx.substitute(&cur.0, &cur.1), gy.substitute(&cur.0, &cur.1));
        }
        cur
    }
}

/// `f ∘ phi`.
pub fn apply_automorphism(f: &BivariatePoly, phi: &TameAutomorphism) -> Result<BivariatePoly, PolyError> {
    let mut h = f.clone();
    for g in phi.gens.iter().rev() {
        g.check()?;
        let (gx, gy) = g.components();
        h = h.substitute(&gx, &gy);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn unit_shear_of_xy() {
        let phi = TameAutomorphism::new(vec![Generator::triangular(int(1), 0)]).unwrap();
        let out = apply_automorphism(&parse_poly("x*y").unwrap(), &phi).unwrap();
        assert_eq!(out, parse_poly("x*y + x").unwrap());
    }

    #[test]
    fn singular_affine_rejected() {
        let m = [[int(1), int(2)], [int(2), int(4)]];
        assert_eq!(Generator::affine(m, [int(0), int(0)]), Err(PolyError::NonInvertibleAffine));
    }

    #[test]
    fn order_is_left_to_right() {
        // shift x by 1, then shear by x^2: the point map is (x+1, y + (x+1)^2)
        let phi = TameAutomorphism::new(vec![
            Generator::affine([[int(1), int(0)], [int(0), int(1)]], [int(1), int(0)]).unwrap(),
            Generator::triangular(int(1), 2),
        ])
        .unwrap();
        let (px, py) = phi.components();
        assert_eq!(px, parse_poly("x + 1").unwrap());
        assert_eq!(py, parse_poly("y + (x+1)^2").unwrap());
        assert_eq!(apply_automorphism(&BivariatePoly::y(), &phi).unwrap(), py);
    }

    fn generator() -> impl Strategy<Value = Generator> {
        prop_oneof![
            (-3i64..=3, 0u32..3).prop_map(|(l, mu)| Generator::triangular(int(l), mu)),
            (prop::array::uniform4(-3i64..=3), -2i64..=2, 1i64..=3)
                .prop_filter_map("invertible", |(a, e, d)| {
                    Generator::affine([[int(a[0]), int(a[1])], [int(a[2]), int(a[3])]], [int(e), frac(1, d)]).ok()
                }),
            Just(Generator::swap()),
        ]
    }

    fn small_poly() -> impl Strategy<Value = BivariatePoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 1..5).prop_map(|ts| {
            ts.into_iter().fold(BivariatePoly::zero(), |acc, ((i, j), c)| {
                acc.add(&BivariatePoly::monomial(int(c), i, j))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn round_trip(f in small_poly(), gens in prop::collection::vec(generator(), 0..=5)) {
            let phi = TameAutomorphism::new(gens).unwrap();
            let g = apply_automorphism(&f, &phi).unwrap();
            let back = apply_automorphism(&g, &phi.invert().unwrap()).unwrap();
            prop_assert_eq!(back, f.clone());
            if g.degree().unwrap_or(0) <= 16 {
                prop_assert_eq!(g.is_reduced(), f.is_reduced());
            }
        }
    }
}

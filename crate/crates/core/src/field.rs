//! Coefficient fields for local expansions: `Q` itself and `Q[α]/(m)` for a squarefree `m`.
//!
//! When `m` is reducible the quotient is a product of fields. A zero test or inversion that meets
//! a zero divisor reports a [`Split`] carrying a proper factor of `m`; callers recompute over each
//! factor.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;
use crate::upoly::UnivariatePoly;

/// A proper monic factor of the modulus, found through a zero divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split(pub UnivariatePoly);

pub trait Field: Clone + fmt::Debug {
    type E: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_rational(&self, r: &Rational) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// True when the stored representation is zero; no splitting.
    fn is_trivially_zero(&self, a: &Self::E) -> bool;
    fn is_zero(&self, a: &Self::E) -> Result<bool, Split>;
    /// Panics on a trivially zero argument.
    fn inv(&self, a: &Self::E) -> Result<Self::E, Split>;
    /// The element as a polynomial in the generator (a constant over `Q`).
    fn to_poly(&self, a: &Self::E) -> UnivariatePoly;
    /// Inverse of [`Field::to_poly`]; over `Q` the polynomial must be constant.
    fn from_poly(&self, p: &UnivariatePoly) -> Self::E;
    fn modulus(&self) -> Option<&UnivariatePoly>;

    fn div(&self, a: &Self::E, b: &Self::E) -> Result<Self::E, Split> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn scale(&self, a: &Self::E, r: &Rational) -> Self::E {
        self.mul(a, &self.from_rational(r))
    }

    fn pow(&self, a: &Self::E, e: i64) -> Result<Self::E, Split> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    fn as_rational(&self, a: &Self::E) -> Option<Rational> {
        let p = self.to_poly(a);
        p.is_constant().then(|| p.coeff(0))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type E = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_trivially_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_zero(&self, a: &Rational) -> Result<bool, Split> {
        Ok(a.is_zero())
    }
    fn inv(&self, a: &Rational) -> Result<Rational, Split> {
        assert!(!a.is_zero(), "inverse of zero");
        Ok(a.recip())
    }
    fn to_poly(&self, a: &Rational) -> UnivariatePoly {
        UnivariatePoly::constant(a.clone())
    }
    fn from_poly(&self, p: &UnivariatePoly) -> Rational {
        assert!(p.deg() == 0 || p.is_zero(), "not a rational element");
        p.coeff(0)
    }
    fn modulus(&self) -> Option<&UnivariatePoly> {
        None
    }
}

/// `Q[α]/(m)` with `m` monic, squarefree and of degree at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    modulus: UnivariatePoly,
}

impl ExtField {
    pub fn new(modulus: &UnivariatePoly) -> Self {
        assert!(modulus.deg() >= 1, "modulus must be nonconstant");
        ExtField { modulus: modulus.monic() }
    }

    /// The class of the generator α.
    pub fn generator(&self) -> UnivariatePoly {
        UnivariatePoly::x().rem(&self.modulus)
    }

    pub fn reduce(&self, p: &UnivariatePoly) -> UnivariatePoly {
        p.rem(&self.modulus)
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }
}

impl Field for ExtField {
    type E = UnivariatePoly;

    fn zero(&self) -> UnivariatePoly {
        UnivariatePoly::zero()
    }
    fn one(&self) -> UnivariatePoly {
        UnivariatePoly::one()
    }
    fn from_rational(&self, r: &Rational) -> UnivariatePoly {
        UnivariatePoly::constant(r.clone())
    }
    fn add(&self, a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
        a.add(b)
    }
    fn sub(&self, a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
        a.sub(b)
    }
    fn neg(&self, a: &UnivariatePoly) -> UnivariatePoly {
        a.neg()
    }
    fn mul(&self, a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
        a.mul(b).rem(&self.modulus)
    }
    fn scale(&self, a: &UnivariatePoly, r: &Rational) -> UnivariatePoly {
        a.scale(r)
    }
    fn is_trivially_zero(&self, a: &UnivariatePoly) -> bool {
        a.is_zero()
    }
    fn is_zero(&self, a: &UnivariatePoly) -> Result<bool, Split> {
        if a.is_zero() {
            return Ok(true);
        }
        if a.is_constant() {
            return Ok(false);
        }
        let g = a.gcd(&self.modulus);
        if g.is_constant() {
            Ok(false)
        } else {
            Err(Split(g))
        }
    }
    fn inv(&self, a: &UnivariatePoly) -> Result<UnivariatePoly, Split> {
        assert!(!a.is_zero(), "inverse of zero");
        if a.is_constant() {
            return Ok(UnivariatePoly::constant(a.coeff(0).recip()));
        }
        let (g, s, _) = a.ext_gcd(&self.modulus);
        if g.is_constant() {
            Ok(s.rem(&self.modulus))
        } else {
            Err(Split(g))
        }
    }
    fn to_poly(&self, a: &UnivariatePoly) -> UnivariatePoly {
        a.clone()
    }
    fn from_poly(&self, p: &UnivariatePoly) -> UnivariatePoly {
        self.reduce(p)
    }
    fn modulus(&self) -> Option<&UnivariatePoly> {
        Some(&self.modulus)
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let z2 = UnivariatePoly::from_coeffs(vec![-r.clone(), Rational::zero(), Rational::one()]);
    z2.rational_roots().into_iter().max()
}

/// A square root of `d` in `Q[α]/(m)` for an irreducible quadratic `m`, if one exists.
pub fn quadratic_sqrt(m: &UnivariatePoly, d: &UnivariatePoly) -> Option<UnivariatePoly> {
    assert_eq!(m.deg(), 2, "quadratic modulus");
    let m = m.monic();
    let half_u = m.coeff(1) / Rational::from_integer(2.into());
    // β = α + u/2 satisfies β² = disc
    let disc = &half_u * &half_u - m.coeff(0);
    let d = d.rem(&m);
    let (a, b) = (d.coeff(0) - d.coeff(1) * &half_u, d.coeff(1));
    let (x, y) = if b.is_zero() {
        if let Some(x) = rational_sqrt(&a) {
            (x, Rational::zero())
        } else {
            (Rational::zero(), rational_sqrt(&(&a / &disc))?)
        }
    } else {
        // x² = X with X² - aX + disc·b²/4 = 0
        let four = Rational::from_integer(4.into());
        let quad = UnivariatePoly::from_coeffs(vec![&disc * &b * &b / four, -a.clone(), Rational::one()]);
        let x = quad.rational_roots().iter().filter(|x| x.is_positive()).find_map(rational_sqrt)?;
        let y = &b / (&x * Rational::from_integer(2.into()));
        (x, y)
    };
    Some(UnivariatePoly::from_coeffs(vec![x + &y * half_u, y]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn sqrt_two_arithmetic() {
        let k = ExtField::new(&UnivariatePoly::from_i64s(&[-2, 0, 1]));
        let a = k.generator();
        assert_eq!(k.mul(&a, &a), k.from_rational(&int(2)));
        let inv = k.inv(&a.add(&k.one())).unwrap();
        // (1 + √2)^{-1} = √2 - 1
        assert_eq!(inv, UnivariatePoly::from_i64s(&[-1, 1]));
        assert_eq!(k.is_zero(&a), Ok(false));
    }

    #[test]
    fn zero_divisor_splits() {
        // (α^2 - 2)(α^2 - 3)
        let m = UnivariatePoly::from_i64s(&[-2, 0, 1]).mul(&UnivariatePoly::from_i64s(&[-3, 0, 1]));
        let k = ExtField::new(&m);
        let zd = UnivariatePoly::from_i64s(&[-2, 0, 1]);
        assert_eq!(k.is_zero(&zd), Err(Split(zd.clone())));
        assert!(k.inv(&zd).is_err());
    }

    #[test]
    fn square_roots_in_quadratic_fields() {
        let m = UnivariatePoly::from_i64s(&[-2, 0, 1]);
        let k = ExtField::new(&m);
        // (1 + α)² = 3 + 2α
        let d = UnivariatePoly::from_i64s(&[3, 2]);
        let r = quadratic_sqrt(&m, &d).unwrap();
        assert_eq!(k.mul(&r, &r), d);
        assert_eq!(quadratic_sqrt(&m, &UnivariatePoly::from_i64s(&[8])), Some(UnivariatePoly::from_i64s(&[0, 2])));
        assert_eq!(quadratic_sqrt(&m, &UnivariatePoly::from_i64s(&[3])), None);
        // α² + α + 1: sqrt(-3) = 2α + 1
        let m3 = UnivariatePoly::from_i64s(&[1, 1, 1]);
        let r = quadratic_sqrt(&m3, &UnivariatePoly::from_i64s(&[-3])).unwrap();
        assert_eq!(ExtField::new(&m3).mul(&r, &r), UnivariatePoly::from_i64s(&[-3]));
    }

    #[test]
    fn negative_powers() {
        let q = RationalField;
        assert_eq!(q.pow(&int(2), -3).unwrap(), crate::rational::frac(1, 8));
    }
}

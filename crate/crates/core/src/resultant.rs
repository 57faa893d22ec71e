//! Resultants of bivariate polynomials, eliminating one variable.
//!
//! [`resultant_y`] builds the Sylvester matrix over `Q[x]` and runs fraction-free (Bareiss)
//! elimination. [`resultant_y_prs`] computes the same value through the subresultant
//! pseudo-remainder sequence, which is far cheaper when one input reduces the other quickly.

mod dense;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::poly::BivariatePoly;
use crate::rational::Rational;
use crate::upoly::UnivariatePoly;

fn check_nonzero(f: &BivariatePoly, g: &BivariatePoly) -> Result<(), PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(())
}

/// Sylvester matrix of `f`, `g` as polynomials in `y` with entries in `Q[x]`.
pub fn sylvester_matrix_y(f: &BivariatePoly, g: &BivariatePoly) -> Vec<Vec<UnivariatePoly>> {
    let fc = f.y_coeffs();
    let gc = g.y_coeffs();
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![UnivariatePoly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    mat
}

/// Determinant over `Q[x]` by Bareiss fraction-free elimination.
pub fn determinant(mut m: Vec<Vec<UnivariatePoly>>) -> UnivariatePoly {
    let n = m.len();
    if n == 0 {
        return UnivariatePoly::one();
    }
    let mut sign_flip = false;
    let mut prev = UnivariatePoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return UnivariatePoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UnivariatePoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// `Res_y(f, g)` as a polynomial in `x`, via the Sylvester determinant.
pub fn resultant_y(f: &BivariatePoly, g: &BivariatePoly) -> Result<UnivariatePoly, PolyError> {
    check_nonzero(f, g)?;
    let (m, n) = (f.deg_y(), g.deg_y());
    if m == 0 {
        return Ok(f.as_univariate_x().unwrap().pow(n));
    }
    if n == 0 {
        return Ok(g.as_univariate_x().unwrap().pow(m));
    }
    Ok(determinant(sylvester_matrix_y(f, g)))
}

/// `Res_x(f, g)` as a polynomial in `y`.
pub fn resultant_x(f: &BivariatePoly, g: &BivariatePoly) -> Result<UnivariatePoly, PolyError> {
    resultant_y(&f.swap(), &g.swap())
}

/// `Res_y(f, g)` by the subresultant pseudo-remainder sequence over `Z[x]`, after clearing
/// denominators.
pub fn resultant_y_prs(f: &BivariatePoly, g: &BivariatePoly) -> Result<UnivariatePoly, PolyError> {
    check_nonzero(f, g)?;
    let (m, n) = (f.deg_y(), g.deg_y());
    if m == 0 {
        return Ok(f.as_univariate_x().unwrap().pow(n));
    }
    if n == 0 {
        return Ok(g.as_univariate_x().unwrap().pow(m));
    }
    let (fi, df) = integral(f);
    let (gi, dg) = integral(g);
    let r = dense::resultant(fi, gi);
    // Res(df·f, dg·g) = df^n · dg^m · Res(f, g)
    let scale = Rational::from_integer(df.pow(n) * dg.pow(m));
    Ok(UnivariatePoly::from_coeffs(r.into_iter().map(|c| Rational::from_integer(c) / &scale).collect()))
}

/// `d·p` with integer coefficients, as dense coefficients in `y` over `Z[x]`, and `d`.
fn integral(p: &BivariatePoly) -> (dense::ZyPoly, BigInt) {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut out: dense::ZyPoly = vec![Vec::new(); p.deg_y() as usize + 1];
    for ((i, j), c) in p.terms() {
        let col = &mut out[*j as usize];
        if col.len() <= *i as usize {
            col.resize(*i as usize + 1, BigInt::zero());
        }
        col[*i as usize] = c.numer() * (&den / c.denom());
    }
    (out, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::int;

    fn p(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    // Expected values below come from expanding the 2x2 / 3x3 Sylvester determinants by hand.
    #[test]
    fn small_resultants() {
        assert_eq!(resultant_y(&p("y"), &p("y^2 - x")).unwrap(), UnivariatePoly::from_i64s(&[0, -1]));
        assert_eq!(resultant_y(&p("y - 1"), &p("y + 1")).unwrap(), UnivariatePoly::constant(int(2)));
    }

    #[test]
    fn cusp_pair_has_order_six() {
        let r = resultant_y(&p("x^2 - y^3"), &p("x^2 - 2*y^3")).unwrap();
        assert_eq!(r.order(), Some(6));
        assert_eq!(r.degree(), Some(6));
    }

    #[test]
    fn prs_agrees_with_sylvester() {
        let cases = [
            ("y", "y^2 - x"),
            ("x^2 - y^3", "x^2 - 2*y^3"),
            ("x*y^3 + y - 2", "y^2*x^2 - x + 1"),
            ("(y - x^2)*(y + 3)", "(y - x^2)*(x*y + 1)"),
            ("y^4 + x*y + 1", "3*y^2 - x^3*y"),
            ("y^2 + x", "y^5 - x*y^3 + 2*y - x^2"),
        ];
        for (a, b) in cases {
            let (fa, fb) = (p(a), p(b));
            assert_eq!(resultant_y(&fa, &fb).unwrap(), resultant_y_prs(&fa, &fb).unwrap(), "{a} / {b}");
        }
    }

    #[test]
    fn zero_input_rejected() {
        assert_eq!(resultant_y(&BivariatePoly::zero(), &p("y")), Err(PolyError::ZeroPolynomial));
    }
}

//! Affine critical values by exact elimination.
//!
//! The critical locus `f_x = f_y = 0` splits into the curve `gcd(f_x, f_y) = 0` and finitely many
//! further points. On each piece the values of `f` are the roots of the minimal polynomial of `f`
//! in a finite-dimensional quotient algebra over `Q`, so every root is a genuine critical value.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::BifurcationError;
use crate::field::{ExtField, Field, Split};
use crate::poly::BivariatePoly;
use crate::rational::{int, to_text, Rational};
use crate::resultant::resultant_y_prs;
use crate::series;
use crate::upoly::UnivariatePoly;

/// Affine critical values: the rational ones listed, the rest as roots of `algebraic_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSet {
    /// Ascending, without repeats.
    pub rational_values: Vec<Rational>,
    /// Squarefree, primitive over `Z` with positive leading coefficient, no rational roots.
    pub algebraic_part: Option<UnivariatePoly>,
}

impl ValueSet {
    pub fn empty() -> Self {
        ValueSet { rational_values: Vec::new(), algebraic_part: None }
    }

    pub fn is_empty(&self) -> bool {
        self.rational_values.is_empty() && self.algebraic_part.is_none()
    }

    /// Total number of values over `C`.
    pub fn count(&self) -> usize {
        self.rational_values.len() + self.algebraic_part.as_ref().map_or(0, |p| p.deg())
    }

    /// The monic polynomial whose roots are exactly the values.
    pub fn eliminant(&self) -> UnivariatePoly {
        let rat = UnivariatePoly::from_roots(&self.rational_values);
        match &self.algebraic_part {
            Some(p) => rat.mul(&p.monic()),
            None => rat,
        }
    }

    fn from_eliminant(e: &UnivariatePoly) -> Self {
        if e.is_constant() {
            return Self::empty();
        }
        let e = e.squarefree_part();
        let rational_values = e.rational_roots();
        let rest = e.div_exact(&UnivariatePoly::from_roots(&rational_values)).expect("roots divide");
        let algebraic_part = (rest.deg() > 0).then(|| primitive(&rest));
        ValueSet { rational_values, algebraic_part }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.rational_values.iter().map(to_text).collect();
        write!(f, "{{{}}}", vals.join(", "))?;
        if let Some(p) = &self.algebraic_part {
            write!(f, " + roots of {}", p.fmt_var("c"))?;
        }
        Ok(())
    }
}

fn primitive(p: &UnivariatePoly) -> UnivariatePoly {
    let q = UnivariatePoly::from_coeffs(p.primitive_integer().into_iter().map(Rational::from_integer).collect());
    if q.leading() < Rational::zero() {
        q.neg()
    } else {
        q
    }
}

/// The values `f(x, y)` over all `(x, y)` with `grad f = 0`.
pub fn affine_critical_values(f: &BivariatePoly) -> Result<ValueSet, BifurcationError> {
    if f.is_constant() {
        return Err(BifurcationError::ConstantPolynomial);
    }
    let (fx, fy) = (f.partial_x(), f.partial_y());
    let g = fx.gcd(&fy);
    let mut eliminant = UnivariatePoly::one();
    if !g.is_constant() {
        eliminant = eliminant.mul(&values_on_curve(f, &g.squarefree_part()));
    }
    let a = if fx.is_zero() { fx } else { fx.div_exact(&g).expect("gcd divides") };
    let b = if fy.is_zero() { fy } else { fy.div_exact(&g).expect("gcd divides") };
    eliminant = eliminant.mul(&values_at_points(f, &a, &b));
    Ok(ValueSet::from_eliminant(&eliminant))
}

/// Values of `f` on the curve `h = 0`, along which `f` is locally constant.
fn values_on_curve(f: &BivariatePoly, h: &BivariatePoly) -> UnivariatePoly {
    let mut out = UnivariatePoly::one();
    let c = h.content_y();
    if c.deg() > 0 {
        // vertical lines x = a: the value is f(a, 0)
        let k = ExtField::new(&c.squarefree_part());
        out = out.mul(&minimal_polynomial(&k, &[k.zero(), k.one()], &[k.from_poly(&f.eval_y(&Rational::zero()))]));
    }
    let rest = h.div_exact(&BivariatePoly::from_univariate_x(&c)).expect("content divides");
    if rest.deg_y() > 0 {
        // every other component meets a vertical line along which its y-degree is kept
        let lead = rest.y_coeffs().pop().expect("nonzero");
        let x0 = (0i64..).map(int).find(|x0| !lead.eval(x0).is_zero()).expect("finitely many roots");
        let k = ExtField::new(&rest.eval_x(&x0).squarefree_part());
        out = out.mul(&minimal_polynomial(&k, &[k.zero(), k.one()], &[k.from_poly(&f.eval_x(&x0))]));
    }
    out
}

/// Values of `f` at the finitely many common zeros of coprime `a`, `b`.
fn values_at_points(f: &BivariatePoly, a: &BivariatePoly, b: &BivariatePoly) -> UnivariatePoly {
    if a.is_zero() || b.is_zero() {
        // one partial vanishes identically, so the other is y-free or x-free up to the gcd
        // already removed: nothing is left
        return UnivariatePoly::one();
    }
    let xs = match (a.deg_y(), b.deg_y()) {
        (0, 0) => return UnivariatePoly::one(),
        (0, _) => a.as_univariate_x().expect("y-free"),
        (_, 0) => b.as_univariate_x().expect("y-free"),
        _ => resultant_y_prs(a, b).expect("nonzero inputs"),
    };
    if xs.deg() == 0 {
        return UnivariatePoly::one();
    }
    let mut out = UnivariatePoly::one();
    let mut work = vec![xs.squarefree_part().monic()];
    while let Some(m) = work.pop() {
        let k = ExtField::new(&m);
        match fiber_values(&k, f, a, b) {
            Ok(p) => out = out.mul(&p),
            Err(Split(d)) => {
                let cof = m.div_exact(&d).expect("factor").monic();
                work.push(d.monic());
                work.push(cof);
            }
        }
    }
    out
}

/// Number of distinct common zeros in `C²` of coprime `a`, `b`.
pub(crate) fn common_point_count(a: &BivariatePoly, b: &BivariatePoly) -> usize {
    if a.is_constant() || b.is_constant() {
        return 0;
    }
    let xs = match (a.deg_y(), b.deg_y()) {
        (0, 0) => return 0,
        (0, _) => a.as_univariate_x().expect("y-free"),
        (_, 0) => b.as_univariate_x().expect("y-free"),
        _ => resultant_y_prs(a, b).expect("nonzero inputs"),
    };
    if xs.deg() == 0 {
        return 0;
    }
    let mut count = 0;
    let mut work = vec![xs.squarefree_part().monic()];
    while let Some(m) = work.pop() {
        let k = ExtField::new(&m);
        let points = || -> Result<usize, Split> {
            let common = series::gcd(&k, &over(&k, a), &over(&k, b))?;
            if common.len() <= 1 {
                return Ok(0);
            }
            let d = series::gcd(&k, &common, &series::derivative(&k, &common))?;
            Ok(common.len() - d.len())
        };
        match points() {
            Ok(n) => count += n * m.deg(),
            Err(Split(d)) => {
                let cof = m.div_exact(&d).expect("factor").monic();
                work.push(d.monic());
                work.push(cof);
            }
        }
    }
    count
}

/// Rational common zeros of coprime `a`, `b`.
pub(crate) fn rational_common_points(a: &BivariatePoly, b: &BivariatePoly) -> Vec<(Rational, Rational)> {
    if a.is_constant() || b.is_constant() {
        return Vec::new();
    }
    let xs = match (a.deg_y(), b.deg_y()) {
        (0, 0) => return Vec::new(),
        (0, _) => a.as_univariate_x().expect("y-free"),
        (_, 0) => b.as_univariate_x().expect("y-free"),
        _ => resultant_y_prs(a, b).expect("nonzero inputs"),
    };
    if xs.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for x0 in xs.rational_roots() {
        let (ga, gb) = (a.eval_x(&x0), b.eval_x(&x0));
        let g = if ga.is_zero() { gb } else if gb.is_zero() { ga } else { ga.gcd(&gb) };
        if !g.is_zero() {
            out.extend(g.rational_roots().into_iter().map(|y0| (x0.clone(), y0)));
        }
    }
    out
}

fn over(k: &ExtField, p: &BivariatePoly) -> Vec<UnivariatePoly> {
    series::trim(k, p.y_coeffs().iter().map(|c| k.from_poly(c)).collect())
}

/// Over `x = α` with `α` a root of the modulus: values of `f` at the common roots in `y`.
fn fiber_values(k: &ExtField, f: &BivariatePoly, a: &BivariatePoly, b: &BivariatePoly) -> Result<UnivariatePoly, Split> {
    let common = series::gcd(k, &over(k, a), &over(k, b))?;
    if common.len() <= 1 {
        return Ok(UnivariatePoly::one());
    }
    let d = series::gcd(k, &common, &series::derivative(k, &common))?;
    let reduced = series::div_rem(k, &common, &d)?.0;
    Ok(minimal_polynomial(k, &reduced, &over(k, f)))
}

/// Remainder by a monic divisor; no zero tests, so no splitting.
fn rem_monic(k: &ExtField, p: &[UnivariatePoly], m: &[UnivariatePoly]) -> Vec<UnivariatePoly> {
    let d = m.len() - 1;
    let mut r = p.to_vec();
    while r.len() > d {
        let c = r.pop().expect("nonempty");
        let shift = r.len() - d;
        for (i, mc) in m[..d].iter().enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, mc));
        }
    }
    r
}

/// Minimal polynomial over `Q` of `elem` in `K[y]/(modulus)`, with `modulus` monic of positive
/// degree over `K`.
fn minimal_polynomial(k: &ExtField, modulus: &[UnivariatePoly], elem: &[UnivariatePoly]) -> UnivariatePoly {
    let (dk, dy) = (k.degree(), modulus.len() - 1);
    let dim = dk * dy;
    let reduce = |p: &[UnivariatePoly]| rem_monic(k, p, modulus);
    let flatten = |p: &[UnivariatePoly]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (j, c) in p.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                v[j * dk + i] = a.clone();
            }
        }
        v
    };
    let elem = reduce(elem);
    // rows with a unit pivot, each reduced against all earlier pivots
    let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = reduce(&[k.one()]);
    for deg in 0..=dim {
        let mut v = flatten(&power);
        let mut combo = vec![Rational::zero(); deg + 1];
        combo[deg] = Rational::one();
        for (piv, row, rc) in &rows {
            if v[*piv].is_zero() {
                continue;
            }
            let t = v[*piv].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &t * r;
            }
            for (x, r) in combo.iter_mut().zip(rc) {
                *x -= &t * r;
            }
        }
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return UnivariatePoly::from_coeffs(combo).monic();
        };
        let inv = v[piv].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        combo.iter_mut().for_each(|x| *x *= &inv);
        rows.push((piv, v, combo));
        power = reduce(&series::mul(k, &power, &elem));
    }
    unreachable!("a relation exists in dimension {dim}")
}

//! Sparse bivariate polynomials over Q.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::upoly::UnivariatePoly;

/// Exponent pair `(i, j)` standing for `x^i y^j`.
pub type Exponent = (u32, u32);

/// A polynomial in `x`, `y` with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<Exponent, Rational>,
}

/// Graded-lex comparison key, `x > y`: larger keys print first.
fn grlex_key(e: &Exponent) -> (u32, u32) {
    (e.0 + e.1, e.0)
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rational::int(c))
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// Polynomial in `x` alone.
    pub fn from_univariate_x(p: &UnivariatePoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Polynomial in `y` alone.
    pub fn from_univariate_y(p: &UnivariatePoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Lowest total degree of a term (multiplicity at the origin); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(Exponent, &Rational)> {
        self.terms.iter().max_by_key(|(e, _)| grlex_key(e)).map(|(e, c)| (*e, c))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e.0 + e.1 == d).map(|(e, c)| (*e, c.clone())))
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), a * b);
            }
        }
        out
    }

    /// Multiply by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| ((e.0 + i, e.1 + j), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.0 > 0)
                .map(|(e, c)| ((e.0 - 1, e.1), c * rational::int(e.0 as i64))),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.1 > 0)
                .map(|(e, c)| ((e.0, e.1 - 1), c * rational::int(e.1 as i64))),
        )
    }

    /// `self(px(x,y), py(x,y))`.
    pub fn substitute(&self, px: &Self, py: &Self) -> Self {
        let dx = self.deg_x() as usize;
        let dy = self.deg_y() as usize;
        let mut xp = vec![Self::one()];
        for k in 1..=dx {
            xp.push(xp[k - 1].mul(px));
        }
        let mut yp = vec![Self::one()];
        for k in 1..=dy {
            yp.push(yp[k - 1].mul(py));
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            for (m, a) in &xp[e.0 as usize].mul(&yp[e.1 as usize]).terms {
                out.add_term(*m, a * c);
            }
        }
        out
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect() }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_y(y).eval(x)
    }

    /// Specialize `x = x0`, giving a polynomial in `y`.
    pub fn eval_x(&self, x0: &Rational) -> UnivariatePoly {
        let mut coeffs = vec![Rational::zero(); self.deg_y() as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.1 as usize] += c * num_traits::pow(x0.clone(), e.0 as usize);
        }
        UnivariatePoly::from_coeffs(coeffs)
    }

    /// Specialize `y = y0`, giving a polynomial in `x`.
    pub fn eval_y(&self, y0: &Rational) -> UnivariatePoly {
        let mut coeffs = vec![Rational::zero(); self.deg_x() as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.0 as usize] += c * num_traits::pow(y0.clone(), e.1 as usize);
        }
        UnivariatePoly::from_coeffs(coeffs)
    }

    /// Coefficients as a polynomial in `y`: entry `j` is the coefficient of `y^j` in `Q[x]`.
    pub fn y_coeffs(&self) -> Vec<UnivariatePoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let dy = self.deg_y() as usize;
        let dx = self.deg_x() as usize;
        let mut raw = vec![vec![Rational::zero(); dx + 1]; dy + 1];
        for (e, c) in &self.terms {
            raw[e.1 as usize][e.0 as usize] = c.clone();
        }
        raw.into_iter().map(UnivariatePoly::from_coeffs).collect()
    }

    pub fn from_y_coeffs(cs: &[UnivariatePoly]) -> Self {
        let mut p = Self::zero();
        for (j, c) in cs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), a.clone());
            }
        }
        p
    }

    /// Univariate view when the polynomial does not involve `y`.
    pub fn as_univariate_x(&self) -> Option<UnivariatePoly> {
        (self.deg_y() == 0).then(|| self.eval_x_free())
    }

    fn eval_x_free(&self) -> UnivariatePoly {
        let mut coeffs = vec![Rational::zero(); self.deg_x() as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.0 as usize] += c;
        }
        UnivariatePoly::from_coeffs(coeffs)
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (ld, lc) = d.leading_term().map(|(e, c)| (e, c.clone()))?;
        let lc_inv = lc.recip();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((lr, c)) = r.leading_term().map(|(e, c)| (e, c.clone())) {
            if lr.0 < ld.0 || lr.1 < ld.1 {
                return None;
            }
            let t = Self::monomial(c * &lc_inv, lr.0 - ld.0, lr.1 - ld.1);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Content with respect to `y`: monic gcd in `Q[x]` of the `y`-coefficients.
    pub fn content_y(&self) -> UnivariatePoly {
        self.y_coeffs().iter().fold(UnivariatePoly::zero(), |g, c| g.gcd(c))
    }

    /// Greatest common divisor, normalized to graded-lex leading coefficient 1.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let ca = self.content_y();
        let cb = other.content_y();
        let cont = Self::from_univariate_x(&ca.gcd(&cb));
        let mut a = self.div_exact(&Self::from_univariate_x(&ca)).expect("content divides");
        let mut b = other.div_exact(&Self::from_univariate_x(&cb)).expect("content divides");
        if coprime_by_specialization(&a, &b) {
            return cont.normalized();
        }
        if a.deg_y() < b.deg_y() {
            std::mem::swap(&mut a, &mut b);
        }
        // primitive remainder sequence in Q[x][y]
        while b.deg_y() > 0 {
            let r = pseudo_rem_y(&a, &b);
            if r.is_zero() {
                return cont.mul(&b).normalized();
            }
            let cr = r.content_y();
            a = b;
            b = r.div_exact(&Self::from_univariate_x(&cr)).expect("content divides");
        }
        // b is a nonzero primitive polynomial free of y: a unit
        cont.normalized()
    }

    /// Scaled so that the graded-lex leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    /// `self / gcd(self, f_x, f_y)`: the product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        let g = self.gcd(&self.partial_x()).gcd(&self.partial_y());
        self.div_exact(&g).expect("gcd divides").normalized()
    }

    /// True when no irreducible factor is repeated.
    /// `(multiplicity, factor)` with pairwise coprime squarefree nonconstant factors whose powers
    /// multiply to `self` up to a constant; ascending multiplicity, `y`-free factors last.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, Self)> {
        if self.is_constant() {
            return Vec::new();
        }
        let c = self.content_y();
        let f = self.div_exact(&Self::from_univariate_x(&c)).expect("content divides");
        let mut out = Vec::new();
        if f.deg_y() > 0 {
            // Yun's algorithm in y; the primitive part has no y-free factors
            let fy = f.partial_y();
            let a0 = f.gcd(&fy);
            let mut b = f.div_exact(&a0).expect("gcd divides");
            let mut d = fy.div_exact(&a0).expect("gcd divides").sub(&b.partial_y());
            let mut mult = 1;
            while b.deg_y() > 0 {
                let a = b.gcd(&d);
                if a.deg_y() > 0 {
                    out.push((mult, a.normalized()));
                }
                let next = b.div_exact(&a).expect("gcd divides");
                d = d.div_exact(&a).expect("gcd divides").sub(&next.partial_y());
                b = next;
                mult += 1;
            }
        }
        for (m, p) in c.squarefree_decomposition() {
            out.push((m as u32, Self::from_univariate_x(&p).normalized()));
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        if self.is_constant() {
            return !self.is_zero();
        }
        // squarefree content, and a primitive part coprime to its y-derivative
        let c = self.content_y();
        if c.deg() > 0 && c.gcd(&c.derivative()).deg() > 0 {
            return false;
        }
        let pp = self.div_exact(&Self::from_univariate_x(&c)).expect("content divides");
        let d = pp.partial_y();
        coprime_by_specialization(&pp, &d) || pp.gcd(&d).deg_y() == 0
    }

    /// Formats with custom variable names, terms in graded-lex order.
    pub fn fmt_vars(&self, vars: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by_key(|(e, _)| std::cmp::Reverse(grlex_key(e)));
        let mut out = String::new();
        for (e, c) in ts {
            let mut parts = Vec::new();
            for (k, v) in [e.0, e.1].into_iter().zip(vars) {
                match k {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{k}")),
                }
            }
            push_term(&mut out, c, &parts.join("*"));
        }
        out
    }
}

/// Appends `c * mono` to a sum being printed, handling signs and unit coefficients.
pub(crate) fn push_term(out: &mut String, c: &Rational, mono: &str) {
    let neg = c.is_negative();
    let a = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&rational::to_text(&a));
    } else if a.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&rational::to_text(&a));
        out.push('*');
        out.push_str(mono);
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in `y` over `Q[x]`.
pub(crate) fn pseudo_rem_y(a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
    let bc = b.y_coeffs();
    let db = bc.len() - 1;
    let lb = BivariatePoly::from_univariate_x(&bc[db]);
    let mut r = a.clone();
    // prem = lc(b)^(deg a - deg b + 1) * a mod b, so count the scalings
    let mut steps = (a.deg_y() as usize + 1).saturating_sub(db);
    while !r.is_zero() && r.deg_y() as usize >= db {
        let dr = r.deg_y();
        let lr = BivariatePoly::from_univariate_x(&r.y_coeffs()[dr as usize]);
        r = r.mul(&lb).sub(&b.mul(&lr).shift(0, dr - db as u32));
        steps -= 1;
    }
    r.mul(&lb.pow(steps as u32))
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars(["x", "y"]))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}

impl std::str::FromStr for BivariatePoly {
    type Err = crate::parse::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_poly(s)
    }
}

/// A point `x0` where both leading coefficients in `y` survive and the specializations are coprime
/// certifies that `a` and `b` share no factor involving `y`. A `false` answer is inconclusive.
fn coprime_by_specialization(a: &BivariatePoly, b: &BivariatePoly) -> bool {
    let (ca, cb) = (a.y_coeffs(), b.y_coeffs());
    let (Some(la), Some(lb)) = (ca.last(), cb.last()) else {
        return false;
    };
    for x0 in [0i64, 1, -1, 2, -2, 3, -3, 5, 7, 11] {
        let x0 = Rational::from_integer(x0.into());
        if la.eval(&x0).is_zero() || lb.eval(&x0).is_zero() {
            continue;
        }
        if a.eval_x(&x0).gcd(&b.eval_x(&x0)).is_constant() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn squarefree_decomposition_recovers_powers() {
        let f = "x^2*(y - x)^3*(y^2 + 1)*(x + 1)".parse::<BivariatePoly>().unwrap();
        let dec = f.squarefree_decomposition();
        let rebuilt = dec.iter().fold(BivariatePoly::one(), |acc, (m, p)| acc.mul(&p.pow(*m)));
        assert_eq!(rebuilt.normalized(), f.normalized());
        let mults: Vec<u32> = dec.iter().map(|(m, _)| *m).collect();
        assert_eq!(mults, vec![1, 3, 1, 2]);
    }

    #[test]
    fn partial_derivatives() {
        let f = p("x^2 - y^3");
        assert_eq!(f.partial_x(), p("2*x"));
        assert_eq!(f.partial_y(), p("-3*y^2"));
    }

    #[test]
    fn substitute_translation() {
        assert_eq!(p("x*y").substitute(&p("x"), &p("y+1")), p("x*y + x"));
    }

    #[test]
    fn printing_is_graded_lex() {
        assert_eq!(p("x + x^3*y").to_string(), "x^3*y + x");
        assert_eq!(p("-y^2 + 1/2*x - 3").to_string(), "-y^2 + 1/2*x - 3");
    }

    #[test]
    fn exact_division() {
        let a = p("x^2*y + x + 1");
        let b = p("x*y - 3");
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let c = p("x^2*y + x + 1");
        let a = c.mul(&p("x - y"));
        let b = c.mul(&p("y^2 + x"));
        assert_eq!(a.gcd(&b), c.normalized());
        assert!(p("x").gcd(&p("y")).is_one_poly());
    }

    #[test]
    fn reducedness() {
        assert!(!p("x^2*y").is_reduced());
        assert!(p("x*y*(x*y+1)").is_reduced());
        assert_eq!(p("x^2*y").squarefree_part(), p("x*y"));
        assert!(!p("(x*y+1)^2*(x-y)").is_reduced());
    }

    impl BivariatePoly {
        fn is_one_poly(&self) -> bool {
            *self == BivariatePoly::one()
        }
    }
}

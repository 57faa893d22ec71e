//! Dense univariate polynomials over Q.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc.mul(&Self::from_coeffs(vec![-r.clone(), Rational::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Order of vanishing at 0; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
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

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        let lc_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Leading coefficient scaled to 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's squarefree decomposition: `self = c * prod_k P_k^k`, returned as `(k, P_k)` for
    /// nonconstant monic `P_k`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fd = f.derivative();
        let a0 = f.gcd(&fd);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = fd.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((k, a.clone()));
            }
            b = b.div_exact(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    /// Scalar multiple with integer coprime coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return ints;
        }
        let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
        ints.iter().map(|c| c / &g * &sign).collect()
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_constant() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut f = self.squarefree_part();
        if f.coeff(0).is_zero() {
            roots.push(Rational::zero());
            f = f.div_exact(&Self::x()).unwrap();
        }
        if f.is_constant() {
            return roots;
        }
        // Substituting x = y / a_n turns integer roots of a monic integer polynomial into the
        // rational roots of f.
        let ints = f.primitive_integer();
        let n = ints.len() - 1;
        let an = ints[n].clone();
        let monic: Vec<BigInt> = (0..=n)
            .map(|i| {
                if i == n {
                    BigInt::one()
                } else {
                    &ints[i] * num_traits::pow(an.clone(), n - 1 - i)
                }
            })
            .collect();
        let g = Self::from_coeffs(monic.iter().map(|c| Rational::from_integer(c.clone())).collect());
        for y in integer_roots(&g) {
            roots.push(Rational::new(y, an.clone()));
        }
        roots.sort();
        roots
    }

    /// Formats with the given variable name.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            crate::poly::push_term(&mut out, c, &mono);
        }
        out
    }
}

/// Integer roots of a monic integer polynomial (given with integral rational coefficients),
/// located by Sturm-sequence bisection.
fn integer_roots(f: &UnivariatePoly) -> Vec<BigInt> {
    let seq = sturm_sequence(f);
    // Cauchy bound: all roots satisfy |r| <= 1 + max |a_i|.
    let bound = f
        .coeffs
        .iter()
        .take(f.coeffs.len() - 1)
        .map(|c| c.abs().to_integer())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let mut out = Vec::new();
    let lo = Rational::from_integer(-bound.clone() - 1);
    let hi = Rational::from_integer(bound + 1);
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        // roots in (a, b]
        let count = sign_changes(&seq, &a) - sign_changes(&seq, &b);
        if count == 0 {
            continue;
        }
        let width = &b - &a;
        if width <= Rational::one() {
            if b.is_integer() && f.eval(&b).is_zero() {
                out.push(b.to_integer());
            }
            continue;
        }
        let mid = ((&a + &b) / rational::int(2)).floor();
        let mid = if mid <= a { a.clone() + Rational::one() } else { mid };
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort();
    out
}

fn sturm_sequence(f: &UnivariatePoly) -> Vec<UnivariatePoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn sign_changes(seq: &[UnivariatePoly], x: &Rational) -> usize {
    let mut changes = 0;
    let mut last = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePoly({self})")
    }
}

//! Dense univariate polynomials and truncated power series over a [`Field`].

use crate::field::{Field, Split};

/// Drops trailing entries whose representation is zero.
pub fn trim<F: Field>(k: &F, mut a: Vec<F::E>) -> Vec<F::E> {
    while a.last().is_some_and(|c| k.is_trivially_zero(c)) {
        a.pop();
    }
    a
}

/// Like [`trim`] but also drops trailing zero divisors that vanish, splitting when undecidable.
pub fn normalize<F: Field>(k: &F, mut a: Vec<F::E>) -> Result<Vec<F::E>, Split> {
    while let Some(c) = a.last() {
        if k.is_zero(c)? {
            a.pop();
        } else {
            break;
        }
    }
    Ok(a)
}

pub fn add<F: Field>(k: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n).map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, out)
}

pub fn sub<F: Field>(k: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n).map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, out)
}

pub fn scale<F: Field>(k: &F, a: &[F::E], c: &F::E) -> Vec<F::E> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

/// Product truncated to the first `m` coefficients.
pub fn mul_trunc<F: Field>(k: &F, a: &[F::E], b: &[F::E], m: usize) -> Vec<F::E> {
    if a.is_empty() || b.is_empty() || m == 0 {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(m);
    let mut out = vec![k.zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if k.is_trivially_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !k.is_trivially_zero(y) {
                out[i + j] = k.add(&out[i + j], &k.mul(x, y));
            }
        }
    }
    trim(k, out)
}

pub fn mul<F: Field>(k: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    mul_trunc(k, a, b, usize::MAX)
}

/// Inverse of a series with invertible constant term, to `m` coefficients.
pub fn inv_trunc<F: Field>(k: &F, a: &[F::E], m: usize) -> Result<Vec<F::E>, Split> {
    let a0 = k.inv(&a[0])?;
    let mut out = vec![a0.clone()];
    for n in 1..m {
        let mut acc = k.zero();
        for i in 1..=n.min(a.len() - 1) {
            acc = k.add(&acc, &k.mul(&a[i], &out[n - i]));
        }
        out.push(k.neg(&k.mul(&acc, &a0)));
    }
    Ok(trim(k, out))
}

/// Index of the first coefficient that is not zero, with exact zero tests.
pub fn valuation<F: Field>(k: &F, a: &[F::E]) -> Result<Option<usize>, Split> {
    for (i, c) in a.iter().enumerate() {
        if !k.is_zero(c)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn derivative<F: Field>(k: &F, a: &[F::E]) -> Vec<F::E> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.scale(c, &crate::rational::int(i as i64)))
        .collect();
    trim(k, out)
}

/// Quotient and remainder; the divisor's leading coefficient must be invertible.
pub fn div_rem<F: Field>(k: &F, a: &[F::E], d: &[F::E]) -> Result<(Vec<F::E>, Vec<F::E>), Split> {
    let d = normalize(k, d.to_vec())?;
    assert!(!d.is_empty(), "division by zero polynomial");
    let lc_inv = k.inv(d.last().unwrap())?;
    let mut r = normalize(k, a.to_vec())?;
    if r.len() < d.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![k.zero(); r.len() - d.len() + 1];
    while r.len() >= d.len() {
        let shift = r.len() - d.len();
        let c = k.mul(r.last().unwrap(), &lc_inv);
        for (i, dc) in d.iter().enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, dc));
        }
        q[shift] = c;
        r.pop();
        r = normalize(k, r)?;
    }
    Ok((trim(k, q), r))
}

pub fn monic<F: Field>(k: &F, a: &[F::E]) -> Result<Vec<F::E>, Split> {
    let a = normalize(k, a.to_vec())?;
    match a.last() {
        None => Ok(a),
        Some(lc) => {
            let inv = k.inv(lc)?;
            Ok(scale(k, &a, &inv))
        }
    }
}

/// Monic gcd.
pub fn gcd<F: Field>(k: &F, a: &[F::E], b: &[F::E]) -> Result<Vec<F::E>, Split> {
    let mut a = normalize(k, a.to_vec())?;
    let mut b = normalize(k, b.to_vec())?;
    while !b.is_empty() {
        let (_, r) = div_rem(k, &a, &b)?;
        a = b;
        b = r;
    }
    monic(k, &a)
}

/// Yun's squarefree decomposition of a nonconstant polynomial: `(multiplicity, monic factor)`.
pub fn squarefree_decomposition<F: Field>(k: &F, f: &[F::E]) -> Result<Vec<(usize, Vec<F::E>)>, Split> {
    let f = monic(k, f)?;
    let mut out = Vec::new();
    if f.len() <= 1 {
        return Ok(out);
    }
    let fd = derivative(k, &f);
    let a0 = gcd(k, &f, &fd)?;
    let mut b = div_rem(k, &f, &a0)?.0;
    let c = div_rem(k, &fd, &a0)?.0;
    let mut d = sub(k, &c, &derivative(k, &b));
    let mut mult = 1;
    loop {
        let a = gcd(k, &b, &d)?;
        if a.len() > 1 {
            out.push((mult, a.clone()));
        }
        b = div_rem(k, &b, &a)?.0;
        if b.len() <= 1 {
            break;
        }
        let c = div_rem(k, &d, &a)?.0;
        d = sub(k, &c, &derivative(k, &b));
        mult += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, RationalField};
    use crate::rational::{frac, int};
    use crate::upoly::UnivariatePoly;

    #[test]
    fn geometric_series_inverse() {
        let q = RationalField;
        let inv = inv_trunc(&q, &[int(1), int(-1)], 5).unwrap();
        assert_eq!(inv, vec![int(1); 5]);
        let prod = mul_trunc(&q, &inv, &[int(1), int(-1)], 5);
        assert_eq!(prod, vec![int(1)]);
    }

    #[test]
    fn squarefree_over_extension() {
        let k = ExtField::new(&UnivariatePoly::from_i64s(&[-2, 0, 1]));
        let a = k.generator();
        // (Y - α)^2 (Y + 1)
        let lin = vec![k.neg(&a), k.one()];
        let sq = mul(&k, &lin, &lin);
        let f = mul(&k, &sq, &[k.one(), k.one()]);
        let dec = squarefree_decomposition(&k, &f).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (1, vec![k.one(), k.one()]));
        assert_eq!(dec[1], (2, lin));
    }

    #[test]
    fn division_by_rational_poly() {
        let q = RationalField;
        let (quo, rem) = div_rem(&q, &[int(-1), int(0), int(1)], &[int(2), int(2)]).unwrap();
        assert_eq!(quo, vec![frac(-1, 2), frac(1, 2)]);
        assert!(rem.is_empty());
    }
}

//! Subresultant sequence over `Z[x][y]` with dense coefficient vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients in `x`, lowest first, without trailing zeros.
pub(super) type ZPoly = Vec<BigInt>;
/// Coefficients in `y`, each a [`ZPoly`], without trailing zeros.
pub(super) type ZyPoly = Vec<ZPoly>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn trim_y(mut a: ZyPoly) -> ZyPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

fn neg(a: &[BigInt]) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

pub(super) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(super) fn pow(a: &[BigInt], mut e: usize) -> ZPoly {
    let mut base = a.to_vec();
    let mut acc = vec![BigInt::one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Quotient of an exact division in `Z[x]`.
fn div_exact(a: &[BigInt], d: &[BigInt]) -> ZPoly {
    let d = trim(d.to_vec());
    assert!(!d.is_empty(), "division by zero");
    if a.is_empty() {
        return Vec::new();
    }
    if d.len() == 1 {
        return a
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&d[0]);
                debug_assert!(r.is_zero(), "inexact division");
                q
            })
            .collect();
    }
    let mut r = a.to_vec();
    let lc = d.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() + 1 - d.len()];
    for k in (0..q.len()).rev() {
        let top = &r[k + d.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lc);
        debug_assert!(rem.is_zero(), "inexact division");
        for (i, dc) in d.iter().enumerate() {
            r[k + i] -= &c * dc;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact division");
    trim(q)
}

fn scale_y(a: &[ZPoly], c: &[BigInt]) -> ZyPoly {
    trim_y(a.iter().map(|p| mul(p, c)).collect())
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &[ZPoly], b: &[ZPoly]) -> ZyPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - db;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next = scale_y(&r, lb);
        next.resize(next.len().max(dr + 1), Vec::new());
        for (i, bc) in b.iter().enumerate() {
            next[shift + i] = add(&next[shift + i], &neg(&mul(bc, &lr)));
        }
        r = trim_y(next);
        steps -= 1;
    }
    if steps > 0 {
        r = scale_y(&r, &pow(lb, steps));
    }
    r
}

/// `Res_y(a, b)` for nonconstant `a`, `b`.
pub(super) fn resultant(a: ZyPoly, b: ZyPoly) -> ZPoly {
    let (mut a, mut b) = (a, b);
    let mut negate = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = true;
        }
    }
    let mut g: ZPoly = vec![BigInt::one()];
    let mut h: ZPoly = vec![BigInt::one()];
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = mul(&g, &pow(&h, delta));
        b = trim_y(r.iter().map(|c| div_exact(c, &divisor)).collect());
        g = a.last().unwrap().clone();
        if delta > 0 {
            h = div_exact(&pow(&g, delta), &pow(&h, delta - 1));
        }
        if b.is_empty() {
            return Vec::new();
        }
        if b.len() == 1 {
            let da = a.len() - 1;
            let out = div_exact(&pow(&b[0], da), &pow(&h, da - 1));
            return if negate { neg(&out) } else { out };
        }
    }
}

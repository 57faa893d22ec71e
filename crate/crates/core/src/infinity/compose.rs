//! Composition of a polynomial with a branch parameterization, as a truncated series in `t`.

use crate::field::{ExtField, Field, RationalField, Split};
use crate::poly::BivariatePoly;
use crate::series;
use crate::upoly::UnivariatePoly;

use super::PuiseuxBranch;

/// `f(λ tⁿ, V(t)) mod t^m` over the branch's coefficient field.
pub(crate) fn compose_series<F: Field>(
    k: &F,
    f: &BivariatePoly,
    b: &PuiseuxBranch,
    embed: impl Fn(&UnivariatePoly) -> F::E,
    m: usize,
) -> Vec<F::E> {
    let mut v = vec![k.zero(); m];
    for (e, c) in &b.series {
        if (*e as usize) < m {
            v[*e as usize] = embed(c);
        }
    }
    let v = series::trim(k, v);
    let lam = embed(&b.lambda);
    let n = b.n as usize;
    let cols = f.y_coeffs();
    let mut acc: Vec<F::E> = Vec::new();
    for col in cols.iter().rev() {
        acc = series::mul_trunc(k, &acc, &v, m);
        let mut c = vec![k.zero(); m];
        let mut lp = k.one();
        for (i, coef) in col.coeffs().iter().enumerate() {
            if i > 0 {
                lp = k.mul(&lp, &lam);
            }
            if i * n < m {
                c[i * n] = k.add(&c[i * n], &k.scale(&lp, coef));
            } else {
                break;
            }
        }
        acc = series::add(k, &acc, &series::trim(k, c));
    }
    acc
}

/// Order in `t` of `f` along the branch, computed modulo `t^m`; `None` if it vanishes there.
pub fn compose_valuation(f: &BivariatePoly, b: &PuiseuxBranch, m: usize) -> Result<Option<u32>, Split> {
    let v = match &b.modulus {
        None => {
            let s = compose_series(&RationalField, f, b, |p| p.coeff(0), m);
            series::valuation(&RationalField, &s)?
        }
        Some(md) => {
            let k = ExtField::new(md);
            let s = compose_series(&k, f, b, |p| k.reduce(p), m);
            series::valuation(&k, &s)?
        }
    };
    Ok(v.map(|v| v as u32))
}

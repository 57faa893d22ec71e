//! Newton–Puiseux expansion of a germ `G(u, v)` into branches `u = λ·tⁿ`, `v = V(t)`.
//!
//! Each ramification by `b` along an edge of slope `a/b` uses the substitution
//! `t = λ·s^b, w = s^a·(c + w')` with `λ = Y^k`, `c = Y^m`, `m·b − k·a = 1`, where `Y` is a root of
//! the reduced edge polynomial. This keeps every coefficient in the field of `Y`, so a rational
//! root never needs a `b`-th root. The choice depends only on `(a, b, Y)`, hence two germs that
//! share a chain of choices share the same intermediate parameterization; pairwise branch
//! multiplicities are read off by comparing these chains.
//!
//! Once the current equation is smooth in `w` (simple root) the rest of the series follows by
//! Newton iteration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::CurveGerm;
use crate::error::LocalError;
use crate::field::{quadratic_sqrt, ExtField, Field, RationalField, Split};
use crate::rational::{frac, int, Rational};
use crate::series;
use crate::upoly::UnivariatePoly;

/// One nonzero term of the series: `v` gains a term in `u^exponent`, introduced with
/// ramification `b` and normalized root `root` (an element of the coefficient field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub exponent: Rational,
    pub ramification: u32,
    pub root: UnivariatePoly,
}

/// A branch `u = λ·tⁿ`, `v = Σ c_k t^k`. Coefficients are polynomials in the generator `α` of
/// `Q[α]/(modulus)`, constants when `modulus` is `None`. Such a branch stands for
/// `deg(modulus)` conjugate branches over `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxBranch {
    pub n: u32,
    pub lambda: UnivariatePoly,
    pub series: Vec<(u32, UnivariatePoly)>,
    /// Terms of `t`-degree at most this are complete.
    pub truncation: u32,
    /// The series is the whole branch.
    pub exact: bool,
    /// The branch is the axis `u = 0`, parameterized as `(0, t)`.
    pub vertical: bool,
    pub modulus: Option<UnivariatePoly>,
    pub path: Vec<PathStep>,
    /// Index in `path` of the step whose root generates the extension.
    pub ext_step: Option<usize>,
}

impl PuiseuxBranch {
    /// The exact rational parameterization `(λ tⁿ, Σ c_k t^k)`; its expansion chain is left empty,
    /// so it serves composition but not branch comparison.
    pub fn parametric(n: u32, lambda: Rational, series: Vec<(u32, Rational)>) -> Self {
        assert!(n >= 1, "ramification index is positive");
        PuiseuxBranch {
            n,
            lambda: UnivariatePoly::constant(lambda),
            series: series
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, UnivariatePoly::constant(c)))
                .collect(),
            truncation: u32::MAX,
            exact: true,
            vertical: false,
            modulus: None,
            path: Vec::new(),
            ext_step: None,
        }
    }

    /// The axis `u = 0` as `(0, t)`.
    pub fn vertical() -> Self {
        vertical_branch()
    }

    pub fn conjugates(&self) -> u32 {
        self.modulus.as_ref().map_or(1, |m| m.deg() as u32)
    }

    /// Characteristic exponents `β_1 < β_2 < ...` in units of `t`.
    pub fn characteristic_exponents(&self) -> Vec<u32> {
        let n = Rational::from_integer(BigInt::from(self.n));
        self.path
            .iter()
            .filter(|s| s.ramification > 1)
            .map(|s| u32::try_from((&s.exponent * &n).to_integer()).expect("small exponent"))
            .collect()
    }

    pub fn is_smooth(&self) -> bool {
        self.vertical || self.n == 1
    }

    /// Largest `u`-exponent up to which the series is known, `None` when exact.
    pub(crate) fn known_exponent(&self) -> Option<Rational> {
        if self.exact {
            return None;
        }
        let last = self.series.last().map_or(0, |(k, _)| *k).max(self.truncation);
        Some(Rational::new(BigInt::from(last), BigInt::from(self.n)))
    }

    /// The same branch over the factor `g` of the modulus.
    pub(crate) fn restrict(&self, g: &UnivariatePoly) -> PuiseuxBranch {
        let r = |p: &UnivariatePoly| p.rem(g);
        let mut out = self.clone();
        out.modulus = Some(g.monic());
        out.lambda = r(&self.lambda);
        out.series = self.series.iter().map(|(k, c)| (*k, r(c))).filter(|(_, c)| !c.is_zero()).collect();
        out.path = self
            .path
            .iter()
            .map(|s| PathStep { exponent: s.exponent.clone(), ramification: s.ramification, root: r(&s.root) })
            .collect();
        out
    }
}

pub fn default_truncation(g: &CurveGerm) -> u32 {
    let d = g.poly().degree().unwrap_or(1);
    2 * d * d + 1
}

type KPoly<E> = BTreeMap<(u32, u32), E>;

#[derive(Debug)]
enum Interrupt {
    Split(UnivariatePoly),
    Fail(LocalError),
}

impl From<Split> for Interrupt {
    fn from(s: Split) -> Self {
        Interrupt::Split(s.0)
    }
}

impl From<LocalError> for Interrupt {
    fn from(e: LocalError) -> Self {
        Interrupt::Fail(e)
    }
}

#[derive(Debug, Clone)]
struct Node<E> {
    n: u32,
    lam: E,
    v: Vec<(u32, E)>,
    kappa: E,
    e: u32,
    path: Vec<PathStep>,
    ext_step: Option<usize>,
    /// Terms of high `t`-degree were dropped from the local equation.
    approx: bool,
}

impl<E: Clone> Node<E> {
    fn map<E2>(&self, f: impl Fn(&E) -> E2) -> Node<E2> {
        Node {
            n: self.n,
            lam: f(&self.lam),
            v: self.v.iter().map(|(k, c)| (*k, f(c))).collect(),
            kappa: f(&self.kappa),
            e: self.e,
            path: self.path.clone(),
            ext_step: self.ext_step,
            approx: self.approx,
        }
    }
}

struct Ctx {
    trunc: u32,
}

fn binomial_row(j: u32) -> Vec<Rational> {
    let mut row = vec![BigInt::from(1)];
    for k in 1..=j as usize {
        let next = &row[k - 1] * BigInt::from(j as usize - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row.into_iter().map(Rational::from_integer).collect()
}

fn powers<F: Field>(k: &F, x: &F::E, upto: u32) -> Vec<F::E> {
    let mut out = vec![k.one()];
    for i in 1..=upto as usize {
        out.push(k.mul(&out[i - 1], x));
    }
    out
}

/// Number of leading `t`-degrees of the local equation that fix its roots through `t^trunc`, for a
/// node at exponent `e` whose equation has a root of multiplicity `j0` at `w = 0`.
///
/// A perturbation of order `t^D` moves a cluster of `r` of the `j0` roots by at least
/// `(D - (j0 - r)·T) / r` with `T = trunc - e`, which exceeds `T` once `D ≥ j0·(T + 1)`.
fn precision_cap(j0: u32, e: u32, trunc: u32) -> u32 {
    j0.saturating_mul(trunc.saturating_sub(e).saturating_add(2))
}

/// `H(λ s^b, s^a (c + w)) / s^min`, keeping `s`-degrees below `cap`. The flag reports dropped terms.
fn transform<F: Field>(
    k: &F,
    h: &KPoly<F::E>,
    lam: &F::E,
    b: u32,
    a: u32,
    c: &F::E,
    cap: u32,
) -> (KPoly<F::E>, bool) {
    let smin = h.keys().map(|&(i, j)| i * b + j * a).min().unwrap_or(0);
    let imax = h.keys().map(|e| e.0).max().unwrap_or(0);
    let jmax = h.keys().map(|e| e.1).max().unwrap_or(0);
    let lp = powers(k, lam, imax);
    let cp = powers(k, c, jmax);
    let mut out: KPoly<F::E> = BTreeMap::new();
    let mut rows: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
    let mut dropped = false;
    for (&(i, j), coef) in h {
        let sexp = i * b + j * a - smin;
        if sexp >= cap {
            dropped = true;
            continue;
        }
        let base = k.mul(coef, &lp[i as usize]);
        let row = rows.entry(j).or_insert_with(|| binomial_row(j));
        for kk in 0..=j {
            let term = k.scale(&k.mul(&base, &cp[(j - kk) as usize]), &row[kk as usize]);
            let slot = out.entry((sexp, kk)).or_insert_with(|| k.zero());
            *slot = k.add(slot, &term);
        }
    }
    out.retain(|_, c| !k.is_trivially_zero(c));
    (out, dropped)
}

fn clean<F: Field>(k: &F, h: KPoly<F::E>) -> Result<KPoly<F::E>, Split> {
    let mut out = BTreeMap::new();
    for (e, c) in h {
        if !k.is_zero(&c)? {
            out.insert(e, c);
        }
    }
    Ok(out)
}

enum RootSpec<E> {
    Known(E, u32),
    Extension(UnivariatePoly, u32),
}

fn find_roots<F: Field>(k: &F, p: &[F::E]) -> Result<Vec<RootSpec<F::E>>, Interrupt> {
    if k.modulus().is_none() {
        let q = UnivariatePoly::from_coeffs(p.iter().map(|c| k.to_poly(c).coeff(0)).collect());
        let mut known: Vec<(Rational, u32)> = Vec::new();
        let mut ext = Vec::new();
        for (mult, factor) in q.squarefree_decomposition() {
            let mut rest = factor.clone();
            for r in factor.rational_roots() {
                rest = rest.div_exact(&UnivariatePoly::from_roots(&[r.clone()])).unwrap();
                known.push((r, mult as u32));
            }
            if rest.deg() > 0 {
                ext.push((rest.monic(), mult as u32));
            }
        }
        known.sort_by(|a, b| a.0.cmp(&b.0));
        ext.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()));
        let mut out: Vec<RootSpec<F::E>> =
            known.into_iter().map(|(r, m)| RootSpec::Known(k.from_rational(&r), m)).collect();
        out.extend(ext.into_iter().map(|(m, r)| RootSpec::Extension(m, r)));
        return Ok(out);
    }
    let mut out = Vec::new();
    for (mult, factor) in series::squarefree_decomposition(k, p)? {
        if factor.len() == 2 {
            out.push(RootSpec::Known(k.neg(&factor[0]), mult as u32));
            continue;
        }
        let m = k.modulus().unwrap();
        if factor.len() == 3 && m.deg() == 2 {
            // monic Y² + pY + q: roots (-p ± √(p² - 4q)) / 2
            let (q, p1) = (k.to_poly(&factor[0]), k.to_poly(&factor[1]));
            let disc = p1.mul(&p1).sub(&q.scale(&int(4))).rem(m);
            let Some(r) = quadratic_sqrt(m, &disc) else {
                return Err(LocalError::ExtensionTowerRequired(format!("square root of {} over the extension", disc.fmt_var("a"))).into());
            };
            let half = frac(1, 2);
            let mut roots = [p1.neg().add(&r).scale(&half), p1.neg().sub(&r).scale(&half)];
            roots.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
            out.extend(roots.iter().map(|y| RootSpec::Known(k.from_poly(y), mult as u32)));
            continue;
        }
        let rational: Option<Vec<Rational>> = factor.iter().map(|c| k.as_rational(c)).collect();
        let Some(rational) = rational else {
            return Err(LocalError::ExtensionTowerRequired(format!(
                "edge polynomial factor of degree {} over the extension",
                factor.len() - 1
            ))
            .into());
        };
        let q = UnivariatePoly::from_coeffs(rational);
        let roots = q.rational_roots();
        if roots.len() < q.deg() {
            return Err(LocalError::ExtensionTowerRequired(format!("roots of {} over the extension", q)).into());
        }
        out.extend(roots.into_iter().map(|r| RootSpec::Known(k.from_rational(&r), mult as u32)));
    }
    Ok(out)
}

fn make_branch<F: Field>(k: &F, node: &Node<F::E>, extra: &[(u32, F::E)], exact: bool, ctx: &Ctx) -> PuiseuxBranch {
    let mut series: Vec<(u32, UnivariatePoly)> = node.v.iter().map(|(e, c)| (*e, k.to_poly(c))).collect();
    series.extend(extra.iter().map(|(e, c)| (*e, k.to_poly(c))));
    series.retain(|(_, c)| !c.is_zero());
    PuiseuxBranch {
        n: node.n,
        lambda: k.to_poly(&node.lam),
        series,
        truncation: ctx.trunc,
        exact,
        vertical: false,
        modulus: k.modulus().cloned(),
        path: node.path.clone(),
        ext_step: node.ext_step,
    }
}

fn expand<F: Field>(
    k: &F,
    h: KPoly<F::E>,
    node: Node<F::E>,
    ctx: &Ctx,
    out: &mut Vec<PuiseuxBranch>,
) -> Result<(), Interrupt> {
    let mut h = clean(k, h)?;
    let mut node = node;
    // an apparent repeated factor of an approximate equation is unresolved precision
    let repeated = |approx: bool| -> Interrupt {
        if approx {
            LocalError::TruncationTooSmall(ctx.trunc).into()
        } else {
            LocalError::NotReduced.into()
        }
    };
    if h.is_empty() {
        return Err(repeated(node.approx));
    }
    if let Some(j0) = h.keys().filter(|e| e.0 == 0).map(|e| e.1).min() {
        let cap = precision_cap(j0, node.e, ctx.trunc);
        let before = h.len();
        h.retain(|e, _| e.0 < cap);
        node.approx |= h.len() < before;
    }
    if h.keys().all(|e| e.1 >= 1) {
        // w divides: v = V(t), exactly unless the equation was cut
        out.push(make_branch(k, &node, &[], !node.approx, ctx));
        h = h.into_iter().map(|((i, j), c)| ((i, j - 1), c)).collect();
        if h.keys().all(|e| e.1 >= 1) {
            return Err(repeated(node.approx));
        }
    }
    let Some(j0) = h.keys().filter(|e| e.0 == 0).map(|e| e.1).min() else {
        return Err(repeated(node.approx));
    };
    if j0 == 0 {
        return Ok(());
    }
    if j0 == 1 {
        return hensel(k, &h, &node, ctx, out);
    }
    let points: Vec<(u32, u32)> = h.keys().copied().collect();
    for (start, end, a, b) in super::newton::hull_edges(&points, (0, j0)) {
        let len = ((start.1 - end.1) / b) as usize + 1;
        let p: Vec<F::E> = (0..len)
            .map(|idx| {
                let key = (end.0 - idx as u32 * a, end.1 + idx as u32 * b);
                h.get(&key).cloned().unwrap_or_else(|| k.zero())
            })
            .collect();
        for root in find_roots(k, &p)? {
            match root {
                RootSpec::Known(y, r) => child(k, &h, &node, a, b, &y, r, ctx, out)?,
                RootSpec::Extension(m, r) => spawn_extension(k, &h, &node, a, b, m, r, ctx, out)?,
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn child<F: Field>(
    k: &F,
    h: &KPoly<F::E>,
    node: &Node<F::E>,
    a: u32,
    b: u32,
    y: &F::E,
    r: u32,
    ctx: &Ctx,
    out: &mut Vec<PuiseuxBranch>,
) -> Result<(), Interrupt> {
    let kk = (0..b).find(|kk| (kk * a + 1) % b == 0).expect("a and b coprime");
    let m = (1 + kk * a) / b;
    let e2 = node.e * b + a;
    if r >= 2 && e2 > ctx.trunc {
        return Err(LocalError::TruncationTooSmall(ctx.trunc).into());
    }
    let lam = k.pow(y, kk as i64)?;
    let c = k.pow(y, m as i64)?;
    let (h2, dropped) = transform(k, h, &lam, b, a, &c, precision_cap(r, e2, ctx.trunc));
    let lam_e = k.pow(&lam, node.e as i64)?;
    let kappa = k.mul(&node.kappa, &lam_e);
    let n2 = node.n * b;
    let mut v: Vec<(u32, F::E)> = Vec::with_capacity(node.v.len() + 1);
    let lp = powers(k, &lam, node.v.last().map_or(0, |t| t.0));
    for (exp, coef) in &node.v {
        v.push((exp * b, k.mul(coef, &lp[*exp as usize])));
    }
    v.push((e2, k.mul(&kappa, &c)));
    let mut path = node.path.clone();
    path.push(PathStep {
        exponent: Rational::new(BigInt::from(e2), BigInt::from(n2)),
        ramification: b,
        root: k.to_poly(y),
    });
    let lam_n = k.pow(&lam, node.n as i64)?;
    let next = Node {
        n: n2,
        lam: k.mul(&node.lam, &lam_n),
        v,
        kappa,
        e: e2,
        path,
        ext_step: node.ext_step,
        approx: node.approx || dropped,
    };
    expand(k, h2, next, ctx, out)
}

#[allow(clippy::too_many_arguments)]
fn spawn_extension<F: Field>(
    k: &F,
    h: &KPoly<F::E>,
    node: &Node<F::E>,
    a: u32,
    b: u32,
    modulus: UnivariatePoly,
    r: u32,
    ctx: &Ctx,
    out: &mut Vec<PuiseuxBranch>,
) -> Result<(), Interrupt> {
    if k.modulus().is_some() {
        return Err(LocalError::ExtensionTowerRequired(format!("roots of {modulus} over an extension")).into());
    }
    let mut work = vec![modulus];
    while let Some(m) = work.pop() {
        let ext = ExtField::new(&m);
        let hx: KPoly<UnivariatePoly> = h.iter().map(|(e, c)| (*e, k.to_poly(c))).collect();
        let mut nx = node.map(|c| k.to_poly(c));
        nx.ext_step = Some(node.path.len());
        let mut sub = Vec::new();
        match child(&ext, &hx, &nx, a, b, &ext.generator(), r, ctx, &mut sub) {
            Ok(()) => out.extend(sub),
            Err(Interrupt::Split(g)) => {
                let g = g.monic();
                let cofactor = m.div_exact(&g).expect("factor of the modulus").monic();
                work.push(cofactor);
                work.push(g);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Columns of `h` as dense series in `s`, truncated to `m` terms: `cols[j]` multiplies `w^j`.
fn columns<F: Field>(k: &F, h: &KPoly<F::E>, m: usize) -> Vec<Vec<F::E>> {
    let jmax = h.keys().map(|e| e.1).max().unwrap_or(0) as usize;
    let mut cols = vec![Vec::new(); jmax + 1];
    for (&(i, j), c) in h {
        let i = i as usize;
        if i < m {
            let col = &mut cols[j as usize];
            if col.len() <= i {
                col.resize(i + 1, k.zero());
            }
            col[i] = c.clone();
        }
    }
    cols.into_iter().map(|c| series::trim(k, c)).collect()
}

fn horner<F: Field>(k: &F, cols: &[Vec<F::E>], w: &[F::E], m: usize) -> Vec<F::E> {
    let mut acc: Vec<F::E> = Vec::new();
    for col in cols.iter().rev() {
        acc = series::mul_trunc(k, &acc, w, m);
        let c: Vec<F::E> = col.iter().take(m).cloned().collect();
        acc = series::add(k, &acc, &c);
    }
    acc
}

/// Solves `h(s, W(s)) = 0`, `W(0) = 0`, to `m` terms by Newton iteration.
pub(crate) fn newton_root<F: Field>(k: &F, h: &KPoly<F::E>, m: usize) -> Result<Vec<F::E>, Split> {
    if m == 0 {
        return Ok(Vec::new());
    }
    let cols = columns(k, h, m);
    let dcols: Vec<Vec<F::E>> = cols
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| series::scale(k, c, &k.from_rational(&Rational::from_integer(BigInt::from(j)))))
        .collect();
    let mut w: Vec<F::E> = Vec::new();
    let mut prec = 1usize;
    while prec < m {
        prec = (prec * 2).min(m);
        let val = horner(k, &cols, &w, prec);
        if val.is_empty() {
            continue;
        }
        let der = horner(k, &dcols, &w, prec);
        let inv = series::inv_trunc(k, &der, prec)?;
        let corr = series::mul_trunc(k, &val, &inv, prec);
        w = series::sub(k, &w, &corr);
    }
    Ok(w)
}

fn hensel<F: Field>(
    k: &F,
    h: &KPoly<F::E>,
    node: &Node<F::E>,
    ctx: &Ctx,
    out: &mut Vec<PuiseuxBranch>,
) -> Result<(), Interrupt> {
    let m = (ctx.trunc + 1).saturating_sub(node.e) as usize;
    let w = newton_root(k, h, m)?;
    let mut extra = Vec::new();
    let mut path = node.path.clone();
    for (idx, c) in w.iter().enumerate() {
        if idx == 0 || k.is_zero(c)? {
            continue;
        }
        let exp = node.e + idx as u32;
        extra.push((exp, k.mul(&node.kappa, c)));
        path.push(PathStep {
            exponent: Rational::new(BigInt::from(exp), BigInt::from(node.n)),
            ramification: 1,
            root: k.to_poly(c),
        });
    }
    let mut done = node.clone();
    done.path = path;
    out.push(make_branch(k, &done, &extra, false, ctx));
    Ok(())
}

fn vertical_branch() -> PuiseuxBranch {
    PuiseuxBranch {
        n: 1,
        lambda: UnivariatePoly::zero(),
        series: vec![(1, UnivariatePoly::one())],
        truncation: u32::MAX,
        exact: true,
        vertical: true,
        modulus: None,
        path: Vec::new(),
        ext_step: None,
    }
}

/// All branches of the germ through the origin, each series complete through `t^trunc`.
pub fn puiseux_branches(g: &CurveGerm, trunc: u32) -> Result<Vec<PuiseuxBranch>, LocalError> {
    let f = g.poly();
    if !f.is_reduced() {
        return Err(LocalError::NotReduced);
    }
    let k = RationalField;
    let mut h: KPoly<Rational> = f.terms().map(|(e, c)| (*e, c.clone())).collect();
    let mut out = Vec::new();
    if h.keys().all(|e| e.0 >= 1) {
        out.push(vertical_branch());
        h = h.into_iter().map(|((i, j), c)| ((i - 1, j), c)).collect();
    }
    let root = Node {
        n: 1,
        lam: k.one(),
        v: Vec::new(),
        kappa: k.one(),
        e: 0,
        path: Vec::new(),
        ext_step: None,
        approx: false,
    };
    let ctx = Ctx { trunc };
    if h.contains_key(&(0, 0)) {
        return Ok(out);
    }
    match expand(&k, h, root, &ctx, &mut out) {
        Ok(()) => Ok(out),
        Err(Interrupt::Fail(e)) => Err(e),
        Err(Interrupt::Split(_)) => unreachable!("no zero divisors over Q"),
    }
}

/// Starts from a short truncation and doubles it until the branches separate.
pub fn puiseux_branches_adaptive(g: &CurveGerm, start: u32) -> Result<Vec<PuiseuxBranch>, LocalError> {
    let cap = default_truncation(g).max(start);
    let mut trunc = start.max(1);
    loop {
        match puiseux_branches(g, trunc) {
            Err(LocalError::TruncationTooSmall(_)) if trunc < cap => trunc = (trunc * 2).min(cap),
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{frac, int};

    fn germ(s: &str) -> CurveGerm {
        CurveGerm::new(parse_poly(s).unwrap()).unwrap()
    }

    fn residual_order(g: &CurveGerm, b: &PuiseuxBranch) -> Option<u32> {
        super::super::compose_valuation(g.poly(), b, b.truncation.saturating_add(1) as usize).unwrap()
    }

    #[test]
    fn cusp() {
        let bs = puiseux_branches(&germ("y^2 - x^3"), 10).unwrap();
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.n, 2);
        assert_eq!(b.characteristic_exponents(), vec![3]);
        assert_eq!(b.series, vec![(3, UnivariatePoly::one())]);
        assert!(b.exact);
    }

    #[test]
    fn smooth_parabola() {
        // y + z^2 with u = z
        let bs = puiseux_branches(&germ("y + x^2"), 8).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].n, 1);
        assert_eq!(bs[0].series, vec![(2, UnivariatePoly::constant(int(-1)))]);
    }

    #[test]
    fn two_point_germ() {
        // x^3 + x z^3 in (u, v) = (z, x): v (v^2 + u^3)
        let bs = puiseux_branches(&germ("y^3 + y*x^3"), 20).unwrap();
        assert_eq!(bs.len(), 2);
        let mut ns: Vec<u32> = bs.iter().map(|b| b.n).collect();
        ns.sort();
        assert_eq!(ns, vec![1, 2]);
    }

    #[test]
    fn rational_lambda_for_non_power() {
        // v^2 = 2 u^3 has no rational parameterization with u = t^2
        let bs = puiseux_branches(&germ("y^2 - 2*x^3"), 10).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].modulus, None);
        assert_eq!(residual_order(&germ("y^2 - 2*x^3"), &bs[0]), None);
    }

    #[test]
    fn irrational_tangents_use_extension() {
        let g = germ("y^2 - 2*x^2 + x^3");
        let bs = puiseux_branches(&g, 12).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].conjugates(), 2);
        assert_eq!(bs[0].modulus, Some(UnivariatePoly::from_i64s(&[-2, 0, 1])));
        assert!(residual_order(&g, &bs[0]).map_or(true, |v| v > 12));
    }

    #[test]
    fn residuals_vanish_to_truncation() {
        for s in ["y^3 - x^7 + x^4*y", "(y - x^2)*(y - x^2 - x^3)", "y^2 - x^3 - x^5*y", "(y^2 - x^3)*(y - x)", "y^4 - 2*x^3*y^2 + x^6 - x^7"] {
            let g = germ(s);
            for b in puiseux_branches_adaptive(&g, 16).unwrap() {
                let v = residual_order(&g, &b);
                assert!(v.map_or(true, |v| v > b.truncation), "{s}: {b:?}");
            }
        }
    }

    #[test]
    fn vertical_axis() {
        let bs = puiseux_branches(&germ("x*(y - x)"), 6).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs[0].vertical);
        assert_eq!(bs[1].path[0].exponent, frac(1, 1));
    }

    #[test]
    fn tower_detected() {
        // v = √2·u + 2^(1/4)·u^2 and its conjugates: the second stage needs a square root of α
        let g = germ("(y^2 - 2*x^2)^2 - 8*x^5*y - 2*x^8");
        assert!(matches!(puiseux_branches(&g, 20), Err(LocalError::ExtensionTowerRequired(_))));
    }
}

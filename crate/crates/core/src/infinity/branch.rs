//! Branch data at the points at infinity and intersection numbers between branches.
//!
//! Two branches that follow the same chain of expansion steps up to a node `X` and then differ
//! intersect with multiplicity
//!
//! ```text
//! n1·n2/n_X · ( min(q1, q2) + Σ_{j=1}^{n_X-1} min{ q ∈ Q_X : j·q ∉ Z } )
//! ```
//!
//! where `n_X` is the ramification accumulated before `X`, `Q_X` the `u`-exponents of the common
//! terms, and `q1`, `q2` the exponents of the first differing terms. This is the sum of
//! `ord_u(y_i − y'_j)` over conjugate pairs.

use std::fmt;

use num_bigint::BigInt;

use super::puiseux::{puiseux_branches_adaptive, PuiseuxBranch};
use super::{localize, points_at_infinity, InfinityPoint};
use crate::error::LocalError;
use crate::field::{ExtField, Field};
use crate::poly::BivariatePoly;
use crate::rational::{to_text, Rational};
use crate::upoly::UnivariatePoly;

/// Which of the two classes in a comparison must be split over a factor of its modulus.
#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

enum PairErr {
    Refine(Side, UnivariatePoly),
    Fail(LocalError),
}

impl From<LocalError> for PairErr {
    fn from(e: LocalError) -> Self {
        PairErr::Fail(e)
    }
}

/// Multiplicity of two branches given the index of their first differing step and the
/// exponents there (`None` for a branch with no further terms).
fn pair_value(b1: &PuiseuxBranch, b2: &PuiseuxBranch, at: usize, q1: Option<&Rational>, q2: Option<&Rational>) -> u64 {
    let prefix = &b1.path[..at];
    let nx: u64 = prefix.iter().map(|s| s.ramification as u64).product();
    let qmin = match (q1, q2) {
        (Some(a), Some(b)) => a.min(b).clone(),
        (Some(a), None) | (None, Some(a)) => a.clone(),
        (None, None) => unreachable!("identical exact branches"),
    };
    let mut sum = qmin;
    for j in 1..nx {
        let jr = Rational::from_integer(BigInt::from(j));
        let m = prefix.iter().map(|s| &s.exponent).filter(|q| !(*q * &jr).is_integer()).min();
        sum += m.expect("prefix ramification is generated by its exponents").clone();
    }
    let total = sum * Rational::from_integer(BigInt::from(b1.n as u64 * b2.n as u64))
        / Rational::from_integer(BigInt::from(nx));
    assert!(total.is_integer(), "intersection number must be integral");
    u64::try_from(total.to_integer()).expect("fits")
}

fn roots_equal(a: &UnivariatePoly, b: &UnivariatePoly, ext: Option<&ExtField>) -> Result<bool, PairErr> {
    if a == b {
        return Ok(true);
    }
    match ext {
        None => Ok(false),
        Some(k) => match k.is_zero(&a.sub(b)) {
            Ok(z) => Ok(z),
            Err(s) => Err(PairErr::Refine(Side::Left, s.0)),
        },
    }
}

/// First index where the chains differ, with the exponents there.
fn diverge(
    b1: &PuiseuxBranch,
    b2: &PuiseuxBranch,
    from: usize,
    ext: Option<&ExtField>,
) -> Result<(usize, Option<Rational>, Option<Rational>), PairErr> {
    let mut i = from;
    loop {
        match (b1.path.get(i), b2.path.get(i)) {
            (Some(s1), Some(s2)) => {
                if s1.exponent == s2.exponent
                    && s1.ramification == s2.ramification
                    && roots_equal(&s1.root, &s2.root, ext)?
                {
                    i += 1;
                    continue;
                }
                return Ok((i, Some(s1.exponent.clone()), Some(s2.exponent.clone())));
            }
            (None, Some(s2)) => {
                if b1.exact || b1.known_exponent().is_some_and(|k| s2.exponent <= k) {
                    return Ok((i, None, Some(s2.exponent.clone())));
                }
                return Err(LocalError::TruncationTooSmall(b1.truncation).into());
            }
            (Some(s1), None) => {
                if b2.exact || b2.known_exponent().is_some_and(|k| s1.exponent <= k) {
                    return Ok((i, Some(s1.exponent.clone()), None));
                }
                return Err(LocalError::TruncationTooSmall(b2.truncation).into());
            }
            (None, None) => {
                if b1.exact && b2.exact {
                    return Err(LocalError::NotReduced.into());
                }
                return Err(LocalError::TruncationTooSmall(b1.truncation.min(b2.truncation)).into());
            }
        }
    }
}

/// Both are conjugate classes born at the same step from the same chain.
fn same_extension_node(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Option<usize> {
    let (sa, sb) = (a.ext_step?, b.ext_step?);
    if sa != sb || a.path.len() <= sa || b.path.len() <= sb {
        return None;
    }
    let prefix_equal = a.path[..sa] == b.path[..sa];
    let step_equal = a.path[sa].exponent == b.path[sa].exponent && a.path[sa].ramification == b.path[sa].ramification;
    (prefix_equal && step_equal).then_some(sa)
}

/// Intersection numbers of the conjugates of `a` against those of `b`, as `(value, count)`.
fn class_pair(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Result<Vec<(u64, usize)>, PairErr> {
    let (ka, kb) = (a.conjugates() as usize, b.conjugates() as usize);
    if a.vertical || b.vertical {
        if a.vertical && b.vertical {
            return Err(LocalError::NotReduced.into());
        }
        let other = if a.vertical { b } else { a };
        return Ok(vec![(other.n as u64, ka * kb)]);
    }
    if let Some(s) = same_extension_node(a, b) {
        let (ma, mb) = (a.modulus.as_ref().unwrap(), b.modulus.as_ref().unwrap());
        let g = ma.gcd(mb);
        let q = &a.path[s].exponent;
        let at_split = pair_value(a, b, s, Some(q), Some(q));
        if g.is_constant() {
            return Ok(vec![(at_split, ka * kb)]);
        }
        if ma == mb {
            // conjugates under the same embedding share the step, the others split there
            let ext = ExtField::new(ma);
            let (at, q1, q2) = diverge(a, b, s + 1, Some(&ext))?;
            return Ok(vec![(pair_value(a, b, at, q1.as_ref(), q2.as_ref()), ka), (at_split, ka * ka - ka)]);
        }
        return Err(if &g != ma { PairErr::Refine(Side::Left, g) } else { PairErr::Refine(Side::Right, g) });
    }
    let (at, q1, q2) = diverge(a, b, 0, None)?;
    Ok(vec![(pair_value(a, b, at, q1.as_ref(), q2.as_ref()), ka * kb)])
}

/// Pairs among the conjugates of one class.
fn within_class(b: &PuiseuxBranch) -> Vec<(u64, usize)> {
    let k = b.conjugates() as usize;
    if k < 2 {
        return Vec::new();
    }
    let s = b.ext_step.expect("conjugates come from an extension step");
    let q = &b.path[s].exponent;
    vec![(pair_value(b, b, s, Some(q), Some(q)), k * (k - 1) / 2)]
}

fn flatten(parts: Vec<(u64, usize)>) -> Vec<u64> {
    let mut out: Vec<u64> = parts.into_iter().flat_map(|(v, c)| std::iter::repeat(v).take(c)).collect();
    out.sort_unstable();
    out
}

/// Replaces a class by its restrictions to `g` and to the cofactor of `g` in its modulus.
fn refine(list: &mut Vec<PuiseuxBranch>, idx: usize, g: &UnivariatePoly) {
    let b = list.remove(idx);
    let m = b.modulus.clone().expect("only extension classes refine");
    let cof = m.div_exact(g).expect("factor").monic();
    list.insert(idx, b.restrict(&cof));
    list.insert(idx, b.restrict(&g.monic()));
}

/// Intersection numbers of all unordered pairs of distinct branches over `C`, sorted.
pub fn pairwise_multiplicities(branches: &[PuiseuxBranch]) -> Result<Vec<u64>, LocalError> {
    let mut bs = branches.to_vec();
    'retry: loop {
        let mut parts: Vec<(u64, usize)> = bs.iter().flat_map(within_class).collect();
        for i in 0..bs.len() {
            for j in i + 1..bs.len() {
                match class_pair(&bs[i], &bs[j]) {
                    Ok(v) => parts.extend(v),
                    Err(PairErr::Fail(e)) => return Err(e),
                    Err(PairErr::Refine(side, g)) => {
                        refine(&mut bs, if matches!(side, Side::Left) { i } else { j }, &g);
                        continue 'retry;
                    }
                }
            }
        }
        return Ok(flatten(parts));
    }
}

/// Intersection numbers between each branch in `xs` and each branch in `ys`, over `C`, sorted.
/// The two lists must come from expansions of germs without a common component.
pub fn cross_multiplicities(xs: &[PuiseuxBranch], ys: &[PuiseuxBranch]) -> Result<Vec<u64>, LocalError> {
    let (mut xs, mut ys) = (xs.to_vec(), ys.to_vec());
    'retry: loop {
        let mut parts = Vec::new();
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                match class_pair(&xs[i], &ys[j]) {
                    Ok(v) => parts.extend(v),
                    Err(PairErr::Fail(e)) => return Err(e),
                    Err(PairErr::Refine(Side::Left, g)) => {
                        refine(&mut xs, i, &g);
                        continue 'retry;
                    }
                    Err(PairErr::Refine(Side::Right, g)) => {
                        refine(&mut ys, j, &g);
                        continue 'retry;
                    }
                }
            }
        }
        return Ok(flatten(parts));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSummary {
    pub n: u32,
    pub characteristic_exponents: Vec<u32>,
    /// Intersection number with `u = 0`, the line at infinity.
    pub line_multiplicity: u32,
    pub conjugates: u32,
}

impl BranchSummary {
    fn of(b: &PuiseuxBranch) -> Self {
        BranchSummary {
            n: b.n,
            characteristic_exponents: b.characteristic_exponents(),
            line_multiplicity: b.n,
            conjugates: b.conjugates(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointBranches {
    pub point: InfinityPoint,
    pub branches: Vec<PuiseuxBranch>,
}

impl PointBranches {
    pub fn summaries(&self) -> Vec<BranchSummary> {
        self.branches.iter().map(BranchSummary::of).collect()
    }

    pub fn branch_count(&self) -> u32 {
        self.branches.iter().map(|b| b.conjugates()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDataAtInfinity {
    pub points: Vec<PointBranches>,
}

impl BranchDataAtInfinity {
    /// Number of ends of the affine curve.
    pub fn punctures(&self) -> u32 {
        self.points.iter().map(|p| p.branch_count()).sum()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn coef_text(p: &UnivariatePoly) -> String {
    if p.is_constant() {
        to_text(&p.coeff(0))
    } else {
        format!("({})", p.fmt_var("a"))
    }
}

impl fmt::Display for BranchDataAtInfinity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pb in &self.points {
            writeln!(f, "point {}", pb.point)?;
            for b in &pb.branches {
                let s = BranchSummary::of(b);
                let exps: Vec<String> = s.characteristic_exponents.iter().map(|e| e.to_string()).collect();
                let coeffs: Vec<String> = b.series.iter().map(|(k, c)| format!("{k}:{}", coef_text(c))).collect();
                write!(
                    f,
                    "  branch n={} exponents=[{}] conjugates={} line={} lambda={} series=[{}]",
                    s.n,
                    exps.join(","),
                    s.conjugates,
                    s.line_multiplicity,
                    coef_text(&b.lambda),
                    coeffs.join(",")
                )?;
                if let Some(m) = &b.modulus {
                    write!(f, " field={}", m.fmt_var("a"))?;
                }
                writeln!(f, "{}", if b.exact { " exact" } else { "" })?;
            }
        }
        Ok(())
    }
}

/// Branches of the closure of `f = 0` at each of its points at infinity.
pub fn branch_data_at_infinity(f: &BivariatePoly) -> Result<BranchDataAtInfinity, LocalError> {
    let mut points = Vec::new();
    for p in points_at_infinity(f)? {
        let germ = localize(f, &p)?;
        let branches = puiseux_branches_adaptive(&germ, 16)?;
        points.push(PointBranches { point: p, branches });
    }
    Ok(BranchDataAtInfinity { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinity::{puiseux_branches, CurveGerm};
    use crate::parse::parse_poly;

    fn germ(s: &str) -> CurveGerm {
        CurveGerm::new(parse_poly(s).unwrap()).unwrap()
    }

    fn pairs(s: &str) -> Vec<u64> {
        pairwise_multiplicities(&puiseux_branches_adaptive(&germ(s), 16).unwrap()).unwrap()
    }

    #[test]
    fn transverse_and_tangent_lines() {
        assert_eq!(pairs("x*y"), vec![1]);
        assert_eq!(pairs("(y - x^2)*(y - 2*x^2)"), vec![2]);
        assert_eq!(pairs("(y - x^2)*(y - x^2 - x^3)"), vec![3]);
    }

    #[test]
    fn cusps() {
        // resultant order 6
        assert_eq!(pairs("(y^2 - x^3)*(y^2 - 2*x^3)"), vec![6]);
        // cusp against its tangent line: 3
        assert_eq!(pairs("(y^2 - x^3)*y"), vec![3]);
        // cusp against the other axis: 2
        assert_eq!(pairs("(y^2 - x^3)*x"), vec![2]);
    }

    #[test]
    fn conjugate_lines() {
        // y^2 - 2x^2: two transverse lines over Q(√2)
        let bs = puiseux_branches(&germ("y^2 - 2*x^2"), 8).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(pairwise_multiplicities(&bs).unwrap(), vec![1]);
        // (y^2 - 2x^2)(y - x): three pairwise transverse lines
        assert_eq!(pairs("(y^2 - 2*x^2)*(y - x)"), vec![1, 1, 1]);
        // y^2 - 2x^4: two parabolas, contact 2
        assert_eq!(pairs("y^2 - 2*x^4"), vec![2]);
    }

    #[test]
    fn extension_classes() {
        // four lines through the origin over two quadratic fields
        assert_eq!(pairs("(y^2 - 2*x^2)*(y^2 - 3*x^2)"), vec![1; 6]);
        // same field, same embedding pairs osculate to order 2
        assert_eq!(pairs("(y^2 - 2*x^2 - x^3)*(y^2 - 2*x^2 - 2*x^3)"), vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn branches_at_infinity_of_examples() {
        let f = parse_poly("x*y - 1").unwrap();
        let d = branch_data_at_infinity(&f).unwrap();
        assert_eq!(d.points.len(), 2);
        assert_eq!(d.punctures(), 2);
        assert_eq!(branch_data_at_infinity(&parse_poly("x").unwrap()).unwrap().punctures(), 1);
        let cusp = branch_data_at_infinity(&parse_poly("x^2 - y^3").unwrap()).unwrap();
        assert_eq!(cusp.points.len(), 1);
        assert_eq!(cusp.punctures(), 1);
        let d = branch_data_at_infinity(&parse_poly("x^2*y + 1").unwrap()).unwrap();
        assert_eq!(d.punctures(), 2);
    }

    #[test]
    fn serialization_is_stable() {
        let d = branch_data_at_infinity(&parse_poly("x*(x^2*y+1)").unwrap()).unwrap();
        let text = d.to_text();
        assert!(text.starts_with("point (1:0:0)\n  branch n=1"));
        assert_eq!(text, branch_data_at_infinity(&parse_poly("x*(x^2*y+1)").unwrap()).unwrap().to_text());
    }
}

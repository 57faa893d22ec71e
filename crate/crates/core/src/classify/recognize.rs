//! Recognition of normal forms: coordinate normalization, candidate classes by degree, and
//! matching by exact coefficients or by invariants; `classify` adds critical values and graph
//! confirmation.

use std::fmt;

use num_traits::{One, Zero};

use super::{invariant_tuple, invariants_of_factors, CaseTag, NormalFormInstance};
use crate::automorphism::{apply_automorphism, Generator, TameAutomorphism};
use crate::bifurcation::{affine_critical_values, component_census, ValueSet};
use crate::error::ClassifyError;
use crate::graph::{graphs_equivalent, resolve_factors, split_components};
use crate::parse::parse_factors;
use crate::poly::BivariatePoly;
use crate::rational::{int, Rational};
use crate::upoly::UnivariatePoly;

/// Splits `f = c(x)·(g(x)·y + h(x))` and moves `y` by triangular maps until `deg h < deg g`;
/// returns `f ∘ φ` and `φ`.
pub fn normalize_linear_in_y(f: &BivariatePoly) -> Result<(BivariatePoly, TameAutomorphism), ClassifyError> {
    if f.is_zero() {
        return Err(ClassifyError::NotLinearInY);
    }
    let c = f.content_y();
    let rest = f.div_exact(&BivariatePoly::from_univariate_x(&c)).expect("content divides");
    if rest.deg_y() != 1 {
        return Err(ClassifyError::NotLinearInY);
    }
    let cs = rest.y_coeffs();
    let (h, g) = (&cs[0], &cs[1]);
    let (q, _) = h.div_rem(g);
    let gens: Vec<Generator> =
        q.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(mu, a)| Generator::triangular(-a.clone(), mu as u32)).collect();
    let phi = TameAutomorphism::new(gens)?;
    Ok((apply_automorphism(f, &phi)?, phi))
}

/// How a recognized class was matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// The factors are those of a table family with fitted coefficients.
    TheoremTable,
    /// Only the invariant tuple agrees.
    Invariants,
    /// The invariant tuple agrees and the resolution graphs are equivalent.
    ResolutionGraph,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evidence::TheoremTable => "theorem table",
            Evidence::Invariants => "invariants",
            Evidence::ResolutionGraph => "resolution graph",
        })
    }
}

/// A recognized class: `input ∘ automorphism` has the factors of `instance` (up to scalars)
/// when the evidence is the table, and the invariants of the class representative otherwise.
#[derive(Debug, Clone)]
pub struct Recognition {
    pub instance: NormalFormInstance,
    /// Default coefficients, same class.
    pub representative: NormalFormInstance,
    pub evidence: Evidence,
    pub automorphism: TameAutomorphism,
}

fn product(fs: &[BivariatePoly]) -> BivariatePoly {
    fs.iter().fold(BivariatePoly::one(), |acc, f| acc.mul(f))
}

fn total_degree(fs: &[BivariatePoly]) -> u32 {
    fs.iter().map(|f| f.degree().unwrap_or(0)).sum()
}

/// Nondecreasing vectors of `len` entries, each at least `lo`, summing to `sum`.
fn partitions(len: u32, sum: u32, lo: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if sum == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in lo..=sum / len {
        for mut rest in partitions(len - 1, sum - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Degree and component count of an instance with default coefficients.
pub fn degree_and_components(i: &NormalFormInstance) -> (u32, u32) {
    let (p, q, s, n) = (i.p, i.q, i.s, i.n);
    let (e, e2) = (i.eps as u32, i.eps_prime as u32);
    let m: u32 = i.m.iter().sum();
    match i.tag {
        CaseTag::BothEmpty => (1, 1),
        CaseTag::DisksPencil => (n + 1, n + 1),
        CaseTag::StarP1 => (1 + n * p.max(1), n + 1),
        CaseTag::StarPQ => (e + e2 + n * p.max(q), e + e2 + n),
        CaseTag::AnnuliPQ => (1 + n * (p + q), n + 1),
        CaseTag::SigmaAnnuli => (1 + (s + 1) + n * (p + q * (s + 1)), n + 2),
        CaseTag::SigmaStar => (1 + e * (s + 1) + n * p.max(q * (s + 1)), 1 + e + n),
        CaseTag::LinearInY => (n + m + 1, n + 1),
        CaseTag::XYAnnuli => (2 + n * (p + q), n + 2),
        CaseTag::LinearInYK => (n + i.n_prime + m + 1, n + i.n_prime + 1),
    }
}

/// Valid default-coefficient instances of one degree and component count.
pub fn class_candidates(degree: u32, components: u32) -> Vec<NormalFormInstance> {
    let (d, k) = (degree, components);
    let fits = |i: &NormalFormInstance| degree_and_components(i) == (d, k) && i.violations().is_empty();
    let mut out = Vec::new();
    for tag in CaseTag::ALL {
        let base = NormalFormInstance::new(tag);
        match tag {
            CaseTag::BothEmpty => out.push(base),
            CaseTag::DisksPencil => out.push(base.with_n(k.saturating_sub(1))),
            CaseTag::LinearInY | CaseTag::LinearInYK => {
                for n in 1..k {
                    let np = if tag == CaseTag::LinearInYK { k - 1 - n } else { 0 };
                    let Some(sum) = d.checked_sub(n + np + 1) else { continue };
                    for m in partitions(n, sum, 1) {
                        out.push(base.clone().with_m(m).with_n_prime(np.max(1)));
                    }
                }
            }
            _ => {
                let sigma = matches!(tag, CaseTag::SigmaAnnuli | CaseTag::SigmaStar);
                let eps: &[(bool, bool)] = match tag {
                    CaseTag::StarPQ => &[(false, false), (true, false), (false, true), (true, true)],
                    CaseTag::SigmaStar => &[(false, false), (true, false)],
                    _ => &[(false, false)],
                };
                for &(e, e2) in eps {
                    let (_, fixed) = degree_and_components(&base.clone().with_eps(e, e2).with_n(0));
                    let Some(n) = k.checked_sub(fixed).filter(|&n| n >= 1) else { continue };
                    for s in 1..=if sigma { d } else { 1 } {
                        for p in 1..=d {
                            let mut any = false;
                            for q in 1..=if tag == CaseTag::StarP1 { 1 } else { d } {
                                let i = base.clone().with_s(s).with_eps(e, e2).with_n(n).with_pq(p, q);
                                if degree_and_components(&i).0 > d {
                                    break;
                                }
                                any = true;
                                if fits(&i) {
                                    out.push(i);
                                }
                            }
                            if !any {
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    out.retain(fits);
    out
}

fn canonical_list(fs: &[BivariatePoly]) -> Vec<String> {
    let mut v: Vec<String> = fs.iter().map(|f| f.normalized().to_string()).collect();
    v.sort();
    v
}

/// `α` with `c·f = a − α·b` for some scalar `c`.
fn solve_alpha(f: &BivariatePoly, a: &BivariatePoly, b: &BivariatePoly) -> Option<Rational> {
    // one equation c·f_m + α·b_m = a_m per monomial; any independent pair determines (c, α)
    let mut eqs = Vec::new();
    for (m, _) in f.terms().chain(a.terms()).chain(b.terms()) {
        eqs.push((f.coeff(m.0, m.1), b.coeff(m.0, m.1), a.coeff(m.0, m.1)));
    }
    for (i, (f1, b1, a1)) in eqs.iter().enumerate() {
        for (f2, b2, a2) in &eqs[i + 1..] {
            let det = f1 * b2 - f2 * b1;
            if det.is_zero() {
                continue;
            }
            let c = (a1 * b2 - a2 * b1) / &det;
            let alpha = (f1 * a2 - f2 * a1) / &det;
            return (!c.is_zero() && f.scale(&c) == a.sub(&b.scale(&alpha))).then_some(alpha);
        }
    }
    None
}

/// `(g, h)` with `f ∝ g(x)·y + h(x)` and `g` monic.
fn linear_parts(f: &BivariatePoly) -> Option<(UnivariatePoly, UnivariatePoly)> {
    if f.deg_y() != 1 {
        return None;
    }
    let cs = f.y_coeffs();
    let lead = cs[1].leading();
    let inv = lead.recip();
    Some((cs[1].scale(&inv), cs[0].scale(&inv)))
}

/// `ℓ` when the two top `y`-coefficients of `f` are those of `A(x)·(x^s·y + ℓ(x))^Q`:
/// `ℓ = x^s·c_{Q−1} / (Q·c_Q)`.
fn sigma_tail(f: &BivariatePoly, s: u32) -> Option<UnivariatePoly> {
    let cs = f.y_coeffs();
    let big_q = cs.len().checked_sub(1).filter(|&q| q >= 1)?;
    let top = cs[big_q].scale(&Rational::from_integer(big_q.into()));
    let ell = cs[big_q - 1].shift(s as usize).div_exact(&top)?;
    (!ell.is_zero() && ell.deg() < s as usize && !ell.coeff(0).is_zero()).then_some(ell)
}

/// The instance of `class` with coefficients fitted to `comps`, when the factors agree up to
/// scalars.
fn fit(class: &NormalFormInstance, comps: &[BivariatePoly]) -> Option<NormalFormInstance> {
    let mut cand = class.clone();
    let target = canonical_list(comps);
    if matches!(cand.tag, CaseTag::SigmaAnnuli | CaseTag::SigmaStar) {
        let ell = comps.iter().find_map(|f| sigma_tail(f, cand.s));
        if let Some(ell) = ell {
            if ell != UnivariatePoly::one() {
                cand = cand.with_ell(ell);
            }
        }
    }
    if matches!(cand.tag, CaseTag::LinearInY | CaseTag::LinearInYK) {
        let d = cand.m.iter().sum::<u32>() as usize;
        let (g, h) = comps.iter().filter_map(linear_parts).find(|(g, _)| g.deg() == d)?;
        let mut roots: Vec<(u32, Rational)> = Vec::new();
        for (mult, part) in g.squarefree_decomposition() {
            let rs = part.rational_roots();
            if rs.len() != part.deg() {
                return None;
            }
            roots.extend(rs.into_iter().map(|r| (mult as u32, r)));
        }
        roots.sort();
        cand = cand.with_m(roots.iter().map(|(m, _)| *m).collect());
        cand.n_prime = class.n_prime;
        cand = cand.with_alpha(roots.into_iter().map(|(_, r)| r).collect());
        if h != UnivariatePoly::one() {
            cand = cand.with_h(h);
        }
    } else if cand.tag != CaseTag::BothEmpty {
        let n = cand.n as usize;
        let t0 = cand.clone().with_alpha(vec![Rational::zero(); n]).factors_unchecked();
        let t1 = cand.clone().with_alpha(vec![Rational::one(); n]).factors_unchecked();
        let mut fixed: Vec<String> = Vec::new();
        let mut shape = None;
        for (a, b) in t0.iter().zip(&t1) {
            if a == b {
                fixed.push(a.normalized().to_string());
            } else {
                shape = Some((a.clone(), a.sub(b)));
            }
        }
        let (a, b) = shape?;
        let mut alphas = Vec::new();
        for f in comps {
            let key = f.normalized().to_string();
            if let Some(pos) = fixed.iter().position(|k| *k == key) {
                fixed.remove(pos);
            } else {
                alphas.push(solve_alpha(f, &a, &b)?);
            }
        }
        if alphas.len() != n {
            return None;
        }
        alphas.sort();
        if alphas != (1..=n as i64).map(int).collect::<Vec<_>>() {
            cand = cand.with_alpha(alphas);
        }
    }
    (cand.violations().is_empty() && canonical_list(&cand.factors_unchecked()) == target).then_some(cand)
}

fn compose_first(g: Generator, phi: &TameAutomorphism) -> TameAutomorphism {
    TameAutomorphism::new(vec![g]).expect("valid generator").compose(phi)
}

fn apply_all(comps: &[BivariatePoly], g: &Generator) -> Vec<BivariatePoly> {
    let phi = TameAutomorphism::new(vec![g.clone()]).expect("valid generator");
    comps.iter().map(|f| apply_automorphism(f, &phi).expect("valid generator").normalized()).collect()
}

/// `λ` with `p ∝ (t − λ)^k`, `k = deg p ≥ 1`.
fn power_root(p: &UnivariatePoly) -> Option<Rational> {
    let k = p.deg();
    if k == 0 {
        return None;
    }
    let lambda = -(p.coeff(k - 1) / (p.leading() * Rational::from_integer(k.into())));
    (UnivariatePoly::from_roots(&vec![lambda.clone(); k]).scale(&p.leading()) == *p).then_some(lambda)
}

/// Restriction to `x = 1` of the part of maximal weight `i + μ·j`.
fn weighted_leading_at_one(f: &BivariatePoly, mu: u32) -> UnivariatePoly {
    let w = f.terms().map(|((i, j), _)| i + mu * j).max().unwrap_or(0);
    let mut cs = vec![Rational::zero(); f.deg_y() as usize + 1];
    for ((i, j), c) in f.terms() {
        if i + mu * j == w {
            cs[*j as usize] = c.clone();
        }
    }
    UnivariatePoly::from_coeffs(cs)
}

/// Lowers the degree by shears, swaps and triangular moves `y ↦ y + λ·x^μ` read off weighted
/// leading forms, at most `bound` steps.
fn reduce_degree(comps: &[BivariatePoly], bound: u32) -> (Vec<BivariatePoly>, TameAutomorphism) {
    let mut cur = comps.to_vec();
    let mut phi = TameAutomorphism::identity();
    for _ in 0..bound {
        let f = product(&cur);
        let d = f.degree().unwrap_or(0);
        let top = weighted_leading_at_one(&f, 1);
        let mut trial = cur.clone();
        let mut word = phi.clone();
        if top.deg() as u32 == d && d > 0 {
            // top form is c·y^d or c·(y − λx)^d
            if let Some(l) = power_root(&top) {
                if !l.is_zero() {
                    let g = Generator::triangular(l, 1);
                    trial = apply_all(&trial, &g);
                    word = compose_first(g, &word);
                }
                let g = Generator::swap();
                trial = apply_all(&trial, &g);
                word = compose_first(g, &word);
            }
        }
        let f = product(&trial);
        let mut next = None;
        for mu in 2..=d {
            if let Some(l) = power_root(&weighted_leading_at_one(&f, mu)) {
                if l.is_zero() {
                    continue;
                }
                let g = Generator::triangular(l, mu);
                let moved = apply_all(&trial, &g);
                if total_degree(&moved) < d {
                    next = Some((moved, compose_first(g, &word)));
                    break;
                }
            }
        }
        match next {
            Some((c, w)) => {
                cur = c;
                phi = w;
            }
            None => break,
        }
    }
    (cur, phi)
}

/// Coordinate variants of the components to try, each with its automorphism.
fn variants(comps: &[BivariatePoly]) -> Vec<(Vec<BivariatePoly>, TameAutomorphism)> {
    let id = (comps.to_vec(), TameAutomorphism::identity());
    let swap = (apply_all(comps, &Generator::swap()), TameAutomorphism::new(vec![Generator::swap()]).expect("valid"));
    let mut out = vec![id, swap];
    for (cs, phi) in out.clone() {
        if let Ok((_, psi)) = normalize_linear_in_y(&product(&cs)) {
            if !psi.generators().is_empty() {
                let moved: Vec<BivariatePoly> = cs.iter().map(|f| apply_automorphism(f, &psi).expect("valid").normalized()).collect();
                out.push((moved, psi.compose(&phi)));
            }
        }
    }
    let bound = 2 * total_degree(comps);
    let (reduced, phi) = reduce_degree(comps, bound);
    if !phi.generators().is_empty() {
        out.push((reduced.clone(), phi.clone()));
        out.push((apply_all(&reduced, &Generator::swap()), compose_first(Generator::swap(), &phi)));
    }
    out
}

/// The class of a reduced product of pairwise coprime factors, with the strongest evidence
/// found: exact table factors first, then the invariant tuple.
pub fn recognize_detailed(factors: &[BivariatePoly]) -> Result<Option<Recognition>, ClassifyError> {
    let comps: Vec<BivariatePoly> = split_components(factors)?.iter().map(|f| f.normalized()).collect();
    let mut by_invariants = None;
    for (cs, phi) in variants(&comps) {
        let d = total_degree(&cs);
        let candidates = class_candidates(d, cs.len() as u32);
        for class in &candidates {
            if let Some(instance) = fit(class, &cs) {
                return Ok(Some(Recognition { instance, representative: class.clone(), evidence: Evidence::TheoremTable, automorphism: phi }));
            }
        }
        if by_invariants.is_some() {
            continue;
        }
        let Ok(tuple) = invariants_of_factors(&cs) else { continue };
        for class in candidates {
            let mut census = component_census(&class)?;
            census.components.sort();
            census.junctions.sort();
            if census != tuple.key.census {
                continue;
            }
            if invariant_tuple(&class)? == tuple {
                by_invariants = Some(Recognition { instance: class.clone(), representative: class, evidence: Evidence::Invariants, automorphism: phi });
                break;
            }
        }
    }
    Ok(by_invariants)
}

/// The recognized class, if any.
pub fn recognize(factors: &[BivariatePoly]) -> Result<Option<NormalFormInstance>, ClassifyError> {
    Ok(recognize_detailed(factors)?.map(|r| r.instance))
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Matched(Recognition),
    Unknown(String),
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub input: String,
    pub components: Vec<BivariatePoly>,
    pub b_aff: Result<ValueSet, String>,
    /// Whether `0` is a critical value at infinity, and the evidence for the claim.
    pub b_infinity: Option<(bool, Evidence)>,
    /// Equivalence of the input's resolution graph with the class representative's, when both
    /// resolve.
    pub graph_check: Option<Result<bool, String>>,
    pub outcome: Outcome,
}

impl ClassificationReport {
    pub fn matched(&self) -> Option<&Recognition> {
        match &self.outcome {
            Outcome::Matched(r) => Some(r),
            Outcome::Unknown(_) => None,
        }
    }
}

fn graph_check(comps: &[BivariatePoly], class: &NormalFormInstance) -> Result<bool, String> {
    let a = resolve_factors(comps).map_err(|e| e.to_string())?;
    let b = resolve_factors(&class.factors_unchecked()).map_err(|e| e.to_string())?;
    graphs_equivalent(&a.graph, &b.graph).map_err(|e| e.to_string())
}

/// Critical values, recognition, and graph confirmation for a product of factors. Input
/// errors are returned; everything else is reported.
pub fn classify_factors(input: &str, factors: &[BivariatePoly]) -> Result<ClassificationReport, ClassifyError> {
    let comps = split_components(factors)?;
    let f = product(&comps);
    let b_aff = affine_critical_values(&f).map_err(|e| e.to_string());
    let mut report = ClassificationReport { input: input.to_string(), components: comps.clone(), b_aff: b_aff.clone(), b_infinity: None, graph_check: None, outcome: Outcome::Unknown(String::new()) };
    match &b_aff {
        Ok(v) if v.count() > 1 => {
            report.outcome = Outcome::Unknown(format!("{} affine critical values; the classification covers one", v.count()));
            return Ok(report);
        }
        Ok(v) if v.count() == 1 && v.rational_values != [Rational::zero()] => {
            report.outcome = Outcome::Unknown(format!("the affine critical value {v} is not the zero fiber"));
            return Ok(report);
        }
        _ => {}
    }
    let rec = match recognize_detailed(&comps) {
        Ok(Some(r)) => r,
        Ok(None) => {
            report.outcome = Outcome::Unknown("no normal form within the search bounds".into());
            return Ok(report);
        }
        Err(e) => {
            report.outcome = Outcome::Unknown(format!("recognition failed: {e}"));
            return Ok(report);
        }
    };
    if let Ok(v) = &b_aff {
        if v.is_empty() == rec.instance.tag.has_affine_critical_value() {
            report.outcome = Outcome::Unknown(format!("affine critical values {v} disagree with {}", rec.instance.class_key()));
            return Ok(report);
        }
    }
    // graphs are compared in the recognized coordinates
    let moved: Result<Vec<BivariatePoly>, _> = comps.iter().map(|g| apply_automorphism(g, &rec.automorphism)).collect();
    let check = match moved {
        Ok(cs) => graph_check(&cs, &rec.representative),
        Err(e) => Err(e.to_string()),
    };
    report.graph_check = Some(check.clone());
    let evidence = match (rec.evidence, check) {
        (Evidence::TheoremTable, _) => Evidence::TheoremTable,
        (_, Ok(true)) => Evidence::ResolutionGraph,
        (_, Ok(false)) => {
            report.outcome = Outcome::Unknown(format!("invariants match {} but the resolution graphs differ", rec.representative.class_key()));
            return Ok(report);
        }
        (_, Err(e)) => {
            report.outcome = Outcome::Unknown(format!("invariants match {} but no graph confirmation: {e}", rec.representative.class_key()));
            return Ok(report);
        }
    };
    report.b_infinity = Some((rec.instance.tag.irregular_at_infinity(), evidence));
    report.outcome = Outcome::Matched(Recognition { evidence, ..rec });
    Ok(report)
}

/// `classify_factors` on parsed text; a written product is taken factor by factor.
pub fn classify(text: &str) -> Result<ClassificationReport, ClassifyError> {
    let factors = parse_factors(text).map_err(|e| ClassifyError::BadParameter(e.to_string()))?;
    classify_factors(text, &factors)
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {}", self.input)?;
        let cs: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        writeln!(f, "components: {}", cs.join(" ; "))?;
        match &self.b_aff {
            Ok(v) => writeln!(f, "B_aff: {v}")?,
            Err(e) => writeln!(f, "B_aff: error: {e}")?,
        }
        match &self.b_infinity {
            Some((irregular, ev)) => writeln!(f, "B_inf: {} ({ev})", if *irregular { "{0}" } else { "{}" })?,
            None => writeln!(f, "B_inf: unknown")?,
        }
        match &self.graph_check {
            Some(Ok(b)) => writeln!(f, "graph check: {}", if *b { "equivalent" } else { "not equivalent" })?,
            Some(Err(e)) => writeln!(f, "graph check: unavailable: {e}")?,
            None => {}
        }
        match &self.outcome {
            Outcome::Matched(r) => {
                write!(f, "match: {} ({})", r.instance.class_key(), r.evidence)?;
                if r.instance != r.representative {
                    write!(f, "\ninstance: {}", r.instance)?;
                }
                if !r.automorphism.generators().is_empty() {
                    let (x, y) = r.automorphism.components();
                    write!(f, "\ncoordinates: (x, y) -> ({x}, {y})")?;
                }
                Ok(())
            }
            Outcome::Unknown(reason) => write!(f, "match: unknown ({reason})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::frac;

    fn poly(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn linear_in_y_normalization() {
        let (g, phi) = normalize_linear_in_y(&poly("x*(x^2*y+x^3+1)")).unwrap();
        assert_eq!(g, poly("x*(x^2*y+1)"));
        assert_eq!(phi.components(), (poly("x"), poly("y - x")));
        let (g, phi) = normalize_linear_in_y(&poly("x*(x^2*y+1)")).unwrap();
        assert_eq!(g, poly("x*(x^2*y+1)"));
        assert!(phi.generators().is_empty());
        assert_eq!(normalize_linear_in_y(&poly("x*y^2+1")).unwrap_err(), ClassifyError::NotLinearInY);
    }

    #[test]
    fn degree_formula_matches_expansion() {
        for i in crate::classify::bounded_grid() {
            let (d, k) = degree_and_components(&i);
            assert_eq!(d, i.expand_unchecked().degree().unwrap(), "{i}");
            assert_eq!(k as usize, i.factors_unchecked().len(), "{i}");
        }
    }

    #[test]
    fn partitions_are_nondecreasing() {
        assert_eq!(partitions(2, 4, 1), vec![vec![1, 3], vec![2, 2]]);
        assert_eq!(partitions(3, 2, 1), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn table_examples() {
        let r = recognize_detailed(&[poly("x^2 - y^3")]).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), "StarPQ eps=0 eps'=0 p=2 q=3 n=1");
        assert_eq!(r.evidence, Evidence::TheoremTable);
        let r = recognize_detailed(&[poly("y^2 - x^3")]).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), "StarPQ eps=0 eps'=0 p=2 q=3 n=1");
        let r = recognize_detailed(&[poly("x"), poly("x^2*y+1")]).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), "AnnuliPQ p=2 q=1 n=1");
        assert_eq!(r.instance.alphas(), vec![int(-1)]);
        assert_eq!(recognize(&[poly("x^2*y")]).unwrap_err(), ClassifyError::Resolve(crate::error::ResolveError::NotReduced));
    }

    #[test]
    fn fitted_coefficients() {
        let i = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(2).with_pq(1, 2).with_n(2)
            .with_ell(UnivariatePoly::from_i64s(&[2, 1]))
            .with_alpha(vec![frac(1, 2), int(-3)]);
        let r = recognize_detailed(&i.factors_unchecked()).unwrap().unwrap();
        assert_eq!(r.evidence, Evidence::TheoremTable);
        assert_eq!(r.instance.class_key(), i.class_key());
        assert_eq!(r.instance.ell, i.ell);
        let lin = NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![1, 2]).with_h(UnivariatePoly::from_i64s(&[5, 1]));
        let r = recognize_detailed(&lin.factors_unchecked()).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), lin.class_key());
        assert_eq!(r.instance.h, lin.h);
    }

    #[test]
    fn moved_coordinates() {
        // x(x²y + x³ + 1) is x(x²y + 1) after y ↦ y − x
        let r = recognize_detailed(&[poly("x"), poly("x^2*y+x^3+1")]).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), "AnnuliPQ p=2 q=1 n=1");
        // x² − y³ after y ↦ y + x², then swapped
        let f = poly("y^2 - (x + y^2)^3");
        let r = recognize_detailed(&[f]).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), "StarPQ eps=0 eps'=0 p=2 q=3 n=1");
    }

    #[test]
    fn classify_examples() {
        let r = classify("x").unwrap();
        assert_eq!(r.matched().unwrap().instance.tag, CaseTag::BothEmpty);
        assert!(r.b_aff.as_ref().unwrap().is_empty());
        let r = classify("x*y*(x*y+1)").unwrap();
        assert_eq!(r.b_aff.as_ref().unwrap().rational_values, vec![frac(-1, 4), int(0)]);
        assert!(matches!(r.outcome, Outcome::Unknown(_)));
        let r = classify("x*(x^2*y+1)").unwrap();
        assert_eq!(r.matched().unwrap().instance.class_key(), "AnnuliPQ p=2 q=1 n=1");
        assert_eq!(r.graph_check, Some(Ok(true)));
        assert_eq!(r.b_infinity, Some((true, Evidence::TheoremTable)));
        let r = classify("x*(x^2*y+x+1)").unwrap();
        let m = r.matched().unwrap();
        assert_eq!(m.instance.class_key(), "AnnuliPQ p=2 q=1 n=1");
        assert_eq!(m.evidence, Evidence::ResolutionGraph);
    }
}

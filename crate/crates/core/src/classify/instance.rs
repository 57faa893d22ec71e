//! Normal-form families of reduced polynomials with one critical value.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ClassifyError;
use crate::parse::parse_poly;
use crate::poly::BivariatePoly;
use crate::rational::{self, int, Rational};
use crate::upoly::UnivariatePoly;

/// The families of the topological list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// `x`
    BothEmpty,
    /// `y·g_red(x)`
    DisksPencil,
    /// `x·∏(x^p − i·y)`
    StarP1,
    /// `x^ε·y^ε′·∏(x^p − i·y^q)`
    StarPQ,
    /// `x·∏(x^p·y^q − i)`
    AnnuliPQ,
    /// `x·σ·∏(x^p·σ^q − i)`
    SigmaAnnuli,
    /// `x·σ^ε·∏(x^p − i·σ^q)`
    SigmaStar,
    /// `g_red(x)·(g(x)·y + 1)`
    LinearInY,
    /// `x·y·∏(x^p·y^q − i)`
    XYAnnuli,
    /// `g_red(x)·k(x)·(g(x)·y + 1)`
    LinearInYK,
}

impl CaseTag {
    pub const ALL: [CaseTag; 10] = [
        CaseTag::BothEmpty,
        CaseTag::DisksPencil,
        CaseTag::StarP1,
        CaseTag::StarPQ,
        CaseTag::AnnuliPQ,
        CaseTag::SigmaAnnuli,
        CaseTag::SigmaStar,
        CaseTag::LinearInY,
        CaseTag::XYAnnuli,
        CaseTag::LinearInYK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::BothEmpty => "BothEmpty",
            CaseTag::DisksPencil => "DisksPencil",
            CaseTag::StarP1 => "StarP1",
            CaseTag::StarPQ => "StarPQ",
            CaseTag::AnnuliPQ => "AnnuliPQ",
            CaseTag::SigmaAnnuli => "SigmaAnnuli",
            CaseTag::SigmaStar => "SigmaStar",
            CaseTag::LinearInY => "LinearInY",
            CaseTag::XYAnnuli => "XYAnnuli",
            CaseTag::LinearInYK => "LinearInYK",
        }
    }

    /// Whether the affine critical value set is `{0}` rather than empty.
    pub fn has_affine_critical_value(self) -> bool {
        matches!(
            self,
            CaseTag::DisksPencil | CaseTag::StarP1 | CaseTag::StarPQ | CaseTag::XYAnnuli | CaseTag::LinearInYK
        )
    }

    /// Whether `0` is a critical value at infinity.
    pub fn irregular_at_infinity(self) -> bool {
        !matches!(self, CaseTag::BothEmpty | CaseTag::DisksPencil | CaseTag::StarP1 | CaseTag::StarPQ)
    }

    fn uses_sigma(self) -> bool {
        matches!(self, CaseTag::SigmaAnnuli | CaseTag::SigmaStar)
    }

    fn linear_in_y(self) -> bool {
        matches!(self, CaseTag::LinearInY | CaseTag::LinearInYK)
    }

    fn uses_pq(self) -> bool {
        matches!(
            self,
            CaseTag::StarP1 | CaseTag::StarPQ | CaseTag::AnnuliPQ | CaseTag::SigmaAnnuli | CaseTag::SigmaStar | CaseTag::XYAnnuli
        )
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, ClassifyError> {
        CaseTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClassifyError::UnknownTag(s.to_string()))
    }
}

/// One member of a family, with optional coefficient data of the algebraic forms: `α_i` in
/// place of `i`, `σ = x^s·y + ℓ(x)` in place of `x^s·y + 1`, and `g(x)·y + h(x)` in place of
/// `g(x)·y + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormInstance {
    pub tag: CaseTag,
    pub p: u32,
    pub q: u32,
    pub s: u32,
    pub n: u32,
    pub n_prime: u32,
    pub eps: bool,
    pub eps_prime: bool,
    /// `m_1 ≤ … ≤ m_n`, exponents of `g(x) = ∏(x − α_i)^{m_i}`.
    pub m: Vec<u32>,
    pub alpha: Option<Vec<Rational>>,
    pub ell: Option<UnivariatePoly>,
    pub h: Option<UnivariatePoly>,
}

/// A violated constraint: the constraint text and the offending values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.constraint, self.detail)
    }
}

impl NormalFormInstance {
    /// Defaults `p = q = s = n = n′ = 1`, `ε = ε′ = 0`, `m_i = 1`, no coefficient data.
    pub fn new(tag: CaseTag) -> Self {
        NormalFormInstance {
            tag,
            p: 1,
            q: 1,
            s: 1,
            n: 1,
            n_prime: 1,
            eps: false,
            eps_prime: false,
            m: vec![1],
            alpha: None,
            ell: None,
            h: None,
        }
    }

    pub fn with_pq(mut self, p: u32, q: u32) -> Self {
        self.p = p;
        self.q = q;
        self
    }

    pub fn with_s(mut self, s: u32) -> Self {
        self.s = s;
        self
    }

    /// Sets `n` and resets `m` to `n` ones.
    pub fn with_n(mut self, n: u32) -> Self {
        self.n = n;
        self.m = vec![1; n as usize];
        self
    }

    pub fn with_n_prime(mut self, n_prime: u32) -> Self {
        self.n_prime = n_prime;
        self
    }

    pub fn with_eps(mut self, eps: bool, eps_prime: bool) -> Self {
        self.eps = eps;
        self.eps_prime = eps_prime;
        self
    }

    /// Sets `m` and `n = m.len()`.
    pub fn with_m(mut self, m: Vec<u32>) -> Self {
        self.n = m.len() as u32;
        self.m = m;
        self
    }

    pub fn with_alpha(mut self, alpha: Vec<Rational>) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_ell(mut self, ell: UnivariatePoly) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn with_h(mut self, h: UnivariatePoly) -> Self {
        self.h = Some(h);
        self
    }

    /// Parses `K=V` pairs: `p q s n n' eps eps'` as naturals, `m` and `alpha` as comma lists,
    /// `ell` and `h` as polynomials in `x`.
    pub fn from_params<S: AsRef<str>>(tag: CaseTag, params: &[S]) -> Result<Self, ClassifyError> {
        let mut out = NormalFormInstance::new(tag);
        let mut m = None;
        for kv in params {
            let kv = kv.as_ref();
            let (k, v) = kv.split_once('=').ok_or_else(|| ClassifyError::BadParameter(kv.to_string()))?;
            let bad = || ClassifyError::BadParameter(kv.to_string());
            let nat = || v.trim().parse::<u32>().map_err(|_| bad());
            let flag = || match v.trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(bad()),
            };
            match k.trim() {
                "p" => out.p = nat()?,
                "q" => out.q = nat()?,
                "s" => out.s = nat()?,
                "n" => out = out.with_n(nat()?),
                "n'" | "n_prime" | "nprime" => out.n_prime = nat()?,
                "eps" | "e" => out.eps = flag()?,
                "eps'" | "eps_prime" | "e'" => out.eps_prime = flag()?,
                "m" => {
                    let list: Result<Vec<u32>, _> = v.split(',').map(|x| x.trim().parse::<u32>()).collect();
                    m = Some(list.map_err(|_| bad())?);
                }
                "alpha" => {
                    let list: Option<Vec<Rational>> = v.split(',').map(|x| rational::parse(x.trim())).collect();
                    out.alpha = Some(list.ok_or_else(bad)?);
                }
                "ell" => out.ell = Some(univariate(v).ok_or_else(bad)?),
                "h" => out.h = Some(univariate(v).ok_or_else(bad)?),
                _ => return Err(bad()),
            }
        }
        if let Some(m) = m {
            out = out.with_m(m);
        }
        Ok(out)
    }

    /// The `K=V` parameters that determine the class, in a fixed order.
    pub fn class_params(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let b = |x: bool| if x { "1" } else { "0" }.to_string();
        match self.tag {
            CaseTag::BothEmpty => {}
            CaseTag::DisksPencil => out.push(("n", self.n.to_string())),
            CaseTag::StarPQ => {
                out.push(("eps", b(self.eps)));
                out.push(("eps'", b(self.eps_prime)));
            }
            CaseTag::SigmaStar => out.push(("eps", b(self.eps))),
            _ => {}
        }
        if self.tag.uses_sigma() {
            out.push(("s", self.s.to_string()));
        }
        if self.tag.uses_pq() {
            out.push(("p", self.p.to_string()));
            if self.tag != CaseTag::StarP1 {
                out.push(("q", self.q.to_string()));
            }
        }
        if self.tag.uses_pq() {
            out.push(("n", self.n.to_string()));
        }
        if self.tag.linear_in_y() {
            let m: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
            out.push(("m", m.join(",")));
        }
        if self.tag == CaseTag::LinearInYK {
            out.push(("n'", self.n_prime.to_string()));
        }
        out
    }

    /// The class in text form, e.g. `StarPQ eps=0 eps'=0 p=2 q=3 n=1`.
    pub fn class_key(&self) -> String {
        let mut s = self.tag.name().to_string();
        for (k, v) in self.class_params() {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }

    /// `α_i`, by default `i`.
    pub fn alphas(&self) -> Vec<Rational> {
        self.alpha.clone().unwrap_or_else(|| (1..=self.n as i64).map(int).collect())
    }

    /// `g(x) = ∏(x − α_i)^{m_i}`.
    pub fn g(&self) -> UnivariatePoly {
        self.alphas()
            .iter()
            .zip(&self.m)
            .fold(UnivariatePoly::one(), |acc, (a, &mi)| acc.mul(&UnivariatePoly::from_roots(&[a.clone()]).pow(mi)))
    }

    /// `g_red(x) = ∏(x − α_i)`.
    pub fn g_red(&self) -> UnivariatePoly {
        UnivariatePoly::from_roots(&self.alphas())
    }

    /// `k(x) = ∏_{i=1}^{n′}(x + i)`.
    pub fn k(&self) -> UnivariatePoly {
        let roots: Vec<Rational> = (1..=self.n_prime as i64).map(|i| int(-i)).collect();
        UnivariatePoly::from_roots(&roots)
    }

    fn ell_or_one(&self) -> UnivariatePoly {
        self.ell.clone().unwrap_or_else(UnivariatePoly::one)
    }

    fn h_or_one(&self) -> UnivariatePoly {
        self.h.clone().unwrap_or_else(UnivariatePoly::one)
    }

    /// `σ = x^s·y + ℓ(x)`.
    pub fn sigma(&self) -> BivariatePoly {
        BivariatePoly::monomial(Rational::one(), self.s, 1).add(&BivariatePoly::from_univariate_x(&self.ell_or_one()))
    }

    /// Every violated constraint, in a fixed order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut need = |ok: bool, constraint: &'static str, detail: String| {
            if !ok {
                out.push(Violation { constraint, detail });
            }
        };
        let (p, q, s, n) = (self.p, self.q, self.s, self.n);
        let pq = format!("p={p}, q={q}");
        match self.tag {
            CaseTag::BothEmpty => {}
            CaseTag::DisksPencil => need(n >= 1, "n ⩾ 1", format!("n={n}")),
            CaseTag::StarP1 => {
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(p >= 1, "p ⩾ 1", format!("p={p}"));
                need(p != 1 || n >= 2, "(if p=1 then n ⩾ 2)", format!("p={p}, n={n}"));
            }
            CaseTag::StarPQ => {
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(1 < p && p < q, "(1<p<q)", pq.clone());
                need(p.gcd(&q) == 1, "p and q … relatively prime", pq);
            }
            CaseTag::AnnuliPQ => {
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(p >= 1 && q >= 1, "p, q ⩾ 1", pq.clone());
                need(p.gcd(&q) == 1, "p and q … relatively prime", pq);
            }
            CaseTag::SigmaAnnuli => {
                need(s >= 1, "s > 0", format!("s={s}"));
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(p >= 1 && q >= 1, "p, q ⩾ 1", pq.clone());
                need(p > 1 || q > 1, "(p>1 or q>1)", pq.clone());
                need(p.gcd(&q) == 1, "p and q … relatively prime", pq);
            }
            CaseTag::SigmaStar => {
                need(s >= 1, "s > 0", format!("s={s}"));
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(p >= 1 && q >= 1, "p, q ⩾ 1", pq.clone());
                need(self.eps || q > 1, "(if ε = 0 then q > 1)", format!("ε=0, q={q}"));
                need(p.gcd(&q) == 1, "p and q … relatively prime", pq);
            }
            CaseTag::LinearInY => need(n > 1, "(n > 1)", format!("n={n}")),
            CaseTag::XYAnnuli => {
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(1 <= p && p < q, "(1⩽p<q)", pq.clone());
                need(p.gcd(&q) == 1, "p and q … relatively prime", pq);
            }
            CaseTag::LinearInYK => {
                need(n >= 1, "n ⩾ 1", format!("n={n}"));
                need(self.n_prime >= 1, "n′⩾ 1", format!("n'={}", self.n_prime));
            }
        }
        if self.tag.linear_in_y() {
            let m_ok = self.m.len() == n as usize && self.m.first().is_some_and(|&m1| m1 >= 1) && self.m.windows(2).all(|w| w[0] <= w[1]);
            need(m_ok, "1 ⩽ m₁⩽ m₂⩽ ⋯ ⩽ m_n", format!("n={n}, m={:?}", self.m));
        }
        if let Some(alpha) = &self.alpha {
            let distinct = alpha.iter().enumerate().all(|(i, a)| !alpha[..i].contains(a));
            let ok = self.tag != CaseTag::BothEmpty
                && alpha.len() == n as usize
                && distinct
                && (self.tag.linear_in_y() || self.tag == CaseTag::DisksPencil || alpha.iter().all(|a| !a.is_zero()));
            need(ok, "α_i distinct and non-zero", format!("alpha has {} entries for n={n}", alpha.len()));
            if self.tag == CaseTag::LinearInYK {
                let k = self.k();
                need(alpha.iter().all(|a| !k.eval(a).is_zero()), "g and k without common roots", String::new());
            }
        }
        if let Some(ell) = &self.ell {
            need(self.tag.uses_sigma(), "ℓ only for σ families", String::new());
            need(ell.is_zero() || ell.deg() < s as usize, "deg ℓ < s", format!("deg ℓ={}, s={s}", ell.deg()));
            need(s == 0 || !ell.coeff(0).is_zero(), "if s>0 then ℓ(0)≠0", format!("ℓ(0)={}", ell.coeff(0)));
        }
        if let Some(h) = &self.h {
            need(self.tag.linear_in_y(), "h only for g(x)y+h(x) families", String::new());
            let g = self.g();
            need(!h.is_zero() && h.deg() < g.deg(), "deg g > deg h", format!("deg h={}, deg g={}", h.deg(), g.deg()));
            need(self.alphas().iter().all(|a| !h.eval(a).is_zero()), "h(t) ≠ 0 if g(t)=0", String::new());
        }
        out
    }

    pub fn validate(&self) -> Result<(), ClassifyError> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(ClassifyError::InvalidParameters(v.iter().map(|x| x.to_string()).collect()))
        }
    }

    /// Irreducible factors of the emitted polynomial, in census order: disks first, then the
    /// remaining components (see the component census).
    pub fn factors_unchecked(&self) -> Vec<BivariatePoly> {
        let x = BivariatePoly::x;
        let y = BivariatePoly::y;
        let c = |r: &Rational| BivariatePoly::constant(r.clone());
        let lines = |roots: &[Rational]| -> Vec<BivariatePoly> { roots.iter().map(|a| x().sub(&c(a))).collect() };
        let (p, q) = (self.p, self.q);
        let alphas = self.alphas();
        let sigma = self.sigma();
        let mut out = Vec::new();
        match self.tag {
            CaseTag::BothEmpty => out.push(x()),
            CaseTag::DisksPencil => {
                out.push(y());
                out.extend(lines(&alphas));
            }
            CaseTag::StarP1 => {
                out.push(x());
                out.extend(alphas.iter().map(|a| x().pow(p).sub(&y().scale(a))));
            }
            CaseTag::StarPQ => {
                if self.eps {
                    out.push(x());
                }
                if self.eps_prime {
                    out.push(y());
                }
                out.extend(alphas.iter().map(|a| x().pow(p).sub(&y().pow(q).scale(a))));
            }
            CaseTag::AnnuliPQ => {
                out.push(x());
                out.extend(alphas.iter().map(|a| x().pow(p).mul(&y().pow(q)).sub(&c(a))));
            }
            CaseTag::SigmaAnnuli => {
                out.push(x());
                out.push(sigma.clone());
                let base = x().pow(p).mul(&sigma.pow(q));
                out.extend(alphas.iter().map(|a| base.sub(&c(a))));
            }
            CaseTag::SigmaStar => {
                out.push(x());
                if self.eps {
                    out.push(sigma.clone());
                }
                let sq = sigma.pow(q);
                out.extend(alphas.iter().map(|a| x().pow(p).sub(&sq.scale(a))));
            }
            CaseTag::XYAnnuli => {
                out.push(x());
                out.push(y());
                out.extend(alphas.iter().map(|a| x().pow(p).mul(&y().pow(q)).sub(&c(a))));
            }
            CaseTag::LinearInY | CaseTag::LinearInYK => {
                out.extend(lines(&alphas));
                if self.tag == CaseTag::LinearInYK {
                    let ks: Vec<Rational> = (1..=self.n_prime as i64).map(|i| int(-i)).collect();
                    out.extend(lines(&ks));
                }
                let g = BivariatePoly::from_univariate_x(&self.g());
                out.push(g.mul(&y()).add(&BivariatePoly::from_univariate_x(&self.h_or_one())));
            }
        }
        out
    }

    /// The product of the factors, without checking the parameters.
    pub fn expand_unchecked(&self) -> BivariatePoly {
        self.factors_unchecked().iter().fold(BivariatePoly::one(), |acc, f| acc.mul(f))
    }

    pub fn factors(&self) -> Result<Vec<BivariatePoly>, ClassifyError> {
        self.validate()?;
        Ok(self.factors_unchecked())
    }
}

/// Rejects instances with violations.
pub fn validate_params(instance: &NormalFormInstance) -> Result<(), Vec<Violation>> {
    let v = instance.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// The expanded polynomial of a valid instance.
pub fn emit_polynomial(instance: &NormalFormInstance) -> Result<BivariatePoly, ClassifyError> {
    instance.validate()?;
    Ok(instance.expand_unchecked())
}

fn univariate(text: &str) -> Option<UnivariatePoly> {
    parse_poly(text).ok()?.as_univariate_x()
}

impl fmt::Display for NormalFormInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.class_key())?;
        if let Some(a) = &self.alpha {
            let a: Vec<String> = a.iter().map(rational::to_text).collect();
            write!(f, " alpha={}", a.join(","))?;
        }
        if let Some(l) = &self.ell {
            write!(f, " ell={}", l.fmt_var("x"))?;
        }
        if let Some(h) = &self.h {
            write!(f, " h={}", h.fmt_var("x"))?;
        }
        Ok(())
    }
}

/// Every valid instance with `n, n′ ≤ 3`, `p, q ≤ 4`, `s ≤ 3`, `m_i ≤ 2`, and `α_i = i`,
/// `ℓ = h = 1`.
pub fn bounded_grid() -> Vec<NormalFormInstance> {
    let mut out = Vec::new();
    let ms: Vec<Vec<u32>> = (1..=3u32)
        .flat_map(|n| (0..=n).map(move |twos| (0..n).map(|i| if i < n - twos { 1 } else { 2 }).collect()))
        .collect();
    for tag in CaseTag::ALL {
        let base = NormalFormInstance::new(tag);
        let mut cands = Vec::new();
        match tag {
            CaseTag::BothEmpty => cands.push(base),
            CaseTag::LinearInY => cands.extend(ms.iter().map(|m| base.clone().with_m(m.clone()))),
            CaseTag::LinearInYK => {
                for m in &ms {
                    for np in 1..=3 {
                        cands.push(base.clone().with_m(m.clone()).with_n_prime(np));
                    }
                }
            }
            CaseTag::DisksPencil => cands.extend((1..=3).map(|n| base.clone().with_n(n))),
            _ => {
                let ss: &[u32] = if tag.uses_sigma() { &[1, 2, 3] } else { &[1] };
                let eps: &[(bool, bool)] = match tag {
                    CaseTag::StarPQ => &[(false, false), (true, false), (false, true), (true, true)],
                    CaseTag::SigmaStar => &[(false, false), (true, false)],
                    _ => &[(false, false)],
                };
                for &s in ss {
                    for &(e, e2) in eps {
                        for n in 1..=3 {
                            for p in 1..=4 {
                                let qs: Vec<u32> = if tag == CaseTag::StarP1 { vec![1] } else { (1..=4).collect() };
                                for q in qs {
                                    cands.push(base.clone().with_s(s).with_eps(e, e2).with_n(n).with_pq(p, q));
                                }
                            }
                        }
                    }
                }
            }
        }
        out.extend(cands.into_iter().filter(|c| c.violations().is_empty()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn poly(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    fn quotes(i: &NormalFormInstance) -> Vec<&'static str> {
        i.violations().iter().map(|v| v.constraint).collect()
    }

    #[test]
    fn validation_examples() {
        let star = NormalFormInstance::new(CaseTag::StarP1).with_pq(1, 1).with_n(1);
        assert_eq!(quotes(&star), vec!["(if p=1 then n ⩾ 2)"]);
        let sigma = NormalFormInstance::new(CaseTag::SigmaStar).with_eps(false, false).with_pq(1, 1);
        assert_eq!(quotes(&sigma), vec!["(if ε = 0 then q > 1)"]);
        let xy = NormalFormInstance::new(CaseTag::XYAnnuli).with_pq(1, 2).with_n(1);
        assert_eq!(validate_params(&xy), Ok(()));
    }

    #[test]
    fn every_constraint_is_reported() {
        let i = NormalFormInstance::new(CaseTag::StarPQ).with_pq(2, 4);
        assert_eq!(quotes(&i), vec!["p and q … relatively prime"]);
        let i = NormalFormInstance::new(CaseTag::StarPQ).with_pq(3, 2);
        assert_eq!(quotes(&i), vec!["(1<p<q)"]);
        assert_eq!(quotes(&NormalFormInstance::new(CaseTag::SigmaAnnuli)), vec!["(p>1 or q>1)"]);
        assert_eq!(quotes(&NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![2])), vec!["(n > 1)"]);
        assert_eq!(quotes(&NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![2, 1])), vec!["1 ⩽ m₁⩽ m₂⩽ ⋯ ⩽ m_n"]);
        assert_eq!(quotes(&NormalFormInstance::new(CaseTag::LinearInYK).with_n_prime(0)), vec!["n′⩾ 1"]);
        assert_eq!(quotes(&NormalFormInstance::new(CaseTag::XYAnnuli).with_pq(2, 1)), vec!["(1⩽p<q)"]);
        let ell = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_pq(1, 2).with_s(1).with_ell(UnivariatePoly::from_i64s(&[1, 1]));
        assert_eq!(quotes(&ell), vec!["deg ℓ < s"]);
        let ell0 = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_pq(1, 2).with_s(2).with_ell(UnivariatePoly::from_i64s(&[0, 1]));
        assert_eq!(quotes(&ell0), vec!["if s>0 then ℓ(0)≠0"]);
        let lin = NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![1, 1]);
        assert_eq!(quotes(&lin.clone().with_h(UnivariatePoly::from_i64s(&[1, 1, 1]))), vec!["deg g > deg h"]);
        assert_eq!(quotes(&lin.with_h(UnivariatePoly::from_i64s(&[-1, 1]))), vec!["h(t) ≠ 0 if g(t)=0"]);
    }

    #[test]
    fn emission_examples() {
        let sig = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(2).with_pq(1, 1).with_n(1);
        assert_eq!(sig.expand_unchecked(), poly("x*(x^2*y+1)*(x*(x^2*y+1)-1)"));
        // p = q = 1 is outside the family
        assert!(matches!(emit_polynomial(&sig), Err(ClassifyError::InvalidParameters(_))));
        let lin = NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![2, 1]);
        assert_eq!(lin.expand_unchecked(), poly("(x-1)*(x-2)*((x-1)^2*(x-2)*y+1)"));
        let lin = NormalFormInstance::new(CaseTag::LinearInY).with_m(vec![1, 2]);
        assert_eq!(emit_polynomial(&lin).unwrap(), poly("(x-1)*(x-2)*((x-1)*(x-2)^2*y+1)"));
        let cusp = NormalFormInstance::new(CaseTag::StarPQ).with_pq(2, 3);
        assert_eq!(emit_polynomial(&cusp).unwrap(), poly("x^2 - y^3"));
        let figure = NormalFormInstance::new(CaseTag::AnnuliPQ).with_pq(2, 1).with_alpha(vec![int(-1)]);
        assert_eq!(emit_polynomial(&figure).unwrap(), poly("x*(x^2*y+1)"));
    }

    #[test]
    fn parameters_parse() {
        let i = NormalFormInstance::from_params(CaseTag::LinearInYK, &["m=1,2", "n'=2", "h=2"]).unwrap();
        assert_eq!(i.n, 2);
        assert_eq!(i.m, vec![1, 2]);
        assert_eq!(i.n_prime, 2);
        assert_eq!(i.h, Some(UnivariatePoly::constant(int(2))));
        let a = NormalFormInstance::from_params(CaseTag::AnnuliPQ, &["n=2", "alpha=1/2,-3"]).unwrap();
        assert_eq!(a.alphas(), vec![frac(1, 2), int(-3)]);
        assert!(NormalFormInstance::from_params(CaseTag::AnnuliPQ, &["z=1"]).is_err());
        assert_eq!("sigmaannuli".parse::<CaseTag>().unwrap(), CaseTag::SigmaAnnuli);
        assert!("Nope".parse::<CaseTag>().is_err());
    }

    #[test]
    fn class_keys() {
        let i = NormalFormInstance::new(CaseTag::StarPQ).with_pq(2, 3);
        assert_eq!(i.class_key(), "StarPQ eps=0 eps'=0 p=2 q=3 n=1");
        let d = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(2).with_pq(1, 2).with_n(1);
        assert_eq!(d.class_key(), "SigmaAnnuli s=2 p=1 q=2 n=1");
        assert!(!NormalFormInstance::new(CaseTag::SigmaAnnuli).with_n(0).violations().is_empty());
    }

    #[test]
    fn grid_is_valid_and_distinct() {
        let grid = bounded_grid();
        let mut keys: Vec<String> = grid.iter().map(|i| i.class_key()).collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), before);
        for tag in CaseTag::ALL {
            assert!(grid.iter().any(|i| i.tag == tag), "{tag}");
        }
    }
}

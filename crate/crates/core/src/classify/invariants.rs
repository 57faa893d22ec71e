//! Coordinate-free invariants of a reduced curve: branches at infinity, their intersection
//! numbers (with each other and with the line at infinity), and the component census.

use std::fmt;

use num_traits::Zero;

use super::{CaseTag, NormalFormInstance};
use crate::bifurcation::{common_point_count, component_census, rational_common_points, ComponentCensus, ComponentType};
use crate::error::ClassifyError;
use crate::graph::split_components;
use crate::infinity::{branch_data_at_infinity, pairwise_multiplicities};
use crate::poly::BivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchInvariant {
    pub n: u32,
    pub characteristic_exponents: Vec<u32>,
    /// Intersection number with the line at infinity.
    pub line: u32,
}

/// One point at infinity, without its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointInvariant {
    /// One entry per branch over `C`, sorted.
    pub branches: Vec<BranchInvariant>,
    /// Intersection numbers of all pairs of distinct branches, sorted.
    pub multiplicities: Vec<u64>,
}

/// The part of an invariant tuple that equality compares.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopologicalKey {
    /// Sorted.
    pub points: Vec<PointInvariant>,
    /// All pairwise intersection numbers at all points, with the line at infinity included as a
    /// germ; sorted.
    pub multiplicities: Vec<u64>,
    /// Components and junctions both sorted.
    pub census: ComponentCensus,
}

/// Invariants of a curve, tagged with the family it was built from when known. Equality ignores
/// the tag.
#[derive(Debug, Clone)]
pub struct InvariantTuple {
    pub tag: Option<CaseTag>,
    pub key: TopologicalKey,
}

impl PartialEq for InvariantTuple {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for InvariantTuple {}

fn sorted_census(mut c: ComponentCensus) -> ComponentCensus {
    c.components.sort();
    c.junctions.sort();
    c
}

/// Census recomputed from the components: puncture counts from branches at infinity; junction
/// sizes at rational meeting points by counting components, and every other meeting point taken
/// as a crossing of two.
pub fn computed_census(comps: &[BivariatePoly]) -> Result<ComponentCensus, ClassifyError> {
    let mut components = Vec::new();
    for c in comps {
        components.push(ComponentType::from_punctures(branch_data_at_infinity(c)?.punctures()));
    }
    let mut points = Vec::new();
    let mut junctions = Vec::new();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            let rational = rational_common_points(a, b);
            for _ in rational.len()..common_point_count(a, b) {
                junctions.push(2);
            }
            points.extend(rational);
        }
    }
    points.sort();
    points.dedup();
    for (x, y) in &points {
        junctions.push(comps.iter().filter(|c| c.eval(x, y).is_zero()).count() as u32);
    }
    Ok(sorted_census(ComponentCensus { components, junctions }))
}

fn key_at_infinity(f: &BivariatePoly, census: ComponentCensus) -> Result<TopologicalKey, ClassifyError> {
    let data = branch_data_at_infinity(f)?;
    let mut points = Vec::new();
    let mut all = Vec::new();
    for pb in &data.points {
        let mut branches = Vec::new();
        let mut mults = pairwise_multiplicities(&pb.branches)?;
        for s in pb.summaries() {
            for _ in 0..s.conjugates {
                let line = s.line_multiplicity;
                branches.push(BranchInvariant { n: s.n, characteristic_exponents: s.characteristic_exponents.clone(), line });
                mults.push(line as u64);
            }
        }
        branches.sort();
        mults.sort();
        all.extend(mults.iter().copied());
        points.push(PointInvariant { branches, multiplicities: mults });
    }
    points.sort();
    all.sort();
    Ok(TopologicalKey { points, multiplicities: all, census: sorted_census(census) })
}

/// Invariants of a valid instance; the census is the closed form.
pub fn invariant_tuple(instance: &NormalFormInstance) -> Result<InvariantTuple, ClassifyError> {
    instance.validate()?;
    let census = component_census(instance)?;
    let f = instance.expand_unchecked();
    Ok(InvariantTuple { tag: Some(instance.tag), key: key_at_infinity(&f, census)? })
}

/// Invariants of an arbitrary reduced product; the census is recomputed.
pub fn invariants_of_factors(factors: &[BivariatePoly]) -> Result<InvariantTuple, ClassifyError> {
    let comps = split_components(factors)?;
    let census = computed_census(&comps)?;
    let f = comps.iter().fold(BivariatePoly::one(), |acc, g| acc.mul(g));
    Ok(InvariantTuple { tag: None, key: key_at_infinity(&f, census)? })
}

/// Equality of invariant tuples.
pub fn topo_equivalent(a: &NormalFormInstance, b: &NormalFormInstance) -> Result<bool, ClassifyError> {
    Ok(invariant_tuple(a)? == invariant_tuple(b)?)
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Some(t) => writeln!(f, "tag {t}")?,
            None => writeln!(f, "tag -")?,
        }
        for (i, p) in self.key.points.iter().enumerate() {
            writeln!(f, "point {i}")?;
            for b in &p.branches {
                writeln!(f, "  branch n={} exponents=[{}] line={}", b.n, list(&b.characteristic_exponents), b.line)?;
            }
            writeln!(f, "  multiplicities [{}]", list(&p.multiplicities))?;
        }
        writeln!(f, "multiplicities [{}]", list(&self.key.multiplicities))?;
        write!(f, "census {}", self.key.census)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_factors, parse_poly};
    use crate::upoly::UnivariatePoly;

    fn contains_all(haystack: &[u64], needles: &[u64]) -> bool {
        let mut rest = haystack.to_vec();
        needles.iter().all(|n| match rest.iter().position(|x| x == n) {
            Some(i) => {
                rest.remove(i);
                true
            }
            None => false,
        })
    }

    #[test]
    fn sigma_annuli_closed_forms() {
        let inst = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(1).with_pq(2, 3).with_n(2);
        let t = invariant_tuple(&inst).unwrap();
        // s+1, p+q(s+1), s(p+q(s+1)), (p+qs)(p+q(s+1)), q(p+q(s+1))
        assert!(contains_all(&t.key.multiplicities, &[2, 8, 8, 40, 24]), "{t}");
    }

    #[test]
    fn both_empty() {
        let t = invariant_tuple(&NormalFormInstance::new(CaseTag::BothEmpty)).unwrap();
        assert_eq!(t.key.points.len(), 1);
        assert_eq!(t.key.points[0].branches, vec![BranchInvariant { n: 1, characteristic_exponents: vec![], line: 1 }]);
        assert!(t.key.points[0].multiplicities.iter().all(|&m| m == 1));
        assert_eq!(t.key.census.components, vec![ComponentType::Disk]);
        assert_eq!(t.key.multiplicities, vec![1]);
    }

    #[test]
    fn coefficients_do_not_matter() {
        let base = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(2).with_pq(1, 2).with_n(1);
        let shifted = base.clone().with_ell(UnivariatePoly::from_i64s(&[1, 1]));
        assert!(topo_equivalent(&base, &shifted).unwrap());
        let s1 = NormalFormInstance::new(CaseTag::SigmaAnnuli).with_s(1).with_pq(1, 2).with_n(1);
        assert!(!topo_equivalent(&base, &s1).unwrap());
        let a = NormalFormInstance::new(CaseTag::StarPQ).with_pq(2, 3);
        let b = NormalFormInstance::new(CaseTag::StarPQ).with_pq(2, 5);
        assert!(!topo_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn computed_census_matches_closed_form_on_examples() {
        for inst in [
            NormalFormInstance::new(CaseTag::StarP1).with_pq(1, 1).with_n(2),
            NormalFormInstance::new(CaseTag::XYAnnuli).with_pq(1, 2).with_n(1),
            NormalFormInstance::new(CaseTag::LinearInYK).with_n_prime(2),
        ] {
            let c = computed_census(&split_components(&inst.factors_unchecked()).unwrap()).unwrap();
            assert_eq!(c, sorted_census(component_census(&inst).unwrap()), "{inst}");
        }
    }

    #[test]
    fn input_tuples_match_instance_tuples() {
        let inst = NormalFormInstance::new(CaseTag::AnnuliPQ).with_pq(2, 1);
        let from_input = invariants_of_factors(&parse_factors("x*(x^2*y+x+1)").unwrap()).unwrap();
        assert_eq!(from_input, invariant_tuple(&inst).unwrap());
        let single = invariants_of_factors(&[parse_poly("x^3*y + x").unwrap()]).unwrap();
        assert_eq!(single, from_input);
    }
}

//! Topology of the zero fiber of a normal form: component types and how they meet.

use std::fmt;

use crate::classify::{CaseTag, NormalFormInstance};
use crate::error::BifurcationError;
use crate::infinity::branch_data_at_infinity;

/// A smooth rational affine curve, up to homeomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentType {
    Disk,
    Annulus,
    /// A sphere with `r ≥ 3` punctures.
    PuncturedSphere(u32),
}

impl ComponentType {
    /// Panics on `r = 0`.
    pub fn from_punctures(r: u32) -> Self {
        match r {
            0 => panic!("an affine curve has at least one puncture"),
            1 => ComponentType::Disk,
            2 => ComponentType::Annulus,
            r => ComponentType::PuncturedSphere(r),
        }
    }

    pub fn punctures(self) -> u32 {
        match self {
            ComponentType::Disk => 1,
            ComponentType::Annulus => 2,
            ComponentType::PuncturedSphere(r) => r,
        }
    }

    /// `2 − r`.
    pub fn chi(self) -> i64 {
        2 - self.punctures() as i64
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::Disk => f.write_str("Disk"),
            ComponentType::Annulus => f.write_str("Annulus"),
            ComponentType::PuncturedSphere(r) => write!(f, "PuncturedSphere({r})"),
        }
    }
}

/// Components of the zero fiber, and for each point where several of them meet, the number of
/// components through it (all meetings are between smooth branches of distinct components).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentCensus {
    pub components: Vec<ComponentType>,
    /// Ascending.
    pub junctions: Vec<u32>,
}

impl ComponentCensus {
    pub fn punctures(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.punctures()).collect()
    }

    /// `Σ χ(C_i) − Σ_junctions (k − 1)`.
    pub fn chi(&self) -> i64 {
        let parts: i64 = self.components.iter().map(|c| c.chi()).sum();
        let glued: i64 = self.junctions.iter().map(|&k| k as i64 - 1).sum();
        parts - glued
    }
}

impl fmt::Display for ComponentCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let junctions: Vec<String> = self.junctions.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}] junctions=[{}] chi={}", comps.join(", "), junctions.join(","), self.chi())
    }
}

/// Closed-form census, components in the order of the instance's factors.
pub fn component_census(instance: &NormalFormInstance) -> Result<ComponentCensus, BifurcationError> {
    instance
        .validate()
        .map_err(|e| BifurcationError::InvalidParameters(e.to_string()))?;
    let n = instance.n;
    let rep = |r: u32, k: u32| std::iter::repeat(r).take(k as usize);
    let (punct, junctions): (Vec<u32>, Vec<u32>) = match instance.tag {
        CaseTag::BothEmpty => (vec![1], vec![]),
        // n lines crossing y = 0 once each
        CaseTag::DisksPencil => (rep(1, n + 1).collect(), rep(2, n).collect()),
        // all components through the origin
        CaseTag::StarP1 => (rep(1, n + 1).collect(), vec![n + 1]),
        CaseTag::StarPQ => {
            let k = n + instance.eps as u32 + instance.eps_prime as u32;
            (rep(1, k).collect(), if k >= 2 { vec![k] } else { vec![] })
        }
        CaseTag::AnnuliPQ => (std::iter::once(1).chain(rep(2, n)).collect(), vec![]),
        CaseTag::SigmaAnnuli => (std::iter::once(1).chain(rep(2, n + 1)).collect(), vec![]),
        CaseTag::SigmaStar => (std::iter::once(1).chain(rep(2, n + instance.eps as u32)).collect(), vec![]),
        // n parallel lines, and a curve with one end over each line and one more
        CaseTag::LinearInY => (rep(1, n).chain(std::iter::once(n + 1)).collect(), vec![]),
        // the axes cross once; annuli are disjoint from both
        CaseTag::XYAnnuli => (rep(1, 2).chain(rep(2, n)).collect(), vec![2]),
        // each line x = −i meets the last component once
        CaseTag::LinearInYK => {
            let np = instance.n_prime;
            (rep(1, n + np).chain(std::iter::once(n + 1)).collect(), rep(2, np).collect())
        }
    };
    Ok(ComponentCensus { components: punct.into_iter().map(ComponentType::from_punctures).collect(), junctions })
}

/// Recounts each factor's ends from its branches at infinity and compares with the closed form;
/// components are taken to be smooth and rational, so `χ = 2 − punctures`.
pub fn census_oracle_check(instance: &NormalFormInstance) -> Result<bool, BifurcationError> {
    let census = component_census(instance)?;
    let factors = instance.factors_unchecked();
    census_matches(&census, &factors)
}

/// Whether `census` lists, in order, the puncture counts of `factors`.
pub fn census_matches(census: &ComponentCensus, factors: &[crate::BivariatePoly]) -> Result<bool, BifurcationError> {
    if factors.len() != census.components.len() {
        return Ok(false);
    }
    for (f, c) in factors.iter().zip(&census.components) {
        if branch_data_at_infinity(f)?.punctures() != c.punctures() {
            return Ok(false);
        }
    }
    Ok(true)
}

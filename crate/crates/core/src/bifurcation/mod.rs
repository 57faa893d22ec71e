//! Critical values, Euler characteristic identities and component censuses of zero fibers.

mod census;
mod values;

use std::collections::BTreeSet;

use crate::error::BifurcationError;
use crate::rational::{to_text, Rational};

pub use census::{census_oracle_check, component_census, ComponentCensus, ComponentType};
pub use values::{affine_critical_values, ValueSet};
pub(crate) use values::{common_point_count, rational_common_points};

/// `1 − χ_gen = Σ_c (χ_c − χ_gen)` over the irregular values `c`, whose fibers have
/// characteristic `χ_c`.
pub fn suzuki_check(chi_gen: i64, irregular: &[(Rational, i64)]) -> Result<bool, BifurcationError> {
    let mut seen = BTreeSet::new();
    for (c, _) in irregular {
        if !seen.insert(c) {
            return Err(BifurcationError::DuplicateValue(to_text(c)));
        }
    }
    let jumps: i64 = irregular.iter().map(|(_, chi)| chi - chi_gen).sum();
    Ok(1 - chi_gen == jumps)
}

/// Local multiplicities of a branched covering over one base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub point: Rational,
    /// One entry `ν ≥ 1` per preimage.
    pub multiplicities: Vec<u32>,
}

/// A covering of degree `degree`; base points not listed are unramified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    pub degree: u32,
    pub fibers: Vec<Fiber>,
}

impl RamificationProfile {
    /// Every listed fiber has multiplicities `≥ 1` summing to the degree, which is
    /// `Σ(ν − 1) = n − #preimages`; base points are distinct.
    pub fn validate(&self) -> Result<(), BifurcationError> {
        let mut seen = BTreeSet::new();
        for fib in &self.fibers {
            if !seen.insert(&fib.point) {
                return Err(BifurcationError::InvalidProfile(format!("point {} listed twice", to_text(&fib.point))));
            }
            if fib.multiplicities.contains(&0) {
                return Err(BifurcationError::InvalidProfile(format!("zero multiplicity over {}", to_text(&fib.point))));
            }
            let total: u32 = fib.multiplicities.iter().sum();
            if total != self.degree {
                return Err(BifurcationError::InvalidProfile(format!(
                    "multiplicities over {} sum to {total}, degree is {}",
                    to_text(&fib.point),
                    self.degree
                )));
            }
        }
        Ok(())
    }

    /// `Σ(ν − 1)` over all preimages.
    pub fn ramification(&self) -> u32 {
        self.fibers.iter().map(|f| self.degree - f.multiplicities.len() as u32).sum()
    }
}

/// `χ` of the cover: `n·χ_base − Σ(ν − 1)`.
pub fn riemann_hurwitz_chi(profile: &RamificationProfile, chi_base: i64) -> Result<i64, BifurcationError> {
    profile.validate()?;
    Ok(profile.degree as i64 * chi_base - profile.ramification() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn suzuki_examples() {
        assert_eq!(suzuki_check(1, &[]), Ok(true));
        assert_eq!(suzuki_check(-1, &[(int(0), 1)]), Ok(true));
        assert_eq!(suzuki_check(0, &[(int(0), 0)]), Ok(false));
        assert!(matches!(suzuki_check(0, &[(int(0), 1), (int(0), 0)]), Err(BifurcationError::DuplicateValue(_))));
    }

    #[test]
    fn riemann_hurwitz_examples() {
        let unramified = RamificationProfile { degree: 1, fibers: vec![] };
        for j in 0..4 {
            assert_eq!(riemann_hurwitz_chi(&unramified, 1 - j), Ok(1 - j));
        }
        let double = RamificationProfile { degree: 2, fibers: vec![Fiber { point: int(0), multiplicities: vec![2] }] };
        assert_eq!(riemann_hurwitz_chi(&double, 1), Ok(1));
        let bad = RamificationProfile { degree: 3, fibers: vec![Fiber { point: int(0), multiplicities: vec![2] }] };
        assert!(matches!(riemann_hurwitz_chi(&bad, 1), Err(BifurcationError::InvalidProfile(_))));
        let zero = RamificationProfile { degree: 1, fibers: vec![Fiber { point: int(1), multiplicities: vec![0, 1] }] };
        assert!(matches!(riemann_hurwitz_chi(&zero, 1), Err(BifurcationError::InvalidProfile(_))));
    }
}

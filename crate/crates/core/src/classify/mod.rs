//! Normal forms of reduced polynomials with one critical value and their invariants.

mod instance;
mod invariants;
mod recognize;

pub use instance::{bounded_grid, emit_polynomial, validate_params, CaseTag, NormalFormInstance, Violation};
pub use invariants::{
    computed_census, invariant_tuple, invariants_of_factors, topo_equivalent, BranchInvariant, InvariantTuple, PointInvariant,
    TopologicalKey,
};
pub use recognize::{
    class_candidates, classify, classify_factors, degree_and_components, normalize_linear_in_y, recognize, recognize_detailed,
    ClassificationReport, Evidence, Outcome, Recognition,
};

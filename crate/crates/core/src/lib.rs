//! Exact polynomial algebra, local analysis at infinity and resolution graphs for plane curves.

pub mod automorphism;
pub mod bifurcation;
pub mod classify;
pub mod error;
pub mod field;
pub mod graph;
pub mod homog;
pub mod infinity;
pub mod intersect;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod series;
pub mod upoly;

pub use error::{BifurcationError, ClassifyError, GraphError, IntersectError, LocalError, PolyError, ResolveError};
pub use parse::{parse_factors, parse_poly, ParseError};
pub use poly::BivariatePoly;
pub use rational::Rational;
pub use upoly::UnivariatePoly;
pub use automorphism::{apply_automorphism, Generator, TameAutomorphism};
pub use homog::{homogenize, Chart, HomogeneousPoly};

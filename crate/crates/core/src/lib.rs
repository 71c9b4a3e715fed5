//! Exact Alexander invariants of finitely presented groups and mechanical
//! checks of the theorems relating them to 3-manifold topology.

pub mod alexander;
pub mod corpus;
pub mod covers;
pub mod error;
mod json;
pub mod laurent;
mod par;
pub mod presentation;
pub mod verify;

pub use alexander::{
    alexander_polynomial, full_report, AlexanderMatrix, AlexanderPolynomial, Convention,
    InvariantReport,
};
pub use error::{Error, ParseError, Result};
pub use laurent::{parse_poly, LaurentPoly, MonomialUnit, SymmetryClass, SymmetryKind};
pub use presentation::{abelianize, parse_presentation, Presentation, Word};

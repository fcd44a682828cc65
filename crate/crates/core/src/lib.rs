//! Noncommutative algebras `Q_n` and their quotients `Q(F)` attached to
//! simplicial complexes, with exact verification of their identities by
//! degree-truncated ideal linear algebra over ℚ.

pub mod complexes;
pub mod error;
pub mod expr;
pub mod free_algebra;
pub mod presentations;
pub mod quotient;
pub mod verifier;

pub use complexes::{Complex, Graph, NodeSet};
pub use error::{Error, Result};
pub use expr::parse_polynomial;
pub use free_algebra::{enumerate_monomials, GeneratorSymbol, Monomial, Polynomial, Rational};
pub use presentations::{graph_presentation, qf_presentation, qn_presentation, Presentation, QnForm};
pub use quotient::{
    graded_dimension, graded_dimension_with_order, ideal_contains, quotient_basis, truncated_ideal_basis, SymbolOrder,
    TruncatedIdealBasis,
};
pub use verifier::{run_all, CheckKind, ReportEntry, RunConfig, VerificationReport};

//! Exact first homology of finite cyclic covers of line-arrangement
//! boundary manifolds.
//!
//! The pipeline: a marked arrangement (line count plus multiple-point
//! multiplicities) determines a boundary-manifold group presentation; a
//! weight system on that presentation specializes the Fox-calculus
//! Alexander matrix to one Laurent-polynomial variable; substituting the
//! N-by-N cyclic companion matrix for the variable produces integer chain
//! maps whose Smith normal form gives H_1 of the N-fold cyclic cover
//! exactly. Field Betti numbers, torsion certificates, Alexander-polynomial
//! divisor checks, and an independent Reidemeister-Schreier oracle are
//! layered on top.
//!
//! All arithmetic is exact: arbitrary-precision integers, rationals, or
//! prime fields. Nothing here is numerical.

pub mod arrangement;
pub mod cover;
pub mod error;
pub mod field;
pub mod fox;
pub mod fpoly;
pub mod laurent;
pub mod matrix;
pub mod quotient;
pub mod schreier;
pub mod snf;

pub use arrangement::{
    alexander_divisor, diagonal_form, direct_alexander, williams_parameters, ArrangementCharacter,
    CharMode, MarkedArrangement,
};
pub use cover::{
    betti_bound, build_complex, certify, cover_field_betti, divisor_check, h1_cover, Certificate,
    CoverChainComplex, CoverHomologyReport, DivisorFieldCheck, DivisorReport, Verdict,
};
pub use error::Error;
pub use field::FieldSelector;
pub use fox::{fox_derivative, fox_matrix, validate_character, Character, Presentation, Word};
pub use laurent::LaurentPoly;
pub use matrix::{companion, lemma_rank, IntMatrix, LaurentMatrix, Matrix};
pub use quotient::{poly_kernel_and_snf, IntPolyRepr, PolyQuotient};
pub use schreier::{oracle_h1, schreier_presentation, CosetTable};
pub use snf::SmithForm;

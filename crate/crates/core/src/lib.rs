//! Exact-arithmetic engine for nonsymmetric Macdonald polynomials, scalar and
//! vector-valued, built by walking a Yang-Baxter graph.
//!
//! The crate works over the field Q(q,t) represented by reduced fractions of
//! integer-coefficient polynomials, so every identity it checks is checked
//! exactly. The main layers, bottom to top:
//!
//! * [`qt`] — the coefficient field Q(q,t), substitution q -> t^e and exact
//!   evaluation at rational points;
//! * [`combinat`] — compositions, partitions, rank vectors and partial orders;
//! * [`tableaux`] — reverse standard Young tableaux and their content vectors;
//! * [`hecke`] — the seminormal Hecke-algebra module on a shape, with
//!   Jucys-Murphy elements and the diagonal form on the module;
//! * [`poly`] — the polynomial module P (x) V and the Hecke, shift, Cherednik
//!   and Dunkl operators acting on it;
//! * [`graph`] — construction of the Macdonald basis along graph steps;
//! * [`form`] — closed-form norms, the symmetric bilinear form, adjointness
//!   machinery and the positivity-region classifier;
//! * [`singular`] — certification of singular polynomials on the boundary
//!   curves q = t^(+-h).

pub mod combinat;
pub mod form;
pub mod graph;
pub mod hecke;
pub mod linalg;
pub mod poly;
pub mod qt;
pub mod singular;
pub mod tableaux;

pub use qt::{Scalar, TScalar};

/// Errors shared across the crate. Variants mirror the failure modes of the
/// public operations; programming-contract violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("u(z) has a pole at z = 1")]
    PoleAtOne,
    #[error("denominator vanishes identically on the curve q = t^{0}")]
    IdenticallyZeroDenominator(i64),
    #[error("denominator is zero at the evaluation point")]
    DenominatorZeroAtPoint,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("operator image is not divisible by the required variable")]
    NotDivisible,
    #[error("parameters are not generic: {0}")]
    NonGenericParameters(String),
    #[error("reduction operator A[{0}][{0}] is singular")]
    SingularAii(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("coefficient has a pole on the substitution curve: {0}")]
    SubstitutionPole(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

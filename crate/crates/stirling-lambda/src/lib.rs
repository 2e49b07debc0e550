//! Exact symbolic computation with degenerate Stirling numbers and boson
//! operators.
//!
//! The degenerate Stirling numbers of the first and second kind,
//! `S1(n, k)` and `S2(n, k)`, are the connection coefficients between the
//! classical falling-factorial basis and its λ-deformation. Every entry is
//! a polynomial in the deformation parameter λ with arbitrary-precision
//! rational coefficients, so every computation here is exact: identity
//! checks are polynomial equalities in ℚ\[λ\], never floating-point
//! comparisons.
//!
//! The crate provides
//!
//! - [`exactnum`]: rationals and dense polynomials over them,
//! - [`factorials`]: degenerate falling/rising factorials and binomials,
//! - [`stirling`]: triangular tables built from the two-term recurrences,
//!   plus an independent basis-change oracle,
//! - [`boson`]: canonical normal forms for words in the boson operators
//!   `a`, `a+` with `a a+ - a+ a = 1`, and the normal ordering of
//!   degenerate powers of the number operator,
//! - [`series`]: truncated formal power series and the degenerate
//!   exponential, with generating-function cross-checks,
//! - [`identities`]: a registry of executable identity checks that report
//!   exact counterexamples on failure,
//! - [`cli`]: the command-line front end (`stirling-lambda` binary).
//!
//! Start with the runnable programs under `examples/` for a tour.

pub mod boson;
pub mod cli;
pub mod exactnum;
pub mod factorials;
pub mod identities;
pub mod report;
pub mod series;
pub mod stirling;

pub use exactnum::{LambdaPoly, Poly, Rat, XPoly};
pub use report::{CheckId, Counterexample, IdentityReport, Status};
pub use stirling::{Kind, StirlingTable};

/// Errors from the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("k = {k} exceeds the truncation order {order}")]
    Range { k: usize, order: usize },
    #[error("unrecognized operator token `{0}` (expected `a` or `a+`)")]
    InvalidToken(String),
}

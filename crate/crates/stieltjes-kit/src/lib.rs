//! Arbitrary-precision computation of generalized Stieltjes constants,
//! Hurwitz and alternating zeta functions with their s-derivatives,
//! Dirichlet beta, Bell-polynomial gamma derivatives, and the classical
//! log-log integral family, together with a data-driven catalog of
//! closed-form identities that is verified by evaluating both sides of
//! every identity through independent computational routes.
//!
//! The crate is organized the way the mathematics decomposes:
//!
//! * [`numerics`] — precision context, jets (truncated Taylor series),
//!   a small complex type, and exact combinatorial tables.
//! * [`zeta`] — Hurwitz zeta and its s-derivative jets via
//!   Euler–Maclaurin summation, plus the Hasse double sum and the
//!   reflection difference closed forms.
//! * [`quadrature`] — tanh-sinh / exp-sinh integration and the catalog
//!   of log-log, Clausen, Hermite, Abel–Plana, and digamma integrals.
//! * [`stieltjes`] — generalized Stieltjes constants by three routes
//!   and their structural relations.
//! * [`alternating`] — the eta family, its derivatives at s = 1, and
//!   Dirichlet beta derivatives.
//! * [`bell`] — complete Bell polynomials and gamma derivatives at 1.
//! * [`series`] — power-series and limit representations of the low
//!   Stieltjes constants, and Ramanujan's phi function family.
//! * [`identities`] — the identity registry and suite runner.

pub mod alternating;
pub mod bell;
mod error;
pub mod identities;
pub mod numerics;
pub mod quadrature;
pub mod series;
pub mod stieltjes;
pub mod zeta;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
#[path = "../tests/refvals/mod.rs"]
mod test_refvals;

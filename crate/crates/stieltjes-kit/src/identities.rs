//! Identity registry and suite runner.
//!
//! Every cataloged closed form is stored as a record pairing two
//! independent evaluation routes with a tolerance; the runner evaluates
//! both sides and reports the discrepancy. Numerical disagreement is a
//! failed result, never an error.

use rug::Float;

/// Outcome of evaluating one cataloged identity.
///
/// `passed` follows the mixed tolerance rule
/// `|lhs - rhs| <= tol * max(1, |lhs|, |rhs|)`.
#[derive(Clone, Debug)]
pub struct IdentityResult {
    /// Stable registry key, e.g. `"EQ_2_13"`.
    pub id: String,
    /// Printed equation label, e.g. `"(2.13)"`.
    pub paper_eq: String,
    pub lhs: Float,
    pub rhs: Float,
    pub abs_err: Float,
    /// `abs_err / max(1, |lhs|, |rhs|)`, the quantity the tolerance bounds.
    pub rel_err: Float,
    pub passed: bool,
    pub runtime_ms: f64,
    /// Free-form evaluation notes: route diagnostics, quadrature statistics.
    pub diagnostics: String,
}

impl IdentityResult {
    /// Build a result from two computed sides, deciding `passed` at `tol`.
    pub fn from_sides(
        id: &str,
        paper_eq: &str,
        lhs: Float,
        rhs: Float,
        tol: &Float,
        runtime_ms: f64,
        diagnostics: String,
    ) -> Self {
        let prec = lhs.prec().max(rhs.prec());
        let abs_err = Float::with_val(prec, &lhs - &rhs).abs();
        let mut scale = Float::with_val(prec, 1);
        let la = lhs.clone().abs();
        let rb = rhs.clone().abs();
        if la > scale {
            scale = la;
        }
        if rb > scale {
            scale = rb;
        }
        let rel_err = Float::with_val(prec, &abs_err / &scale);
        let passed = crate::numerics::near(&lhs, &rhs, tol);
        IdentityResult {
            id: id.to_owned(),
            paper_eq: paper_eq.to_owned(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            passed,
            runtime_ms,
            diagnostics,
        }
    }
}

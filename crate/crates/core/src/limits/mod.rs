//! Projections `π_R`, projected-limit sweeps, factorization into constant
//! and non-constant parts, closed product formulas and the conjecture
//! catalog.

pub mod factor;
pub mod formulas;
pub mod project;
pub mod sweep;
pub mod verify;

pub use factor::{compare_truncations, const_flip, factor_const_nonconst, Comparison};
pub use formulas::{shifted_const_formula, w0_product_formula};
pub use project::{forget_spectral, project_monomial, project_pi_r};
pub use sweep::{
    fingerprint, projected_limit, Engine, InnerLimit, LimitReport, LimitRequest, SweepStep,
};
pub use verify::{case_ids, catalog, verify_all, verify_case, CaseReport, ClauseResult, Verdict};

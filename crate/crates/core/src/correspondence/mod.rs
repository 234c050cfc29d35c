//! The two correspondences: expectation values on both sides, their
//! closed forms and the named identity checks.

mod checks;
mod closed;
mod report;
mod vev;

pub use checks::{check_identity, check_names, default_n, CheckParams};
pub use closed::{analytic_continuation_check, closed_form, continuation_difference, ClosedFormKind};
pub use report::{Difference, IdentityReport, ReportParams, Status, Witness};
pub use vev::{standard_variables, vev, vev_boson, vev_fermion, Model, Side, Symbol, VevSpec};

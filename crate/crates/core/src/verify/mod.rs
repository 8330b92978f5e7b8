//! Randomized verification of the inequalities and identities.

pub mod checks;
pub mod explore;
pub mod generate;
pub mod kadets;
pub mod record;
pub mod suites;

pub use checks::Budget;
pub use record::{InstanceKind, InstanceSpec, Side, SuiteRecord, SuiteReport, Verdict};
pub use suites::{run_suite, SuiteParams, SUITES};

//! Verification suites, shared caches, configuration and the CLI.

pub mod cli;
pub mod config;
mod context;
mod report;
pub mod suites;

pub use context::Context;
pub use report::VerificationReport;
pub use suites::{
    verify_flatten, verify_kl_transfer, verify_length_sufficiency, verify_type_a_smoothness,
    verify_upper_ideal, verify_x_determination, IntervalProperty,
};

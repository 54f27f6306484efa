//! End-to-end re-derivations and the verification report.

pub mod claim;
pub mod kc;
pub mod report;
pub mod sections;
pub mod verify;

pub use report::{Check, Status, VerificationReport};
pub use verify::{verify_paper, VerifyOptions, GROUPS};

//! Verification harness for maximal covers and FF-subgroups of symmetric,
//! alternating and PSL(2,q) groups, with JSON/CSV/text reports.

pub mod error;
pub mod groups;
pub mod harness;
pub mod report;

pub use error::{HarnessError, Result};
pub use harness::Harness;
pub use report::{Format, Status, VerificationResult};

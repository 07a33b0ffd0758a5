//! Command-line front end: region analysis and targeted verification checks,
//! with text or versioned-JSON output.

pub mod args;
pub mod report;
pub mod run;

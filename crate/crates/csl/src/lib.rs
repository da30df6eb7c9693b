//! Command-line front end for `csl-core`: input parsing, report formats,
//! the named example registry and the acceptance battery.

pub mod criteria;
pub mod families;
pub mod files;
pub mod polyparse;
pub mod registry;
pub mod report;

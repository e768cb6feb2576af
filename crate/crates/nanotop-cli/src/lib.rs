//! Parsing, building, and report-rendering support for the `nanotop`
//! command-line tool, split out as a library so the integration tests can
//! exercise the same code paths the binary uses.

pub mod files;
pub mod report;

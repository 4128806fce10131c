//! File formats, built-in fixtures, reports and the scenario runner.

pub mod files;
pub mod fixtures;
pub mod report;
pub mod scenarios;

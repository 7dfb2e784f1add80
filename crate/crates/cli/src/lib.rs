//! Report-producing commands behind the `euler-trace` binary.

pub mod acceptance;
pub mod cli;
pub mod commands;
pub mod report;

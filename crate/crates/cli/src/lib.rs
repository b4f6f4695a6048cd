//! Spec parsing, command pipelines and report rendering behind the `gk` binary.

pub mod commands;
pub mod report;
pub mod spec;

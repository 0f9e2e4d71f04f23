//! File formats, result tables and the command-line front end.

pub mod cli;
pub mod format;
pub mod golden;
pub mod reproduce;
pub mod table;

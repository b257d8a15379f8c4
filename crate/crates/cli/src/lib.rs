//! Command-line front end for `riordan-core`: expression parsing, JSON
//! formats, an offline sequence table and the verification suites.

pub mod commands;
pub mod expr;
pub mod format;
pub mod golden;
pub mod suites;
pub mod table;

//! Standard-library front end for `skewdyck-core`: the `skewdyck` command,
//! SVG rendering, JSON output and the vendored reference tables.

pub mod cli;
pub mod format;
pub mod golden;
pub mod svg;
pub mod verify;

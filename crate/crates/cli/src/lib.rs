//! Library side of the `lieforge` command: file formats and command dispatch.

pub mod app;
pub mod format;

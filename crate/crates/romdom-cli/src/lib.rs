//! Library half of the `romdom` command-line tool: file formats, report
//! assembly, the batch thread pool, and the command implementations. The
//! binary in `main.rs` is a thin argument parser over [`runner`].

pub mod formats;
pub mod jobs;
pub mod report;
pub mod runner;

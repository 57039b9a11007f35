//! IO companion to `cyclosemi-core`: analysis reports, census file formats
//! (CSV + JSON summary), JSON-lines checkpointing, a parallel census
//! driver, and the `cyclosemi` command-line binary.

pub mod checkpoint;
pub mod cli;
pub mod parallel;
pub mod report;

//! File formats, JSON output, parallel drivers and the command line for
//! `chordal-bvec`.

pub mod cli;
pub mod formats;
pub mod json;
pub mod parallel;

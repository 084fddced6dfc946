//! Command-line front end for `betapoly-core`: argument grammar, text
//! formats, a thread-safe family cache and job execution.

pub mod args;
pub mod cache;
pub mod job;
pub mod parse;
pub mod render;

pub use job::{run, Command, JobError, JobSpec};
pub use render::Format;

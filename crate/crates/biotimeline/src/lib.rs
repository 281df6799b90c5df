//! File formats, the HTTP service and the command line around
//! `biotimeline-core`.
//!
//! - [`dump`]: loading the knowledge-graph TSV files and biography corpora.
//! - [`benchmark`]: the JSON-lines benchmark format.
//! - [`store`]: model and schema files.
//! - [`document`]: timeline and export documents.
//! - [`engine`]: loaded graph plus models, ready to build documents.
//! - [`api`]: the HTTP service and its timeline cache.
//! - [`cli`]: subcommand implementations.

pub mod api;
pub mod benchmark;
pub mod cli;
pub mod document;
pub mod dump;
pub mod engine;
pub mod store;

pub use biotimeline_core as core;

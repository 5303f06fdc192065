//! Library surface of the command-line tool, exposed so integration tests
//! can drive commands in-process.

pub mod cache;
pub mod commands;
pub mod report;

pub use cache::DiskLatticeCache;
pub use commands::{cmd_classify, cmd_enumerate, cmd_search, cmd_verify, CliError, CommandOutput};
pub use report::Report;

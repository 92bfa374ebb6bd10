//! Files, reports, parallel search and the command-line driver built on
//! [`monocycle_core`].

pub mod checkpoint;
pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;

pub use cli::run;

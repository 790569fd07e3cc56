//! Command-line front end, JSON configuration and report formats for
//! `dgalg-core`.

pub mod cli;
pub mod config;
pub mod error;
pub mod report;
pub mod session;
pub mod syntax;

pub use cli::run;

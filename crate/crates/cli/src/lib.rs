//! Command-line front end: session files, reports and benchmarks.

pub mod app;
pub mod report;
pub mod session;

pub use app::{execute, Cli, Outcome};
pub use session::{parse_session, Session, SessionError};

//! Library half of the `typext` command-line tool, kept separate so the
//! acceptance tests can call the commands directly.

pub mod bench;
pub mod demo;
pub mod layout;
pub mod narrow;

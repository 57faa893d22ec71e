//! Command-line front end and the executable acceptance checks.

pub mod verify;

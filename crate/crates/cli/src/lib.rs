//! Experiment harness around `sortnet-core`: the `sortnet` command-line
//! interface, seed management, parallel Monte Carlo replicas, file formats,
//! and the verification suite.

pub mod commands;
pub mod io;
pub mod mc;
pub mod metadata;
pub mod verify;

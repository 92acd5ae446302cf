//! Command-line front end for the NOMA HARQ block-error-rate toolkit.
//!
//! The library target exists so that the self-check harness (the `validate`
//! subcommand) and the integration test suite share one implementation of the
//! figure sweeps, the CSV contract, and the criterion battery.

pub mod commands;
pub mod csvout;
pub mod defaults;
pub mod harness;
pub mod sweep;

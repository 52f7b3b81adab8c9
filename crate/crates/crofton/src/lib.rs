//! Monte Carlo verification, output formats and the command-line front end
//! for the exact expectations in [`crofton_core`].

pub mod cli;
pub mod formats;
pub mod montecarlo;
pub mod tables;
pub mod values;

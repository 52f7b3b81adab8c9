//! Exact expected face numbers of the Poisson zero polytope and of random
//! convex hulls on the half-sphere.
//!
//! Every value lives in the Laurent ring Q[pi, 1/pi] and is computed exactly
//! with [`PiNumber`]; floating point only appears in [`PiNumber::eval_f64`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrays;
pub mod closed_forms;
pub mod error;
mod eval;
pub mod gamma;
pub mod identities;
pub mod pi_number;
pub mod rational;
pub mod series;
pub mod text;

pub use arrays::{ArrayCache, Arrays, QnPolynomial};

pub use closed_forms::FVectorExact;
pub use error::{Error, Result};
pub use eval::pi_bounds;
pub use pi_number::PiNumber;
pub use rational::BigRational;
pub use text::{format_latex, format_pi, parse_pi};

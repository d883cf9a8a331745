//! Exact symbolic engine for the quantum Cartan algebra of Woronowicz's 4D+
//! bicovariant calculus on SU_q(2).

pub mod calculus4d;
pub mod cartan;
pub mod engine;
pub mod error;
pub mod exterior;
pub mod hopfcore;
mod memo;
pub mod qfield;
pub mod report;
pub mod syntax;

pub use error::{Error, Result};

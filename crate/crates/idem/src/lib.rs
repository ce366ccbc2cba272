//! Command-line frontend and parallel audit harness over `idem-core`.
//!
//! All residues are printed in `1..=m`: `m` denotes the zero class.

pub mod audit;
pub mod cli;
mod render;

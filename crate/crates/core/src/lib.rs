//! Arithmetic of composite moduli seen through their idempotent residues.
//!
//! Residues live in `Z_m = {1, ..., m}`: the value `m` stands for the zero
//! class everywhere in this crate, so `E_12 = {1, 4, 9, 12}` rather than
//! `{0, 1, 4, 9}`.
//!
//! The crate is `no_std` and only needs `alloc`. Layers, bottom up:
//!
//! - [`arith`]: factorization, [`Modulus`], canonical residues, CRT.
//! - [`idempotent`]: `E_m`, the generalized order `|a|_m`, signed powers,
//!   index lookup and power towers.
//! - [`structure`]: normal and regular residues, the class groups `R_m^e`,
//!   orbits and the quantities built on them.
//! - [`binomial`]: solvability of `x^k ≡ a`, `ω_m(a)` and generalized
//!   primitive roots.
//! - [`functions`]: the counting functions `r_m^e`, `ρ_m^e` and the
//!   M/QM/DI function classifiers.
//! - [`algebra`]: the Boolean ring on `E_m`.
//! - [`quadratic`]: the kernels `x² ≡ kx` and square roots of idempotents.
//! - [`oracle`]: brute-force reference versions used to cross-check
//!   everything above.
//!
//! ```
//! use idem_core::{idempotent, Modulus};
//!
//! let m = Modulus::new(100).unwrap();
//! assert_eq!(idempotent::enumerate_idempotents(&m).elements(), &[1, 25, 76, 100]);
//! assert_eq!(idempotent::order(&m, 42).order, 20);
//! assert_eq!(idempotent::tower_mod(&m, 42, 100), 56);
//! ```

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod arith;
pub mod audit;
pub mod binomial;
pub mod functions;
pub mod idempotent;
pub mod oracle;
pub mod quadratic;
pub mod structure;

mod error;

pub use arith::{Factorization, Modulus, PrimePower, Residue};
pub use error::{Error, Result};
pub use structure::StructureTable;

/// Default for the enumeration cap (`IDEM_MAX_ENUM` in the command-line tool).
pub const DEFAULT_MAX_ENUM: u64 = 1_000_000;

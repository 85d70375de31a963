//! Exact computations on groups of regular circulant matrices.
//!
//! The crate counts the invertible circulant `n × n` matrices over a finite
//! field `F_{p^t}` or a residue ring `Z/aZ` with closed product formulas, and
//! exposes brute-force enumeration routines that count the same groups
//! directly so the formulas can be checked against them.
//!
//! Over finite fields it also builds the explicit conjugating matrix that
//! maps every circulant to a block diagonal matrix of upper triangular
//! Toeplitz blocks, together with the Frobenius conditions that cut the
//! image out.
//!
//! Modules:
//! - [`numtheory`]: totients, divisors, multiplicative orders, Lucas binomials
//! - [`zmod`]: residue rings `Z/aZ`, CRT splitting and Hensel-style lifting
//! - [`field`]: `F_{p^s}` as `F_p[x]/(f)` with Frobenius and roots of unity
//! - [`linalg`]: dense exact matrices, Kronecker products, Pascal matrices
//! - [`circulant`]: circulants, group orders and enumeration oracles
//! - [`structure`]: Jordan form of the shift, conjugator and canonical form
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod circulant;
mod error;
pub mod field;
pub mod linalg;
pub mod numtheory;
pub mod ring;
pub mod structure;
pub mod zmod;

pub use circulant::{Circulant, GroupOrder, OrderFactor, OrderParams};
pub use error::{Error, Result};
pub use field::{Embedding, FiniteField};
pub use linalg::Matrix;
pub use numtheory::Factorization;
pub use ring::{Integers, Ring};
pub use structure::{CycleDecomposition, Direction, StructureContext};
pub use zmod::Zmod;

pub use num_bigint::BigUint;

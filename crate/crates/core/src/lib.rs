//! Exact symbolic engine for the type A and type B boson-fermion
//! correspondences.

pub mod algebra;
pub mod boson;
pub mod combinatorics;
pub mod correspondence;
pub mod error;
pub mod fields;
pub mod fock;

pub use error::{Error, Result};

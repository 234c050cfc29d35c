//! Fermionic Fock spaces as highest weight Clifford modules.

mod fermion_a;
mod fermion_b;
mod vector;

pub use fermion_a::{apply_mode_a, character_a, states_a, FermionKind, FermionStateA};
pub use fermion_b::{apply_mode_b, character_b, states_b, FermionStateB};
pub use vector::{BasisState, FockVector};

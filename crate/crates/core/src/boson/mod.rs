//! Bosonic Fock spaces as polynomial Heisenberg modules, with truncated
//! vertex operators.

mod heisenberg;
mod monomial;
mod state;
mod vertex;

use crate::combinatorics::multisets;

pub use heisenberg::{heis_apply_a, heis_apply_b};
pub use monomial::XMonomial;
pub use state::{BosonStateA, BosonStateB};
pub use vertex::{vertex_a, vertex_b, Sign, VertexA, VertexB};

/// Monomials in `x_1, x_2, …` (or only odd variables) of weight at most
/// `max_weight`.
pub fn monomials(odd_only: bool, max_weight: i64) -> Vec<XMonomial> {
    let parts: Vec<(u32, i64)> = (1..=max_weight.max(0) as u32)
        .filter(|n| !odd_only || n % 2 == 1)
        .map(|n| (n, n as i64))
        .collect();
    multisets(&parts, max_weight)
        .into_iter()
        .map(|(e, _)| XMonomial::from_pairs(parts.iter().map(|p| p.0).zip(e)))
        .collect()
}

/// Graded dimensions `(energy2, dim)` of the charge-`k` sector of the
/// lattice boson space, for levels of matching parity up to `max_energy2`.
pub fn boson_character_a(charge: i64, max_energy2: i64) -> Vec<(i64, usize)> {
    let lattice = charge * charge;
    let states = monomials(false, (max_energy2 - lattice).max(0) / 2);
    (0..=max_energy2)
        .filter(|e| (e - charge).rem_euclid(2) == 0)
        .map(|e| (e, states.iter().filter(|m| 2 * m.weight() + lattice == e).count()))
        .collect()
}

/// Graded dimensions `(degree, dim)` of the twisted boson space, both
/// parities included.
pub fn boson_character_b(max_degree: i64) -> Vec<(i64, usize)> {
    let states = monomials(true, max_degree);
    (0..=max_degree)
        .map(|d| (d, 2 * states.iter().filter(|m| m.weight() == d).count()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let s = BosonStateA::new(2, XMonomial::from_pairs([(5, 1), (1, 3)]));
        assert_eq!(s.to_string(), "e^{2a} * x1^3 x5^1");
        assert_eq!(BosonStateA::new(0, XMonomial::one()).to_string(), "1");
        assert_eq!(BosonStateA::new(-1, XMonomial::var(2)).to_string(), "e^{-a} * x2^1");
        let b = BosonStateB::new(true, XMonomial::var(3)).unwrap();
        assert_eq!(b.to_string(), "e^{a} * x3^1");
        assert!(BosonStateB::new(false, XMonomial::var(2)).is_none());
    }

    #[test]
    fn characters_match_the_fermions() {
        use crate::fock::{character_a, character_b};
        assert_eq!(boson_character_a(0, 14), character_a(0, 14));
        assert_eq!(boson_character_a(1, 13), character_a(1, 13));
        assert_eq!(boson_character_a(-2, 14), character_a(-2, 14));
        assert_eq!(boson_character_b(12), character_b(12));
    }
}

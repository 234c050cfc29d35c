//! The neutral twisted fermion Fock space.

use std::fmt;

use super::vector::{BasisState, FockVector};
use crate::algebra::Rat;
use crate::combinatorics::strict_sets;

/// `phi_{n_1} ... phi_{n_k} |0>` with a strictly decreasing index list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FermionStateB {
    indices: Vec<u32>,
}

impl FermionStateB {
    pub fn new(indices: Vec<u32>) -> Option<Self> {
        indices
            .windows(2)
            .all(|w| w[0] > w[1])
            .then_some(FermionStateB { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> i64 {
        self.indices.iter().map(|&n| n as i64).sum()
    }

    /// The action of `phi_m` on this basis state.
    pub fn apply(&self, m: i64) -> Option<(Rat, FermionStateB)> {
        let k = self.indices.len();
        let sign = |odd: bool| if odd { Rat::integer(-1) } else { Rat::one() };
        let pos = self.indices.binary_search_by(|x| (m.unsigned_abs() as u32).cmp(x));
        let mut out = self.clone();
        if m > 0 {
            let at = pos.err()?;
            out.indices.insert(at, m as u32);
            Some((sign(at % 2 == 1), out))
        } else if m == 0 {
            match pos {
                // phi_0 reaches phi_0 at the end and squares to one.
                Ok(at) => {
                    out.indices.remove(at);
                    Some((sign((k - 1) % 2 == 1), out))
                }
                Err(at) => {
                    out.indices.insert(at, 0);
                    Some((sign(k % 2 == 1), out))
                }
            }
        } else {
            // phi_m phi_{-m} = -phi_{-m} phi_m + 2 (-1)^m.
            let at = pos.ok()?;
            out.indices.remove(at);
            let c = sign((at as i64 + m).rem_euclid(2) == 1) * Rat::integer(2);
            Some((c, out))
        }
    }
}

impl BasisState for FermionStateB {
    fn vacuum() -> Self {
        FermionStateB::default()
    }

    fn is_vacuum(&self) -> bool {
        self.indices.is_empty()
    }

    fn grade(&self) -> i64 {
        self.degree()
    }

    fn basis_up_to(max_grade: i64) -> Vec<Self> {
        states_b(max_grade)
    }
}

impl fmt::Display for FermionStateB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.indices.is_empty() {
            let items: Vec<String> = self.indices.iter().map(u32::to_string).collect();
            write!(f, "phi[{}] ", items.join(","))?;
        }
        f.write_str("|0>")
    }
}

impl fmt::Debug for FermionStateB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn apply_mode_b(m: i64, v: &FockVector<FermionStateB>) -> FockVector<FermionStateB> {
    v.map_monomial(|s| s.apply(m))
}

/// All basis states of degree at most `max_degree`, in increasing degree.
pub fn states_b(max_degree: i64) -> Vec<FermionStateB> {
    let parts: Vec<(u32, i64)> = (1..=max_degree.max(0) as u32).map(|n| (n, n as i64)).collect();
    let mut out = Vec::new();
    for (mut set, _) in strict_sets(&parts, max_degree) {
        out.push(FermionStateB { indices: set.clone() });
        set.push(0);
        out.push(FermionStateB { indices: set });
    }
    out.sort_by_key(|s| (s.degree(), s.clone()));
    out
}

/// Graded dimensions `(degree, dim)` for degrees `0..=max_degree`.
pub fn character_b(max_degree: i64) -> Vec<(i64, usize)> {
    let states = states_b(max_degree);
    (0..=max_degree)
        .map(|d| (d, states.iter().filter(|s| s.degree() == d).count()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vac() -> FockVector<FermionStateB> {
        FockVector::vacuum()
    }

    fn state(ix: &[u32]) -> FermionStateB {
        FermionStateB::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn zero_mode_squares_to_one() {
        assert_eq!(apply_mode_b(0, &apply_mode_b(0, &vac())), vac());
        assert_eq!(apply_mode_b(0, &apply_mode_b(0, &vac())).vacuum_component(), Rat::one());
    }

    #[test]
    fn contraction_carries_the_sign() {
        let v = FockVector::basis(state(&[1]));
        assert_eq!(apply_mode_b(-1, &v), FockVector::term(state(&[]), Rat::integer(-2)));
        let v = FockVector::basis(state(&[2]));
        assert_eq!(apply_mode_b(-2, &v), FockVector::term(state(&[]), Rat::integer(2)));
        assert!(apply_mode_b(-5, &vac()).is_zero());
    }

    #[test]
    fn zero_mode_moves_to_the_end() {
        // phi_0 phi_3 |0> = -phi_3 phi_0 |0>
        let v = apply_mode_b(0, &FockVector::basis(state(&[3])));
        assert_eq!(v, FockVector::term(state(&[3, 0]), Rat::integer(-1)));
        // phi_0 phi_3 phi_0 |0> = -phi_3 |0>
        let w = apply_mode_b(0, &FockVector::basis(state(&[3, 0])));
        assert_eq!(w, FockVector::term(state(&[3]), Rat::integer(-1)));
    }

    #[test]
    fn display() {
        assert_eq!(state(&[3, 0]).to_string(), "phi[3,0] |0>");
        assert_eq!(state(&[]).to_string(), "|0>");
    }

    #[test]
    fn small_characters() {
        let dims: Vec<usize> = character_b(5).into_iter().map(|(_, d)| d).collect();
        assert_eq!(dims, vec![2, 2, 2, 4, 4, 6]);
        let three: Vec<String> = states_b(3)
            .into_iter()
            .filter(|s| s.degree() == 3)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(three, vec!["phi[2,1] |0>", "phi[2,1,0] |0>", "phi[3] |0>", "phi[3,0] |0>"]);
    }
}

//! The charged free fermion Fock space.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::{BasisState, FockVector};
use crate::algebra::Rat;
use crate::combinatorics::strict_sets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FermionKind {
    Phi,
    Psi,
}

impl fmt::Display for FermionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FermionKind::Phi => "phi",
            FermionKind::Psi => "psi",
        })
    }
}

/// `phi_{m_1} ... phi_{m_k} psi_{n_1} ... psi_{n_l} |0>` with both index
/// lists strictly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FermionStateA {
    phi: Vec<u32>,
    psi: Vec<u32>,
}

/// Position of `m` in a strictly decreasing list: `Ok` if present,
/// `Err(insertion point)` otherwise. The index equals the number of entries
/// before it.
fn locate(list: &[u32], m: u32) -> Result<usize, usize> {
    list.binary_search_by(|x| m.cmp(x))
}

fn sign(odd: bool) -> Rat {
    if odd {
        Rat::integer(-1)
    } else {
        Rat::one()
    }
}

impl FermionStateA {
    /// Builds a state from index lists, returning `None` unless both are
    /// strictly decreasing.
    pub fn new(phi: Vec<u32>, psi: Vec<u32>) -> Option<Self> {
        let strict = |l: &[u32]| l.windows(2).all(|w| w[0] > w[1]);
        (strict(&phi) && strict(&psi)).then_some(FermionStateA { phi, psi })
    }

    pub fn phi(&self) -> &[u32] {
        &self.phi
    }

    pub fn psi(&self) -> &[u32] {
        &self.psi
    }

    pub fn charge(&self) -> i64 {
        self.phi.len() as i64 - self.psi.len() as i64
    }

    pub fn energy2(&self) -> i64 {
        self.phi.iter().chain(&self.psi).map(|&m| 2 * m as i64 + 1).sum()
    }

    /// The action of one Clifford generator on this basis state.
    pub fn apply(&self, kind: FermionKind, m: i64) -> Option<(Rat, FermionStateA)> {
        let k = self.phi.len();
        match (kind, m >= 0) {
            (FermionKind::Phi, true) => {
                let pos = locate(&self.phi, m as u32).err()?;
                let mut out = self.clone();
                out.phi.insert(pos, m as u32);
                Some((sign(pos % 2 == 1), out))
            }
            (FermionKind::Phi, false) => {
                // Passes every phi, then contracts with psi_{-1-m}.
                let pos = locate(&self.psi, (-1 - m) as u32).ok()?;
                let mut out = self.clone();
                out.psi.remove(pos);
                Some((sign((k + pos) % 2 == 1), out))
            }
            (FermionKind::Psi, true) => {
                let pos = locate(&self.psi, m as u32).err()?;
                let mut out = self.clone();
                out.psi.insert(pos, m as u32);
                Some((sign((k + pos) % 2 == 1), out))
            }
            (FermionKind::Psi, false) => {
                let pos = locate(&self.phi, (-1 - m) as u32).ok()?;
                let mut out = self.clone();
                out.phi.remove(pos);
                Some((sign(pos % 2 == 1), out))
            }
        }
    }
}

impl BasisState for FermionStateA {
    fn vacuum() -> Self {
        FermionStateA::default()
    }

    fn is_vacuum(&self) -> bool {
        self.phi.is_empty() && self.psi.is_empty()
    }

    fn grade(&self) -> i64 {
        self.energy2()
    }

    fn basis_up_to(max_grade: i64) -> Vec<Self> {
        // Charge c costs at least c^2.
        let reach = (0..).take_while(|c| c * c <= max_grade).last().unwrap_or(-1);
        (-reach..=reach).flat_map(|c| states_a(c, max_grade)).collect()
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, l: &[u32]) -> fmt::Result {
    let items: Vec<String> = l.iter().map(u32::to_string).collect();
    write!(f, "{name}[{}] ", items.join(","))
}

impl fmt::Display for FermionStateA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.phi.is_empty() {
            write_list(f, "phi", &self.phi)?;
        }
        if !self.psi.is_empty() {
            write_list(f, "psi", &self.psi)?;
        }
        f.write_str("|0>")
    }
}

impl fmt::Debug for FermionStateA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `phi_m` or `psi_m` applied to a vector.
pub fn apply_mode_a(kind: FermionKind, m: i64, v: &FockVector<FermionStateA>) -> FockVector<FermionStateA> {
    v.map_monomial(|s| s.apply(kind, m))
}

/// All basis states of the given charge with doubled energy at most
/// `max_energy2`, in increasing energy.
pub fn states_a(charge: i64, max_energy2: i64) -> Vec<FermionStateA> {
    let parts: Vec<(u32, i64)> = (0..)
        .map(|m: u32| (m, 2 * m as i64 + 1))
        .take_while(|&(_, w)| w <= max_energy2)
        .collect();
    let sets = strict_sets(&parts, max_energy2);
    let mut out = Vec::new();
    for (phi, wp) in &sets {
        for (psi, wq) in &sets {
            if phi.len() as i64 - psi.len() as i64 == charge && wp + wq <= max_energy2 {
                out.push(FermionStateA {
                    phi: phi.clone(),
                    psi: psi.clone(),
                });
            }
        }
    }
    out.sort_by_key(|s| (s.energy2(), s.clone()));
    out
}

/// Graded dimensions `(energy2, dim)` of the given charge sector for every
/// level of matching parity up to `max_energy2`.
pub fn character_a(charge: i64, max_energy2: i64) -> Vec<(i64, usize)> {
    let states = states_a(charge, max_energy2);
    (0..=max_energy2)
        .filter(|e| (e - charge).rem_euclid(2) == 0)
        .map(|e| (e, states.iter().filter(|s| s.energy2() == e).count()))
        .collect()
}

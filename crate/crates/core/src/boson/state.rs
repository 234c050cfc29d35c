use std::fmt;

use super::monomial::XMonomial;
use crate::fock::BasisState;

/// `e^{k alpha} ⊗ m` in the lattice boson space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BosonStateA {
    charge: i64,
    monomial: XMonomial,
}

/// `e^{eps alpha} ⊗ m` with `eps ∈ {0, 1}` and only odd variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BosonStateB {
    parity: bool,
    monomial: XMonomial,
}

impl BosonStateA {
    pub fn new(charge: i64, monomial: XMonomial) -> Self {
        BosonStateA { charge, monomial }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn monomial(&self) -> &XMonomial {
        &self.monomial
    }

    pub fn weight(&self) -> i64 {
        self.monomial.weight()
    }

    /// Doubled energy, including the lattice term `k^2`.
    pub fn energy2(&self) -> i64 {
        2 * self.weight() + self.charge * self.charge
    }
}

impl BosonStateB {
    /// Returns `None` if the monomial uses an even variable.
    pub fn new(parity: bool, monomial: XMonomial) -> Option<Self> {
        if monomial.iter().all(|(n, _)| n % 2 == 1) {
            Some(BosonStateB { parity, monomial })
        } else {
            None
        }
    }

    pub fn parity(&self) -> bool {
        self.parity
    }

    pub fn monomial(&self) -> &XMonomial {
        &self.monomial
    }

    pub fn degree(&self) -> i64 {
        self.monomial.weight()
    }

    pub(crate) fn with(parity: bool, monomial: XMonomial) -> Self {
        BosonStateB { parity, monomial }
    }
}

impl BasisState for BosonStateA {
    fn vacuum() -> Self {
        BosonStateA::default()
    }

    fn is_vacuum(&self) -> bool {
        self.charge == 0 && self.monomial.is_one()
    }

    fn grade(&self) -> i64 {
        self.energy2()
    }

    fn basis_up_to(max_grade: i64) -> Vec<Self> {
        let reach = (0..).take_while(|c| c * c <= max_grade).last().unwrap_or(-1);
        let mut out = Vec::new();
        for charge in -reach..=reach {
            for m in super::monomials(false, (max_grade - charge * charge) / 2) {
                out.push(BosonStateA::new(charge, m));
            }
        }
        out
    }
}

impl BasisState for BosonStateB {
    fn vacuum() -> Self {
        BosonStateB::default()
    }

    fn is_vacuum(&self) -> bool {
        !self.parity && self.monomial.is_one()
    }

    fn grade(&self) -> i64 {
        self.degree()
    }

    fn basis_up_to(max_grade: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for m in super::monomials(true, max_grade) {
            out.push(BosonStateB::with(false, m.clone()));
            out.push(BosonStateB::with(true, m));
        }
        out
    }
}

fn write_state(f: &mut fmt::Formatter<'_>, lattice: Option<String>, m: &XMonomial) -> fmt::Result {
    match (lattice, m.is_one()) {
        (None, _) => write!(f, "{m}"),
        (Some(l), true) => f.write_str(&l),
        (Some(l), false) => write!(f, "{l} * {m}"),
    }
}

impl fmt::Display for BosonStateA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lattice = match self.charge {
            0 => None,
            1 => Some("e^{a}".to_string()),
            -1 => Some("e^{-a}".to_string()),
            k => Some(format!("e^{{{k}a}}")),
        };
        write_state(f, lattice, &self.monomial)
    }
}

impl fmt::Display for BosonStateB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_state(f, self.parity.then(|| "e^{a}".to_string()), &self.monomial)
    }
}

impl fmt::Debug for BosonStateA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for BosonStateB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

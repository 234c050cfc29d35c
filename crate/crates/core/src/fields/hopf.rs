//! The Hopf generators `D = ∂_z` and `T = T_{-1}: z ↦ -z` acting on fields.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::{Field, GradeShift, ModeFn};
use crate::algebra::Rat;
use crate::fock::BasisState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HopfGenerator {
    D,
    T,
}

/// A reduced element `± T^ε D^k` of the Hopf algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HopfAction {
    pub negative: bool,
    pub t: bool,
    pub k: u32,
}

impl HopfAction {
    pub fn identity() -> Self {
        HopfAction {
            negative: false,
            t: false,
            k: 0,
        }
    }

    pub fn generator(g: HopfGenerator) -> Self {
        match g {
            HopfGenerator::D => HopfAction {
                negative: false,
                t: false,
                k: 1,
            },
            HopfGenerator::T => HopfAction {
                negative: false,
                t: true,
                k: 0,
            },
        }
    }

    /// The product `self · other`, using `D T = -T D` and `T^2 = 1`.
    pub fn then_apply(&self, other: &HopfAction) -> HopfAction {
        // D^k1 T^e2 = (-1)^{k1 e2} T^e2 D^k1
        let swap = other.t && self.k % 2 == 1;
        HopfAction {
            negative: self.negative ^ other.negative ^ swap,
            t: self.t ^ other.t,
            k: self.k + other.k,
        }
    }

    /// Reduces a word; the leftmost generator acts last.
    pub fn from_word(word: &[HopfGenerator]) -> Self {
        word.iter()
            .fold(HopfAction::identity(), |acc, &g| acc.then_apply(&HopfAction::generator(g)))
    }

    pub fn negated(&self) -> Self {
        HopfAction {
            negative: !self.negative,
            ..*self
        }
    }

    /// The reduced action on a field:
    /// `(± T^ε D^k a)_[p] = ± (-1)^{εp} (p+1)…(p+k) a_[p+k]`.
    pub fn apply<S: BasisState>(&self, a: &Field<S>) -> Field<S> {
        let (inner, shift) = a.parts();
        let HopfAction { negative, t, k } = *self;
        let k = k as i64;
        let modes: ModeFn<S> = Arc::new(move |p, v| {
            let mut c: Rat = (1..=k).map(|i| Rat::integer(p + i)).product();
            if negative ^ (t && p.rem_euclid(2) == 1) {
                c = -c;
            }
            if c.is_zero() {
                return Default::default();
            }
            inner(p + k, v).scale(&c)
        });
        let state = if k == 0 {
            a.state().map(|s| if negative { s.scale(&Rat::integer(-1)) } else { s.clone() })
        } else {
            None
        };
        a.derived(
            format!("{}{}", self, a.name()),
            GradeShift {
                slope: shift.slope,
                offset: shift.offset + shift.slope * k,
            },
            state,
            modes,
        )
    }
}

impl fmt::Display for HopfAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.t {
            f.write_str("T")?;
        }
        match self.k {
            0 => Ok(()),
            1 => f.write_str("D"),
            k => write!(f, "D^{k}"),
        }
    }
}

/// Applies a single generator by rewriting the mode function directly.
pub fn apply_generator<S: BasisState>(g: HopfGenerator, a: &Field<S>) -> Field<S> {
    let (inner, shift) = a.parts();
    match g {
        HopfGenerator::D => a.derived(
            format!("D{}", a.name()),
            GradeShift {
                slope: shift.slope,
                offset: shift.offset + shift.slope,
            },
            None,
            Arc::new(move |p, v| inner(p + 1, v).scale(&Rat::integer(p + 1))),
        ),
        HopfGenerator::T => a.derived(
            format!("T{}", a.name()),
            shift,
            a.state().cloned(),
            Arc::new(move |p, v| inner(p, v).scale(&Rat::sign_power(p))),
        ),
    }
}

/// Applies a word literally, one generator at a time, rightmost first.
pub fn act_hopf<S: BasisState>(word: &[HopfGenerator], a: &Field<S>) -> Field<S> {
    word.iter().rev().fold(a.clone(), |f, &g| apply_generator(g, &f))
}

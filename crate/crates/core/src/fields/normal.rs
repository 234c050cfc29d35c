//! Quadratic normal ordering by vacuum subtraction, and mode brackets.

use super::field::{Convention, Field, GradeShift, Parity};
use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::fock::{BasisState, FockVector};

/// `scale · :a(z) b(z):`, read in `convention`.
///
/// The `z^p` coefficient on a basis state `v` of grade `g` is
/// `Σ_k (a_[p-k] b_[k] v - <0|a_[p-k] b_[k]|0> v)` over
/// `p_min_b(g) <= k <= p - p_min_a(g)`. Outside that range either
/// `b_[k] v = 0 = b_[k]|0>`, or `a_[p-k]` kills `v` and the vacuum so the
/// term reduces to the scalar bracket minus itself.
pub fn normal_ordered_quadratic<S: BasisState>(
    a: &Field<S>,
    b: &Field<S>,
    scale: Rat,
    convention: Convention,
) -> Result<Field<S>> {
    if !a.is_free() || !b.is_free() {
        return Err(Error::IncompatibleFields(format!(
            "normal ordering needs free fields, got {} and {}",
            a.name(),
            b.name()
        )));
    }
    if a.shift().slope != b.shift().slope {
        return Err(Error::IncompatibleFields(format!(
            "{} and {} have different gradings",
            a.name(),
            b.name()
        )));
    }
    let parity = if a.parity() == b.parity() {
        Parity::Even
    } else {
        Parity::Odd
    };
    let shift = GradeShift {
        slope: a.shift().slope,
        offset: a.shift().offset + b.shift().offset,
    };
    let (fa, fb) = (a.clone(), b.clone());
    let name = if scale.is_one() {
        format!(":{}{}:", a.name(), b.name())
    } else {
        format!("{}:{}{}:", scale, a.name(), b.name())
    };
    let modes = move |p: i64, v: &FockVector<S>| -> FockVector<S> {
        let vacuum = FockVector::<S>::vacuum();
        let mut out = FockVector::zero();
        for (s, c) in v.terms() {
            let g = s.grade();
            let basis = FockVector::basis(s.clone());
            let mut acc = FockVector::zero();
            for k in fb.p_min(g)..=p - fa.p_min(g) {
                let term = fa.coefficient(p - k, &fb.coefficient(k, &basis));
                let vev = fa.coefficient(p - k, &fb.coefficient(k, &vacuum)).vacuum_component();
                acc.add_assign(&term);
                acc.add_scaled(&basis, &-vev);
            }
            out.add_scaled(&acc, &(c * &scale));
        }
        out
    };
    Ok(Field::new(name, convention, parity, shift, modes))
}

/// The outcome of a bracket sweep.
#[derive(Clone, Debug)]
pub struct BracketReport<S: BasisState> {
    /// The bracket's vacuum expectation value.
    pub scalar: Rat,
    /// Basis states where the bracket differs from `scalar · Id`, with the
    /// difference.
    pub residual: Vec<(S, FockVector<S>)>,
    pub states_checked: usize,
}

impl<S: BasisState> BracketReport<S> {
    pub fn is_scalar(&self) -> bool {
        self.residual.is_empty()
    }
}

/// `a_m b_n ∓ b_n a_m` (anticommutator when both are odd) on every basis
/// state of grade at most `grade_bound`, compared with its vacuum value
/// times the identity. Indices follow each field's convention.
pub fn mode_commutator<S: BasisState>(a: &Field<S>, b: &Field<S>, m: i64, n: i64, grade_bound: i64) -> BracketReport<S> {
    let anti = a.parity().is_odd() && b.parity().is_odd();
    let bracket = |v: &FockVector<S>| {
        let ab = a.mode(m, &b.mode(n, v));
        let ba = b.mode(n, &a.mode(m, v));
        if anti {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    };
    let scalar = bracket(&FockVector::vacuum()).vacuum_component();
    let states = S::basis_up_to(grade_bound);
    let mut residual = Vec::new();
    for s in &states {
        let v = FockVector::basis(s.clone());
        let diff = bracket(&v).sub(&v.scale(&scalar));
        if !diff.is_zero() {
            residual.push((s.clone(), diff));
        }
    }
    BracketReport {
        scalar,
        residual,
        states_checked: states.len(),
    }
}

//! The generating fields of the four spaces and the Heisenberg fields
//! built from the fermions.

use super::field::{Convention, Field, GradeShift, Parity};
use super::hopf::{HopfAction, HopfGenerator};
use super::normal::normal_ordered_quadratic;
use crate::algebra::Rat;
use crate::boson::{BosonStateA, BosonStateB, Sign, VertexA, VertexB};
use crate::fock::{apply_mode_a, apply_mode_b, BasisState, FermionKind, FermionStateA, FermionStateB, FockVector};

const CHARGED: GradeShift = GradeShift { slope: 2, offset: 1 };
const NEUTRAL: GradeShift = GradeShift { slope: 1, offset: 0 };

fn fermion_a(kind: FermionKind) -> Field<FermionStateA> {
    let state = apply_mode_a(kind, 0, &FockVector::vacuum());
    Field::new(
        format!("{kind}(z)"),
        Convention::PositivePower,
        Parity::Odd,
        CHARGED,
        move |p, v| apply_mode_a(kind, p, v),
    )
    .free()
    .creating(state)
}

/// `phi(z) = Σ phi_n z^n` on the charged fermion space.
pub fn phi_a() -> Field<FermionStateA> {
    fermion_a(FermionKind::Phi)
}

/// `psi(z) = Σ psi_n z^n` on the charged fermion space.
pub fn psi_a() -> Field<FermionStateA> {
    fermion_a(FermionKind::Psi)
}

/// `phi(z) = Σ phi_n z^n` on the neutral fermion space.
pub fn phi_b() -> Field<FermionStateB> {
    Field::new("phi(z)", Convention::PositivePower, Parity::Odd, NEUTRAL, apply_mode_b)
        .free()
        .creating(apply_mode_b(0, &FockVector::vacuum()))
}

/// `e^{±α}(z)` on the lattice boson space.
pub fn vertex_field_a(sign: Sign) -> Field<BosonStateA> {
    let name = match sign {
        Sign::Plus => "e^{a}(z)",
        Sign::Minus => "e^{-a}(z)",
    };
    let state = FockVector::basis(BosonStateA::new(sign.value(), Default::default()));
    Field::new(name, Convention::PositivePower, Parity::Odd, CHARGED, move |p, v| {
        let mut op = VertexA::new(sign);
        v.map_linear(|s: &BosonStateA| {
            let target = s.weight() + p - sign.value() * s.charge();
            FockVector::from_terms(op.terms(s, target, target).into_iter().map(|(_, c, t)| (t, c)))
        })
    })
    .creating(state)
}

/// `e^{α}(z)` on the twisted boson space.
pub fn vertex_field_b() -> Field<BosonStateB> {
    let state = FockVector::basis(BosonStateB::new(true, Default::default()).expect("no variables"));
    Field::new("e^{a}(z)", Convention::PositivePower, Parity::Odd, NEUTRAL, |p, v| {
        let mut op = VertexB::new(Sign::Plus);
        v.map_linear(|s: &BosonStateB| {
            let target = s.degree() + p;
            FockVector::from_terms(op.terms(s, target, target).into_iter().map(|(_, c, t)| (t, c)))
        })
    })
    .creating(state)
}

/// `Y(|0>, z) = Id`.
pub fn identity_field<S: BasisState>() -> Field<S> {
    // The only non-zero coefficient is z^0, which preserves grade.
    Field::new(
        "Id",
        Convention::PositivePower,
        Parity::Even,
        NEUTRAL,
        |p, v: &FockVector<S>| if p == 0 { v.clone() } else { FockVector::zero() },
    )
    .creating(FockVector::vacuum())
}

/// `h(z) = :phi(z) psi(z): = Σ h_n z^{-n-1}`.
pub fn heisenberg_a() -> Field<FermionStateA> {
    normal_ordered_quadratic(&phi_a(), &psi_a(), Rat::one(), Convention::StandardVA)
        .expect("free fermions")
        .renamed("h(z)")
}

/// `h(z) = 1/4 :phi(z) phi(-z): = Σ h_n z^{-n}`.
pub fn heisenberg_b() -> Field<FermionStateB> {
    let phi = phi_b();
    let reflected = HopfAction::generator(HopfGenerator::T).apply(&phi);
    normal_ordered_quadratic(&phi, &reflected, Rat::new(1, 4), Convention::NegativePower)
        .expect("free fermions")
        .renamed("h(z)")
}

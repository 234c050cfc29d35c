//! Fields as mode families, the Hopf actions of `D` and `T_{-1}`, normal
//! ordering and mode brackets.

mod catalog;
mod field;
mod hopf;
mod normal;

pub use catalog::{heisenberg_a, heisenberg_b, identity_field, phi_a, phi_b, psi_a, vertex_field_a, vertex_field_b};
pub use field::{Convention, Field, GradeShift, Parity};
pub use hopf::{act_hopf, apply_generator, HopfAction, HopfGenerator};
pub use normal::{mode_commutator, normal_ordered_quadratic, BracketReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;
    use crate::boson::Sign;
    use crate::fock::{BasisState, FermionStateA, FermionStateB, FockVector};
    use HopfGenerator::{D, T};

    #[test]
    fn heisenberg_brackets_type_a() {
        let h = heisenberg_a();
        let r = mode_commutator(&h, &h, 2, -2, 8);
        assert!(r.is_scalar(), "{:?}", r.residual);
        assert_eq!(r.scalar, Rat::integer(2));
        let r = mode_commutator(&h, &h, 1, -1, 8);
        assert_eq!((r.is_scalar(), r.scalar), (true, Rat::one()));
        let r = mode_commutator(&h, &h, 1, 2, 8);
        assert_eq!((r.is_scalar(), r.scalar), (true, Rat::zero()));
    }

    #[test]
    fn heisenberg_brackets_type_b() {
        let h = heisenberg_b();
        let r = mode_commutator(&h, &h, 3, -3, 8);
        assert!(r.is_scalar(), "{:?}", r.residual);
        assert_eq!(r.scalar, Rat::new(3, 2));
        for s in FermionStateB::basis_up_to(8) {
            let v = FockVector::basis(s);
            for n in [-4, -2, 0, 2, 4] {
                assert!(h.mode(n, &v).is_zero(), "h_{n} on {v}");
            }
        }
    }

    #[test]
    fn clifford_bracket_type_b() {
        let phi = phi_b();
        let r = mode_commutator(&phi, &phi, 1, -1, 6);
        assert_eq!((r.is_scalar(), r.scalar), (true, Rat::integer(-2)));
    }

    #[test]
    fn normal_ordering_kills_the_vacuum_pairing() {
        let c = normal_ordered_quadratic(&phi_a(), &psi_a(), Rat::one(), Convention::PositivePower).unwrap();
        for p in -6..=6 {
            assert!(c.coefficient(p, &FockVector::vacuum()).vacuum_component().is_zero());
        }
        assert!(normal_ordered_quadratic(&c, &phi_a(), Rat::one(), Convention::PositivePower).is_err());
    }

    #[test]
    fn hopf_relations_on_modes() {
        let phi = phi_a();
        let dt = act_hopf(&[D, T], &phi);
        let td = act_hopf(&[T, D], &phi);
        let tt = act_hopf(&[T, T], &phi);
        for s in FermionStateA::basis_up_to(6) {
            let v = FockVector::basis(s);
            for n in -6..=6 {
                assert_eq!(dt.mode(n, &v), td.mode(n, &v).scale(&Rat::integer(-1)));
                assert_eq!(tt.mode(n, &v), phi.mode(n, &v));
            }
        }
    }

    #[test]
    fn reduced_and_literal_actions_agree() {
        let phi = phi_b();
        let word = [D, T, D, D, T];
        let literal = act_hopf(&word, &phi);
        let reduced = HopfAction::from_word(&word).apply(&phi);
        for s in FermionStateB::basis_up_to(5) {
            let v = FockVector::basis(s);
            for p in -7..=4 {
                assert_eq!(literal.coefficient(p, &v), reduced.coefficient(p, &v));
            }
        }
    }

    #[test]
    fn derivative_modes() {
        let phi = phi_a();
        let d = act_hopf(&[D], &phi);
        let v = FockVector::vacuum();
        for n in -3..=4 {
            assert_eq!(d.mode(n, &v), phi.mode(n + 1, &v).scale(&Rat::integer(n + 1)));
        }
    }

    #[test]
    fn convention_round_trip() {
        let h = heisenberg_a();
        let there = h.with_convention(Convention::PositivePower).with_convention(Convention::StandardVA);
        let v = FockVector::basis(FermionStateA::new(vec![1], vec![0]).unwrap());
        for n in -4..=4 {
            assert_eq!(there.mode(n, &v), h.mode(n, &v));
        }
        for c in [Convention::PositivePower, Convention::StandardVA, Convention::NegativePower] {
            assert!((-5..=5).all(|n| c.index(c.exponent(n)) == n));
        }
    }

    #[test]
    fn modes_below_the_window_vanish() {
        let f = vertex_field_a(Sign::Minus);
        for s in crate::boson::BosonStateA::basis_up_to(6) {
            let v = FockVector::basis(s.clone());
            let lo = f.p_min(s.grade());
            assert!((lo - 4..lo).all(|p| f.coefficient(p, &v).is_zero()));
        }
    }

    #[test]
    fn creation_at_zero() {
        let e = vertex_field_b();
        let vac = FockVector::vacuum();
        assert!((e.p_min(0)..0).all(|p| e.coefficient(p, &vac).is_zero()));
        assert_eq!(&e.coefficient(0, &vac), e.state().unwrap());
        let id = identity_field::<FermionStateB>();
        let v = FockVector::basis(FermionStateB::new(vec![2, 0]).unwrap());
        assert_eq!(id.coefficient(0, &v), v);
        assert!(id.coefficient(1, &v).is_zero());
    }
}

//! Heisenberg mode actions on the polynomial realizations.

use super::monomial::XMonomial;
use super::state::{BosonStateA, BosonStateB};
use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::fock::FockVector;

/// `h_n` on the untwisted space: `∂/∂x_n` for `n > 0`, multiplication by
/// `|n| x_|n|` for `n < 0`.
pub fn heis_apply_a(n: i64, v: &FockVector<BosonStateA>) -> Result<FockVector<BosonStateA>> {
    if n == 0 {
        return Err(Error::ZeroHeisenbergMode);
    }
    Ok(v.map_monomial(|s| {
        heis_monomial(n, s.monomial(), Rat::integer(n.abs()))
            .map(|(c, m)| (c, BosonStateA::new(s.charge(), m)))
    }))
}

/// `h_n` on the twisted space, `n` odd: `∂/∂x_n` for `n > 0`,
/// multiplication by `(|n|/2) x_|n|` for `n < 0`.
pub fn heis_apply_b(n: i64, v: &FockVector<BosonStateB>) -> Result<FockVector<BosonStateB>> {
    if n % 2 == 0 {
        return Err(Error::EvenTwistedMode(n));
    }
    Ok(v.map_monomial(|s| {
        heis_monomial(n, s.monomial(), Rat::new(n.abs(), 2))
            .map(|(c, m)| (c, BosonStateB::with(s.parity(), m)))
    }))
}

fn heis_monomial(n: i64, m: &XMonomial, creation_scale: Rat) -> Option<(Rat, XMonomial)> {
    let k = n.unsigned_abs() as u32;
    if n > 0 {
        m.derivative(k).map(|(e, lower)| (Rat::integer(e as i64), lower))
    } else {
        Some((creation_scale, m.times_var(k)))
    }
}

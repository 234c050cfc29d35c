//! Closed forms of the n-point functions and the analytic continuation test.

use serde::{Deserialize, Serialize};

use super::vev::{standard_variables, Model};
use crate::algebra::{determinant, expand, pfaffian, Alphabet, LaurentSeries, MultiPoly, PoleFactor, Rat, RationalFn};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedFormKind {
    /// `(-1)^{n(n-1)/2} det(1/(z_i - w_j))`, type A only.
    Determinant,
    /// `Pf((z_i - z_j)/(z_i + z_j))`, type B only.
    Pfaffian,
    /// The product formula of either type.
    Product,
}

/// The closed form over the alphabet of [`standard_variables`].
pub fn closed_form(model: Model, kind: ClosedFormKind, n: usize) -> Result<RationalFn> {
    let alphabet = Alphabet::new(&standard_variables(model, n))?;
    let one = RationalFn::one(&alphabet);
    match (model, kind) {
        (Model::A, ClosedFormKind::Determinant) => {
            let m: Vec<Vec<RationalFn>> = (0..n)
                .map(|i| (0..n).map(|j| RationalFn::inverse_difference(&alphabet, i, n + j)).collect())
                .collect();
            let det = determinant(&m, &one)?;
            Ok(det.scale(&Rat::sign_power((n * n.saturating_sub(1) / 2) as i64)))
        }
        (Model::A, ClosedFormKind::Product) => {
            let mut num = MultiPoly::one(&alphabet);
            let mut f = one.clone();
            for i in 0..n {
                for j in i + 1..n {
                    num = num
                        .mul(&MultiPoly::linear(&alphabet, i, -1, j))
                        .mul(&MultiPoly::linear(&alphabet, n + i, -1, n + j));
                }
                for j in 0..n {
                    f = f.mul(&RationalFn::inverse_difference(&alphabet, i, n + j));
                }
            }
            Ok(f.mul_poly(&num))
        }
        (Model::B, ClosedFormKind::Pfaffian) => {
            let size = 2 * n;
            let m: Vec<Vec<RationalFn>> = (0..size)
                .map(|i| (0..size).map(|j| neutral_entry(&alphabet, i, j)).collect())
                .collect();
            pfaffian(&m, &one)
        }
        (Model::B, ClosedFormKind::Product) => {
            let mut f = one;
            for i in 0..2 * n {
                for j in i + 1..2 * n {
                    f = f.mul(&neutral_entry(&alphabet, i, j));
                }
            }
            Ok(f)
        }
        (m, k) => Err(Error::Invalid(format!("no {k:?} closed form in type {m}"))),
    }
}

/// `(z_i - z_j)/(z_i + z_j)`, zero on the diagonal.
fn neutral_entry(alphabet: &Alphabet, i: usize, j: usize) -> RationalFn {
    if i == j {
        return RationalFn::zero(alphabet);
    }
    RationalFn::pole(alphabet, PoleFactor::sum(i, j), 1).mul_poly(&MultiPoly::linear(alphabet, i, -1, j))
}

/// Whether `series` is the truncated expansion of `candidate` in the
/// series' own variable order and cutoff.
pub fn analytic_continuation_check(series: &LaurentSeries, candidate: &RationalFn) -> Result<bool> {
    Ok(continuation_difference(series, candidate)?.is_none())
}

/// The first monomial where `series` and the expansion of `candidate`
/// disagree, as `(exponents, series coefficient, expansion coefficient)`.
pub fn continuation_difference(
    series: &LaurentSeries,
    candidate: &RationalFn,
) -> Result<Option<(Vec<i32>, Rat, Rat)>> {
    let expanded = expand(candidate, series.vars(), series.cutoff())?;
    series.first_difference(&expanded)
}

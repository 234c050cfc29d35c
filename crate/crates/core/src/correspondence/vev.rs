//! Vacuum expectation values by direct, truncated operator application.
//!
//! A word `a_1(x_1) … a_L(x_L)` is applied to `|0>` from the right. Every
//! operator changes the grade of a state by `slope·p + offset` when it
//! contributes `x^p`, so a state of grade `g` with `l` operators still to
//! its left can only return to the vacuum if `g <= l·(slope·D - offset)`,
//! and the remaining operators then contribute total degree exactly
//! `-(g + l·offset)/slope`. Both facts prune the expansion to the cutoff
//! window without dropping any contributing term.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentSeries, Rat};
use crate::boson::{BosonStateA, BosonStateB, Sign, VertexA, VertexB};
use crate::error::{Error, Result};
use crate::fields::GradeShift;
use crate::fock::{BasisState, FermionKind, FermionStateA, FermionStateB, FockVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    A,
    B,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::A => "A",
            Model::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Fermion,
    Boson,
}

/// A generating field: `phi`/`psi` on the fermion side, `e^{α}`/`e^{-α}` on
/// the boson side. Type B has `phi` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Phi,
    Psi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VevSpec {
    pub model: Model,
    pub side: Side,
    pub word: Vec<(Symbol, String)>,
    pub cutoff: u32,
}

/// `z1, …, zn` followed by `w1, …, wn` in type A; `z1, …, z2n` in type B.
pub fn standard_variables(model: Model, n: usize) -> Vec<String> {
    match model {
        Model::A => (1..=n)
            .map(|i| format!("z{i}"))
            .chain((1..=n).map(|i| format!("w{i}")))
            .collect(),
        Model::B => (1..=2 * n).map(|i| format!("z{i}")).collect(),
    }
}

impl VevSpec {
    /// `phi(z1)…phi(zn) psi(w1)…psi(wn)` in type A and `phi(z1)…phi(z2n)`
    /// in type B.
    pub fn standard(model: Model, side: Side, n: usize, cutoff: u32) -> Self {
        let vars = standard_variables(model, n);
        let word = vars
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let s = if model == Model::A && i >= n {
                    Symbol::Psi
                } else {
                    Symbol::Phi
                };
                (s, v)
            })
            .collect();
        VevSpec {
            model,
            side,
            word,
            cutoff,
        }
    }

    pub fn variables(&self) -> Vec<String> {
        self.word.iter().map(|(_, v)| v.clone()).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.model == Model::B && self.word.iter().any(|(s, _)| *s == Symbol::Psi) {
            return Err(Error::Invalid("type B has no psi field".into()));
        }
        // Rejects duplicate or malformed names.
        LaurentSeries::zero(&self.variables(), self.cutoff).map(|_| ())
    }
}

/// One operator of a word applied to a vector whose states share a grade:
/// the non-zero `(p, coefficient of x^p)` with `p` in a range.
type Step<'a, S> = Box<dyn FnMut(&FockVector<S>, i64, i64) -> Vec<(i64, FockVector<S>)> + 'a>;

/// A step built from a single-state rule.
fn per_state<'a, S: BasisState>(rule: impl Fn(&S, i64) -> Option<(Rat, S)> + 'a) -> Step<'a, S> {
    Box::new(move |v: &FockVector<S>, lo: i64, hi: i64| {
        (lo..=hi)
            .map(|p| {
                let mut out = FockVector::zero();
                for (s, c) in v.terms() {
                    if let Some((k, t)) = rule(s, p) {
                        out.add_term(t, c * &k);
                    }
                }
                (p, out)
            })
            .filter(|(_, out)| !out.is_zero())
            .collect()
    })
}

fn run_word<S: BasisState>(mut steps: Vec<Step<'_, S>>, shift: GradeShift, vars: &[String], cutoff: u32) -> Result<LaurentSeries> {
    let d = cutoff as i64;
    let max_drop = shift.slope * d - shift.offset;
    // Exponents chosen so far (innermost last) -> the vector they multiply.
    // All states in one vector share a grade, fixed by the exponents.
    let mut current: HashMap<Vec<i32>, FockVector<S>> = HashMap::new();
    current.insert(Vec::new(), FockVector::vacuum());
    for i in (0..steps.len()).rev() {
        let left = i as i64;
        let mut next: HashMap<Vec<i32>, FockVector<S>> = HashMap::new();
        for (exps, v) in &current {
            let Some(g) = v.homogeneous_grade() else { continue };
            let so_far: i64 = exps.iter().map(|&e| e as i64).sum();
            // The operators still to apply return the grade to zero, so the
            // final total degree is fixed already:
            // so_far + p - (g + slope p + offset + left offset) / slope.
            let rest = g + (left + 1) * shift.offset;
            if rest.rem_euclid(shift.slope) != 0 || !(-d..=d).contains(&(so_far - rest / shift.slope)) {
                continue;
            }
            let p_hi = (left * max_drop - g - shift.offset).div_euclid(shift.slope);
            if p_hi < -d {
                continue;
            }
            for (p, w) in steps[i](v, -d, p_hi) {
                let mut e = Vec::with_capacity(exps.len() + 1);
                e.push(p as i32);
                e.extend_from_slice(exps);
                next.entry(e).or_default().add_assign(&w);
            }
        }
        next.retain(|_, v| !v.is_zero());
        current = next;
    }
    let terms = current
        .into_iter()
        .map(|(e, v)| (e, v.vacuum_component()))
        .filter(|(_, c)| !c.is_zero());
    LaurentSeries::from_terms(vars, cutoff, terms)
}

const CHARGED: GradeShift = GradeShift { slope: 2, offset: 1 };
const NEUTRAL: GradeShift = GradeShift { slope: 1, offset: 0 };

/// `<0| a_1(x_1) … a_L(x_L) |0>` on the fermion side, expanded in the
/// region `|x_1| ≫ … ≫ |x_L|` and truncated at the cutoff.
pub fn vev_fermion(spec: &VevSpec) -> Result<LaurentSeries> {
    spec.validate()?;
    let vars = spec.variables();
    match spec.model {
        Model::A => {
            let steps: Vec<Step<'_, FermionStateA>> = spec
                .word
                .iter()
                .map(|(sym, _)| {
                    let kind = match sym {
                        Symbol::Phi => FermionKind::Phi,
                        Symbol::Psi => FermionKind::Psi,
                    };
                    per_state(move |s: &FermionStateA, p| s.apply(kind, p))
                })
                .collect();
            run_word(steps, CHARGED, &vars, spec.cutoff)
        }
        Model::B => {
            let steps: Vec<Step<'_, FermionStateB>> = spec
                .word
                .iter()
                .map(|_| per_state(|s: &FermionStateB, p| s.apply(p)))
                .collect();
            run_word(steps, NEUTRAL, &vars, spec.cutoff)
        }
    }
}

/// The same expectation value with every field replaced by its vertex
/// operator image.
pub fn vev_boson(spec: &VevSpec) -> Result<LaurentSeries> {
    spec.validate()?;
    let vars = spec.variables();
    match spec.model {
        Model::A => {
            let steps: Vec<Step<'_, BosonStateA>> = spec
                .word
                .iter()
                .map(|(sym, _)| {
                    let sign = match sym {
                        Symbol::Phi => Sign::Plus,
                        Symbol::Psi => Sign::Minus,
                    };
                    let mut op = VertexA::new(sign);
                    Box::new(move |v: &FockVector<BosonStateA>, lo: i64, hi: i64| {
                        let Some(s) = v.terms().keys().next() else { return Vec::new() };
                        // p = w_after - w + σk
                        let base = s.weight() - sign.value() * s.charge();
                        op.apply_homogeneous(v, base + lo, base + hi)
                    }) as Step<'_, BosonStateA>
                })
                .collect();
            run_word(steps, CHARGED, &vars, spec.cutoff)
        }
        Model::B => {
            let steps: Vec<Step<'_, BosonStateB>> = spec
                .word
                .iter()
                .map(|_| {
                    let mut op = VertexB::new(Sign::Plus);
                    Box::new(move |v: &FockVector<BosonStateB>, lo: i64, hi: i64| {
                        let Some(s) = v.terms().keys().next() else { return Vec::new() };
                        let w = s.degree();
                        op.apply_homogeneous(v, w + lo, w + hi)
                    }) as Step<'_, BosonStateB>
                })
                .collect();
            run_word(steps, NEUTRAL, &vars, spec.cutoff)
        }
    }
}

pub fn vev(spec: &VevSpec) -> Result<LaurentSeries> {
    match spec.side {
        Side::Fermion => vev_fermion(spec),
        Side::Boson => vev_boson(spec),
    }
}

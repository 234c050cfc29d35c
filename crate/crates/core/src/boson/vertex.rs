//! Truncated vertex operators `e^{±α}(z)`.
//!
//! Each operator is a translation `x_n ↦ x_n + c_n z^{-n}` (the annihilation
//! exponential) followed by multiplication with `exp(Σ b x_n z^n)` (the
//! creation exponential), together with the lattice factor. Only terms whose
//! resulting weight falls in a requested window are generated, which keeps
//! every expansion finite.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::monomial::XMonomial;
use super::state::{BosonStateA, BosonStateB};
use crate::algebra::{binomial, Rat};
use crate::fock::FockVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Coefficients `C_a` of `exp(Σ b x_n z^n)`, computed on demand from
/// `a C_a = Σ_n n b x_n C_{a-n}`.
struct CreationSeries {
    odd_only: bool,
    b: Rat,
    polys: Vec<Vec<(XMonomial, Rat)>>,
}

impl CreationSeries {
    fn new(odd_only: bool, b: Rat) -> Self {
        CreationSeries {
            odd_only,
            b,
            polys: vec![vec![(XMonomial::one(), Rat::one())]],
        }
    }

    fn get(&mut self, a: usize) -> &[(XMonomial, Rat)] {
        while self.polys.len() <= a {
            let next = self.polys.len();
            let mut acc: HashMap<XMonomial, Rat> = HashMap::new();
            for n in 1..=next {
                if self.odd_only && n % 2 == 0 {
                    continue;
                }
                let scale = &self.b * Rat::new(n as i64, next as i64);
                for (m, c) in &self.polys[next - n] {
                    *acc.entry(m.times_var(n as u32)).or_default() += c * &scale;
                }
            }
            let mut poly: Vec<(XMonomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            poly.sort();
            self.polys.push(poly);
        }
        &self.polys[a]
    }
}

/// The Heisenberg part of a vertex operator.
struct HeisenbergPart {
    /// `c_n = shift_numerator / n`.
    shift_numerator: Rat,
    creation: CreationSeries,
}

impl HeisenbergPart {
    /// The translation applied to `m`: terms `(J, coefficient, monomial)`
    /// where `J` is the weight removed.
    fn lower(&self, m: &XMonomial) -> Vec<(i64, Rat, XMonomial)> {
        let mut lowered: Vec<(i64, Rat, XMonomial)> = vec![(0, Rat::one(), XMonomial::one())];
        for (n, e) in m.iter() {
            let c = &self.shift_numerator / Rat::integer(n as i64);
            let mut next = Vec::with_capacity(lowered.len() * (e as usize + 1));
            for (j_acc, coeff, rest) in &lowered {
                let mut power = Rat::one();
                for j in 0..=e {
                    let k = coeff * &binomial(e as u64, j as u64) * &power;
                    let kept = XMonomial::from_pairs([(n, e - j)]);
                    next.push((j_acc + n as i64 * j as i64, k, rest.mul(&kept)));
                    power = power * &c;
                }
            }
            lowered = next;
        }
        lowered
    }

    /// All `(a - J, coefficient, monomial)` with the result weight in
    /// `[w_lo, w_hi]`, where `J` is the weight removed by the translation
    /// and `a` the weight added by the creation factor.
    fn apply(&mut self, m: &XMonomial, w_lo: i64, w_hi: i64) -> Vec<(i64, Rat, XMonomial)> {
        let w = m.weight();
        let mut out = Vec::new();
        for (j, coeff, rest) in self.lower(m) {
            let base = w - j;
            if base > w_hi {
                continue;
            }
            for a in (w_lo - base).max(0)..=(w_hi - base) {
                for (cm, cc) in self.creation.get(a as usize) {
                    out.push((a - j, &coeff * cc, rest.mul(cm)));
                }
            }
        }
        out
    }

    /// [`Self::apply`] on a combination of monomials of one weight `w`,
    /// merging terms after the translation and again after the creation
    /// factor. Keys of the result are `a - J`.
    fn apply_combination(
        &mut self,
        v: &BTreeMap<XMonomial, Rat>,
        w: i64,
        w_lo: i64,
        w_hi: i64,
    ) -> BTreeMap<i64, HashMap<XMonomial, Rat>> {
        let mut lowered: BTreeMap<i64, HashMap<XMonomial, Rat>> = BTreeMap::new();
        for (m, c) in v {
            for (j, k, rest) in self.lower(m) {
                if w - j <= w_hi {
                    *lowered.entry(j).or_default().entry(rest).or_default() += c * &k;
                }
            }
        }
        let mut out: BTreeMap<i64, HashMap<XMonomial, Rat>> = BTreeMap::new();
        for (j, rests) in lowered {
            let base = w - j;
            for a in (w_lo - base).max(0)..=(w_hi - base) {
                let target = out.entry(a - j).or_default();
                for (cm, cc) in self.creation.get(a as usize) {
                    for (rest, c) in &rests {
                        if !c.is_zero() {
                            *target.entry(rest.mul(cm)).or_default() += c * cc;
                        }
                    }
                }
            }
        }
        out
    }
}

fn to_vectors<S: crate::fock::BasisState>(
    parts: BTreeMap<i64, HashMap<XMonomial, Rat>>,
    shift: i64,
    state: impl Fn(XMonomial) -> S,
    negate_odd: bool,
) -> Vec<(i64, FockVector<S>)> {
    parts
        .into_iter()
        .map(|(q, terms)| {
            let p = q + shift;
            let sign = if negate_odd && p % 2 != 0 { -Rat::one() } else { Rat::one() };
            let v = FockVector::from_terms(terms.into_iter().map(|(m, c)| (state(m), c * &sign)));
            (p, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// `e^{±α}(z)` on the lattice boson space.
pub struct VertexA {
    sign: Sign,
    heis: HeisenbergPart,
}

impl VertexA {
    pub fn new(sign: Sign) -> Self {
        let s = Rat::integer(sign.value());
        VertexA {
            sign,
            heis: HeisenbergPart {
                shift_numerator: -s.clone(),
                creation: CreationSeries::new(false, s),
            },
        }
    }

    /// Terms `(p, c, state)` of `e^{±α}(z) s = Σ c z^p state` whose result
    /// weight lies in `[w_lo, w_hi]`.
    pub fn terms(&mut self, s: &BosonStateA, w_lo: i64, w_hi: i64) -> Vec<(i64, Rat, BosonStateA)> {
        // z^{±∂α} sees the charge before e^{±α} shifts it.
        let lattice = self.sign.value() * s.charge();
        let charge = s.charge() + self.sign.value();
        self.heis
            .apply(s.monomial(), w_lo, w_hi)
            .into_iter()
            .map(|(p, c, m)| (p + lattice, c, BosonStateA::new(charge, m)))
            .collect()
    }

    /// The operator on a combination of states sharing one charge and one
    /// weight, as `(p, vector)` pairs with result weight in `[w_lo, w_hi]`.
    pub fn apply_homogeneous(
        &mut self,
        v: &FockVector<BosonStateA>,
        w_lo: i64,
        w_hi: i64,
    ) -> Vec<(i64, FockVector<BosonStateA>)> {
        let Some(first) = v.terms().keys().next() else {
            return Vec::new();
        };
        let (k, w) = (first.charge(), first.weight());
        debug_assert!(v.terms().keys().all(|s| s.charge() == k && s.weight() == w));
        let monomials: BTreeMap<XMonomial, Rat> = v.terms().iter().map(|(s, c)| (s.monomial().clone(), c.clone())).collect();
        let parts = self.heis.apply_combination(&monomials, w, w_lo, w_hi);
        let charge = k + self.sign.value();
        to_vectors(parts, self.sign.value() * k, |m| BosonStateA::new(charge, m), false)
    }
}

/// `e^{α}(±z)` on the twisted boson space.
pub struct VertexB {
    arg_sign: Sign,
    heis: HeisenbergPart,
}

impl VertexB {
    pub fn new(arg_sign: Sign) -> Self {
        VertexB {
            arg_sign,
            heis: HeisenbergPart {
                shift_numerator: Rat::integer(-2),
                creation: CreationSeries::new(true, Rat::one()),
            },
        }
    }

    pub fn terms(&mut self, s: &BosonStateB, w_lo: i64, w_hi: i64) -> Vec<(i64, Rat, BosonStateB)> {
        let parity = !s.parity();
        let negate_odd = self.arg_sign == Sign::Minus;
        self.heis
            .apply(s.monomial(), w_lo, w_hi)
            .into_iter()
            .map(|(p, c, m)| {
                let c = if negate_odd && p % 2 != 0 { -c } else { c };
                (p, c, BosonStateB::with(parity, m))
            })
            .collect()
    }

    /// The operator on a combination of states sharing one parity and one
    /// degree, as `(p, vector)` pairs with result degree in `[w_lo, w_hi]`.
    pub fn apply_homogeneous(
        &mut self,
        v: &FockVector<BosonStateB>,
        w_lo: i64,
        w_hi: i64,
    ) -> Vec<(i64, FockVector<BosonStateB>)> {
        let Some(first) = v.terms().keys().next() else {
            return Vec::new();
        };
        let (parity, w) = (first.parity(), first.degree());
        debug_assert!(v.terms().keys().all(|s| s.parity() == parity && s.degree() == w));
        let monomials: BTreeMap<XMonomial, Rat> = v.terms().iter().map(|(s, c)| (s.monomial().clone(), c.clone())).collect();
        let parts = self.heis.apply_combination(&monomials, w, w_lo, w_hi);
        to_vectors(parts, 0, |m| BosonStateB::with(!parity, m), self.arg_sign == Sign::Minus)
    }
}

fn collect<S: crate::fock::BasisState>(terms: Vec<(i64, Rat, S)>, into: &mut BTreeMap<i64, FockVector<S>>, scale: &Rat) {
    for (p, c, s) in terms {
        into.entry(p).or_default().add_term(s, c * scale);
    }
}

fn prune<S: crate::fock::BasisState>(mut m: BTreeMap<i64, FockVector<S>>) -> BTreeMap<i64, FockVector<S>> {
    m.retain(|_, v| !v.is_zero());
    m
}

/// `e^{±α}(z) v` as a map from z-exponents in `[-D, D]` to vectors.
pub fn vertex_a(sign: Sign, v: &FockVector<BosonStateA>, cutoff: u32) -> BTreeMap<i64, FockVector<BosonStateA>> {
    let d = cutoff as i64;
    let mut op = VertexA::new(sign);
    let mut out = BTreeMap::new();
    for (s, c) in v.terms() {
        // p = w_after - w + σk
        let shift = sign.value() * s.charge();
        let w = s.weight();
        collect(op.terms(s, w - d - shift, w + d - shift), &mut out, c);
    }
    prune(out)
}

/// `e^{α}(±z) v` as a map from z-exponents in `[-D, D]` to vectors.
pub fn vertex_b(arg_sign: Sign, v: &FockVector<BosonStateB>, cutoff: u32) -> BTreeMap<i64, FockVector<BosonStateB>> {
    let d = cutoff as i64;
    let mut op = VertexB::new(arg_sign);
    let mut out = BTreeMap::new();
    for (s, c) in v.terms() {
        let w = s.degree();
        collect(op.terms(s, w - d, w + d), &mut out, c);
    }
    prune(out)
}

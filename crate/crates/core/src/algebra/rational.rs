//! Rational functions whose poles lie on `z_i = 0` and `z_i = ±z_j`.
//!
//! Denominators are kept as multisets of linear [`PoleFactor`] atoms and are
//! never multiplied out, so reduction is a divisibility test per atom.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::poly::{Alphabet, MultiPoly};
use crate::algebra::rat::{factorial, Rat};
use crate::error::{Error, Result};

/// A linear denominator atom. Indices refer to the alphabet and satisfy
/// `i < j` for the two-variable forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PoleFactor {
    /// `z_i`
    Var(usize),
    /// `z_i - z_j`
    Diff(usize, usize),
    /// `z_i + z_j`
    Sum(usize, usize),
}

impl PoleFactor {
    /// The atom for `z_i - z_j` together with the sign absorbed by ordering
    /// the indices.
    pub fn difference(i: usize, j: usize) -> (i64, PoleFactor) {
        assert_ne!(i, j, "z_i - z_i is not a pole factor");
        if i < j {
            (1, PoleFactor::Diff(i, j))
        } else {
            (-1, PoleFactor::Diff(j, i))
        }
    }

    pub fn sum(i: usize, j: usize) -> PoleFactor {
        assert_ne!(i, j, "z_i + z_i is not a pole factor");
        PoleFactor::Sum(i.min(j), i.max(j))
    }

    pub fn as_poly(&self, alphabet: &Alphabet) -> MultiPoly {
        match *self {
            PoleFactor::Var(i) => MultiPoly::var(alphabet, i),
            PoleFactor::Diff(i, j) => MultiPoly::linear(alphabet, i, -1, j),
            PoleFactor::Sum(i, j) => MultiPoly::linear(alphabet, i, 1, j),
        }
    }

    pub fn involves(&self, v: usize) -> bool {
        match *self {
            PoleFactor::Var(i) => i == v,
            PoleFactor::Diff(i, j) | PoleFactor::Sum(i, j) => i == v || j == v,
        }
    }

    pub fn max_index(&self) -> usize {
        match *self {
            PoleFactor::Var(i) => i,
            PoleFactor::Diff(_, j) | PoleFactor::Sum(_, j) => j,
        }
    }

    /// `∂ atom / ∂ z_v`, a constant.
    fn partial(&self, v: usize) -> i64 {
        match *self {
            PoleFactor::Var(i) => (i == v) as i64,
            PoleFactor::Diff(i, j) => {
                if i == v {
                    1
                } else if j == v {
                    -1
                } else {
                    0
                }
            }
            PoleFactor::Sum(i, j) => (i == v || j == v) as i64,
        }
    }

    fn divide(&self, p: &MultiPoly) -> Option<MultiPoly> {
        match *self {
            PoleFactor::Var(i) => p.div_var(i),
            PoleFactor::Diff(i, j) => p.div_linear(i, 1, j),
            PoleFactor::Sum(i, j) => p.div_linear(i, -1, j),
        }
    }

    fn eval(&self, point: &[Rat]) -> Rat {
        match *self {
            PoleFactor::Var(i) => point[i].clone(),
            PoleFactor::Diff(i, j) => &point[i] - &point[j],
            PoleFactor::Sum(i, j) => &point[i] + &point[j],
        }
    }

    /// Image of the atom under `z_v -> s * z_t` (or `z_v -> 0`), as a scalar
    /// times an atom. `None` means the atom vanishes identically.
    fn substitute(&self, v: usize, s: i64, target: Option<usize>) -> Option<(Rat, PoleFactor)> {
        if !self.involves(v) {
            return Some((Rat::one(), *self));
        }
        // Write the atom as z_a + t z_b.
        let (a, t, b) = match *self {
            PoleFactor::Var(_) => {
                return target.map(|j| (Rat::integer(s), PoleFactor::Var(j)));
            }
            PoleFactor::Diff(i, j) => (i, -1, j),
            PoleFactor::Sum(i, j) => (i, 1, j),
        };
        // After substitution: ca * z_x + cb * z_y.
        let (x, cx, y, cy) = if a == v {
            match target {
                None => return Some((Rat::integer(t), PoleFactor::Var(b))),
                Some(j) => (j, s, b, t),
            }
        } else {
            match target {
                None => return Some((Rat::one(), PoleFactor::Var(a))),
                Some(j) => (a, 1, j, t * s),
            }
        };
        if x == y {
            let c = cx + cy;
            return (c != 0).then(|| (Rat::integer(c), PoleFactor::Var(x)));
        }
        // cx z_x + cy z_y = cx (z_x + (cy/cx) z_y), with cx, cy = ±1.
        let ratio = cy * cx;
        if ratio == 1 {
            Some((Rat::integer(cx), PoleFactor::sum(x, y)))
        } else {
            let (sign, atom) = PoleFactor::difference(x, y);
            Some((Rat::integer(cx * sign), atom))
        }
    }
}

/// Denominator multiset: atom -> positive exponent.
pub type Denominator = BTreeMap<PoleFactor, u32>;

/// An exact rational function `num / Π atom^e`, kept in reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: MultiPoly,
    den: Denominator,
}

impl RationalFn {
    /// Builds and reduces `num / den`.
    pub fn new(num: MultiPoly, den: Denominator) -> Self {
        for atom in den.keys() {
            assert!(atom.max_index() < num.alphabet().len(), "atom outside alphabet");
        }
        RationalFn { num, den }.reduce()
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        RationalFn {
            num,
            den: Denominator::new(),
        }
    }

    pub fn zero(alphabet: &Alphabet) -> Self {
        Self::from_poly(MultiPoly::zero(alphabet))
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        Self::from_poly(MultiPoly::one(alphabet))
    }

    pub fn constant(alphabet: &Alphabet, c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(alphabet, c))
    }

    pub fn var(alphabet: &Alphabet, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(alphabet, i))
    }

    /// `1 / atom^e`.
    pub fn pole(alphabet: &Alphabet, atom: PoleFactor, e: u32) -> Self {
        let mut den = Denominator::new();
        if e > 0 {
            den.insert(atom, e);
        }
        RationalFn {
            num: MultiPoly::one(alphabet),
            den,
        }
    }

    /// `1 / (z_i - z_j)` with the sign normalised into the numerator.
    pub fn inverse_difference(alphabet: &Alphabet, i: usize, j: usize) -> Self {
        let (sign, atom) = PoleFactor::difference(i, j);
        Self::pole(alphabet, atom, 1).scale(&Rat::integer(sign))
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.num.alphabet()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Canonical reduced representative: cancels every denominator atom
    /// that divides the numerator.
    pub fn reduce(self) -> Self {
        let RationalFn { mut num, den } = self;
        if num.is_zero() {
            return RationalFn {
                num,
                den: Denominator::new(),
            };
        }
        let mut out = Denominator::new();
        for (atom, mut e) in den {
            while e > 0 {
                match atom.divide(&num) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                out.insert(atom, e);
            }
        }
        RationalFn { num, den: out }
    }

    fn check(&self, other: &RationalFn) -> Result<()> {
        if self.alphabet().same(other.alphabet()) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Multiplies the numerator by `Π atom^e`.
    fn times_atoms(num: &MultiPoly, atoms: &Denominator) -> MultiPoly {
        let mut out = num.clone();
        for (atom, &e) in atoms {
            for _ in 0..e {
                out = match *atom {
                    PoleFactor::Var(i) => out.mul_linear(i, 0, None),
                    PoleFactor::Diff(i, j) => out.mul_linear(i, -1, Some(j)),
                    PoleFactor::Sum(i, j) => out.mul_linear(i, 1, Some(j)),
                };
            }
        }
        out
    }

    pub fn try_add(&self, other: &RationalFn) -> Result<RationalFn> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut lcm = self.den.clone();
        for (a, &e) in &other.den {
            let slot = lcm.entry(*a).or_insert(0);
            *slot = (*slot).max(e);
        }
        let missing = |den: &Denominator| -> Denominator {
            lcm.iter()
                .filter_map(|(a, &e)| {
                    let have = den.get(a).copied().unwrap_or(0);
                    (e > have).then_some((*a, e - have))
                })
                .collect()
        };
        let n1 = Self::times_atoms(&self.num, &missing(&self.den));
        let n2 = Self::times_atoms(&other.num, &missing(&other.den));
        Ok(RationalFn {
            num: n1.add(&n2),
            den: lcm,
        }
        .reduce())
    }

    pub fn try_mul(&self, other: &RationalFn) -> Result<RationalFn> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RationalFn::zero(self.alphabet()));
        }
        let mut den = self.den.clone();
        for (a, &e) in &other.den {
            *den.entry(*a).or_insert(0) += e;
        }
        Ok(RationalFn {
            num: self.num.mul(&other.num),
            den,
        }
        .reduce())
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        self.try_add(other).expect("alphabet mismatch in add")
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        self.try_mul(other).expect("alphabet mismatch in mul")
    }

    pub fn neg(&self) -> RationalFn {
        self.scale(&Rat::integer(-1))
    }

    pub fn scale(&self, c: &Rat) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero(self.alphabet());
        }
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `1/f`, defined when the numerator is a constant times a product of
    /// pole atoms.
    pub fn recip(&self) -> Result<RationalFn> {
        let (c, atoms) = crate::algebra::factor_into_atoms(&self.num)
            .ok_or_else(|| Error::Invalid(format!("1/({self}) has a pole outside z = 0, z_i = ±z_j")))?;
        let mut num = MultiPoly::constant(self.alphabet(), c.recip());
        for (a, &e) in &self.den {
            num = num.mul(&a.as_poly(self.alphabet()).pow(e));
        }
        Ok(RationalFn::new(num, atoms))
    }

    pub fn pow(&self, k: u32) -> RationalFn {
        let mut out = RationalFn::one(self.alphabet());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &MultiPoly) -> RationalFn {
        RationalFn {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
        .reduce()
    }

    /// `atom^e` as a polynomial rational function; the reciprocal of
    /// [`RationalFn::pole`].
    pub fn atom_power(alphabet: &Alphabet, atom: PoleFactor, e: u32) -> RationalFn {
        RationalFn::from_poly(atom.as_poly(alphabet).pow(e))
    }

    /// Denominator multiplied out as a polynomial.
    pub fn denominator_poly(&self) -> MultiPoly {
        Self::times_atoms(&MultiPoly::one(self.alphabet()), &self.den)
    }

    /// Equality by cross-multiplication `N1 * D2 == N2 * D1`.
    pub fn equals_cross(&self, other: &RationalFn) -> Result<bool> {
        let (l, r) = self.cross_multiplied(other)?;
        Ok(l == r)
    }

    /// The two polynomials compared by [`RationalFn::equals_cross`].
    pub fn cross_multiplied(&self, other: &RationalFn) -> Result<(MultiPoly, MultiPoly)> {
        self.check(other)?;
        Ok((
            Self::times_atoms(&self.num, &other.den),
            Self::times_atoms(&other.num, &self.den),
        ))
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let mut d = Rat::one();
        for (a, &e) in &self.den {
            let v = a.eval(point);
            if v.is_zero() {
                return Err(Error::Pole);
            }
            d = d * v.pow(e as i32);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Indices of the variables the function depends on syntactically.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.alphabet().len()];
        for i in self.num.used_vars() {
            used[i] = true;
        }
        for a in self.den.keys() {
            for (i, u) in used.iter_mut().enumerate() {
                if a.involves(i) {
                    *u = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    /// Total degree range: numerator degrees minus the number of atoms.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let poles: i64 = self.den.values().map(|&e| e as i64).sum();
        self.num.degree_range().map(|(lo, hi)| (lo - poles, hi - poles))
    }

    pub fn derivative(&self, v: usize) -> RationalFn {
        let touching: Denominator = self
            .den
            .iter()
            .filter(|(a, _)| a.partial(v) != 0)
            .map(|(a, &e)| (*a, e))
            .collect();
        let mut den = self.den.clone();
        for a in touching.keys() {
            *den.get_mut(a).unwrap() += 1;
        }
        let mut num = Self::times_atoms(&self.num.derivative(v), &touching.iter().map(|(a, _)| (*a, 1)).collect());
        for (a, &e) in &touching {
            let others: Denominator = touching
                .keys()
                .filter(|b| *b != a)
                .map(|b| (*b, 1))
                .collect();
            let c = Rat::integer(-(e as i64) * a.partial(v));
            num = num.add(&Self::times_atoms(&self.num, &others).scale(&c));
        }
        RationalFn { num, den }.reduce()
    }

    /// Substitutes `z_v -> s * z_t` (`target = Some(t)`) or `z_v -> 0`
    /// (`target = None`). Fails if a denominator atom vanishes.
    pub fn substitute(&self, v: usize, s: i64, target: Option<usize>) -> Result<RationalFn> {
        if let Some(t) = target {
            if t == v {
                return Err(Error::Invalid("substitution target equals source".into()));
            }
        }
        let mut num = self.num.substitute(v, s, target);
        let mut den = Denominator::new();
        for (a, &e) in &self.den {
            let (c, atom) = a.substitute(v, s, target).ok_or(Error::Pole)?;
            num = num.scale(&c.pow(-(e as i32)));
            *den.entry(atom).or_insert(0) += e;
        }
        Ok(RationalFn { num, den }.reduce())
    }

    /// `Res_{z_v = s z_t} f · (z_v - s z_t)^power`, a rational function in
    /// the remaining variables (zero at regular points).
    pub fn residue_at(&self, v: usize, s: i64, t: usize, power: u32) -> Result<RationalFn> {
        if v == t {
            return Err(Error::Invalid("residue point must involve another variable".into()));
        }
        if s != 1 && s != -1 {
            return Err(Error::Invalid("residue points are z = ±w".into()));
        }
        let shifted = self.mul_poly(&MultiPoly::linear(self.alphabet(), v, -s, t).pow(power));
        let (sigma, atom) = if s == 1 {
            PoleFactor::difference(v, t)
        } else {
            (1, PoleFactor::sum(v, t))
        };
        let order = match shifted.den.get(&atom) {
            None => return Ok(RationalFn::zero(self.alphabet())),
            Some(&e) => e,
        };
        let mut den = shifted.den.clone();
        den.remove(&atom);
        // atom = sigma (z_v - s z_t), so (z_v - s z_t)^e f = sigma^e N / R.
        let mut h = RationalFn {
            num: shifted.num.scale(&Rat::sign_power(if sigma < 0 { order as i64 } else { 0 })),
            den,
        };
        for _ in 1..order {
            h = h.derivative(v);
        }
        Ok(h
            .substitute(v, s, Some(t))?
            .scale(&factorial(order as u64 - 1).recip()))
    }

    /// Re-expresses the function over a larger alphabet.
    pub fn embed(&self, target: &Alphabet) -> Result<RationalFn> {
        let num = self.num.embed(target)?;
        let map = |i: usize| target.require(self.alphabet().name(i));
        let mut den = Denominator::new();
        let mut sign = 1i64;
        for (a, &e) in &self.den {
            let atom = match *a {
                PoleFactor::Var(i) => PoleFactor::Var(map(i)?),
                PoleFactor::Diff(i, j) => {
                    let (s, atom) = PoleFactor::difference(map(i)?, map(j)?);
                    if s < 0 && e % 2 == 1 {
                        sign = -sign;
                    }
                    atom
                }
                PoleFactor::Sum(i, j) => PoleFactor::sum(map(i)?, map(j)?),
            };
            den.insert(atom, e);
        }
        Ok(RationalFn {
            num: num.scale(&Rat::integer(sign)),
            den,
        })
    }
}

impl std::fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zw() -> Alphabet {
        Alphabet::new(&["z", "w"]).unwrap()
    }

    fn lin(a: &Alphabet, s: i64) -> MultiPoly {
        MultiPoly::linear(a, 0, s, 1)
    }

    fn den(items: &[(PoleFactor, u32)]) -> Denominator {
        items.iter().copied().collect()
    }

    const D: PoleFactor = PoleFactor::Diff(0, 1);
    const S: PoleFactor = PoleFactor::Sum(0, 1);

    #[test]
    fn reduce_cancels_common_factor() {
        let a = zw();
        let f = RationalFn::new(lin(&a, -1).mul(&lin(&a, 1)), den(&[(S, 1)]));
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &lin(&a, -1));
    }

    #[test]
    fn reduce_full_cancellation() {
        let a = zw();
        let num = MultiPoly::var(&a, 0).pow(2).sub(&MultiPoly::var(&a, 1).pow(2));
        let f = RationalFn::new(num, den(&[(D, 1), (S, 1)]));
        assert_eq!(f, RationalFn::one(&a));
    }

    #[test]
    fn reduce_leaves_reduced_alone() {
        let a = zw();
        let f = RationalFn::new(lin(&a, -1), den(&[(S, 1)]));
        assert_eq!(f.denominator(), &den(&[(S, 1)]));
        assert_eq!(f.numerator(), &lin(&a, -1));
    }

    #[test]
    fn add_over_common_denominator() {
        let a = zw();
        let f = RationalFn::pole(&a, D, 1).add(&RationalFn::pole(&a, S, 1));
        assert_eq!(f.denominator(), &den(&[(D, 1), (S, 1)]));
        assert_eq!(f.numerator(), &MultiPoly::var(&a, 0).scale(&Rat::integer(2)));
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = zw();
        let f = RationalFn::new(lin(&a, -1), den(&[(S, 1)]));
        let g = RationalFn::new(lin(&a, 1), den(&[(D, 1)]));
        assert_eq!(f.mul(&g), RationalFn::one(&a));
        assert_eq!(f.add(&RationalFn::zero(&a)), f);
    }

    #[test]
    fn difference_sign_is_absorbed() {
        let a = zw();
        let f = RationalFn::inverse_difference(&a, 1, 0); // 1/(w - z)
        assert_eq!(f.denominator(), &den(&[(D, 1)]));
        assert_eq!(f.numerator(), &MultiPoly::constant(&a, Rat::integer(-1)));
    }

    #[test]
    fn residues_of_the_basic_two_point_functions() {
        let a = zw();
        let b = RationalFn::new(lin(&a, -1), den(&[(S, 1)]));
        let r = b.residue_at(0, -1, 1, 0).unwrap();
        assert_eq!(r, RationalFn::var(&a, 1).scale(&Rat::integer(-2)));
        let c = RationalFn::pole(&a, D, 1);
        assert_eq!(c.residue_at(0, 1, 1, 0).unwrap(), RationalFn::one(&a));
        assert!(c.residue_at(0, -1, 1, 0).unwrap().is_zero());
    }

    #[test]
    fn residue_of_double_pole() {
        // z^2/(z-w)^2 = ... residue at z=w is d/dz z^2 = 2w.
        let a = zw();
        let f = RationalFn::new(MultiPoly::var(&a, 0).pow(2), den(&[(D, 2)]));
        assert_eq!(
            f.residue_at(0, 1, 1, 0).unwrap(),
            RationalFn::var(&a, 1).scale(&Rat::integer(2))
        );
        // z/(w-z) = -z/(z-w) has residue -w.
        let g = RationalFn::var(&a, 0).mul(&RationalFn::inverse_difference(&a, 1, 0));
        assert_eq!(g.residue_at(0, 1, 1, 0).unwrap(), RationalFn::var(&a, 1).neg());
    }

    #[test]
    fn derivative_matches_quotient_rule() {
        let a = zw();
        // d/dz 1/(z+w) = -1/(z+w)^2
        let f = RationalFn::pole(&a, S, 1);
        assert_eq!(f.derivative(0), RationalFn::pole(&a, S, 2).neg());
        // d/dw 1/(z-w) = 1/(z-w)^2
        assert_eq!(RationalFn::pole(&a, D, 1).derivative(1), RationalFn::pole(&a, D, 2));
    }

    #[test]
    fn eval_detects_poles() {
        let a = zw();
        let f = RationalFn::pole(&a, D, 1);
        assert_eq!(f.eval(&[Rat::integer(1), Rat::integer(1)]), Err(Error::Pole));
        assert_eq!(f.eval(&[Rat::integer(3), Rat::integer(1)]).unwrap(), Rat::new(1, 2));
    }
}

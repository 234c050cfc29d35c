//! Sparse multivariate polynomials over [`Rat`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::rat::Rat;
use crate::error::{Error, Result};

/// An ordered list of variable names shared by polynomials and rational
/// functions. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::Invalid(format!("`{n}` is not a variable name")));
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
        }
        Ok(Alphabet(names.iter().map(|n| n.as_ref().to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub(crate) fn same(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub type Exponents = Vec<u32>;

/// A polynomial stored as a map from exponent vectors to non-zero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Exponents, Rat>,
}

impl MultiPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        MultiPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: &Alphabet, c: Rat) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(vec![0; alphabet.len()], c);
        p
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        Self::constant(alphabet, Rat::one())
    }

    pub fn var(alphabet: &Alphabet, i: usize) -> Self {
        let mut e = vec![0; alphabet.len()];
        e[i] = 1;
        Self::monomial(alphabet, e, Rat::one())
    }

    pub fn monomial(alphabet: &Alphabet, exps: Exponents, c: Rat) -> Self {
        assert_eq!(exps.len(), alphabet.len(), "exponent vector length");
        let mut p = Self::zero(alphabet);
        p.add_term(exps, c);
        p
    }

    /// `z_i + s * z_j`.
    pub fn linear(alphabet: &Alphabet, i: usize, s: i64, j: usize) -> Self {
        let mut p = Self::var(alphabet, i);
        let mut e = vec![0; alphabet.len()];
        e[j] = 1;
        p.add_term(e, Rat::integer(s));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rat)>>(alphabet: &Alphabet, terms: I) -> Self {
        let mut p = Self::zero(alphabet);
        for (e, c) in terms {
            assert_eq!(e.len(), alphabet.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &MultiPoly) {
        assert!(
            self.alphabet.same(&other.alphabet),
            "polynomial alphabets differ: {:?} vs {:?}",
            self.alphabet,
            other.alphabet
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&Rat::integer(-1))
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.alphabet);
        }
        MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        let mut acc: std::collections::HashMap<Exponents, Rat> = std::collections::HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.alphabet);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by `z_i + s * z_j` without building the intermediate
    /// polynomial.
    pub(crate) fn mul_linear(&self, i: usize, s: i64, j: Option<usize>) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.alphabet);
        let s = Rat::integer(s);
        for (e, c) in &self.terms {
            let mut ei = e.clone();
            ei[i] += 1;
            out.add_term(ei, c.clone());
            if let Some(j) = j {
                let mut ej = e.clone();
                ej[j] += 1;
                out.add_term(ej, c * &s);
            }
        }
        out
    }

    /// Range of total degrees over the stored terms; `None` for zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        degs.fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Indices of the variables that occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.alphabet.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.alphabet.len());
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * x.pow(k as i32))
            })
            .sum()
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.alphabet);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = e.clone();
                d[i] -= 1;
                out.add_term(d, c * &Rat::integer(e[i] as i64));
            }
        }
        out
    }

    /// Substitutes `z_i -> s * z_j` (or `z_i -> 0` when `target` is `None`).
    pub fn substitute(&self, i: usize, s: i64, target: Option<usize>) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.alphabet);
        for (e, c) in &self.terms {
            let k = e[i];
            let mut d = e.clone();
            d[i] = 0;
            match target {
                None if k > 0 => continue,
                None => out.add_term(d, c.clone()),
                Some(j) => {
                    d[j] += k;
                    out.add_term(d, c * &Rat::integer(s).pow(k as i32));
                }
            }
        }
        out
    }

    /// Exact quotient by `z_i`, or `None` if `z_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<MultiPoly> {
        if self.terms.keys().any(|e| e[i] == 0) {
            return None;
        }
        Some(MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut d = e.clone();
                    d[i] -= 1;
                    (d, c.clone())
                })
                .collect(),
        })
    }

    /// Exact quotient by `z_i - s * z_j` via synthetic division in `z_i`,
    /// or `None` if the remainder is non-zero.
    pub fn div_linear(&self, i: usize, s: i64, j: usize) -> Option<MultiPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let deg = self.degree_in(i) as usize;
        if deg == 0 {
            return None;
        }
        // Coefficients of z_i^d as polynomials in the remaining variables.
        let mut coeffs: Vec<MultiPoly> = vec![MultiPoly::zero(&self.alphabet); deg + 1];
        for (e, c) in &self.terms {
            let mut d = e.clone();
            let k = d[i] as usize;
            d[i] = 0;
            coeffs[k].add_term(d, c.clone());
        }
        let shift = |p: &MultiPoly| -> MultiPoly {
            let sr = Rat::integer(s);
            MultiPoly {
                alphabet: p.alphabet.clone(),
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let mut d = e.clone();
                        d[j] += 1;
                        (d, c * &sr)
                    })
                    .collect(),
            }
        };
        // q_{d-1} = c_d, q_{k-1} = c_k + s z_j q_k, remainder c_0 + s z_j q_0.
        let mut quotient = vec![MultiPoly::zero(&self.alphabet); deg];
        let mut carry = MultiPoly::zero(&self.alphabet);
        for k in (1..=deg).rev() {
            let q = coeffs[k].add(&shift(&carry));
            quotient[k - 1] = q.clone();
            carry = q;
        }
        let remainder = coeffs[0].add(&shift(&carry));
        if !remainder.is_zero() {
            return None;
        }
        let mut out = MultiPoly::zero(&self.alphabet);
        for (k, q) in quotient.into_iter().enumerate() {
            for (e, c) in q.terms {
                let mut d = e;
                d[i] += k as u32;
                out.add_term(d, c);
            }
        }
        Some(out)
    }

    /// Re-expresses the polynomial over a larger alphabet containing every
    /// variable of this one.
    pub fn embed(&self, target: &Alphabet) -> Result<MultiPoly> {
        let map: Vec<usize> = self
            .alphabet
            .names()
            .iter()
            .map(|n| target.require(n))
            .collect::<Result<_>>()?;
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut d = vec![0; target.len()];
            for (src, &dst) in map.iter().enumerate() {
                d[dst] = e[src];
            }
            out.add_term(d, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

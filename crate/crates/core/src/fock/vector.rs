use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::algebra::Rat;

/// A basis vector of one of the Fock spaces.
pub trait BasisState: Clone + Ord + Hash + fmt::Display + Send + Sync + 'static {
    fn vacuum() -> Self;

    fn is_vacuum(&self) -> bool;

    /// The grading used for truncation: doubled energy in type A, degree in
    /// type B.
    fn grade(&self) -> i64;

    /// Every basis state of grade at most `max_grade`.
    fn basis_up_to(max_grade: i64) -> Vec<Self>;
}

/// A finite linear combination of basis states with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FockVector<S: BasisState> {
    terms: BTreeMap<S, Rat>,
}

impl<S: BasisState> Default for FockVector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: BasisState> FockVector<S> {
    pub fn zero() -> Self {
        FockVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(s: S) -> Self {
        Self::term(s, Rat::one())
    }

    pub fn term(s: S, c: Rat) -> Self {
        let mut v = Self::zero();
        v.add_term(s, c);
        v
    }

    pub fn vacuum() -> Self {
        Self::basis(S::vacuum())
    }

    pub fn from_terms<I: IntoIterator<Item = (S, Rat)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (s, c) in terms {
            v.add_term(s, c);
        }
        v
    }

    pub fn add_term(&mut self, s: S, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<S, Rat> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<S, Rat> {
        self.terms
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

    pub fn coeff(&self, s: &S) -> Rat {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    /// The coefficient of the vacuum, i.e. the pairing `<0| v`.
    pub fn vacuum_component(&self) -> Rat {
        self.coeff(&S::vacuum())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (s, x) in &other.terms {
            self.add_term(s.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::integer(-1));
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a map sending each basis state to at most one scaled state.
    pub fn map_monomial<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&S) -> Option<(Rat, S)>,
    {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            if let Some((k, t)) = f(s) {
                out.add_term(t, c * &k);
            }
        }
        out
    }

    /// Applies a linear map given on basis states.
    pub fn map_linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&S) -> FockVector<S>,
    {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            out.add_scaled(&f(s), c);
        }
        out
    }

    /// Keeps the terms whose basis state satisfies `keep`.
    pub fn filter<F: FnMut(&S) -> bool>(&self, mut keep: F) -> Self {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has the same grade, and which.
    pub fn homogeneous_grade(&self) -> Option<i64> {
        let mut grades = self.terms.keys().map(BasisState::grade);
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }
}

impl<S: BasisState> fmt::Display for FockVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<S: BasisState> fmt::Debug for FockVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

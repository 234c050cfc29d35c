use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Rat;
use crate::fock::{BasisState, FockVector};

/// How a public mode index maps to the power of `z` it multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `a(z) = Σ a_n z^n`
    PositivePower,
    /// `a(z) = Σ a_(n) z^{-n-1}`
    StandardVA,
    /// `a(z) = Σ a_n z^{-n}`
    NegativePower,
}

impl Convention {
    /// The power of `z` carried by mode `n`.
    pub fn exponent(self, n: i64) -> i64 {
        match self {
            Convention::PositivePower => n,
            Convention::StandardVA => -n - 1,
            Convention::NegativePower => -n,
        }
    }

    /// The mode index carried by `z^p`.
    pub fn index(self, p: i64) -> i64 {
        match self {
            Convention::PositivePower => p,
            Convention::StandardVA => -p - 1,
            Convention::NegativePower => -p,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// The grade change `slope * p + offset` caused by the `z^p` coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradeShift {
    pub slope: i64,
    pub offset: i64,
}

impl GradeShift {
    pub fn at(self, p: i64) -> i64 {
        self.slope * p + self.offset
    }
}

pub(crate) type ModeFn<S> = Arc<dyn Fn(i64, &FockVector<S>) -> FockVector<S> + Send + Sync>;

/// A field on one of the Fock spaces: its modes as operators indexed by the
/// power of `z`, plus the metadata needed to bound mode sums.
#[derive(Clone)]
pub struct Field<S: BasisState> {
    name: String,
    convention: Convention,
    parity: Parity,
    shift: GradeShift,
    free: bool,
    state: Option<FockVector<S>>,
    modes: ModeFn<S>,
}

impl<S: BasisState> Field<S> {
    pub fn new<F>(name: impl Into<String>, convention: Convention, parity: Parity, shift: GradeShift, modes: F) -> Self
    where
        F: Fn(i64, &FockVector<S>) -> FockVector<S> + Send + Sync + 'static,
    {
        Field {
            name: name.into(),
            convention,
            parity,
            shift,
            free: false,
            state: None,
            modes: Arc::new(modes),
        }
    }

    /// Marks the field as free: any two modes of free fields have a scalar
    /// bracket.
    pub fn free(mut self) -> Self {
        self.free = true;
        self
    }

    /// Records the state this field creates from the vacuum at `z = 0`.
    pub fn creating(mut self, state: FockVector<S>) -> Self {
        self.state = Some(state);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn shift(&self) -> GradeShift {
        self.shift
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    pub fn state(&self) -> Option<&FockVector<S>> {
        self.state.as_ref()
    }

    /// The same series read in another convention.
    pub fn with_convention(&self, convention: Convention) -> Self {
        let mut f = self.clone();
        f.convention = convention;
        f
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut f = self.clone();
        f.name = name.into();
        f
    }

    /// Mode `n` in this field's convention.
    pub fn mode(&self, n: i64, v: &FockVector<S>) -> FockVector<S> {
        self.coefficient(self.convention.exponent(n), v)
    }

    /// The coefficient of `z^p`.
    pub fn coefficient(&self, p: i64, v: &FockVector<S>) -> FockVector<S> {
        (self.modes)(p, v)
    }

    /// The smallest `p` whose coefficient can be non-zero on a vector of
    /// grade `grade`: below it the result would have negative grade.
    pub fn p_min(&self, grade: i64) -> i64 {
        let GradeShift { slope, offset } = self.shift;
        // ceil((-offset - grade) / slope)
        (-offset - grade).div_euclid(slope) + i64::from((-offset - grade).rem_euclid(slope) != 0)
    }

    pub(crate) fn parts(&self) -> (ModeFn<S>, GradeShift) {
        (self.modes.clone(), self.shift)
    }

    pub(crate) fn derived(&self, name: String, shift: GradeShift, state: Option<FockVector<S>>, modes: ModeFn<S>) -> Self {
        Field {
            name,
            convention: self.convention,
            parity: self.parity,
            shift,
            free: self.free,
            state,
            modes,
        }
    }

    /// `c · a(z)`.
    pub fn scaled(&self, c: Rat) -> Self {
        let inner = self.modes.clone();
        let scale = c.clone();
        let state = self.state.as_ref().map(|s| s.scale(&c));
        self.derived(
            format!("{}*{}", c, self.name),
            self.shift,
            state,
            Arc::new(move |p, v| inner(p, v).scale(&scale)),
        )
    }
}

impl<S: BasisState> fmt::Debug for Field<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("name", &self.name)
            .field("convention", &self.convention)
            .field("parity", &self.parity)
            .field("shift", &self.shift)
            .finish()
    }
}

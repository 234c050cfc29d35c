//! Truncated multivariate Laurent series in a region `|z_1| ≫ … ≫ |z_n|`.
//!
//! A series with cutoff `D` is faithful on the window of monomials whose
//! every exponent is `>= -D` and whose total degree lies in `[-D, D]`.
//! Monomials outside the window are never stored.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::poly::Alphabet;
use crate::algebra::rat::{binomial, Rat};
use crate::algebra::rational::{PoleFactor, RationalFn};
use crate::error::{Error, Result};

pub type LaurentExponents = Vec<i32>;

/// Whether `exps` lies in the cutoff-`d` window.
pub fn in_window(exps: &[i32], cutoff: u32) -> bool {
    let d = cutoff as i64;
    let total: i64 = exps.iter().map(|&e| e as i64).sum();
    exps.iter().all(|&e| e as i64 >= -d) && (-d..=d).contains(&total)
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    vars: Vec<String>,
    cutoff: u32,
    terms: BTreeMap<LaurentExponents, Rat>,
}

impl LaurentSeries {
    /// The zero series in the region given by `vars` (outermost first).
    pub fn zero<S: AsRef<str>>(vars: &[S], cutoff: u32) -> Result<Self> {
        // Validates names and uniqueness.
        Alphabet::new(vars)?;
        Ok(LaurentSeries {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            cutoff,
            terms: BTreeMap::new(),
        })
    }

    /// Builds a series from terms; terms outside the window are dropped and
    /// repeated monomials are summed.
    pub fn from_terms<S: AsRef<str>, I>(vars: &[S], cutoff: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LaurentExponents, Rat)>,
    {
        let mut s = Self::zero(vars, cutoff)?;
        for (e, c) in terms {
            if e.len() != s.vars.len() {
                return Err(Error::Invalid(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    s.vars.len()
                )));
            }
            s.add_term(e, c);
        }
        Ok(s)
    }

    pub(crate) fn add_term(&mut self, e: LaurentExponents, c: Rat) {
        if c.is_zero() || !in_window(&e, self.cutoff) {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn terms(&self) -> &BTreeMap<LaurentExponents, Rat> {
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

    pub fn coeff(&self, exps: &[i32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn comparable(&self, other: &LaurentSeries) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::IncomparableSeries(format!(
                "orderings {:?} and {:?}",
                self.vars, other.vars
            )));
        }
        if self.cutoff != other.cutoff {
            return Err(Error::IncomparableSeries(format!(
                "cutoffs {} and {}",
                self.cutoff, other.cutoff
            )));
        }
        Ok(())
    }

    /// Restriction to a smaller cutoff.
    pub fn restrict(&self, cutoff: u32) -> Result<LaurentSeries> {
        if cutoff > self.cutoff {
            return Err(Error::Invalid(format!(
                "cannot restrict cutoff {} to larger cutoff {}",
                self.cutoff, cutoff
            )));
        }
        Ok(LaurentSeries {
            vars: self.vars.clone(),
            cutoff,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| in_window(e, cutoff))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn add(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.comparable(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> LaurentSeries {
        let mut out = LaurentSeries {
            vars: self.vars.clone(),
            cutoff: self.cutoff,
            terms: BTreeMap::new(),
        };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn neg(&self) -> LaurentSeries {
        self.scale(&Rat::integer(-1))
    }

    /// Product of the stored terms, kept on the window of `cutoff`.
    ///
    /// The result is exact on that window when both operands are faithful
    /// on every monomial that can contribute to it; [`product_cutoff`]
    /// computes an operand cutoff that guarantees this for expansions of
    /// rational functions.
    pub fn mul(&self, other: &LaurentSeries, cutoff: u32) -> Result<LaurentSeries> {
        if self.vars != other.vars {
            return Err(Error::IncomparableSeries("different orderings".into()));
        }
        if cutoff > self.cutoff.min(other.cutoff) {
            return Err(Error::Invalid(format!(
                "product cutoff {} exceeds operand cutoffs {} and {}",
                cutoff, self.cutoff, other.cutoff
            )));
        }
        let mut acc: HashMap<LaurentExponents, Rat> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: LaurentExponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if in_window(&e, cutoff) {
                    *acc.entry(e).or_default() += c1 * c2;
                }
            }
        }
        LaurentSeries::from_terms(&self.vars, cutoff, acc)
    }

    /// The first monomial (in lexicographic exponent order) where the two
    /// series differ, with both coefficients.
    pub fn first_difference(
        &self,
        other: &LaurentSeries,
    ) -> Result<Option<(LaurentExponents, Rat, Rat)>> {
        self.comparable(other)?;
        let keys: std::collections::BTreeSet<&LaurentExponents> =
            self.terms.keys().chain(other.terms.keys()).collect();
        for k in keys {
            let a = self.coeff(k);
            let b = other.coeff(k);
            if a != b {
                return Ok(Some((k.clone(), a, b)));
            }
        }
        Ok(None)
    }

    /// The series of `f(…, -z_v, …)`: odd powers of `z_v` change sign.
    pub fn reflect(&self, var: &str) -> Result<LaurentSeries> {
        let v = self
            .vars
            .iter()
            .position(|x| x == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = self.clone();
        for (e, c) in out.terms.iter_mut() {
            if e[v].rem_euclid(2) == 1 {
                *c = -c.clone();
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// One factor `sign / (z_lead - r z_trail)^e` expanded as a binomial series
/// in `r z_trail / z_lead`.
#[derive(Clone, Copy, Debug)]
struct Geometric {
    lead: usize,
    trail: usize,
    exponent: u32,
    ratio: i64,
    sign: i64,
}

/// Bounds on the terms a set of remaining factors can still contribute.
struct Remaining {
    /// Upper bound on each position's exponent, `None` when unbounded.
    max_exp: Vec<Option<i64>>,
    /// Lower bound on each suffix sum `Σ_{l >= q} e_l`.
    min_suffix: Vec<i64>,
    /// Exact total degree contributed.
    total: i64,
}

impl Remaining {
    fn of(factors: &[Geometric], n: usize) -> Self {
        let mut max_exp = vec![Some(0i64); n];
        let mut min_suffix = vec![0i64; n];
        let mut total = 0;
        for g in factors {
            let e = g.exponent as i64;
            max_exp[g.lead] = max_exp[g.lead].map(|m| m - e);
            max_exp[g.trail] = None;
            for s in min_suffix.iter_mut().take(g.lead + 1) {
                *s -= e;
            }
            total -= e;
        }
        Remaining {
            max_exp,
            min_suffix,
            total,
        }
    }
}

struct Window {
    cutoff: i64,
    /// Upper bounds on suffix sums of any window monomial, indexed by start
    /// position (index 0 is the total degree).
    suffix_max: Vec<i64>,
}

impl Window {
    fn new(cutoff: u32, n: usize, degree_max: i64) -> Self {
        let d = cutoff as i64;
        let top = d.min(degree_max);
        Window {
            cutoff: d,
            suffix_max: (0..n).map(|q| top + q as i64 * d).collect(),
        }
    }

    /// Whether `t` combined with some term of `rem` can land in the window.
    fn reachable(&self, t: &[i32], rem: &Remaining) -> bool {
        let total: i64 = t.iter().map(|&x| x as i64).sum::<i64>() + rem.total;
        if total < -self.cutoff || total > self.cutoff {
            return false;
        }
        let mut suffix = 0i64;
        for q in (0..t.len()).rev() {
            if let Some(m) = rem.max_exp[q] {
                if t[q] as i64 + m < -self.cutoff {
                    return false;
                }
            }
            suffix += t[q] as i64;
            if suffix + rem.min_suffix[q] > self.suffix_max[q] {
                return false;
            }
        }
        true
    }
}

/// The expansion `i_{z_1,…,z_n} f` truncated at `cutoff`, where `ordering`
/// lists the variables from outermost (`|z_1|` largest) inward.
pub fn expand<S: AsRef<str>>(f: &RationalFn, ordering: &[S], cutoff: u32) -> Result<LaurentSeries> {
    let mut out = LaurentSeries::zero(ordering, cutoff)?;
    if f.is_zero() {
        return Ok(out);
    }
    let alphabet = f.alphabet();
    let n = ordering.len();
    // Alphabet index -> position in the ordering.
    let mut pos: Vec<Option<usize>> = vec![None; alphabet.len()];
    for (p, name) in ordering.iter().enumerate() {
        if let Some(i) = alphabet.index_of(name.as_ref()) {
            pos[i] = Some(p);
        }
    }
    for i in f.used_vars() {
        if pos[i].is_none() {
            return Err(Error::MissingOrderingVariable(alphabet.name(i).to_string()));
        }
    }
    let at = |i: usize| pos[i].expect("checked above");

    let mut shift = vec![0i32; n];
    let mut factors = Vec::new();
    for (atom, &e) in f.denominator() {
        match *atom {
            PoleFactor::Var(i) => shift[at(i)] -= e as i32,
            PoleFactor::Diff(i, j) => {
                let (pi, pj) = (at(i), at(j));
                // 1/(z_i - z_j) = -1/(z_j - z_i) when z_j is outermost.
                let (lead, trail, sign) = if pi < pj {
                    (pi, pj, 1)
                } else {
                    (pj, pi, if e % 2 == 0 { 1 } else { -1 })
                };
                factors.push(Geometric {
                    lead,
                    trail,
                    exponent: e,
                    ratio: 1,
                    sign,
                });
            }
            PoleFactor::Sum(i, j) => {
                let (pi, pj) = (at(i), at(j));
                factors.push(Geometric {
                    lead: pi.min(pj),
                    trail: pi.max(pj),
                    exponent: e,
                    ratio: -1,
                    sign: 1,
                });
            }
        }
    }

    let (_, degree_max) = f.degree_range().expect("non-zero function");
    let window = Window::new(cutoff, n, degree_max);
    let remaining: Vec<Remaining> = (0..=factors.len())
        .map(|k| Remaining::of(&factors[k..], n))
        .collect();

    let mut current: HashMap<LaurentExponents, Rat> = HashMap::new();
    for (e, c) in f.numerator().terms() {
        let mut t = shift.clone();
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t[at(i)] += k as i32;
            }
        }
        if window.reachable(&t, &remaining[0]) {
            *current.entry(t).or_default() += c;
        }
    }

    for (idx, g) in factors.iter().enumerate() {
        let rem = &remaining[idx + 1];
        let mut next: HashMap<LaurentExponents, Rat> = HashMap::new();
        let e = g.exponent as i32;
        for (t, c) in &current {
            let mut base = t.clone();
            base[g.lead] -= e;
            // Smallest k the trail position needs to re-enter the window.
            let k_lo = match rem.max_exp[g.trail] {
                Some(m) => (-(window.cutoff) - m - base[g.trail] as i64).max(0),
                None => 0,
            };
            // Largest k before the lead exponent or a straddled suffix sum
            // leaves the reachable region.
            let mut k_hi = i64::MAX;
            if let Some(m) = rem.max_exp[g.lead] {
                k_hi = k_hi.min(base[g.lead] as i64 + m + window.cutoff);
            }
            let mut suffix: i64 = base[g.trail..].iter().map(|&x| x as i64).sum();
            for q in (g.lead + 1..=g.trail).rev() {
                if q < g.trail {
                    suffix += base[q] as i64;
                }
                k_hi = k_hi.min(window.suffix_max[q] - suffix - rem.min_suffix[q]);
            }
            if k_hi < k_lo {
                continue;
            }
            for k in k_lo..=k_hi {
                let mut term = base.clone();
                term[g.lead] -= k as i32;
                term[g.trail] += k as i32;
                if !window.reachable(&term, rem) {
                    continue;
                }
                let mut coeff = binomial(k as u64 + g.exponent as u64 - 1, g.exponent as u64 - 1);
                if g.sign * if k % 2 == 1 { g.ratio } else { 1 } < 0 {
                    coeff = -coeff;
                }
                *next.entry(term).or_default() += c * &coeff;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }

    for (e, c) in current {
        out.add_term(e, c);
    }
    Ok(out)
}

/// Lower bounds describing where the full (untruncated) expansion of `f`
/// lives: total degree range and suffix-sum valuations per position.
struct Support {
    degree: (i64, i64),
    /// `min_suffix[q]` bounds `Σ_{l >= q} e_l` from below (q >= 1).
    min_suffix: Vec<i64>,
}

fn support<S: AsRef<str>>(f: &RationalFn, ordering: &[S]) -> Result<Option<Support>> {
    let degree = match f.degree_range() {
        None => return Ok(None),
        Some(d) => d,
    };
    let alphabet = f.alphabet();
    let n = ordering.len();
    let pos = |i: usize| -> Result<usize> {
        ordering
            .iter()
            .position(|o| o.as_ref() == alphabet.name(i))
            .ok_or_else(|| Error::MissingOrderingVariable(alphabet.name(i).to_string()))
    };
    let mut min_suffix = vec![i64::MAX; n];
    for e in f.numerator().terms().keys() {
        let mut t = vec![0i64; n];
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t[pos(i)?] += k as i64;
            }
        }
        let mut s = 0;
        for q in (0..n).rev() {
            s += t[q];
            min_suffix[q] = min_suffix[q].min(s);
        }
    }
    for (atom, &e) in f.denominator() {
        let lead = match *atom {
            PoleFactor::Var(i) => pos(i)?,
            PoleFactor::Diff(i, j) | PoleFactor::Sum(i, j) => pos(i)?.min(pos(j)?),
        };
        for s in min_suffix.iter_mut().take(lead + 1) {
            *s -= e as i64;
        }
    }
    Ok(Some(Support { degree, min_suffix }))
}

/// An operand cutoff large enough that
/// `expand(f, o, D') · expand(g, o, D')` restricted to the cutoff-`cutoff`
/// window equals `expand(f·g, o, cutoff)`.
pub fn product_cutoff<S: AsRef<str>>(
    f: &RationalFn,
    g: &RationalFn,
    ordering: &[S],
    cutoff: u32,
) -> Result<u32> {
    let (sf, sg) = match (support(f, ordering)?, support(g, ordering)?) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(cutoff),
    };
    let n = ordering.len();
    let d = cutoff as i64;
    // Suffix sums of a product monomial in the window.
    let top = d.min(sf.degree.1 + sg.degree.1);
    let e_max: Vec<i64> = (0..n).map(|q| top + q as i64 * d).collect();
    let mut need = d;
    for (a, b) in [(&sf, &sg), (&sg, &sf)] {
        // Interval of each suffix sum of the `a` factor.
        let lo = |q: usize| if q == 0 { a.degree.0 } else if q == n { 0 } else { a.min_suffix[q] };
        let hi = |q: usize| {
            if q == 0 {
                a.degree.1
            } else if q == n {
                0
            } else {
                e_max[q] - b.min_suffix[q]
            }
        };
        for l in 0..n {
            need = need.max(hi(l + 1) - lo(l));
        }
        need = need.max(-a.degree.0).max(a.degree.1);
    }
    Ok(need.max(0) as u32)
}

//! Determinants and Pfaffians over exact rings.
//!
//! Both use cofactor expansion memoised on the set of remaining columns
//! (a bitmask), so an `n × n` determinant costs `O(n 2^n)` ring operations.

use std::collections::HashMap;

use crate::algebra::rat::Rat;
use crate::algebra::rational::RationalFn;
use crate::error::{Error, Result};

/// The ring operations the expansions need.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl Ring for RationalFn {
    fn zero_like(&self) -> Self {
        RationalFn::zero(self.alphabet())
    }
    fn one_like(&self) -> Self {
        RationalFn::one(self.alphabet())
    }
    fn add(&self, other: &Self) -> Self {
        RationalFn::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFn::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFn::neg(self)
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n > 24 {
        return Err(Error::Invalid(format!("matrix of size {n} is too large")));
    }
    Ok(n)
}

/// The determinant. `unit` supplies the ring identity for the empty matrix.
pub fn determinant<T: Ring>(m: &[Vec<T>], unit: &T) -> Result<T> {
    let n = check_square(m)?;
    let mut memo: HashMap<u32, T> = HashMap::new();
    Ok(det_rec(m, 0, (1u32 << n) - 1, unit, &mut memo))
}

/// Determinant of rows `row..` restricted to the columns in `cols`.
fn det_rec<T: Ring>(m: &[Vec<T>], row: usize, cols: u32, unit: &T, memo: &mut HashMap<u32, T>) -> T {
    if cols == 0 {
        return unit.one_like();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = unit.zero_like();
    let mut sign_negative = false;
    for (c, entry) in m[row].iter().enumerate() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !entry.is_zero() {
            let minor = det_rec(m, row + 1, cols & !(1 << c), unit, memo);
            let term = entry.mul(&minor);
            acc = acc.add(&if sign_negative { term.neg() } else { term });
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// The Pfaffian of an antisymmetric matrix of even size.
pub fn pfaffian<T: Ring + PartialEq>(m: &[Vec<T>], unit: &T) -> Result<T> {
    let n = check_square(m)?;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    for i in 0..n {
        for j in i..n {
            if m[i][j] != m[j][i].neg() {
                return Err(Error::NotAntisymmetric { row: i, col: j });
            }
        }
    }
    let mut memo: HashMap<u32, T> = HashMap::new();
    Ok(pf_rec(m, (1u32 << n) - 1, unit, &mut memo))
}

/// `Pf(S) = Σ_{j ∈ S, j > i} (-1)^{pos(j)-1} M_ij Pf(S \ {i, j})` with
/// `i = min S` and `pos` counting from `i`.
fn pf_rec<T: Ring>(m: &[Vec<T>], set: u32, unit: &T, memo: &mut HashMap<u32, T>) -> T {
    if set == 0 {
        return unit.one_like();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1 << i);
    let mut acc = unit.zero_like();
    let mut sign_negative = false;
    for j in i + 1..m.len() {
        if rest & (1 << j) == 0 {
            continue;
        }
        if !m[i][j].is_zero() {
            let term = m[i][j].mul(&pf_rec(m, rest & !(1 << j), unit, memo));
            acc = acc.add(&if sign_negative { term.neg() } else { term });
        }
        sign_negative = !sign_negative;
    }
    memo.insert(set, acc.clone());
    acc
}

//! Exact arithmetic: rationals, polynomials, rational functions with poles
//! on `z_i = 0` and `z_i = ±z_j`, region-ordered Laurent expansion,
//! determinants and Pfaffians.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod rational;
pub mod series;
mod text;

pub use matrix::{determinant, pfaffian, Ring};
pub use poly::{Alphabet, Exponents, MultiPoly};
pub use rat::{binomial, factorial, Rat};
pub use rational::{Denominator, PoleFactor, RationalFn};
pub use series::{expand, in_window, product_cutoff, LaurentExponents, LaurentSeries};
pub use text::factor_into_atoms;

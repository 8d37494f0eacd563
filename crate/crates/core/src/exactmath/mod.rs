//! Exact arithmetic behind answer construction: reduced rationals, sums of
//! square roots, small integer polynomials and accepted-answer spellings.

mod forms;
mod poly;
mod radical;
mod rational;

pub use forms::{enumerate_expansion_forms, Monomial, MonomialForm};
pub use poly::{quadratic_from_roots, IntPolynomial};
pub use radical::{radical_simplify, radical_sum_value, RadicalPiece, RadicalSum};
pub use rational::{decimal_forms, rational_equivalents, rational_reduce, Rational};

pub(crate) use rational::{format_scaled, gcd_i64, lcm_i64};

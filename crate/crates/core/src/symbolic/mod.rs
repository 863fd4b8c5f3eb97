//! Exact multivariate Laurent-polynomial and rational-function arithmetic.
//!
//! The variable set is closed and fixed: `u` stands for `q^{-1/2}`, `T` for
//! `q^{-s}`, and `a1,b1,a2,b2,a3,b3` are Satake parameters. Half-integral
//! powers of `q` route through `u` and powers of `q^{s}` through `T`, so
//! every quantity in scope is a Laurent monomial in these eight symbols.
//!
//! Rational functions are held as unreduced numerator/denominator pairs;
//! equality is decided by exact cross-multiplication, never by computing a
//! multivariate GCD.

mod monomial;
mod poly;
mod rational;

pub use monomial::{Monomial, Var, VARS};
pub use poly::{LaurentPoly, Scalar};
pub use rational::{geometric_sum, LaurentRational, SymbolicError};

use num::BigRational;

/// Laurent polynomial over the exact rationals, the default coefficient field.
pub type RatPoly = LaurentPoly<BigRational>;

#![no_std]
//! Exact decision procedures for systems of tropical and min-plus polynomials.
//!
//! A system either has a root, which is returned and checked, or it has none,
//! in which case a certificate built from a Macaulay matrix is returned and
//! can be checked independently.

extern crate alloc;

pub mod duality;
pub mod game;
pub mod geometry;
pub mod linsys;
pub mod lp;
pub mod macaulay;
pub mod nullsatz;
pub mod oracle;
pub mod poly;
pub mod reduce;
pub mod value;

pub use poly::{MinPlusPolynomial, Point, Polynomial, TropicalPolynomial};
pub use value::{Exponent, ExtValue, Rational};

//! Sparse multivariate polynomials over a positively weighted graded ring.

mod gcd;
pub mod parse;
mod polynomial;
mod ring;

pub use parse::{parse_polynomial, ParseError};
pub use polynomial::{Homogeneity, Polynomial};
pub use ring::{Monomial, MonomialOrder, PolyRing};


#[cfg(test)]
mod tests;

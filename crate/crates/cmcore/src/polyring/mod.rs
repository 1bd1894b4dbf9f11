//! Exact multivariate polynomial arithmetic: coefficient fields (ℚ and
//! prime fields), monomials and monomial orders, sparse polynomials,
//! polynomial matrices, dense exact linear algebra, and the text grammar.

pub mod coeff;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;

pub use coeff::{Coeff, CoefficientField};
pub use linalg::{interpolate, CMatrix};
pub use matrix::{subsets, PolyMatrix};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::{parse_document, parse_polynomial, parse_polynomials, Document};
pub use poly::{same_ring, Polynomial, Ring, RingData};

//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are named `x1 … xn`; `x_i` is stored at exponent index `i - 1`.
//! Every [`Polynomial`] lives in a [`Ring`] (arity plus monomial order) and is
//! kept in canonical form: distinct monomials, nonzero coefficients, terms
//! sorted strictly decreasing under the ring's order.

mod monomial;
mod order;
mod polynomial;
mod text;

pub use monomial::{mono_div, mono_divides, mono_lcm, mono_mul, Monomial};
pub use order::{mono_compare, MonomialOrder};
pub use polynomial::{Polynomial, Ring, Term};
pub(crate) use polynomial::merge_terms;

/// Coefficient field: arbitrary-precision rationals, always in lowest terms.
pub type Rational = num::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! Buchberger's algorithm, and a toolkit for checking Groebner basis and
//! identity statements about elementary and complete homogeneous symmetric
//! polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: monomials, monomial orders, canonical sparse polynomials and
//!   their text format.
//! * [`groebner`]: multivariate division, S-polynomials, Buchberger's
//!   algorithm and reduced bases.
//! * [`symfunc`]: `e_{k,n}`, `h_{k,n}`, `p_{k,n}` and symbolic identity checks.
//! * [`involution`]: carriers of signed set/multiset pairs and
//!   certification of sign-reversing involutions on them.
//! * [`hilbert`]: Hilbert series of artinian staircases.
//! * [`verify`]: sweeps over `(k, n)` grids that compare computed objects with
//!   their closed forms.
//!
//! Sweeps and carrier certification are data parallel; see [`exec`].

pub mod error;
pub mod exec;
pub mod groebner;
pub mod hilbert;
pub mod involution;
pub mod poly;
pub mod symfunc;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use exec::Execution;
pub use groebner::{DivisionResult, GroebnerBasis};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring, Term};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{AlgebraError, Result};

/// Monomial orders with `x_n > x_{n-1} > … > x_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic: the exponent of `x_n` decides first, then `x_{n-1}`, …
    #[default]
    Lex,
    /// Graded reverse lexicographic: total degree first, then the monomial
    /// with the smaller exponent of `x_1` (then `x_2`, …) is larger.
    GrevLex,
}

impl MonomialOrder {
    /// Compares two monomials of equal arity.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => a.exps().iter().rev().cmp(b.exps().iter().rev()),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

pub fn mono_compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch { left: a.arity(), right: b.arity() });
    }
    Ok(ord.compare(a, b))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(AlgebraError::invalid(format!("unknown monomial order `{other}`"))),
        }
    }
}

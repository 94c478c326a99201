use std::fmt;

use crate::error::{AlgebraError, Result};

/// Dense exponent vector `x1^e1 * … * xn^en`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The monomial `1` in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// `x_var^power`; `var` is 1-based.
    pub fn var_pow(arity: usize, var: usize, power: u32) -> Result<Self> {
        if var == 0 || var > arity {
            return Err(AlgebraError::OutOfRange { element: var, max: arity });
        }
        let mut m = Monomial::one(arity);
        m.exps[var - 1] = power;
        Ok(m)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_var` (1-based).
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// If this is a pure power `x_i^d` with `d > 0`, returns `(i, d)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i + 1, e));
            }
        }
        found
    }

    /// Product; both operands must have the same arity.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self | other`, componentwise `≤`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor` when `divisor | self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.arity() != self.arity() || !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renames variables: `x_i` becomes `x_{perm[i-1]}` (1-based targets).
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.arity()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i] - 1] = e;
        }
        Monomial { exps }
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch { left: a.arity(), right: b.arity() });
    }
    Ok(())
}

pub fn mono_mul(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    Ok(a.mul(b))
}

pub fn mono_divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    check_arity(a, b)?;
    Ok(a.divides(b))
}

/// `b / a`; fails unless `a | b`.
pub fn mono_div(b: &Monomial, a: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    b.checked_div(a).ok_or_else(|| AlgebraError::NotDivisible {
        divisor: a.to_string(),
        dividend: b.to_string(),
    })
}

pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    Ok(a.lcm(b))
}

/// Prints `x1^2*x3`, or `1` for the empty product. Factors appear in
/// increasing variable index.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

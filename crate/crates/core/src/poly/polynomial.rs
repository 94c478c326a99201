use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::error::{AlgebraError, Result};

/// Polynomial ring context: number of variables and the monomial order terms
/// are sorted by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    arity: usize,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(arity: usize, order: MonomialOrder) -> Result<Ring> {
        if arity == 0 {
            return Err(AlgebraError::invalid("a ring needs at least one variable"));
        }
        Ok(Ring { arity, order })
    }

    /// `Q[x1..xn]` under lex.
    ///
    /// # Panics
    /// If `arity` is zero.
    pub fn lex(arity: usize) -> Ring {
        Ring::new(arity, MonomialOrder::Lex).expect("arity must be positive")
    }

    pub fn arity(self) -> usize {
        self.arity
    }

    pub fn order(self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(self, order: MonomialOrder) -> Ring {
        Ring { order, ..self }
    }

    pub fn zero(self) -> Polynomial {
        Polynomial { ring: self, terms: Vec::new() }
    }

    pub fn one(self) -> Polynomial {
        self.constant(Rational::one())
    }

    pub fn constant(self, c: Rational) -> Polynomial {
        self.monomial(c, Monomial::one(self.arity))
    }

    pub fn int(self, c: i64) -> Polynomial {
        self.constant(super::rational(c))
    }

    /// The variable `x_i`, 1-based.
    pub fn var(self, i: usize) -> Result<Polynomial> {
        Ok(self.monomial(Rational::one(), Monomial::var_pow(self.arity, i, 1)?))
    }

    /// `c * m`; the zero polynomial when `c = 0`.
    ///
    /// # Panics
    /// If the monomial arity differs from the ring's.
    pub fn monomial(self, c: Rational, m: Monomial) -> Polynomial {
        assert_eq!(m.arity(), self.arity, "monomial arity does not match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![Term { coeff: c, mono: m }] };
        Polynomial { ring: self, terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, unsorted)
    /// terms.
    pub fn from_terms<I>(self, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            if m.arity() != self.arity {
                return Err(AlgebraError::ArityMismatch { left: self.arity, right: m.arity() });
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Ok(self.collect_map(acc))
    }

    pub(crate) fn collect_map(self, acc: HashMap<Monomial, Rational>) -> Polynomial {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = self.order;
        terms.sort_unstable_by(|a, b| order.compare(&b.mono, &a.mono));
        Polynomial { ring: self, terms }
    }

    pub(crate) fn from_sorted(self, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| self.order.compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: self, terms }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

/// Canonical sparse polynomial. Two polynomials are equal iff their rings and
/// term lists are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    /// Terms in strictly decreasing order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// `(LC(f), LM(f))`, failing on the zero polynomial.
    pub fn lead(&self) -> Result<(&Rational, &Monomial)> {
        self.terms
            .first()
            .map(|t| (&t.coeff, &t.mono))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Result<Polynomial> {
        let (lc, _) = self.lead()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.recip()))
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|t| t.coeff.is_one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() })
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// `c * m * self`. Multiplying by a monomial preserves term order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        assert_eq!(m.arity(), self.arity(), "monomial arity does not match ring");
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(AlgebraError::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let terms = merge_terms(
            self.order(),
            self.terms.iter().cloned(),
            other.terms.iter().cloned(),
        );
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let terms = merge_terms(
            self.order(),
            self.terms.iter().cloned(),
            other.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() }),
        );
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        if other.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.coeff, &t.mono));
        }
        if self.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.coeff, &t.mono));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                *acc.entry(a.mono.mul(&b.mono)).or_insert_with(Rational::zero) +=
                    &a.coeff * &b.coeff;
            }
        }
        Ok(self.ring.collect_map(acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order() {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.compare(&b.mono, &a.mono));
        Polynomial { ring, terms }
    }

    /// Substitutes `x_i -> x_{perm[i-1]}`; `perm` is a 1-based permutation of
    /// `1..=arity`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Polynomial> {
        let n = self.arity();
        let mut seen = vec![false; n];
        if perm.len() != n || !perm.iter().all(|&p| p >= 1 && p <= n && !std::mem::replace(&mut seen[p - 1], true)) {
            return Err(AlgebraError::invalid("not a permutation of the variables"));
        }
        self.ring.from_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.mono.permute(perm))))
    }
}

/// Merges two strictly decreasing term streams, adding coefficients of equal
/// monomials and dropping cancellations.
pub(crate) fn merge_terms<A, B>(order: MonomialOrder, a: A, b: B) -> Vec<Term>
where
    A: IntoIterator<Item = Term>,
    B: IntoIterator<Item = Term>,
{
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    let mut out = Vec::with_capacity(a.size_hint().0 + b.size_hint().0);
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => order.compare(&x.mono, &y.mono),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let c = x.coeff + y.coeff;
                if !c.is_zero() {
                    out.push(Term { coeff: c, mono: x.mono });
                }
            }
        }
    }
    out
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() })
            .collect();
        Polynomial { ring: self.ring, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for t in &mut self.terms {
            t.coeff = -std::mem::take(&mut t.coeff);
        }
        self
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods for
// fallible arithmetic.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }

        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;
    use proptest::prelude::*;

    fn ring3() -> Ring {
        Ring::lex(3)
    }

    fn p(s: &str) -> Polynomial {
        ring3().parse(s).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(p("x1+x2") + p("x1-x2"), p("2*x1"));
        assert_eq!(p("x3^2+x1") + ring3().zero(), p("x3^2+x1"));
        let z = p("x2^2") + p("-x2^2");
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
        assert_eq!(p("x1") - p("x1+x2"), -p("x2"));
        assert!(matches!(
            p("x1").checked_add(&Ring::lex(2).one()),
            Err(AlgebraError::ArityMismatch { left: 3, right: 2 })
        ));
        assert_eq!(
            p("x1").checked_add(&ring3().with_order(MonomialOrder::GrevLex).one()),
            Err(AlgebraError::OrderMismatch)
        );
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("x1+x2") * p("x1+x2"), p("x1^2+2*x1*x2+x2^2"));
        assert_eq!(p("x1+x2") * ring3().one(), p("x1+x2"));
        assert_eq!(p("x1+x2") * p("x1-x2"), p("x1^2-x2^2"));
        assert_eq!(p("x1-1").pow(3), p("x1^3-3*x1^2+3*x1-1"));
    }

    #[test]
    fn leading_terms() {
        let h13 = p("x3+x2+x1");
        assert_eq!(h13.lead().unwrap(), (&rational(1), &Monomial::from_exps(vec![0, 0, 1])));
        let h22 = p("x2^2+x1*x2+x1^2");
        assert_eq!(h22.lead().unwrap().1, &Monomial::from_exps(vec![0, 2, 0]));
        let f = p("-3*x1");
        assert_eq!(f.lead().unwrap(), (&rational(-3), &Monomial::from_exps(vec![1, 0, 0])));
        assert_eq!(ring3().zero().lead(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn monic() {
        assert_eq!(p("2*x1+4").make_monic().unwrap(), p("x1+2"));
        assert_eq!(p("x3").make_monic().unwrap(), p("x3"));
        assert_eq!(p("-x2^2+x1").make_monic().unwrap(), p("x2^2-x1"));
        assert_eq!(ring3().zero().make_monic(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn reorder_and_permute() {
        let f = p("x3+x2^2");
        let g = f.with_order(MonomialOrder::GrevLex);
        assert_eq!(g.lead().unwrap().1, &Monomial::from_exps(vec![0, 2, 0]));
        assert_eq!(g.with_order(MonomialOrder::Lex), f);
        assert_eq!(f.permute_vars(&[3, 1, 2]).unwrap(), p("x2+x1^2"));
        assert!(f.permute_vars(&[1, 1, 2]).is_err());
    }

    pub(crate) fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (-4i64..=4, prop::collection::vec(0u32..3, 3)),
            0..5,
        )
        .prop_map(|ts| {
            Ring::lex(3)
                .from_terms(ts.into_iter().map(|(c, e)| (rational(c), Monomial::from_exps(e))))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!((&f + &g) + &h, &f + (&g + &h));
            prop_assert_eq!((&f * &g) * &h, &f * (&g * &h));
            prop_assert_eq!(&f * (&g + &h), &f * &g + &f * &h);
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn canonical_form(f in small_poly(), g in small_poly()) {
            let s = &f * &g + &f;
            for w in s.terms().windows(2) {
                prop_assert_eq!(MonomialOrder::Lex.compare(&w[0].mono, &w[1].mono), Ordering::Greater);
            }
            prop_assert!(s.terms().iter().all(|t| !t.coeff.is_zero()));
        }
    }
}

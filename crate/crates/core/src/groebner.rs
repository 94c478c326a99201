//! Multivariate division, S-polynomials and Buchberger's algorithm.

use std::collections::VecDeque;

use num::Zero;

use crate::error::{AlgebraError, Result};
use crate::poly::merge_terms;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring, Term};

/// `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn common_ring(f: &Polynomial, others: &[Polynomial], ord: MonomialOrder) -> Result<Ring> {
    for g in others {
        if g.arity() != f.arity() {
            return Err(AlgebraError::ArityMismatch { left: f.arity(), right: g.arity() });
        }
    }
    Ok(f.ring().with_order(ord))
}

fn reorder_all(polys: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    polys.iter().map(|g| g.with_order(ord)).collect()
}

/// Core reduction loop. The current dividend is `p[start..]`; its leading
/// term is reduced by the first divisor whose leading monomial divides it, or
/// moved to the remainder.
fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    mut quotients: Option<&mut [Vec<Term>]>,
) -> Vec<Term> {
    let order = f.order();
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut rem = Vec::new();
    while start < p.len() {
        let lead = &p[start];
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let lt = &g.terms()[0];
            lead.mono.checked_div(&lt.mono).map(|m| (i, m, &lead.coeff / &lt.coeff))
        });
        match hit {
            Some((i, m, c)) => {
                let g = &divisors[i];
                let neg = -&c;
                let tail = g.terms()[1..]
                    .iter()
                    .map(|t| Term { coeff: &t.coeff * &neg, mono: t.mono.mul(&m) });
                let rest = p.drain(start + 1..);
                p = merge_terms(order, rest, tail);
                start = 0;
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push(Term { coeff: c, mono: m });
                }
            }
            None => {
                rem.push(std::mem::replace(
                    &mut p[start],
                    Term { coeff: Rational::zero(), mono: Monomial::one(0) },
                ));
                start += 1;
            }
        }
    }
    rem
}

/// Divides `f` by the ordered list `divisors` under `ord`. At each step the
/// first divisor (in list order) whose leading monomial divides the current
/// leading monomial is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Result<DivisionResult> {
    let ring = common_ring(f, divisors, ord)?;
    if let Some(i) = divisors.iter().position(Polynomial::is_zero) {
        return Err(AlgebraError::ZeroDivisor(i));
    }
    let f = f.with_order(ord);
    let divisors = reorder_all(divisors, ord);
    let mut q = vec![Vec::new(); divisors.len()];
    let rem = reduce(&f, &divisors, Some(&mut q));
    Ok(DivisionResult {
        // quotient terms are produced in strictly decreasing order
        quotients: q.into_iter().map(|t| ring.from_sorted(t)).collect(),
        remainder: ring.from_sorted(rem),
    })
}

/// Remainder of [`divide`] without tracking quotients. Divisors must be
/// nonzero and share `f`'s ring.
pub(crate) fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    f.ring().from_sorted(reduce(f, divisors, None))
}

/// `(lcm/LT(f))·f − (lcm/LT(g))·g` with `lcm = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    common_ring(f, std::slice::from_ref(g), ord)?;
    let f = f.with_order(ord);
    let g = g.with_order(ord);
    Ok(spoly(&f, &g))
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fc, fm) = f.lead().expect("nonzero S-pair operand");
    let (gc, gm) = g.lead().expect("nonzero S-pair operand");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fc.recip(), &lcm.checked_div(fm).unwrap());
    let b = g.mul_term(&gc.recip(), &lcm.checked_div(gm).unwrap());
    a - b
}

/// Public entry with the zero-input check.
pub fn s_polynomial_checked(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    s_polynomial(f, g, ord)
}

/// A Groebner basis together with the ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// The (reduced) basis of the zero ideal: no elements.
    pub fn zero_ideal(ring: Ring) -> Self {
        GroebnerBasis { ring, elements: Vec::new(), reduced: true }
    }

    pub fn unit_ideal(ring: Ring) -> Self {
        GroebnerBasis { ring, elements: vec![ring.one()], reduced: true }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// Monic elements sorted by decreasing leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.terms()[0].mono.clone()).collect()
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime.
    pub product_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { product_criterion: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_processed: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
}

pub fn buchberger(generators: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(generators, ord, BuchbergerOptions::default()).map(|(g, _)| g)
}

/// Buchberger's algorithm with FIFO pair selection. New basis elements are
/// made monic; the output is sorted by decreasing leading monomial but not
/// interreduced.
pub fn buchberger_with(
    generators: &[Polynomial],
    ord: MonomialOrder,
    opts: BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let ring = match generators.first() {
        Some(f) => common_ring(f, generators, ord)?,
        None => return Err(AlgebraError::ZeroIdeal),
    };
    let mut basis: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(ord).make_monic().expect("nonzero"))
        .collect();
    if basis.is_empty() {
        return Err(AlgebraError::ZeroIdeal);
    }
    let mut stats = BuchbergerStats::default();
    if basis.iter().any(Polynomial::is_unit) {
        return Ok((GroebnerBasis::unit_ideal(ring), stats));
    }

    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let (fi, fj) = (&basis[i], &basis[j]);
        if opts.product_criterion && fi.terms()[0].mono.is_coprime(&fj.terms()[0].mono) {
            stats.pairs_skipped += 1;
            continue;
        }
        stats.pairs_processed += 1;
        let r = remainder(&spoly(fi, fj), &basis);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let r = r.make_monic().expect("nonzero");
        if r.is_unit() {
            return Ok((GroebnerBasis::unit_ideal(ring), stats));
        }
        let k = basis.len();
        pairs.extend((0..k).map(|i| (i, k)));
        basis.push(r);
    }
    sort_by_leading(&mut basis, ord);
    Ok((GroebnerBasis { ring, elements: basis, reduced: false }, stats))
}

fn sort_by_leading(polys: &mut [Polynomial], ord: MonomialOrder) {
    polys.sort_by(|a, b| ord.compare(&b.terms()[0].mono, &a.terms()[0].mono));
}

/// Interreduces a Groebner basis into the unique reduced one: drops elements
/// whose leading monomial is divisible by another's, then replaces each
/// element by its remainder modulo the others.
pub fn reduce_basis(basis: &GroebnerBasis) -> GroebnerBasis {
    if basis.reduced {
        return basis.clone();
    }
    let elems: Vec<Polynomial> = basis
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic().expect("nonzero"))
        .collect();
    let lms: Vec<&Monomial> = elems.iter().map(|g| &g.terms()[0].mono).collect();
    let mut minimal: Vec<Polynomial> = elems
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            !lms.iter().enumerate().any(|(j, m)| {
                j != i && m.divides(lms[i]) && (*m != lms[i] || j < i)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    for i in 0..minimal.len() {
        let g = minimal.remove(i);
        let r = remainder(&g, &minimal);
        minimal.insert(i, r.make_monic().expect("leading term is irreducible"));
    }
    sort_by_leading(&mut minimal, basis.order());
    GroebnerBasis { ring: basis.ring, elements: minimal, reduced: true }
}

/// `reduce_basis(buchberger(generators))`; the zero ideal yields an empty basis.
pub fn reduced_groebner_basis(generators: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    match buchberger(generators, ord) {
        Ok(g) => Ok(reduce_basis(&g)),
        Err(AlgebraError::ZeroIdeal) if !generators.is_empty() => {
            Ok(GroebnerBasis::zero_ideal(generators[0].ring().with_order(ord)))
        }
        Err(e) => Err(e),
    }
}

/// Remainder of `f` on division by the basis elements.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if basis.ring.arity() != f.arity() {
        return Err(AlgebraError::ArityMismatch { left: f.arity(), right: basis.ring.arity() });
    }
    Ok(remainder(&f.with_order(basis.order()), &basis.elements))
}

/// Buchberger's criterion: every pairwise S-polynomial reduces to zero.
/// Zero elements are ignored.
pub fn is_groebner_basis(polys: &[Polynomial], ord: MonomialOrder) -> Result<bool> {
    let Some(first) = polys.first() else { return Ok(true) };
    common_ring(first, polys, ord)?;
    let g: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).map(|p| p.with_order(ord)).collect();
    for j in 1..g.len() {
        for i in 0..j {
            if !remainder(&spoly(&g[i], &g[j]), &g).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reducedness: every element is nonzero and monic, and none of its monomials
/// is divisible by the leading monomial of another element. Whether the set is
/// a Groebner basis at all is checked separately by [`is_groebner_basis`].
pub fn is_reduced(polys: &[Polynomial], ord: MonomialOrder) -> Result<bool> {
    let Some(first) = polys.first() else { return Ok(true) };
    common_ring(first, polys, ord)?;
    let g: Vec<Polynomial> = polys.iter().map(|p| p.with_order(ord)).collect();
    if g.iter().any(|p| !p.is_monic()) {
        return Ok(false);
    }
    for (i, gi) in g.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            if i == j {
                continue;
            }
            let lm = &gj.terms()[0].mono;
            if gi.terms().iter().any(|t| lm.divides(&t.mono)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

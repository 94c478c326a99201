//! Hilbert series of artinian monomial quotients by counting standard
//! monomials, and the closed form `Π_{i=1..n} (1 + t + … + t^{i-1})`.

use std::fmt;

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::groebner::reduced_groebner_basis;
use crate::poly::{Monomial, MonomialOrder};
use crate::symfunc::elementary;

/// Dense univariate polynomial in `t`; `coeffs[d]` is the dimension of the
/// degree-`d` piece. No trailing zeros, so the zero ring is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SeriesPoly {
    coeffs: Vec<u64>,
}

impl SeriesPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SeriesPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`: the vector-space dimension.
    pub fn dimension(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn mul(&self, other: &SeriesPoly) -> SeriesPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return SeriesPoly::default();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SeriesPoly::new(out)
    }
}

/// `1 + 3t + 5t^2` style.
impl fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coeffs.iter().join(" "))
    }
}

/// Counts the monomials of each degree that no element of `leading` divides.
/// Every variable needs a pure power among `leading`, otherwise the quotient
/// is infinite-dimensional and an error is returned.
pub fn staircase_series(leading: &[Monomial], arity: usize, exec: Execution) -> Result<SeriesPoly> {
    if arity == 0 {
        return Err(AlgebraError::invalid("arity must be positive"));
    }
    if let Some(m) = leading.iter().find(|m| m.arity() != arity) {
        return Err(AlgebraError::ArityMismatch { left: arity, right: m.arity() });
    }
    if leading.iter().any(Monomial::is_one) {
        return Ok(SeriesPoly::default());
    }
    let mut caps = vec![u32::MAX; arity];
    for (var, d) in leading.iter().filter_map(Monomial::as_pure_power) {
        caps[var - 1] = caps[var - 1].min(d);
    }
    if let Some(i) = caps.iter().position(|&c| c == u32::MAX) {
        return Err(AlgebraError::NonArtinian(i + 1));
    }

    // slice the box by the exponent of the last variable
    let top = caps[arity - 1] as usize;
    let inner: Vec<std::ops::Range<u32>> = caps[..arity - 1].iter().map(|&c| 0..c).collect();
    let partial = exec.map_range(top, |e_top| {
        let mut counts: Vec<u64> = Vec::new();
        let mut visit = |exps: Vec<u32>| {
            let m = Monomial::from_exps(exps);
            if !leading.iter().any(|l| l.divides(&m)) {
                let d = m.degree() as usize;
                if counts.len() <= d {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
            }
        };
        if inner.is_empty() {
            visit(vec![e_top as u32]);
        } else {
            for mut exps in inner.iter().cloned().multi_cartesian_product() {
                exps.push(e_top as u32);
                visit(exps);
            }
        }
        counts
    });
    let len = partial.iter().map(Vec::len).max().unwrap_or(0);
    let mut coeffs = vec![0u64; len];
    for counts in partial {
        for (d, c) in counts.into_iter().enumerate() {
            coeffs[d] += c;
        }
    }
    Ok(SeriesPoly::new(coeffs))
}

/// `Π_{i=1..n} (1 - t^i)/(1 - t) = Π_{i=1..n} (1 + t + … + t^{i-1})`.
/// `n = 0` gives the empty product `1`.
pub fn closed_form_series(n: usize) -> SeriesPoly {
    (1..=n).fold(SeriesPoly::new(vec![1]), |acc, i| acc.mul(&SeriesPoly::new(vec![1; i])))
}

/// Dimension of the quotient by all elementary symmetric polynomials: `n!`.
pub fn quotient_dimension(n: usize) -> u128 {
    closed_form_series(n).dimension()
}

/// Series computed from the reduced lex basis of `⟨e_{1,n}, …, e_{n,n}⟩`
/// next to the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub n: usize,
    pub leading_monomials: Vec<Monomial>,
    pub from_basis: SeriesPoly,
    pub closed_form: SeriesPoly,
}

impl HilbertReport {
    pub fn matches(&self) -> bool {
        self.from_basis == self.closed_form
    }

    pub fn dimension(&self) -> u128 {
        self.from_basis.dimension()
    }
}

pub fn coinvariant_report(n: usize, exec: Execution) -> Result<HilbertReport> {
    if n == 0 {
        return Err(AlgebraError::invalid("n must be at least 1"));
    }
    let gens = (1..=n).map(|k| elementary(k, n, n)).collect::<Result<Vec<_>>>()?;
    let gb = reduced_groebner_basis(&gens, MonomialOrder::Lex)?;
    let leading_monomials = gb.leading_monomials();
    let from_basis = staircase_series(&leading_monomials, n, exec)?;
    Ok(HilbertReport { n, leading_monomials, from_basis, closed_form: closed_form_series(n) })
}

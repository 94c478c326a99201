//! Elementary, complete homogeneous and power-sum symmetric polynomials, and
//! symbolic checks of the identities relating them.
//!
//! `e_{k,n}` and `h_{k,n}` are built with the subset/multiset recursions
//!
//! ```text
//! e_{k,n} = e_{k,n-1} + x_n e_{k-1,n-1}      (0 if n < k, 1 if k = 0)
//! h_{k,n} = h_{k,n-1} + x_n h_{k-1,n}        (0 if n = 0 < k, 1 if k = 0)
//! ```
//!
//! Identity checks work on the "everything moved to one side" form and report
//! whether the difference polynomial vanishes. Parameters like `n - k + 1` can
//! go negative for `k > n`; a negative variable count behaves like zero
//! variables (`e_{0,m} = h_{0,m} = 1`, everything else 0).

use std::fmt;
use std::str::FromStr;

use num::One;

use crate::error::{AlgebraError, Result};
use crate::poly::{rational, Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymKind {
    Elementary,
    Homogeneous,
    PowerSum,
}

impl FromStr for SymKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(SymKind::Elementary),
            "h" => Ok(SymKind::Homogeneous),
            "p" => Ok(SymKind::PowerSum),
            other => Err(AlgebraError::invalid(format!("unknown symmetric kind `{other}`"))),
        }
    }
}

impl fmt::Display for SymKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymKind::Elementary => "e",
            SymKind::Homogeneous => "h",
            SymKind::PowerSum => "p",
        })
    }
}

/// `kind_{k,n}` in `x1..xn`, embedded in `arity ≥ n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymSpec {
    pub kind: SymKind,
    pub k: usize,
    pub n: usize,
    pub arity: usize,
}

impl SymSpec {
    pub fn build(&self) -> Result<Polynomial> {
        match self.kind {
            SymKind::Elementary => elementary(self.k, self.n, self.arity),
            SymKind::Homogeneous => homogeneous(self.k, self.n, self.arity),
            SymKind::PowerSum => powersum(self.k, self.n, self.arity),
        }
    }
}

fn lex_ring(n: usize, arity: usize) -> Result<Ring> {
    if arity < n {
        return Err(AlgebraError::invalid(format!("arity {arity} is smaller than n = {n}")));
    }
    Ring::new(arity, Default::default())
}

fn check_ring(ring: Ring, n: usize) -> Result<()> {
    if ring.arity() < n {
        return Err(AlgebraError::invalid(format!("arity {} is smaller than n = {n}", ring.arity())));
    }
    Ok(())
}

fn x(ring: Ring, i: usize) -> Polynomial {
    ring.var(i).expect("variable index checked against arity")
}

/// `[e_{0,n}, …, e_{kmax,n}]`, one sweep of the recursion over `n`.
pub fn elementary_row(ring: Ring, kmax: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_ring(ring, n)?;
    let mut row = vec![ring.zero(); kmax + 1];
    row[0] = ring.one();
    for m in 1..=n {
        let xm = x(ring, m);
        // e_{j,m} = e_{j,m-1} + x_m e_{j-1,m-1}; descend so e_{j-1} is still the m-1 value
        for j in (1..=kmax.min(m)).rev() {
            let t = &xm * &row[j - 1];
            row[j] = &row[j] + t;
        }
    }
    Ok(row)
}

/// `[h_{0,n}, …, h_{kmax,n}]`.
pub fn homogeneous_row(ring: Ring, kmax: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_ring(ring, n)?;
    let mut row = vec![ring.zero(); kmax + 1];
    row[0] = ring.one();
    for m in 1..=n {
        let xm = x(ring, m);
        // h_{j,m} = h_{j,m-1} + x_m h_{j-1,m}; ascend so h_{j-1} is already the m value
        for j in 1..=kmax {
            let t = &xm * &row[j - 1];
            row[j] = &row[j] + t;
        }
    }
    Ok(row)
}

pub fn elementary_in(ring: Ring, k: usize, n: usize) -> Result<Polynomial> {
    if n < k {
        check_ring(ring, n)?;
        return Ok(ring.zero());
    }
    Ok(elementary_row(ring, k, n)?.pop().expect("row has k+1 entries"))
}

pub fn homogeneous_in(ring: Ring, k: usize, n: usize) -> Result<Polynomial> {
    Ok(homogeneous_row(ring, k, n)?.pop().expect("row has k+1 entries"))
}

pub fn powersum_in(ring: Ring, k: usize, n: usize) -> Result<Polynomial> {
    check_ring(ring, n)?;
    if k == 0 {
        return Err(AlgebraError::invalid("power sums start at k = 1"));
    }
    let k = u32::try_from(k).map_err(|_| AlgebraError::invalid("degree too large"))?;
    ring.from_terms(
        (1..=n).map(|i| (Rational::one(), Monomial::var_pow(ring.arity(), i, k).expect("i ≤ n ≤ arity"))),
    )
}

/// `e_{k,n}(x1..xn)` in `Q[x1..x_arity]` under lex.
pub fn elementary(k: usize, n: usize, arity: usize) -> Result<Polynomial> {
    elementary_in(lex_ring(n, arity)?, k, n)
}

/// `h_{k,n}(x1..xn)` in `Q[x1..x_arity]` under lex.
pub fn homogeneous(k: usize, n: usize, arity: usize) -> Result<Polynomial> {
    homogeneous_in(lex_ring(n, arity)?, k, n)
}

/// `p_{k,n} = x1^k + … + xn^k` for `k ≥ 1`.
pub fn powersum(k: usize, n: usize, arity: usize) -> Result<Polynomial> {
    powersum_in(lex_ring(n, arity)?, k, n)
}

/// `wt(S) = Π x_s^{m(s)}` for a multiset `S` of elements in `1..=arity`.
pub fn weight(elements: &[usize], arity: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; arity];
    for &s in elements {
        if s == 0 || s > arity {
            return Err(AlgebraError::OutOfRange { element: s, max: arity });
        }
        exps[s - 1] += 1;
    }
    Ok(Monomial::from_exps(exps))
}

fn e_signed(ring: Ring, k: usize, m: i64) -> Polynomial {
    if m < 0 {
        return if k == 0 { ring.one() } else { ring.zero() };
    }
    elementary_in(ring, k, m as usize).expect("m ≤ arity")
}

fn h_signed(ring: Ring, k: usize, m: i64) -> Polynomial {
    if m < 0 {
        return if k == 0 { ring.one() } else { ring.zero() };
    }
    homogeneous_in(ring, k, m as usize).expect("m ≤ arity")
}

fn sign(i: usize) -> Rational {
    rational(if i % 2 == 0 { 1 } else { -1 })
}

/// The identities checked symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `h_{k,n-k+1} = Σ_{i=1..k} (-1)^{i+1} e_{i,n} h_{k-i,n-k+1}`
    Hkn,
    /// `e_{k,n} = Σ_{i=1..k} (-1)^{i+1} h_{i,n-i+1} e_{k-i,n-i}`
    Ekn,
    /// `Σ_{l=0..j} x_{n-j+1}^l h_{j-l,n-j} = h_{j,n-j+1}`, with `k` playing `j`
    Telescope,
    /// `Σ_{r=0..k-1} (-1)^r e_{r,n} p_{k-r,n} + (-1)^k k e_{k,n} = 0`
    Newton,
    /// `e_{k,n} - e_{k,n-1} = x_n e_{k-1,n-1}` together with
    /// `e_{1,n-1}e_{k-1,n-1} - e_{k,n-1} = e_{1,n}e_{k-1,n-1} - e_{k,n}`
    E1ekReduction,
}

impl Identity {
    pub const ALL: [Identity; 5] =
        [Identity::Hkn, Identity::Ekn, Identity::Telescope, Identity::Newton, Identity::E1ekReduction];

    /// `LHS - RHS` of the identity at `(k, n)`, in `Q[x1..x_max(n,1)]`.
    /// For the two-part reduction identity the first nonzero difference is
    /// returned.
    pub fn difference(self, k: usize, n: usize) -> Result<Polynomial> {
        if k == 0 {
            return Err(AlgebraError::invalid("identities are stated for k ≥ 1"));
        }
        let ring = Ring::lex(n.max(1));
        let (ki, ni) = (k as i64, n as i64);
        match self {
            Identity::Hkn => {
                let m = ni - ki + 1;
                let e_row = elementary_row(ring, k, n)?;
                let mut diff = h_signed(ring, k, m);
                for (i, ei) in e_row.iter().enumerate().skip(1) {
                    let t = ei * h_signed(ring, k - i, m);
                    diff = diff + t.scale(&sign(i));
                }
                Ok(diff)
            }
            Identity::Ekn => {
                let mut diff = e_signed(ring, k, ni);
                for i in 1..=k {
                    let ii = i as i64;
                    let t = h_signed(ring, i, ni - ii + 1) * e_signed(ring, k - i, ni - ii);
                    diff = diff + t.scale(&sign(i));
                }
                Ok(diff)
            }
            Identity::Telescope => {
                if k > n {
                    return Err(AlgebraError::invalid(format!(
                        "telescoping identity needs 1 ≤ j ≤ n, got j = {k}, n = {n}"
                    )));
                }
                let top = x(ring, n - k + 1);
                let h_row = homogeneous_row(ring, k, n - k)?;
                let lhs = (0..=k).fold(ring.zero(), |acc, l| acc + top.pow(l as u32) * &h_row[k - l]);
                Ok(lhs - homogeneous_in(ring, k, n - k + 1)?)
            }
            Identity::Newton => {
                let e_row = elementary_row(ring, k, n)?;
                let mut diff = e_row[k].scale(&(sign(k) * rational(ki)));
                for (r, er) in e_row.iter().enumerate().take(k) {
                    let t = er * powersum_in(ring, k - r, n)?;
                    diff = diff + t.scale(&sign(r));
                }
                Ok(diff)
            }
            Identity::E1ekReduction => {
                if n == 0 {
                    return Err(AlgebraError::invalid("reduction identity needs n ≥ 1"));
                }
                let ekn = elementary_in(ring, k, n)?;
                let ekn1 = elementary_in(ring, k, n - 1)?;
                let ek1n1 = elementary_in(ring, k - 1, n - 1)?;
                let first = &ekn - &ekn1 - x(ring, n) * &ek1n1;
                if !first.is_zero() {
                    return Ok(first);
                }
                let e1n1 = elementary_in(ring, 1, n - 1)?;
                let e1n = elementary_in(ring, 1, n)?;
                Ok((e1n1 * &ek1n1 - ekn1) - (e1n * &ek1n1 - ekn))
            }
        }
    }

    pub fn holds(self, k: usize, n: usize) -> Result<bool> {
        Ok(self.difference(k, n)?.is_zero())
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::Hkn => "hkn",
            Identity::Ekn => "ekn",
            Identity::Telescope => "telescope",
            Identity::Newton => "newton",
            Identity::E1ekReduction => "e1ek-reduction",
        }
    }
}

pub fn check_prop_hkn(k: usize, n: usize) -> Result<bool> {
    Identity::Hkn.holds(k, n)
}

pub fn check_prop_ekn(k: usize, n: usize) -> Result<bool> {
    Identity::Ekn.holds(k, n)
}

pub fn check_telescope(j: usize, n: usize) -> Result<bool> {
    Identity::Telescope.holds(j, n)
}

pub fn check_newton(k: usize, n: usize) -> Result<bool> {
    Identity::Newton.holds(k, n)
}

pub fn check_e1ek_reduction(k: usize, n: usize) -> Result<bool> {
    Identity::E1ekReduction.holds(k, n)
}

fn check_k_le_n(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(AlgebraError::invalid(format!("need 1 ≤ k ≤ n, got k = {k}, n = {n}")));
    }
    Ok(())
}

fn monic_sorted(mut polys: Vec<Polynomial>) -> Vec<Polynomial> {
    polys.retain(|p| !p.is_zero());
    let mut polys: Vec<_> = polys.into_iter().map(|p| p.make_monic().expect("nonzero")).collect();
    let ord = polys.first().map(|p| p.order()).unwrap_or_default();
    polys.sort_by(|a, b| ord.compare(&b.terms()[0].mono, &a.terms()[0].mono));
    polys
}

/// `{h_{i,n-i+1} : i = 1..k}`, the closed form of the reduced lex basis of
/// `⟨e_{1,n}, …, e_{k,n}⟩`.
pub fn conjectured_gb_ek(k: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_k_le_n(k, n)?;
    let ring = Ring::lex(n);
    let polys = (1..=k).map(|i| homogeneous_in(ring, i, n - i + 1)).collect::<Result<Vec<_>>>()?;
    Ok(monic_sorted(polys))
}

/// `{e_{1,n}, e_{1,n-1}e_{k-1,n-1} - e_{k,n-1}}`, the closed form of the
/// reduced lex basis of `⟨e_{1,n}, e_{k,n}⟩`. At `k = 1` the second element
/// vanishes and is dropped.
pub fn conjectured_gb_e1ek(k: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_k_le_n(k, n)?;
    let ring = Ring::lex(n);
    let second = elementary_in(ring, 1, n - 1)? * elementary_in(ring, k - 1, n - 1)?
        - elementary_in(ring, k, n - 1)?;
    Ok(monic_sorted(vec![elementary_in(ring, 1, n)?, second]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use num::integer::binomial;

    fn p(n: usize, s: &str) -> Polynomial {
        Ring::lex(n).parse(s).unwrap()
    }

    /// Weight enumerator over k-subsets (`multi = false`) or k-multisets of 1..=n.
    fn brute_force(k: usize, n: usize, multi: bool) -> Polynomial {
        let ring = Ring::lex(n.max(1));
        let monos: Vec<Monomial> = if multi {
            (1..=n).combinations_with_replacement(k).map(|s| weight(&s, ring.arity()).unwrap()).collect()
        } else {
            (1..=n).combinations(k).map(|s| weight(&s, ring.arity()).unwrap()).collect()
        };
        ring.from_terms(monos.into_iter().map(|m| (Rational::one(), m))).unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(2, 3, 3).unwrap(), p(3, "x1*x2+x1*x3+x2*x3"));
        assert!(elementary(4, 3, 3).unwrap().is_zero());
        assert_eq!(elementary(0, 5, 5).unwrap(), p(5, "1"));
        assert!(elementary(1, 4, 3).is_err());
        assert_eq!(elementary(1, 2, 4).unwrap(), p(4, "x1+x2"));
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous(2, 2, 2).unwrap(), p(2, "x1^2+x1*x2+x2^2"));
        assert_eq!(homogeneous(3, 1, 1).unwrap(), p(1, "x1^3"));
        for n in 1..6 {
            assert_eq!(homogeneous(1, n, n).unwrap(), elementary(1, n, n).unwrap());
        }
        assert!(homogeneous(2, 0, 1).unwrap().is_zero());
        assert_eq!(homogeneous(0, 0, 1).unwrap(), p(1, "1"));
    }

    #[test]
    fn powersum_examples() {
        assert_eq!(powersum(2, 2, 2).unwrap(), p(2, "x1^2+x2^2"));
        assert_eq!(powersum(1, 3, 3).unwrap(), p(3, "x1+x2+x3"));
        assert_eq!(powersum(3, 1, 1).unwrap(), p(1, "x1^3"));
        assert!(powersum(0, 3, 3).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&[1, 2, 5], 5).unwrap().to_string(), "x1*x2*x5");
        assert_eq!(weight(&[1, 1, 3, 4], 4).unwrap().to_string(), "x1^2*x3*x4");
        assert!(weight(&[], 3).unwrap().is_one());
        assert_eq!(weight(&[4], 3), Err(AlgebraError::OutOfRange { element: 4, max: 3 }));
    }

    #[test]
    fn recursion_matches_enumeration() {
        for n in 0..=6 {
            for k in 0..=n {
                let e = elementary(k, n, n.max(1)).unwrap();
                let h = homogeneous(k, n, n.max(1)).unwrap();
                assert_eq!(e, brute_force(k, n, false), "e_{{{k},{n}}}");
                assert_eq!(h, brute_force(k, n, true), "h_{{{k},{n}}}");
                assert_eq!(e.len() as u64, binomial(n as u64, k as u64));
                if n > 0 {
                    assert_eq!(h.len() as u64, binomial((n + k - 1) as u64, k as u64));
                }
                assert!(e.terms().iter().chain(h.terms()).all(|t| t.coeff.is_one()));
            }
        }
    }

    #[test]
    fn symmetric_under_all_permutations() {
        for n in 1..=5 {
            for k in 1..=n {
                let polys = [
                    elementary(k, n, n).unwrap(),
                    homogeneous(k, n, n).unwrap(),
                    powersum(k, n, n).unwrap(),
                ];
                for perm in (1..=n).permutations(n) {
                    for f in &polys {
                        assert_eq!(&f.permute_vars(&perm).unwrap(), f);
                    }
                }
            }
        }
    }

    #[test]
    fn leading_monomials() {
        for n in 1..=6 {
            for k in 1..=n {
                let lm = elementary(k, n, n).unwrap().terms()[0].mono.clone();
                assert_eq!(lm, weight(&((n - k + 1)..=n).collect::<Vec<_>>(), n).unwrap());
                let lm = homogeneous(k, n - k + 1, n).unwrap().terms()[0].mono.clone();
                assert_eq!(lm, Monomial::var_pow(n, n - k + 1, k as u32).unwrap());
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(check_prop_hkn(2, 3).unwrap());
        assert!(check_prop_hkn(5, 3).unwrap());
        assert!(check_prop_hkn(0, 4).is_err());
        assert!(check_prop_ekn(1, 1).unwrap());
        assert!(check_prop_ekn(3, 4).unwrap());
        assert!(check_prop_ekn(6, 4).unwrap());
        assert!(check_telescope(1, 2).unwrap());
        assert!(check_telescope(2, 3).unwrap());
        assert!(check_telescope(3, 3).unwrap());
        assert!(check_telescope(4, 3).is_err());
        assert!(check_newton(1, 3).unwrap());
        assert!(check_newton(2, 2).unwrap());
        assert!(check_newton(4, 3).unwrap());
        assert!(check_e1ek_reduction(1, 1).unwrap());
        assert!(check_e1ek_reduction(2, 3).unwrap());
        assert!(check_e1ek_reduction(4, 4).unwrap());
    }

    #[test]
    fn newton_at_two_variables_by_hand() {
        // p_2 - e_1 p_1 + 2 e_2 = x1^2+x2^2 - (x1+x2)^2 + 2 x1 x2
        let e1 = p(2, "x1+x2");
        let direct = p(2, "x1^2+x2^2") - &e1 * &e1 + p(2, "2*x1*x2");
        assert!(direct.is_zero());
        assert!(Identity::Newton.difference(2, 2).unwrap().is_zero());
    }

    #[test]
    fn a_wrong_identity_is_caught() {
        // dropping the last summand of the hkn sum leaves ±e_{k,n}·h_{0}
        let ring = Ring::lex(3);
        let e_row = elementary_row(ring, 2, 3).unwrap();
        let partial = &e_row[1] * homogeneous_in(ring, 1, 2).unwrap();
        assert!(!(homogeneous_in(ring, 2, 2).unwrap() - partial).is_zero());
    }

    #[test]
    fn identities_hold_on_grid() {
        for n in 1..=6 {
            for k in 1..=n + 2 {
                for id in Identity::ALL {
                    if id == Identity::Telescope && k > n {
                        continue;
                    }
                    assert!(id.holds(k, n).unwrap(), "{} at k={k} n={n}", id.name());
                }
            }
        }
    }

    #[test]
    fn conjectured_bases() {
        assert_eq!(conjectured_gb_ek(2, 3).unwrap(), vec![p(3, "x3+x2+x1"), p(3, "x2^2+x2*x1+x1^2")]);
        assert_eq!(conjectured_gb_e1ek(2, 3).unwrap(), vec![p(3, "x3+x2+x1"), p(3, "x2^2+x2*x1+x1^2")]);
        let ring = Ring::lex(4);
        let second = elementary_in(ring, 1, 3).unwrap() * elementary_in(ring, 2, 3).unwrap()
            - elementary_in(ring, 3, 3).unwrap();
        assert_eq!(conjectured_gb_e1ek(3, 4).unwrap(), vec![elementary(1, 4, 4).unwrap(), second]);
        assert_eq!(conjectured_gb_e1ek(1, 2).unwrap(), vec![p(2, "x1+x2")]);
        assert!(conjectured_gb_ek(4, 3).is_err());
        assert!(conjectured_gb_e1ek(0, 3).is_err());
    }
}

//! Sign-reversing involutions on signed set/multiset pairs.
//!
//! Each family has a carrier of pairs `(A, B)` whose signed weight enumerator
//! `Σ (-1)^{|A|} wt(A) wt(B)` is the zero form of an identity between `e` and
//! `h`:
//!
//! * [`Family::Hkn`]: `A ⊆ {1..n}` a set, `B` a multiset of size `k - |A|`
//!   over `{1..n-k+1}`; sums to `Σ_i (-1)^i e_{i,n} h_{k-i,n-k+1}`.
//! * [`Family::Ekn`]: `A` a multiset over `{1..n-|A|+1}`, `B ⊆ {1..n-|A|}` a
//!   set of size `k - |A|`; sums to `Σ_i (-1)^i h_{i,n-i+1} e_{k-i,n-i}`.
//!
//! An involution moves a single element between `A` and `B`, so it flips the
//! sign and keeps `wt(A)·wt(B)`. [`Rule::MinFirst`] compares minima (`min ∅ =
//! +∞`) and is the involution used for `Hkn`. On the `Ekn` carrier it leaves the
//! carrier (e.g. `(∅|1,2) -> (1|2)` at `k = n = 2`), so `Ekn` defaults to
//! [`Rule::MaxFirst`], which compares maxima (`max ∅ = -∞`) and stays inside.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::poly::{rational, Monomial, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hkn,
    Ekn,
}

impl Family {
    pub fn default_rule(self) -> Rule {
        match self {
            Family::Hkn => Rule::MinFirst,
            Family::Ekn => Rule::MaxFirst,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Hkn => "hkn",
            Family::Ekn => "ekn",
        }
    }
}

impl FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hkn" => Ok(Family::Hkn),
            "ekn" => Ok(Family::Ekn),
            other => Err(AlgebraError::invalid(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// If `min(B) < min(A)` move `min(B)` into `A`, otherwise move `min(A)`
    /// into `B`.
    MinFirst,
    /// If `max(B) ≥ max(A)` move `max(B)` into `A`, otherwise move `max(A)`
    /// into `B`.
    MaxFirst,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::MinFirst => "min",
            Rule::MaxFirst => "max",
        }
    }
}

impl FromStr for Rule {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Rule::MinFirst),
            "max" => Ok(Rule::MaxFirst),
            other => Err(AlgebraError::invalid(format!("unknown rule `{other}`"))),
        }
    }
}

/// A carrier element. `a` and `b` are sorted; which of them may repeat
/// elements is fixed by the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPair {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn weakly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn within(v: &[usize], hi: i64) -> bool {
    v.iter().all(|&x| x >= 1 && (x as i64) <= hi)
}

impl SignedPair {
    /// `(-1)^{|A|}`.
    pub fn sign(&self) -> i64 {
        if self.a.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `wt(A)·wt(B)` in `n` variables (at least one).
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.n.max(1)];
        for &s in self.a.iter().chain(&self.b) {
            exps[s - 1] += 1;
        }
        Monomial::from_exps(exps)
    }

    pub fn in_carrier(&self) -> bool {
        let (k, n) = (self.k as i64, self.n as i64);
        let i = self.a.len() as i64;
        if i + self.b.len() as i64 != k {
            return false;
        }
        match self.family {
            Family::Hkn => {
                strictly_increasing(&self.a)
                    && within(&self.a, n)
                    && weakly_increasing(&self.b)
                    && within(&self.b, n - k + 1)
            }
            Family::Ekn => {
                weakly_increasing(&self.a)
                    && within(&self.a, n - i + 1)
                    && strictly_increasing(&self.b)
                    && within(&self.b, n - i)
            }
        }
    }
}

fn fmt_list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).join(",")
}

impl fmt::Display for SignedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", fmt_list(&self.a), fmt_list(&self.b))
    }
}

/// Enumerated carrier; `trivial` flags `k > n`, where the identity holds for
/// degree reasons and the carrier is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub pairs: Vec<SignedPair>,
    pub trivial: bool,
}

fn sets(m: i64, size: usize) -> Vec<Vec<usize>> {
    (1..=m.max(0) as usize).combinations(size).collect()
}

fn multisets(m: i64, size: usize) -> Vec<Vec<usize>> {
    (1..=m.max(0) as usize).combinations_with_replacement(size).collect()
}

fn check_params(k: usize, n: usize) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(AlgebraError::invalid(format!("carriers need k, n ≥ 1, got k = {k}, n = {n}")));
    }
    Ok(())
}

/// Pairs with `|A| = i`, in lexicographic `(A, B)` order.
fn carrier_slice(family: Family, k: usize, n: usize, i: usize) -> Vec<SignedPair> {
    let (ki, ni, ii) = (k as i64, n as i64, i as i64);
    let (a_side, b_side) = match family {
        Family::Hkn => (sets(ni, i), multisets(ni - ki + 1, k - i)),
        Family::Ekn => (multisets(ni - ii + 1, i), sets(ni - ii, k - i)),
    };
    let mut out = Vec::with_capacity(a_side.len() * b_side.len());
    for a in &a_side {
        for b in &b_side {
            out.push(SignedPair { family, k, n, a: a.clone(), b: b.clone() });
        }
    }
    out
}

/// Every carrier element exactly once, ordered by `(|A|, A, B)`.
pub fn enumerate_carrier(family: Family, k: usize, n: usize) -> Result<Carrier> {
    check_params(k, n)?;
    let pairs = (0..=k).flat_map(|i| carrier_slice(family, k, n, i)).collect();
    Ok(Carrier { pairs, trivial: k > n })
}

fn move_value(from: &mut Vec<usize>, to: &mut Vec<usize>, value: usize) {
    let pos = from.iter().position(|&x| x == value).expect("value present");
    from.remove(pos);
    let at = to.partition_point(|&x| x < value);
    to.insert(at, value);
}

/// Applies `rule` without checking carrier membership of the input.
fn step(p: &SignedPair, rule: Rule) -> SignedPair {
    let mut q = p.clone();
    let into_a = match rule {
        Rule::MinFirst => match (p.b.first(), p.a.first()) {
            (Some(b), Some(a)) => b < a,
            (Some(_), None) => true,
            (None, _) => false,
        },
        Rule::MaxFirst => match (p.b.last(), p.a.last()) {
            (Some(b), Some(a)) => b >= a,
            (Some(_), None) => true,
            (None, _) => false,
        },
    };
    let pick = |v: &Vec<usize>| match rule {
        Rule::MinFirst => v[0],
        Rule::MaxFirst => v[v.len() - 1],
    };
    if into_a {
        let v = pick(&q.b);
        move_value(&mut q.b, &mut q.a, v);
    } else {
        let v = pick(&q.a);
        move_value(&mut q.a, &mut q.b, v);
    }
    q
}

/// Applies the involution `rule` to a carrier element. The image is returned
/// even if it falls outside the carrier; [`certify_with`] checks closure.
pub fn apply_rule(p: &SignedPair, rule: Rule) -> Result<SignedPair> {
    if !p.in_carrier() {
        return Err(AlgebraError::NotInCarrier(p.to_string()));
    }
    if p.a.is_empty() && p.b.is_empty() {
        return Err(AlgebraError::invalid("both sides empty (k = 0)"));
    }
    Ok(step(p, rule))
}

/// Applies the family's default involution.
pub fn apply_f(p: &SignedPair) -> Result<SignedPair> {
    apply_rule(p, p.family.default_rule())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertReport {
    pub family: Family,
    pub rule: Rule,
    pub k: usize,
    pub n: usize,
    pub carrier_size: usize,
    pub trivial: bool,
    /// `f(f(p)) = p` for every `p`.
    pub is_involution: bool,
    pub sign_reversing: bool,
    pub fixed_point_free: bool,
    /// `f(p)` lies in the carrier for every `p`.
    pub carrier_closed: bool,
    pub weight_preserving: bool,
    pub weight_sum_zero: bool,
    pub weight_sum: Polynomial,
    /// First offending element and the law it breaks.
    pub first_failure: Option<String>,
}

impl CertReport {
    pub fn passed(&self) -> bool {
        self.is_involution
            && self.sign_reversing
            && self.fixed_point_free
            && self.carrier_closed
            && self.weight_preserving
            && self.weight_sum_zero
    }

    /// Names of the laws that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.is_involution, "involution"),
            (self.sign_reversing, "sign-reversing"),
            (self.fixed_point_free, "fixed-point-free"),
            (self.carrier_closed, "closure"),
            (self.weight_preserving, "weight-preserving"),
            (self.weight_sum_zero, "weight-sum"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

#[derive(Default)]
struct SliceCheck {
    involution: bool,
    sign: bool,
    fixed_free: bool,
    closed: bool,
    weight: bool,
    first_failure: Option<String>,
    sum: HashMap<Monomial, i64>,
}

impl SliceCheck {
    fn fail(&mut self, p: &SignedPair, what: &str) {
        if self.first_failure.is_none() {
            self.first_failure = Some(format!("{p}: {what}"));
        }
    }
}

fn check_slice(pairs: &[SignedPair], rule: Rule) -> SliceCheck {
    let mut c = SliceCheck { involution: true, sign: true, fixed_free: true, closed: true, weight: true, ..Default::default() };
    for p in pairs {
        *c.sum.entry(p.weight()).or_default() += p.sign();
        let q = step(p, rule);
        if q == *p {
            c.fixed_free = false;
            c.fail(p, "fixed point");
        }
        if q.sign() != -p.sign() {
            c.sign = false;
            c.fail(p, "sign not reversed");
        }
        if q.weight() != p.weight() {
            c.weight = false;
            c.fail(p, "weight changed");
        }
        if !q.in_carrier() {
            c.closed = false;
            c.involution = false;
            c.fail(p, &format!("image {q} outside the carrier"));
            continue;
        }
        if step(&q, rule) != *p {
            c.involution = false;
            c.fail(p, "f(f(p)) != p");
        }
    }
    c
}

fn sum_to_polynomial(ring: Ring, sum: HashMap<Monomial, i64>) -> Polynomial {
    ring.from_terms(sum.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (rational(c), m)))
        .expect("weights share the carrier arity")
}

/// Certifies the family's default involution.
pub fn certify_involution(family: Family, k: usize, n: usize) -> Result<CertReport> {
    certify_with(family, k, n, family.default_rule(), Execution::default())
}

/// Checks every involution law over the whole carrier and computes the signed
/// weight sum symbolically. Slices `|A| = i` are processed independently.
pub fn certify_with(family: Family, k: usize, n: usize, rule: Rule, exec: Execution) -> Result<CertReport> {
    check_params(k, n)?;
    let slices = exec.map_range(k + 1, |i| {
        let pairs = carrier_slice(family, k, n, i);
        (pairs.len(), check_slice(&pairs, rule))
    });
    let mut total = SliceCheck { involution: true, sign: true, fixed_free: true, closed: true, weight: true, ..Default::default() };
    let mut size = 0;
    for (len, s) in slices {
        size += len;
        total.involution &= s.involution;
        total.sign &= s.sign;
        total.fixed_free &= s.fixed_free;
        total.closed &= s.closed;
        total.weight &= s.weight;
        if total.first_failure.is_none() {
            total.first_failure = s.first_failure;
        }
        for (m, c) in s.sum {
            *total.sum.entry(m).or_default() += c;
        }
    }
    let weight_sum = sum_to_polynomial(Ring::lex(n), total.sum);
    Ok(CertReport {
        family,
        rule,
        k,
        n,
        carrier_size: size,
        trivial: k > n,
        is_involution: total.involution,
        sign_reversing: total.sign,
        fixed_point_free: total.fixed_free,
        carrier_closed: total.closed,
        weight_preserving: total.weight,
        weight_sum_zero: weight_sum.is_zero(),
        weight_sum,
        first_failure: total.first_failure,
    })
}

/// Signed weight enumerator of the slice `|A| = i`, for `i = 0..=k`.
pub fn weight_sums_by_size(family: Family, k: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_params(k, n)?;
    Ok((0..=k)
        .map(|i| {
            let mut sum: HashMap<Monomial, i64> = HashMap::new();
            for p in carrier_slice(family, k, n, i) {
                *sum.entry(p.weight()).or_default() += p.sign();
            }
            sum_to_polynomial(Ring::lex(n), sum)
        })
        .collect())
}

/// One line per orbit: `(A|B) <-> (A'|B') weight ±monomial`, in carrier order.
/// Images outside the carrier are reported as `(A|B) -> (A'|B') outside carrier`.
pub fn trace_orbits(family: Family, k: usize, n: usize, rule: Rule) -> Result<Vec<String>> {
    let carrier = enumerate_carrier(family, k, n)?;
    let index: HashMap<&SignedPair, usize> = carrier.pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut lines = Vec::new();
    for (i, p) in carrier.pairs.iter().enumerate() {
        let q = step(p, rule);
        match index.get(&q) {
            None => lines.push(format!("{p} -> {q} outside carrier")),
            Some(&j) if j >= i => {
                let s = if p.sign() > 0 { '+' } else { '-' };
                lines.push(format!("{p} <-> {q} weight {s}{}", p.weight()));
            }
            Some(_) => {}
        }
    }
    Ok(lines)
}

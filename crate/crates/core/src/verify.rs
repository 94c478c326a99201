//! Sweeps over `(k, n)` grids comparing computed objects with closed forms,
//! plus the generator-spec and exploration helpers the CLI is built on.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::groebner::{reduced_groebner_basis, GroebnerBasis};
use crate::hilbert::{closed_form_series, staircase_series};
use crate::involution::{certify_with, Family};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::symfunc::{conjectured_gb_e1ek, conjectured_gb_ek, elementary_in, Identity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    GbEk,
    GbE1ek,
    Hkn,
    Ekn,
    Telescope,
    Newton,
    E1ekReduction,
    InvolutionHkn,
    InvolutionEkn,
    Hilbert,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::GbEk,
        Target::GbE1ek,
        Target::Hkn,
        Target::Ekn,
        Target::Telescope,
        Target::Newton,
        Target::E1ekReduction,
        Target::InvolutionHkn,
        Target::InvolutionEkn,
        Target::Hilbert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::GbEk => "gb-ek",
            Target::GbE1ek => "gb-e1ek",
            Target::Hkn => "hkn",
            Target::Ekn => "ekn",
            Target::Telescope => "telescope",
            Target::Newton => "newton",
            Target::E1ekReduction => "e1ek-reduction",
            Target::InvolutionHkn => "involution-hkn",
            Target::InvolutionEkn => "involution-ekn",
            Target::Hilbert => "hilbert",
        }
    }

    /// Largest `n` swept when no range is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Target::GbEk | Target::GbE1ek => 6,
            Target::InvolutionHkn | Target::InvolutionEkn | Target::Hilbert => 6,
            _ => 8,
        }
    }

    pub fn default_k_rule(self) -> KRule {
        match self {
            Target::GbEk | Target::Telescope => KRule::UpToN,
            Target::InvolutionHkn | Target::InvolutionEkn => KRule::UpToN,
            Target::GbE1ek => KRule::PairsWithOne,
            Target::Hilbert => KRule::EqualsN,
            Target::Hkn | Target::Ekn | Target::Newton | Target::E1ekReduction => KRule::UpToNPlus2,
        }
    }

    /// Whether cells with `k > n` make sense for this target.
    fn allows_k_above_n(self) -> bool {
        matches!(self, Target::Hkn | Target::Ekn | Target::Newton | Target::E1ekReduction)
    }

    fn identity(self) -> Option<Identity> {
        match self {
            Target::Hkn => Some(Identity::Hkn),
            Target::Ekn => Some(Identity::Ekn),
            Target::Telescope => Some(Identity::Telescope),
            Target::Newton => Some(Identity::Newton),
            Target::E1ekReduction => Some(Identity::E1ekReduction),
            _ => None,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| AlgebraError::invalid(format!("unknown verify target `{s}`")))
    }
}

/// Which `k` values are visited for each `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KRule {
    /// `1 ≤ k ≤ n`
    UpToN,
    /// `1 ≤ k ≤ n + 2`, covering the degenerate `k > n` cases.
    UpToNPlus2,
    Fixed(usize),
    /// `2 ≤ k ≤ n`, the ideals `⟨e_1, e_k⟩`.
    PairsWithOne,
    /// `k = n` only.
    EqualsN,
}

impl KRule {
    fn ks(self, n: usize) -> Vec<usize> {
        match self {
            KRule::UpToN => (1..=n).collect(),
            KRule::UpToNPlus2 => (1..=n + 2).collect(),
            KRule::Fixed(k) => vec![k],
            KRule::PairsWithOne => (2..=n).collect(),
            KRule::EqualsN => vec![n],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_range: RangeInclusive<usize>,
    /// `None` uses the target's default rule.
    pub k_rule: Option<KRule>,
    pub order: MonomialOrder,
}

impl SweepConfig {
    pub fn new(n_range: RangeInclusive<usize>) -> Self {
        SweepConfig { n_range, k_rule: None, order: MonomialOrder::Lex }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() || *self.n_range.start() == 0 {
            return Err(AlgebraError::invalid("n range must be non-empty and start at 1 or more"));
        }
        if self.k_rule == Some(KRule::Fixed(0)) {
            return Err(AlgebraError::invalid("k must be at least 1"));
        }
        Ok(())
    }
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || AlgebraError::invalid(format!("bad range `{s}`, expected `a..b` or `n`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of one `(k, n)` cell. `witness` is a short summary on success and
/// a counterexample dump on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub target: Target,
    pub k: usize,
    pub n: usize,
    pub status: Status,
    pub witness: String,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `k:<k>\tn:<n>\ttarget:<t>\tstatus:<PASS|FAIL>\twitness:<w>`
    pub fn record(&self) -> String {
        format!(
            "k:{}\tn:{}\ttarget:{}\tstatus:{}\twitness:{}",
            self.k, self.n, self.target, self.status, self.witness
        )
    }
}

/// `PASS gb-ek k=2 n=3 size=2`
impl fmt::Display for CellReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} k={} n={} {}", self.status, self.target, self.k, self.n, self.witness)
    }
}

/// Cells visited by a sweep, ordered by `(n, k)`.
pub fn sweep_cells(target: Target, config: &SweepConfig) -> Result<Vec<(usize, usize)>> {
    config.validate()?;
    let rule = config.k_rule.unwrap_or(target.default_k_rule());
    let rule = if target == Target::Hilbert { KRule::EqualsN } else { rule };
    let mut cells = Vec::new();
    for n in config.n_range.clone() {
        for k in rule.ks(n) {
            if k == 0 || (k > n && !target.allows_k_above_n()) {
                continue;
            }
            if target == Target::GbE1ek && k < 1 {
                continue;
            }
            cells.push((k, n));
        }
    }
    Ok(cells)
}

fn join_polys(polys: &[Polynomial]) -> String {
    if polys.is_empty() {
        return "{}".into();
    }
    format!("{{{}}}", polys.iter().join("; "))
}

fn compare_bases(computed: &GroebnerBasis, expected: Vec<Polynomial>, order: MonomialOrder) -> (Status, String) {
    let mut expected: Vec<Polynomial> = expected.iter().map(|p| p.with_order(order)).collect();
    expected.sort_by(|a, b| order.compare(&b.terms()[0].mono, &a.terms()[0].mono));
    if computed.elements() == expected.as_slice() {
        (Status::Pass, format!("size={}", expected.len()))
    } else {
        (
            Status::Fail,
            format!("expected {} got {}", join_polys(&expected), join_polys(computed.elements())),
        )
    }
}

fn elementary_generators(ring: Ring, n: usize, indices: &[usize]) -> Result<Vec<Polynomial>> {
    indices.iter().map(|&k| elementary_in(ring, k, n)).collect()
}

fn evaluate(target: Target, k: usize, n: usize, order: MonomialOrder, exec: Execution) -> Result<(Status, String)> {
    let ring = Ring::new(n, order)?;
    if let Some(id) = target.identity() {
        let diff = id.difference(k, n)?;
        return Ok(if diff.is_zero() {
            (Status::Pass, "-".into())
        } else {
            (Status::Fail, format!("difference={diff}"))
        });
    }
    match target {
        Target::GbEk => {
            let gens = elementary_generators(ring, n, &(1..=k).collect::<Vec<_>>())?;
            let gb = reduced_groebner_basis(&gens, order)?;
            Ok(compare_bases(&gb, conjectured_gb_ek(k, n)?, order))
        }
        Target::GbE1ek => {
            let gens = elementary_generators(ring, n, &[1, k])?;
            let gb = reduced_groebner_basis(&gens, order)?;
            Ok(compare_bases(&gb, conjectured_gb_e1ek(k, n)?, order))
        }
        Target::InvolutionHkn | Target::InvolutionEkn => {
            let family = if target == Target::InvolutionHkn { Family::Hkn } else { Family::Ekn };
            let r = certify_with(family, k, n, family.default_rule(), exec)?;
            Ok(if r.passed() {
                (Status::Pass, format!("carrier={}", r.carrier_size))
            } else {
                let at = r.first_failure.clone().unwrap_or_else(|| format!("weight sum {}", r.weight_sum));
                (Status::Fail, format!("{} at {at}", r.failures().join(",")))
            })
        }
        Target::Hilbert => {
            let gens = elementary_generators(ring, n, &(1..=n).collect::<Vec<_>>())?;
            let gb = reduced_groebner_basis(&gens, order)?;
            let series = staircase_series(&gb.leading_monomials(), n, exec)?;
            let closed = closed_form_series(n);
            Ok(if series == closed {
                (Status::Pass, format!("dim={} series={}", series.dimension(), series))
            } else {
                (Status::Fail, format!("staircase={series} closed-form={closed}"))
            })
        }
        _ => unreachable!("identity targets handled above"),
    }
}

/// Runs a single cell. Errors inside the computation become failures.
pub fn run_cell(target: Target, k: usize, n: usize, order: MonomialOrder, exec: Execution) -> CellReport {
    let (status, witness) = evaluate(target, k, n, order, exec)
        .unwrap_or_else(|e| (Status::Fail, format!("error: {e}")));
    CellReport { target, k, n, status, witness }
}

/// Runs every cell of the sweep; cells are independent and may run
/// concurrently, results come back in `(n, k)` order.
pub fn run_sweep(target: Target, config: &SweepConfig, exec: Execution) -> Result<Vec<CellReport>> {
    let cells = sweep_cells(target, config)?;
    let order = config.order;
    Ok(exec.map(&cells, |&(k, n)| run_cell(target, k, n, order, exec)))
}

/// Parses a comma-separated generator list. `eK` stands for `e_{K,n}`; any
/// other token is read with the polynomial text grammar.
pub fn parse_generators(spec: &str, ring: Ring) -> Result<Vec<Polynomial>> {
    let n = ring.arity();
    spec.split(',')
        .map(str::trim)
        .map(|tok| match tok.strip_prefix('e') {
            Some(idx) if !idx.is_empty() && idx.bytes().all(|b| b.is_ascii_digit()) => {
                let k: usize = idx.parse().map_err(|_| AlgebraError::invalid(format!("bad index in `{tok}`")))?;
                elementary_in(ring, k, n)
            }
            _ => ring.parse(tok),
        })
        .collect()
}

/// Parses `e2,e3` style index lists: distinct indices in `1..=n`.
pub fn parse_indices(spec: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in spec.split(',').map(str::trim) {
        let idx = tok
            .strip_prefix('e')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| AlgebraError::invalid(format!("expected `e<index>`, got `{tok}`")))?;
        if idx == 0 || idx > n {
            return Err(AlgebraError::OutOfRange { element: idx, max: n });
        }
        if out.contains(&idx) {
            return Err(AlgebraError::invalid(format!("index e{idx} repeated")));
        }
        out.push(idx);
    }
    Ok(out)
}

/// Reduced basis of `⟨e_{a_1,n}, …, e_{a_r,n}⟩` for arbitrary indices.
pub fn explore(n: usize, indices: &[usize], order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = Ring::new(n, order)?;
    for &i in indices {
        if i == 0 || i > n {
            return Err(AlgebraError::OutOfRange { element: i, max: n });
        }
    }
    if indices.is_empty() {
        return Err(AlgebraError::invalid("no generators"));
    }
    reduced_groebner_basis(&elementary_generators(ring, n, indices)?, order)
}

//! `symgb`: symmetric polynomials, reduced Groebner bases and verification
//! sweeps from the command line.
//!
//! Exit codes: 0 when everything checked out, 1 when a mathematical mismatch
//! was found, 2 for usage and parse errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symgb::groebner::{reduced_groebner_basis, GroebnerBasis};
use symgb::hilbert::{closed_form_series, staircase_series};
use symgb::involution::{certify_with, trace_orbits, Family, Rule};
use symgb::symfunc::{SymKind, SymSpec};
use symgb::verify::{self, KRule, SweepConfig, Target};
use symgb::{AlgebraError, Execution, MonomialOrder, Ring};

const MAX_N_VAR: &str = "SYMGB_MAX_N";

#[derive(Parser)]
#[command(name = "symgb", version, about = "Symmetric polynomials and Groebner bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Print e_{k,n}, h_{k,n} or p_{k,n}
    Sym {
        #[arg(long, value_parser = parse_kind)]
        kind: SymKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Ambient number of variables (defaults to n)
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduced Groebner basis of a generator list
    Gb {
        #[arg(long)]
        n: usize,
        /// Comma-separated `eK` indices or polynomials
        #[arg(long)]
        gens: String,
        #[arg(long, value_parser = parse_order, default_value = "lex")]
        order: MonomialOrder,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare computed objects with their closed forms over a (k, n) sweep
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
        /// `a..b` or a single n
        #[arg(long)]
        n: Option<String>,
        /// Fix k instead of the target's default k range
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_order, default_value = "lex")]
        order: MonomialOrder,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduced basis of the ideal generated by arbitrary e_{a,n}
    Explore {
        #[arg(long)]
        n: usize,
        /// Comma-separated distinct `eK` indices
        #[arg(long)]
        gens: String,
        #[arg(long, value_parser = parse_order, default_value = "lex")]
        order: MonomialOrder,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Certify a sign-reversing involution on a carrier
    Involution {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// `min` or `max` (defaults to the family's involution)
        #[arg(long, value_parser = parse_rule)]
        rule: Option<Rule>,
        /// Print one line per orbit
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert series of Q[x1..xn]/<e_1..e_n> from the reduced basis
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_order, default_value = "lex")]
        order: MonomialOrder,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_kind(s: &str) -> Result<SymKind, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

/// Command failure: usage problems exit 2, mathematical mismatches exit 1.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn print_basis(out: &mut String, gb: &GroebnerBasis, format: Format) {
    if gb.is_empty() {
        out.push_str(if format == Format::Text { "0\n" } else { "poly:0\n" });
        return;
    }
    for (i, g) in gb.elements().iter().enumerate() {
        match format {
            Format::Text => writeln!(out, "{g}"),
            Format::Records => writeln!(out, "index:{}\tlm:{}\tpoly:{g}", i + 1, g.terms()[0].mono),
        }
        .unwrap();
    }
}

fn cmd_sym(spec: SymSpec, format: Format) -> Outcome {
    let p = spec.build()?;
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Records => format!("kind:{}\tk:{}\tn:{}\tpoly:{p}\n", spec.kind, spec.k, spec.n),
    })
}

fn cmd_gb(n: usize, gens: &str, order: MonomialOrder, format: Format) -> Outcome {
    let ring = Ring::new(n, order)?;
    let gens = verify::parse_generators(gens, ring)?;
    let gb = reduced_groebner_basis(&gens, order)?;
    let mut out = String::new();
    print_basis(&mut out, &gb, format);
    Ok(out)
}

fn max_n_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{MAX_N_VAR} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn cmd_verify(target: Target, n: Option<&str>, k: Option<usize>, order: MonomialOrder, format: Format) -> Outcome {
    let mut range = match n {
        Some(s) => verify::parse_range(s)?,
        None => 1..=target.default_max_n(),
    };
    if let Some(cap) = max_n_cap()? {
        if *range.end() > cap {
            if *range.start() > cap {
                return Err(Failure::Usage(format!("n range starts above {MAX_N_VAR}={cap}")));
            }
            eprintln!("note: capping n at {cap} ({MAX_N_VAR})");
            range = *range.start()..=cap;
        }
    }
    let config = SweepConfig { n_range: range, k_rule: k.map(KRule::Fixed), order };
    let reports = verify::run_sweep(target, &config, Execution::default())?;
    let mut out = String::new();
    for r in &reports {
        match format {
            Format::Text => writeln!(out, "{r}"),
            Format::Records => writeln!(out, "{}", r.record()),
        }
        .unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if format == Format::Text {
        if failed == 0 {
            writeln!(out, "all {} cells passed", reports.len()).unwrap();
        } else {
            writeln!(out, "{failed} of {} cells failed", reports.len()).unwrap();
        }
    }
    if failed > 0 {
        print!("{out}");
        return Err(Failure::Mismatch);
    }
    Ok(out)
}

fn cmd_explore(n: usize, gens: &str, order: MonomialOrder, format: Format) -> Outcome {
    let indices = verify::parse_indices(gens, n)?;
    let gb = verify::explore(n, &indices, order)?;
    let mut out = String::new();
    print_basis(&mut out, &gb, format);
    let lms: Vec<String> = gb.leading_monomials().iter().map(ToString::to_string).collect();
    match format {
        Format::Text => {
            writeln!(out, "leading monomials: {}", lms.join(", ")).unwrap();
            writeln!(out, "size: {}", gb.len()).unwrap();
        }
        Format::Records => writeln!(out, "size:{}\tleading:{}", gb.len(), lms.join(",")).unwrap(),
    }
    Ok(out)
}

fn cmd_involution(family: Family, k: usize, n: usize, rule: Option<Rule>, trace: bool, format: Format) -> Outcome {
    let rule = rule.unwrap_or(family.default_rule());
    let mut out = String::new();
    if trace {
        for line in trace_orbits(family, k, n, rule)? {
            writeln!(out, "{line}").unwrap();
        }
    }
    let r = certify_with(family, k, n, rule, Execution::default())?;
    let yn = |b: bool| if b { "yes" } else { "no" };
    let status = if r.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            writeln!(out, "family: {}", family.name()).unwrap();
            writeln!(out, "rule: {}", rule.name()).unwrap();
            writeln!(out, "k: {k}\nn: {n}").unwrap();
            writeln!(out, "carrier: {}", r.carrier_size).unwrap();
            writeln!(out, "involution: {}", yn(r.is_involution)).unwrap();
            writeln!(out, "sign-reversing: {}", yn(r.sign_reversing)).unwrap();
            writeln!(out, "fixed-point-free: {}", yn(r.fixed_point_free)).unwrap();
            writeln!(out, "closed: {}", yn(r.carrier_closed)).unwrap();
            writeln!(out, "weight-preserving: {}", yn(r.weight_preserving)).unwrap();
            writeln!(out, "weight sum: {}", r.weight_sum).unwrap();
            if let Some(f) = &r.first_failure {
                writeln!(out, "first failure: {f}").unwrap();
            }
            writeln!(out, "status: {status}").unwrap();
        }
        Format::Records => writeln!(
            out,
            "family:{}\trule:{}\tk:{k}\tn:{n}\tcarrier:{}\tinvolution:{}\tsign_reversing:{}\tfixed_point_free:{}\tclosed:{}\tweight_sum:{}\tstatus:{status}",
            family.name(),
            rule.name(),
            r.carrier_size,
            yn(r.is_involution),
            yn(r.sign_reversing),
            yn(r.fixed_point_free),
            yn(r.carrier_closed),
            r.weight_sum,
        )
        .unwrap(),
    }
    if !r.passed() {
        print!("{out}");
        return Err(Failure::Mismatch);
    }
    Ok(out)
}

fn cmd_hilbert(n: usize, order: MonomialOrder, format: Format) -> Outcome {
    let ring = Ring::new(n, order)?;
    let gens = verify::parse_generators(&(1..=n).map(|k| format!("e{k}")).collect::<Vec<_>>().join(","), ring)?;
    let gb = reduced_groebner_basis(&gens, order)?;
    let series = staircase_series(&gb.leading_monomials(), n, Execution::default())?;
    let closed = closed_form_series(n);
    let status = if series == closed { "PASS" } else { "FAIL" };
    let csv = |s: &symgb::hilbert::SeriesPoly| s.coeffs().iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let out = match format {
        Format::Text => format!(
            "series: {series}\ndimension: {}\nclosed form: {closed}\nstatus: {status}\n",
            series.dimension()
        ),
        Format::Records => format!(
            "n:{n}\tseries:{}\tdimension:{}\tclosed_form:{}\tstatus:{status}\n",
            csv(&series),
            series.dimension(),
            csv(&closed)
        ),
    };
    if series != closed {
        print!("{out}");
        return Err(Failure::Mismatch);
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sym { kind, k, n, arity, format } => {
            cmd_sym(SymSpec { kind, k, n, arity: arity.unwrap_or(n.max(1)) }, format)
        }
        Command::Gb { n, gens, order, format } => cmd_gb(n, &gens, order, format),
        Command::Verify { target, n, k, order, format } => cmd_verify(target, n.as_deref(), k, order, format),
        Command::Explore { n, gens, order, format } => cmd_explore(n, &gens, order, format),
        Command::Involution { family, k, n, rule, trace, format } => {
            cmd_involution(family, k, n, rule, trace, format)
        }
        Command::Hilbert { n, order, format } => cmd_hilbert(n, order, format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

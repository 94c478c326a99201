//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num::integer::binomial;
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symgb::groebner::{divide, reduced_groebner_basis};
use symgb::hilbert::{closed_form_series, staircase_series};
use symgb::involution::{certify_with, Family};
use symgb::symfunc::{conjectured_gb_e1ek, conjectured_gb_ek, elementary, homogeneous, weight, Identity};
use symgb::{Execution, Monomial, MonomialOrder, Polynomial, Rational, Ring};

const LEX: MonomialOrder = MonomialOrder::Lex;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("{what} took {took:.1?}, limit {limit:?}"))
}

fn e(k: usize, n: usize) -> Polynomial {
    elementary(k, n, n).unwrap()
}

/// Reduced lex basis of ⟨e_1..e_k⟩ equals {h_{i,n-i+1}} for 1 ≤ k ≤ n ≤ 6.
fn reduced_gb_theorem() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for n in 1..=6 {
        for k in 1..=n {
            let cell = Instant::now();
            let gens: Vec<_> = (1..=k).map(|i| e(i, n)).collect();
            let gb = reduced_groebner_basis(&gens, LEX).map_err(|err| err.to_string())?;
            let want = conjectured_gb_ek(k, n).unwrap();
            ensure(gb.elements() == want.as_slice(), || {
                format!("k={k} n={n}: got {:?}", gb.elements().iter().map(ToString::to_string).collect_vec())
            })?;
            if (k, n) == (6, 6) {
                within(Duration::from_secs(30), cell, "k=n=6")?;
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} cells exact in {:.2?}", start.elapsed()))
}

/// Reduced lex basis of ⟨e_1, e_k⟩ for 2 ≤ k ≤ n ≤ 7.
fn two_generator_theorem() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for n in 2..=7 {
        for k in 2..=n {
            let gb = reduced_groebner_basis(&[e(1, n), e(k, n)], LEX).map_err(|err| err.to_string())?;
            let want = conjectured_gb_e1ek(k, n).unwrap();
            ensure(gb.elements() == want.as_slice(), || format!("k={k} n={n} differs"))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells exact in {:.2?}", start.elapsed()))
}

/// All five identities for 1 ≤ k ≤ n+2, n ≤ 8 (telescope: j ≤ n).
fn identity_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for n in 1..=8 {
        for k in 1..=n + 2 {
            for id in Identity::ALL {
                if id == Identity::Telescope && k > n {
                    continue;
                }
                let diff = id.difference(k, n).map_err(|err| err.to_string())?;
                ensure(diff.is_zero(), || format!("{} k={k} n={n}: {diff}", id.name()))?;
                checks += 1;
            }
        }
    }
    within(Duration::from_secs(60), start, "identity suite")?;
    Ok(format!("{checks} identities in {:.2?}", start.elapsed()))
}

/// Involution laws and zero weight sum for both families, 1 ≤ k ≤ n ≤ 6.
fn involution_certification() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for family in [Family::Hkn, Family::Ekn] {
        for n in 1..=6 {
            for k in 1..=n {
                let r = certify_with(family, k, n, family.default_rule(), Execution::default())
                    .map_err(|err| err.to_string())?;
                ensure(r.passed(), || {
                    format!("{} k={k} n={n}: {:?} {:?}", family.name(), r.failures(), r.first_failure)
                })?;
                total += r.carrier_size;
            }
        }
    }
    within(Duration::from_secs(60), start, "certification")?;
    Ok(format!("{total} carrier elements in {:.2?}", start.elapsed()))
}

fn inversion_counts(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n * (n - 1) / 2 + 1];
    for perm in (0..n).permutations(n) {
        counts[perm.iter().tuple_combinations().filter(|(a, b)| a > b).count()] += 1;
    }
    counts
}

/// Staircase of the reduced basis = closed form = inversion counts, sums n!.
fn hilbert_corollary() -> Outcome {
    let factorials = [1u128, 2, 6, 24, 120, 720];
    for n in 1..=6 {
        let gens: Vec<_> = (1..=n).map(|k| e(k, n)).collect();
        let gb = reduced_groebner_basis(&gens, LEX).map_err(|err| err.to_string())?;
        let series = staircase_series(&gb.leading_monomials(), n, Execution::default()).map_err(|err| err.to_string())?;
        let closed = closed_form_series(n);
        ensure(series == closed, || format!("n={n}: staircase {series} vs closed form {closed}"))?;
        ensure(series.dimension() == factorials[n - 1], || format!("n={n}: dimension {}", series.dimension()))?;
        ensure(series.coeffs() == inversion_counts(n).as_slice(), || format!("n={n}: inversion oracle disagrees"))?;
    }
    Ok("dimensions 1, 2, 6, 24, 120, 720".into())
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let terms = rng.random_range(1..=max_terms);
    let ring = Ring::lex(n);
    let ts = (0..terms).map(|_| {
        let deg = rng.random_range(0..=max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.random_range(0..n)] += 1;
        }
        let num: i64 = rng.random_range(-9..=9);
        let den: i64 = if rng.random_bool(0.2) { rng.random_range(2..=5) } else { 1 };
        (Rational::new(num.into(), den.into()), Monomial::from_exps(exps))
    });
    ring.from_terms(ts.collect_vec()).unwrap()
}

/// Division contract over 10^4 random instances, n ≤ 4, degree ≤ 4.
fn division_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d1f);
    let mut done = 0;
    while done < 10_000 {
        let n = rng.random_range(1..=4);
        let f = random_poly(&mut rng, n, 4, 6);
        let m = rng.random_range(1..=3);
        let divs: Vec<_> = (0..m).map(|_| random_poly(&mut rng, n, 4, 3)).filter(|d| !d.is_zero()).collect();
        if divs.is_empty() {
            continue;
        }
        let d = divide(&f, &divs, LEX).map_err(|err| err.to_string())?;
        let rebuilt = divs.iter().zip(&d.quotients).fold(d.remainder.clone(), |acc, (g, q)| acc + q * g);
        ensure(rebuilt == f, || format!("reconstruction failed for {f}"))?;
        for t in d.remainder.terms() {
            ensure(divs.iter().all(|g| !g.terms()[0].mono.divides(&t.mono)), || {
                format!("remainder term {} of {f} is divisible", t.mono)
            })?;
        }
        for (q, g) in d.quotients.iter().zip(&divs) {
            let prod = q * g;
            if let (Some(a), Some(b)) = (prod.leading_monomial(), f.leading_monomial()) {
                ensure(LEX.compare(a, b).is_le(), || format!("LT dominance fails for {f}"))?;
            }
        }
        done += 1;
    }
    Ok(format!("{done} instances, zero failures"))
}

/// Reduced basis is independent of generator order on ≥100 random ideals.
fn reduced_gb_uniqueness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea1);
    let mut ideals = 0;
    let mut perms = 0;
    while ideals < 120 {
        let n = rng.random_range(1..=3);
        let m = rng.random_range(1..=3);
        let gens: Vec<_> = (0..m).map(|_| random_poly(&mut rng, n, 3, 3)).collect();
        if gens.iter().all(Polynomial::is_zero) {
            continue;
        }
        let reference = reduced_groebner_basis(&gens, LEX).map_err(|err| err.to_string())?;
        for p in gens.iter().cloned().permutations(gens.len()) {
            let gb = reduced_groebner_basis(&p, LEX).map_err(|err| err.to_string())?;
            ensure(gb == reference, || format!("permutation changed basis of {:?}", gens.iter().map(ToString::to_string).collect_vec()))?;
            perms += 1;
        }
        ideals += 1;
    }
    Ok(format!("{ideals} ideals, {perms} permutations"))
}

/// Recursion-built e/h equal brute-force enumeration; term counts are binomial.
fn definition_cross_check() -> Outcome {
    for n in 1..=6 {
        for k in 0..=n {
            let subsets = (1..=n).combinations(k).map(|s| (Rational::one(), weight(&s, n).unwrap()));
            let multisets =
                (1..=n).combinations_with_replacement(k).map(|s| (Rational::one(), weight(&s, n).unwrap()));
            let ring = Ring::lex(n);
            let (ek, hk) = (e(k, n), homogeneous(k, n, n).unwrap());
            ensure(ek == ring.from_terms(subsets).unwrap(), || format!("e_{{{k},{n}}} differs"))?;
            ensure(hk == ring.from_terms(multisets).unwrap(), || format!("h_{{{k},{n}}} differs"))?;
            ensure(ek.len() as u64 == binomial(n as u64, k as u64), || format!("|e_{{{k},{n}}}|"))?;
            ensure(hk.len() as u64 == binomial((n + k - 1) as u64, k as u64), || format!("|h_{{{k},{n}}}|"))?;
        }
    }
    Ok("k ≤ n ≤ 6".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("AC1 reduced basis of <e_1..e_k> is {h_(i,n-i+1)}", reduced_gb_theorem),
        ("AC2 reduced basis of <e_1,e_k>", two_generator_theorem),
        ("AC3 identity suite", identity_suite),
        ("AC4 involution certification", involution_certification),
        ("AC5 Hilbert series and n!", hilbert_corollary),
        ("AC6 division algorithm contract", division_contract),
        ("AC7 reduced basis uniqueness", reduced_gb_uniqueness),
        ("AC8 recursion vs enumeration", definition_cross_check),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}

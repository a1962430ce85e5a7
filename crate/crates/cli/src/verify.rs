//! The `verify` subcommand: exhaustive and randomized re-checks of the
//! library's invariants, reported one line per check with counterexamples
//! printed verbatim on failure.

use bezout_core::nt::{gcd, totient};
use bezout_core::{
    bezout_minus, bezout_plus, bezout_plus_via_theta, bezout_signed, bezout_zero, build_arc,
    farey_sequence, mediant, predecessor, successor, theta, BezoutIndex, CoprimePair,
};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::CliError;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Bezout identities, bounds, complements, and sign handling
    Identities,
    /// The six transformation propositions (a)-(f)
    Propositions,
    /// The inverse-power route against extended Euclid
    Theta,
    /// Farey lengths, unimodularity, mediants, and neighbors
    Farey,
    /// Random quadratic arcs against pointwise extended Euclid
    Arcs,
}

/// How many counterexamples a failing check prints before eliding.
const MAX_PRINTED_FAILURES: usize = 10;

/// Deterministic seed for the randomized arcs suite.
const ARCS_RNG_SEED: u64 = 0xB152_2007;

struct Check {
    name: &'static str,
    cases: u64,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(failure());
        }
    }
}

/// Validates the bound for a suite, substituting its default.
fn resolve_bound(
    bound: Option<i64>,
    default: i64,
    min: i64,
    cap: i64,
    suite: &str,
) -> Result<i128, CliError> {
    let bound = bound.unwrap_or(default);
    if bound < min {
        return Err(CliError::Domain(format!(
            "bound {bound} is below the minimum {min} for the {suite} suite",
        )));
    }
    if bound > cap {
        return Err(CliError::Domain(format!(
            "bound {bound} exceeds the documented cap {cap} for the {suite} suite",
        )));
    }
    Ok(i128::from(bound))
}

pub fn run(suite: Suite, bound: Option<i64>, seeds: u32) -> Result<(), CliError> {
    let checks = match suite {
        Suite::Identities => identities(resolve_bound(bound, 1000, 2, 5000, "identities")?),
        Suite::Propositions => propositions(resolve_bound(bound, 300, 2, 2000, "propositions")?),
        Suite::Theta => theta_suite(resolve_bound(bound, 500, 2, 2000, "theta")?),
        Suite::Farey => farey_suite(resolve_bound(bound, 150, 1, 500, "farey")?),
        Suite::Arcs => arcs(resolve_bound(bound, 100_000, 3, 1_000_000, "arcs")?, seeds)?,
    };
    report(&checks)
}

fn report(checks: &[Check]) -> Result<(), CliError> {
    let mut failed = 0usize;
    for check in checks {
        if check.failures.is_empty() {
            println!("PASS {} ({} cases)", check.name, check.cases);
            continue;
        }
        failed += 1;
        println!(
            "FAIL {} ({} cases, {} failures)",
            check.name,
            check.cases,
            check.failures.len(),
        );
        for failure in check.failures.iter().take(MAX_PRINTED_FAILURES) {
            println!("  {failure}");
        }
        if check.failures.len() > MAX_PRINTED_FAILURES {
            println!("  ... and {} more", check.failures.len() - MAX_PRINTED_FAILURES);
        }
    }
    if failed > 0 {
        return Err(CliError::Failed(format!(
            "{failed} of {} checks failed",
            checks.len(),
        )));
    }
    Ok(())
}

fn coprime_pairs(bound: i128) -> impl Iterator<Item = (i128, i128, CoprimePair)> {
    (2..=bound).flat_map(move |p| {
        (2..p).filter_map(move |q| CoprimePair::new(p, q).ok().map(|pair| (p, q, pair)))
    })
}

fn identities(bound: i128) -> Vec<Check> {
    let mut identity = Check::new("canonical point: identity and bounds");
    let mut complement = Check::new("minus point is the componentwise complement");
    let mut signed = Check::new("signed pairs: identity for every sign choice");
    let mut zero = Check::new("zero index reduces to lowest terms");
    for (p, q, pair) in coprime_pairs(bound) {
        let plus = bezout_plus(pair).unwrap();
        let (a, b) = plus.as_tuple();
        identity.record(
            a * q - b * p == 1 && 0 < a && a < p && 0 < b && b < q,
            || format!("(p, q) = ({p}, {q}): got ({a}, {b})"),
        );
        let minus = bezout_minus(pair).unwrap();
        complement.record(minus.as_tuple() == (p - a, q - b), || {
            format!("(p, q) = ({p}, {q}): got {minus}, expected ({}, {})", p - a, q - b)
        });
    }
    let signed_bound = bound.min(200);
    for p in 2..=signed_bound {
        for q in 2..=signed_bound {
            if gcd(p, q).unwrap() != 1 {
                continue;
            }
            for sp in [1, -1] {
                for sq in [1, -1] {
                    let pair = CoprimePair::new(sp * p, sq * q).unwrap();
                    for index in [BezoutIndex::Plus, BezoutIndex::Minus] {
                        let pt = bezout_signed(index, pair).unwrap();
                        signed.record(
                            pt.x() * sq * q - pt.y() * sp * p == index.value(),
                            || format!("(p, q) = ({}, {}), i = {index}: got {pt}", sp * p, sq * q),
                        );
                    }
                }
            }
        }
    }
    let zero_bound = bound.min(120);
    for a in -zero_bound..=zero_bound {
        for b in -zero_bound..=zero_bound {
            if a == 0 && b == 0 {
                continue;
            }
            let pt = bezout_zero(a, b).unwrap();
            zero.record(
                gcd(pt.x(), pt.y()).unwrap() == 1
                    && pt.x() * b == pt.y() * a
                    && pt.x().signum() == a.signum()
                    && pt.y().signum() == b.signum(),
                || format!("(a, b) = ({a}, {b}): got {pt}"),
            );
        }
    }
    vec![identity, complement, signed, zero]
}

fn propositions(bound: i128) -> Vec<Check> {
    let mut flips = Check::new("(a) the flip transformation is an involution");
    let mut conjugate = Check::new("(b) minus of the flip equals the flip of plus");
    let mut sum = Check::new("(c) minus plus plus equals the zero point");
    let mut reflect = Check::new("(d) seed reflection maps (a, b) to (a, a-b)");
    let mut iterate = Check::new("(e) re-seeding with a maps (a, b) to (q, b)");
    let mut swap = Check::new("(f) order swap maps (a, b) to (q-b, p-a)");
    for (p, q, pair) in coprime_pairs(bound) {
        flips.record(pair.flip().flip() == pair, || format!("(p, q) = ({p}, {q})"));
        let (a, b) = bezout_plus(pair).unwrap().as_tuple();
        let fail = |got: (i128, i128), expected: (i128, i128)| {
            move || {
                format!(
                    "(p, q) = ({p}, {q}): got ({}, {}), expected ({}, {})",
                    got.0, got.1, expected.0, expected.1,
                )
            }
        };
        let conj = bezout_minus(pair.flip()).unwrap().as_tuple();
        conjugate.record(conj == (b, a), fail(conj, (b, a)));
        let minus = bezout_minus(pair).unwrap().as_tuple();
        let total = (minus.0 + a, minus.1 + b);
        sum.record(total == (p, q), fail(total, (p, q)));
        if p - q >= 2 {
            let got = bezout_minus(CoprimePair::new(p, p - q).unwrap())
                .unwrap()
                .as_tuple();
            reflect.record(got == (a, a - b), fail(got, (a, a - b)));
        }
        if a >= 2 {
            let got = bezout_plus(CoprimePair::new(p, a).unwrap())
                .unwrap()
                .as_tuple();
            iterate.record(got == (q, b), fail(got, (q, b)));
        }
        let swapped = bezout_plus(pair.flip()).unwrap().as_tuple();
        swap.record(swapped == (q - b, p - a), fail(swapped, (q - b, p - a)));
    }
    vec![flips, conjugate, sum, reflect, iterate, swap]
}

fn theta_suite(bound: i128) -> Vec<Check> {
    let mut inverse = Check::new("theta is the modular inverse");
    let mut route = Check::new("inverse-power route equals extended Euclid");
    for (p, q, pair) in coprime_pairs(bound) {
        let t = theta(p, q).unwrap();
        inverse.record((q * t).rem_euclid(p) == 1, || {
            format!("(p, q) = ({p}, {q}): got {t}")
        });
        let via_theta = bezout_plus_via_theta(p, q).unwrap();
        let euclid = bezout_plus(pair).unwrap();
        route.record(via_theta == euclid, || {
            format!("(p, q) = ({p}, {q}): got {via_theta}, expected {euclid}")
        });
    }
    vec![inverse, route]
}

fn farey_suite(bound: i128) -> Vec<Check> {
    let mut lengths = Check::new("length of F_n is 1 + sum of totients");
    let mut unimodular = Check::new("consecutive entries are unimodular");
    let mut mediants = Check::new("interior entries are mediants of their neighbors");
    let mut neighbors = Check::new("predecessor/successor match positional lookup");
    let mut phi_sum = 0i128;
    for n in 1..=bound {
        phi_sum += totient(n).unwrap();
        let seq = farey_sequence(n).unwrap();
        let entries = seq.entries();
        lengths.record(entries.len() as i128 == 1 + phi_sum, || {
            format!("n = {n}: got {}, expected {}", entries.len(), 1 + phi_sum)
        });
        for window in entries.windows(2) {
            let (b, a) = (window[0].num(), window[0].den());
            let (q, p) = (window[1].num(), window[1].den());
            unimodular.record(a * q - b * p == 1, || {
                format!("n = {n}: {} then {}", window[0], window[1])
            });
        }
        for window in entries.windows(3) {
            mediants.record(mediant(window[0], window[2]) == window[1], || {
                format!("n = {n}: {} {} {}", window[0], window[1], window[2])
            });
        }
        for (pos, entry) in entries.iter().enumerate() {
            let (q, p) = (entry.num(), entry.den());
            if p != n || q == 0 || q == p {
                // predecessor/successor are defined for reduced q/p with
                // 1 <= q < p; positional lookup needs the full F_p, so only
                // check entries with denominator exactly n.
                continue;
            }
            let ok = predecessor(p, q).unwrap() == entries[pos - 1]
                && successor(p, q).unwrap() == entries[pos + 1];
            neighbors.record(ok, || format!("{q}/{p} at position {pos} in F_{n}"));
        }
    }
    vec![lengths, unimodular, mediants, neighbors]
}

fn arcs(bound: i128, seeds: u32) -> Result<Vec<Check>, CliError> {
    if seeds > 1_000_000 {
        return Err(CliError::Domain(format!(
            "seed count {seeds} exceeds the documented cap 1000000 for the arcs suite",
        )));
    }
    let mut formula = Check::new("arc points equal pointwise extended Euclid");
    let mut residual = Check::new("arc points lie on the exact curve");
    let mut keys = Check::new("x + q is constant along each arc");
    let mut anchored = Check::new("the index window contains the anchor");
    let mut rng = ChaCha8Rng::seed_from_u64(ARCS_RNG_SEED);
    let mut drawn = 0u32;
    while drawn < seeds {
        let p = rng.random_range(3..=bound);
        let q = rng.random_range(2..p);
        if gcd(p, q).unwrap() != 1 {
            continue;
        }
        drawn += 1;
        let spec = build_arc(p, q).unwrap();
        let (lo, hi) = spec.index_window();
        anchored.record(lo <= 0 && 0 <= hi, || {
            format!("(p, q) = ({p}, {q}): window [{lo}, {hi}]")
        });
        for (n, point) in spec.points_in_range() {
            let seed = spec.seed() + n * spec.step();
            let euclid = bezout_plus(CoprimePair::new(p, seed).unwrap()).unwrap();
            formula.record(point.as_tuple() == euclid.as_tuple(), || {
                format!("(p, q) = ({p}, {q}), n = {n}: got {point}, expected {euclid}")
            });
            residual.record(spec.residual(point.x(), point.y()) == 0, || {
                format!("(p, q) = ({p}, {q}), n = {n}: residual {}", spec.residual(point.x(), point.y()))
            });
            keys.record(point.x() + seed == spec.curve_key(), || {
                format!("(p, q) = ({p}, {q}), n = {n}: {} + {seed} != {}", point.x(), spec.curve_key())
            });
        }
    }
    Ok(vec![formula, residual, keys, anchored])
}

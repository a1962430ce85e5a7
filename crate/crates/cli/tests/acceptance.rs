//! Acceptance suite: one test per criterion, each printing a single
//! `ACCEPTANCE cN PASS/FAIL` line (visible with `--nocapture`). The tests
//! serialize on a global mutex so each timing budget is measured with the
//! machine to itself.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use bezout_core::nt::{factorize, gcd};
use bezout_core::{
    arc_coverage, bezout_minus, bezout_plus, bezout_plus_via_theta, bezout_zero, build_arc,
    build_bezout_set, farey_sequence, mediant, predecessor, successor, theta, CoprimePair,
    SetOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

static LOCK: Mutex<()> = Mutex::new(());

/// Runs one criterion under the lock, prints its verdict line, and enforces
/// the timing budget. The body returns the detail for the pass line.
fn criterion(name: &str, budget: Option<Duration>, body: impl FnOnce() -> String) {
    let _guard = LOCK.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = started.elapsed();
    match outcome {
        Ok(detail) => {
            if budget.is_some_and(|budget| elapsed > budget) {
                println!("{name} FAIL ({elapsed:.2?}): exceeded the {budget:?} budget");
                panic!("{name} exceeded its timing budget: {elapsed:?} > {budget:?}");
            }
            println!("{name} PASS ({elapsed:.2?}): {detail}");
        }
        Err(payload) => {
            println!("{name} FAIL ({elapsed:.2?})");
            resume_unwind(payload);
        }
    }
}

fn pair(p: i128, q: i128) -> CoprimePair {
    CoprimePair::new(p, q).unwrap()
}

#[test]
fn c1_worked_examples_are_exact() {
    criterion("ACCEPTANCE c1", Some(Duration::from_secs(1)), || {
        assert_eq!(bezout_plus(pair(6, 5)).unwrap().as_tuple(), (5, 4));
        assert_eq!(bezout_minus(pair(6, 5)).unwrap().as_tuple(), (1, 1));
        assert_eq!(bezout_plus(pair(5, 2)).unwrap().as_tuple(), (3, 1));
        assert_eq!(bezout_minus(pair(5, 2)).unwrap().as_tuple(), (2, 1));
        assert_eq!(bezout_plus(pair(9, 4)).unwrap().as_tuple(), (7, 3));
        assert_eq!(theta(9, 4).unwrap(), 7);
        assert_eq!(theta(9, 2).unwrap(), 5);
        assert_eq!(bezout_zero(32, 352).unwrap().as_tuple(), (1, 11));
        "all eight worked examples match exactly".into()
    });
}

#[test]
fn c2_arc_csv_emits_the_six_expected_rows() {
    criterion("ACCEPTANCE c2", Some(Duration::from_secs(1)), || {
        let output = Command::new(env!("CARGO_BIN_EXE_bezout-sets"))
            .args(["arc", "1024", "817", "--format", "csv"])
            .output()
            .expect("run the arc subcommand");
        assert!(output.status.success(), "arc subcommand failed");
        let stdout = String::from_utf8(output.stdout).unwrap();
        let mut lines = stdout.lines();
        assert_eq!(lines.next(), Some("n,q,x,y,key"));
        let rows: Vec<Vec<i128>> = lines
            .map(|line| line.split(',').map(|v| v.parse().unwrap()).collect())
            .collect();
        let expected_rows = [
            (-2, 753, 529, 389),
            (-1, 785, 497, 381),
            (0, 817, 465, 371),
            (1, 849, 433, 359),
            (2, 881, 401, 345),
            (3, 913, 369, 329),
        ];
        for (n, q, x, y) in expected_rows {
            let row = rows
                .iter()
                .find(|row| row[0] == n)
                .unwrap_or_else(|| panic!("no row for n = {n}"));
            assert_eq!(&row[..], &[n, q, x, y, 1282], "row for n = {n}");
        }
        format!("all six rows for n = -2..3 exact ({} rows in range)", rows.len())
    });
}

#[test]
fn c3_arc_points_match_euclid_for_random_seeds() {
    criterion("ACCEPTANCE c3", Some(Duration::from_secs(30)), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0003);
        let mut drawn = 0u32;
        let mut points = 0u64;
        while drawn < 500 {
            let p = rng.random_range(3..=100_000i128);
            let q = rng.random_range(2..p);
            if gcd(p, q).unwrap() != 1 {
                continue;
            }
            drawn += 1;
            let spec = build_arc(p, q).unwrap();
            for (n, point) in spec.points_in_range() {
                let seed = spec.seed() + n * spec.step();
                let euclid = bezout_plus(pair(p, seed)).unwrap();
                assert_eq!(
                    point.as_tuple(),
                    euclid.as_tuple(),
                    "formula vs Euclid at ({p}, {q}), n = {n}",
                );
                assert_eq!(
                    spec.residual(point.x(), point.y()),
                    0,
                    "curve residual at ({p}, {q}), n = {n}",
                );
                points += 1;
            }
        }
        format!("500 random seeds, {points} arc points, zero mismatches")
    });
}

#[test]
fn c4_theta_route_equals_extended_euclid() {
    criterion("ACCEPTANCE c4", Some(Duration::from_secs(10)), || {
        let mut cases = 0u64;
        for p in 2..=500i128 {
            for q in 2..p {
                if gcd(p, q).unwrap() != 1 {
                    continue;
                }
                assert_eq!(
                    bezout_plus_via_theta(p, q).unwrap(),
                    bezout_plus(pair(p, q)).unwrap(),
                    "theta route at ({p}, {q})",
                );
                cases += 1;
            }
        }
        format!("{cases} coprime pairs, both routes agree")
    });
}

#[test]
fn c5_propositions_hold_exhaustively() {
    criterion("ACCEPTANCE c5", Some(Duration::from_secs(10)), || {
        let mut cases = 0u64;
        for p in 2..=300i128 {
            for q in 2..p {
                let Ok(pair) = CoprimePair::new(p, q) else {
                    continue;
                };
                cases += 1;
                assert_eq!(pair.flip().flip(), pair, "(a) at ({p}, {q})");
                let (a, b) = bezout_plus(pair).unwrap().as_tuple();
                assert_eq!(
                    bezout_minus(pair.flip()).unwrap().as_tuple(),
                    (b, a),
                    "(b) at ({p}, {q})",
                );
                let minus = bezout_minus(pair).unwrap().as_tuple();
                assert_eq!((minus.0 + a, minus.1 + b), (p, q), "(c) at ({p}, {q})");
                if p - q >= 2 {
                    assert_eq!(
                        bezout_minus(CoprimePair::new(p, p - q).unwrap())
                            .unwrap()
                            .as_tuple(),
                        (a, a - b),
                        "(d) at ({p}, {q})",
                    );
                }
                if a >= 2 {
                    assert_eq!(
                        bezout_plus(CoprimePair::new(p, a).unwrap())
                            .unwrap()
                            .as_tuple(),
                        (q, b),
                        "(e) at ({p}, {q})",
                    );
                }
                assert_eq!(
                    bezout_plus(pair.flip()).unwrap().as_tuple(),
                    (q - b, p - a),
                    "(f) at ({p}, {q})",
                );
            }
        }
        format!("(a)-(f) hold for all {cases} coprime pairs up to 300")
    });
}

#[test]
fn c6_farey_sequences_match_brute_force() {
    criterion("ACCEPTANCE c6", Some(Duration::from_secs(20)), || {
        let mut entries_checked = 0u64;
        for n in 1..=150i128 {
            let seq = farey_sequence(n).unwrap();
            let entries = seq.entries();
            // brute-force enumeration: all reduced fractions with den <= n
            let mut brute: Vec<(i128, i128)> = (1..=n)
                .flat_map(|den| (0..=den).map(move |num| (num, den)))
                .filter(|&(num, den)| gcd(num, den).unwrap() == 1)
                .collect();
            brute.sort_by(|&(an, ad), &(bn, bd)| (an * bd).cmp(&(bn * ad)));
            let got: Vec<(i128, i128)> = entries.iter().map(|f| (f.num(), f.den())).collect();
            assert_eq!(got, brute, "F_{n} differs from brute force");
            for window in entries.windows(2) {
                let (b, a) = (window[0].num(), window[0].den());
                let (q, p) = (window[1].num(), window[1].den());
                assert_eq!(a * q - b * p, 1, "unimodularity in F_{n}");
            }
            for window in entries.windows(3) {
                assert_eq!(
                    mediant(window[0], window[2]),
                    window[1],
                    "mediant identity in F_{n}",
                );
            }
            entries_checked += entries.len() as u64;
        }
        // positional predecessor/successor for every reduced q/p, p <= 150
        let mut neighbors = 0u64;
        for p in 2..=150i128 {
            let seq = farey_sequence(p).unwrap();
            let entries = seq.entries();
            for (pos, entry) in entries.iter().enumerate() {
                if entry.den() != p {
                    continue;
                }
                assert_eq!(
                    predecessor(p, entry.num()).unwrap(),
                    entries[pos - 1],
                    "predecessor of {entry} in F_{p}",
                );
                assert_eq!(
                    successor(p, entry.num()).unwrap(),
                    entries[pos + 1],
                    "successor of {entry} in F_{p}",
                );
                neighbors += 1;
            }
        }
        format!("{entries_checked} entries match brute force; {neighbors} neighbor lookups agree")
    });
}

/// Brute-force oracle for the Bezout set: scan the whole coefficient box for
/// solutions of the +-1 identities over every signed source pair.
fn oracle_set(p: i128) -> Vec<(i64, i64)> {
    let mut points = Vec::new();
    for q in 2..p {
        if gcd(p, q).unwrap() != 1 {
            continue;
        }
        for (mag_p, mag_q) in [(p, q), (q, p)] {
            for sp in [1i128, -1] {
                for sq in [1i128, -1] {
                    let (src_p, src_q) = (sp * mag_p, sq * mag_q);
                    for x in -mag_p..=mag_p {
                        for i in [-1i128, 1] {
                            let num = x * src_q - i;
                            if num % src_p == 0 {
                                let y = num / src_p;
                                if x != 0 && y != 0 && y.abs() <= mag_q {
                                    points.push((x as i64, y as i64));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    points
}

#[test]
fn c7_set_builder_matches_oracle() {
    criterion("ACCEPTANCE c7", Some(Duration::from_secs(30)), || {
        let mut total = 0usize;
        for p in 2..=100i128 {
            let set = build_bezout_set(p, SetOptions::default()).unwrap();
            assert_eq!(set.points(), &oracle_set(p)[..], "oracle mismatch at p = {p}");
            total += set.len();
        }
        format!("sets for p = 2..=100 equal the box-scan oracle ({total} points)")
    });
}

/// Does (x, y) arise as a bounded solution of x*q - y*p = +-1 (in either
/// pair order) for some seed 2 <= q < p? Inverts the four base-point forms.
fn is_set_member(p: i128, x: i128, y: i128) -> bool {
    let (u, v) = (x.abs(), y.abs());
    if u == 0 || v == 0 || u >= p || v >= p {
        return false;
    }
    let candidates = [
        (v * p + 1, u, 1),  // (u, v) = (a, b):       u*q - v*p = 1
        (v * p - 1, u, -1), // (u, v) = (p-a, q-b):   u*q - v*p = -1
        (u * p - 1, v, 2),  // (u, v) = (q-b, p-a):   u*p - v*q = 1
        (u * p + 1, v, -2), // (u, v) = (b, a):       u*p - v*q = -1
    ];
    candidates.iter().any(|&(numerator, divisor, form)| {
        if numerator % divisor != 0 {
            return false;
        }
        let q = numerator / divisor;
        if !(2..p).contains(&q) {
            return false;
        }
        match form {
            1 => u * q - v * p == 1,
            -1 => u * q - v * p == -1,
            2 => u * p - v * q == 1,
            _ => u * p - v * q == -1,
        }
    })
}

#[test]
fn c8_million_point_set_within_budget_and_one_to_one_cloud() {
    criterion("ACCEPTANCE c8", Some(Duration::from_secs(60)), || {
        const P: i128 = 1_000_000;
        let built = Instant::now();
        let set = build_bezout_set(P, SetOptions::default()).unwrap();
        let build_time = built.elapsed();
        let csv = bezout_core::points_csv_string(set.points());

        // 10^4 random identity spot checks against the CSV text
        let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0008);
        let mut wanted = BTreeSet::new();
        while wanted.len() < 10_000 {
            wanted.insert(rng.random_range(0..set.len()));
        }
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x,y"), "CSV header");
        let mut checked = 0u64;
        let mut rows = 0usize;
        for (row, line) in lines.enumerate() {
            rows += 1;
            if !wanted.contains(&row) {
                continue;
            }
            let (x, y) = line.split_once(',').unwrap();
            let (x, y): (i128, i128) = (x.parse().unwrap(), y.parse().unwrap());
            assert!(
                is_set_member(P, x, y),
                "CSV row {row} = ({x}, {y}) fails every identity reconstruction",
            );
            checked += 1;
        }
        assert_eq!(rows, set.len(), "CSV row count");
        assert_eq!(checked, 10_000, "spot-check count");

        // `set 512 --scale 1:1` reproduces the oracle point cloud
        let dir = tempfile::tempdir().unwrap();
        let svg_path = dir.path().join("b512.svg");
        let output = Command::new(env!("CARGO_BIN_EXE_bezout-sets"))
            .args(["set", "512", "--format", "svg", "--scale", "1:1"])
            .arg("--output")
            .arg(&svg_path)
            .output()
            .expect("run the set subcommand");
        assert!(output.status.success(), "set subcommand failed");
        let svg = std::fs::read_to_string(&svg_path).unwrap();
        let mut cloud: Vec<(i64, i64)> = svg
            .split("<circle cx=\"")
            .skip(1)
            .map(|chunk| {
                let mut fields = chunk.split('"');
                let cx: i64 = fields.next().unwrap().parse().unwrap();
                let cy: i64 = fields.nth(1).unwrap().parse().unwrap();
                (cx, -cy)
            })
            .collect();
        cloud.sort_unstable();
        let oracle = oracle_set(512);
        assert_eq!(cloud, oracle, "1:1 SVG cloud differs from the oracle");

        format!(
            "set of {} points built in {build_time:.2?}; 10000 CSV spot checks pass; \
             1:1 SVG cloud equals the {}-point oracle",
            set.len(),
            oracle.len(),
        )
    });
}

#[test]
fn c9_squarefree_degeneracy_and_coverage_ordering() {
    criterion("ACCEPTANCE c9", None, || {
        let mut arcs = 0u64;
        for p in 3..=2000i128 {
            if !factorize(p).unwrap().is_squarefree() {
                continue;
            }
            for q in 2..p {
                if gcd(p, q).unwrap() != 1 {
                    continue;
                }
                let spec = build_arc(p, q).unwrap();
                assert_eq!(
                    spec.in_range_len(),
                    1,
                    "squarefree p = {p}, q = {q} has more than the anchor",
                );
                arcs += 1;
            }
        }
        let high = arc_coverage(46368).unwrap();
        let low = arc_coverage(317811).unwrap();
        assert!(
            high.fraction() > low.fraction(),
            "coverage ordering violated: {}/{} vs {}/{}",
            high.covered(),
            high.seeds(),
            low.covered(),
            low.seeds(),
        );
        format!(
            "{arcs} squarefree arcs are single-point; coverage 46368: {}/{} = {:.6} > 317811: {}/{} = {:.6}",
            high.covered(),
            high.seeds(),
            high.fraction(),
            low.covered(),
            low.seeds(),
            low.fraction(),
        )
    });
}

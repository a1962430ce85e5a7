//! Exhaustive verification of the library's documented invariants at their
//! full stated bounds. These are slower than unit tests but still finish in
//! seconds; the unit tests cover the same ground at smaller bounds for fast
//! iteration.

use std::collections::HashMap;

use bezout_core::nt::{factorize, gcd, totient};
use bezout_core::{
    arc_coverage, bezout_minus, bezout_plus, bezout_plus_via_theta, bezout_signed, bezout_zero,
    build_arc, build_bezout_set, farey_sequence, mediant, predecessor, set_stats, successor,
    BezoutIndex, CoprimePair, SetOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coprime(p: i128, q: i128) -> bool {
    gcd(p, q).unwrap() == 1
}

#[test]
fn identity_and_complement_hold_to_two_thousand() {
    for p in 2..=2000i128 {
        for q in 2..p {
            let Ok(pair) = CoprimePair::new(p, q) else {
                continue;
            };
            let plus = bezout_plus(pair).unwrap();
            let (a, b) = plus.as_tuple();
            assert_eq!(a * q - b * p, 1, "identity at ({p}, {q})");
            assert!(0 < a && a < p, "a bound at ({p}, {q})");
            assert!(0 < b && b < q, "b bound at ({p}, {q})");
            let minus = bezout_minus(pair).unwrap();
            assert_eq!(minus.as_tuple(), (p - a, q - b), "complement at ({p}, {q})");
            assert_eq!(minus.x() * q - minus.y() * p, -1);
        }
    }
}

#[test]
fn propositions_a_through_f_hold_to_one_thousand() {
    for p in 2..=1000i128 {
        for q in 2..p {
            let Ok(pair) = CoprimePair::new(p, q) else {
                continue;
            };
            // (a) the flip transformation is an involution
            assert_eq!(pair.flip().flip(), pair);
            let (a, b) = bezout_plus(pair).unwrap().as_tuple();
            // (b) B₋₁ ∘ F = F ∘ B₁
            assert_eq!(
                bezout_minus(pair.flip()).unwrap().as_tuple(),
                (b, a),
                "proposition (b) at ({p}, {q})",
            );
            // (c) B₋₁ + B₁ = B₀ componentwise
            let minus = bezout_minus(pair).unwrap().as_tuple();
            let zero = bezout_zero(p, q).unwrap().as_tuple();
            assert_eq!((minus.0 + a, minus.1 + b), zero, "proposition (c)");
            assert_eq!(zero, (p, q));
            // (d) B₋₁(p, p−q) = (a, a−b), valid once p−q ≥ 2
            if p - q >= 2 {
                let reflected = CoprimePair::new(p, p - q).unwrap();
                assert_eq!(
                    bezout_minus(reflected).unwrap().as_tuple(),
                    (a, a - b),
                    "proposition (d) at ({p}, {q})",
                );
            }
            // (e) B₁(p, a) = (q, b), valid once a ≥ 2
            if a >= 2 {
                let iterated = CoprimePair::new(p, a).unwrap();
                assert_eq!(
                    bezout_plus(iterated).unwrap().as_tuple(),
                    (q, b),
                    "proposition (e) at ({p}, {q})",
                );
            }
            // (f) B₁(q, p) = (q−b, p−a)
            assert_eq!(
                bezout_plus(pair.flip()).unwrap().as_tuple(),
                (q - b, p - a),
                "proposition (f) at ({p}, {q})",
            );
        }
    }
}

#[test]
fn theta_route_agrees_to_five_hundred() {
    for p in 2..=500i128 {
        for q in 2..p {
            if !coprime(p, q) {
                continue;
            }
            let pair = CoprimePair::new(p, q).unwrap();
            assert_eq!(
                bezout_plus_via_theta(p, q).unwrap(),
                bezout_plus(pair).unwrap(),
                "theta route at ({p}, {q})",
            );
        }
    }
}

#[test]
fn brute_force_scan_agrees_to_three_hundred() {
    for p in 2..=300i128 {
        for q in 2..p {
            if !coprime(p, q) {
                continue;
            }
            let scanned = (1..=p)
                .find(|a| (a * q) % p == 1)
                .map(|a| (a, (a * q - 1) / p))
                .unwrap();
            let pair = CoprimePair::new(p, q).unwrap();
            assert_eq!(bezout_plus(pair).unwrap().as_tuple(), scanned, "({p}, {q})");
        }
    }
}

#[test]
fn signed_outputs_verify_for_all_sign_combinations_to_two_hundred() {
    for p in 2..=200i128 {
        for q in 2..=200i128 {
            if !coprime(p, q) {
                continue;
            }
            for sp in [1, -1] {
                for sq in [1, -1] {
                    let pair = CoprimePair::new(sp * p, sq * q).unwrap();
                    for index in [BezoutIndex::Plus, BezoutIndex::Minus] {
                        let pt = bezout_signed(index, pair).unwrap();
                        assert_eq!(
                            pt.x() * (sq * q) - pt.y() * (sp * p),
                            index.value(),
                            "({}, {})",
                            sp * p,
                            sq * q,
                        );
                        assert!(pt.x().abs() < p && pt.y().abs() < q);
                    }
                }
            }
        }
    }
}

#[test]
fn farey_length_unimodularity_and_mediants_to_two_hundred() {
    let mut phi_sum = 0i128;
    for n in 1..=200i128 {
        phi_sum += totient(n).unwrap();
        let seq = farey_sequence(n).unwrap();
        assert_eq!(seq.len() as i128, 1 + phi_sum, "length of F_{n}");
        let entries = seq.entries();
        assert_eq!(entries.first().map(|f| f.num()), Some(0));
        assert_eq!(entries.last().map(|f| (f.num(), f.den())), Some((1, 1)));
        for window in entries.windows(2) {
            let (b, a) = (window[0].num(), window[0].den());
            let (q, p) = (window[1].num(), window[1].den());
            assert!(window[0] < window[1], "ordering in F_{n}");
            assert_eq!(a * q - b * p, 1, "unimodularity in F_{n}");
        }
        for window in entries.windows(3) {
            assert_eq!(
                mediant(window[0], window[2]),
                window[1],
                "mediant identity in F_{n}",
            );
        }
    }
}

#[test]
fn farey_neighbors_match_positional_lookup_to_one_fifty() {
    for p in 2..=150i128 {
        let seq = farey_sequence(p).unwrap();
        let index: HashMap<(i128, i128), usize> = seq
            .entries()
            .iter()
            .enumerate()
            .map(|(i, f)| ((f.num(), f.den()), i))
            .collect();
        for q in 1..p {
            if !coprime(p, q) {
                continue;
            }
            let pos = index[&(q, p)];
            assert_eq!(
                predecessor(p, q).unwrap(),
                seq.entries()[pos - 1],
                "predecessor of {q}/{p}",
            );
            assert_eq!(
                successor(p, q).unwrap(),
                seq.entries()[pos + 1],
                "successor of {q}/{p}",
            );
        }
    }
}

#[test]
fn arc_formula_agrees_for_five_hundred_random_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB152_2007);
    let mut checked = 0u32;
    while checked < 500 {
        let p = rng.random_range(3..=100_000i128);
        let q = rng.random_range(2..p);
        if !coprime(p, q) {
            continue;
        }
        checked += 1;
        let spec = build_arc(p, q).unwrap();
        let points = spec.points_in_range();
        let (lo, hi) = spec.index_window();
        assert!(lo <= 0 && 0 <= hi, "window misses the anchor for ({p}, {q})");
        assert_eq!(points.len() as u64, spec.in_range_len());
        for (n, pt) in points {
            let v = spec.seed() + n * spec.step();
            assert_eq!(pt.pair(), (p, v));
            assert!(coprime(p, v), "progression left the coprimes at n = {n}");
            // independent recomputation through the public entry point
            let euclid = bezout_plus(CoprimePair::new(p, v).unwrap()).unwrap();
            assert_eq!(pt.as_tuple(), euclid.as_tuple(), "({p}, {q}) at n = {n}");
            assert_eq!(spec.residual(pt.x(), pt.y()), 0);
            assert_eq!(pt.x() + v, spec.curve_key(), "key constancy at n = {n}");
        }
    }
}

#[test]
fn squarefree_moduli_have_single_point_arcs_to_two_thousand() {
    for p in 3..=2000i128 {
        if !factorize(p).unwrap().is_squarefree() {
            continue;
        }
        for q in 2..p {
            if !coprime(p, q) {
                continue;
            }
            let spec = build_arc(p, q).unwrap();
            assert!(spec.step() >= p, "step below modulus for ({p}, {q})");
            assert_eq!(spec.in_range_len(), 1, "extra points for ({p}, {q})");
        }
    }
}

/// Brute-force oracle for 𝓑ₚ: for every signed source pair, scan the whole
/// coefficient box for solutions of the ±1 identities.
fn oracle_set(p: i128) -> Vec<(i64, i64)> {
    let mut points = Vec::new();
    for q in 2..p {
        if !coprime(p, q) {
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
fn set_matches_brute_force_oracle_to_one_hundred() {
    for p in 2..=100i128 {
        let set = build_bezout_set(p, SetOptions::default()).unwrap();
        assert_eq!(set.points(), &oracle_set(p)[..], "oracle mismatch at p = {p}");
    }
}

#[test]
fn set_symmetry_quadrants_and_provenance_to_three_hundred() {
    for p in 2..=300i128 {
        let set = build_bezout_set(
            p,
            SetOptions {
                provenance: true,
                ..SetOptions::default()
            },
        )
        .unwrap();
        for &(x, y) in set.points() {
            assert!(set.contains(-x, -y), "(−x, −y) missing at p = {p}");
            assert!(set.contains(-x, y), "(−x, y) missing at p = {p}");
            assert!(set.contains(x, -y), "(x, −y) missing at p = {p}");
        }
        let provenance = set.provenance().unwrap();
        assert_eq!(provenance.len(), set.len());
        for (&(x, y), sources) in set.points().iter().zip(provenance) {
            assert!(!sources.is_empty());
            for source in sources {
                let (sp, sq) = source.pair();
                assert_eq!(
                    i128::from(x) * sq - i128::from(y) * sp,
                    source.index().value(),
                    "provenance of ({x}, {y}) at p = {p}",
                );
                assert!(sp.abs() == p || sq.abs() == p);
            }
        }
        let stats = set_stats(&set);
        let counts = stats.quadrant_counts();
        assert!(
            counts.iter().all(|&c| c == counts[0]),
            "unbalanced quadrants at p = {p}: {counts:?}",
        );
        assert_eq!(counts.iter().sum::<u64>(), stats.cardinality());
    }
}

#[test]
fn repeated_builds_are_identical() {
    let first = build_bezout_set(1000, SetOptions::default()).unwrap();
    let second = build_bezout_set(1000, SetOptions::default()).unwrap();
    assert_eq!(first, second);
    assert_eq!(
        bezout_core::points_csv_string(first.points()),
        bezout_core::points_csv_string(second.points()),
    );
    let audited = build_bezout_set(
        1000,
        SetOptions {
            provenance: true,
            ..SetOptions::default()
        },
    )
    .unwrap();
    assert_eq!(first.points(), audited.points());
}

#[test]
fn coverage_separates_squareful_and_squarefree_moduli() {
    let high = arc_coverage(46368).unwrap();
    assert_eq!((high.covered(), high.seeds()), (642, 12671));
    let low = arc_coverage(317811).unwrap();
    assert_eq!((low.covered(), low.seeds()), (0, 188159));
    assert!(high.fraction() > low.fraction());
}

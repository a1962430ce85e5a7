//! Generation of the Bézout set 𝓑ₚ.
//!
//! For every q with 1 < q < p coprime to p, the set collects the ±1
//! coefficient points of all sign/order variants of the pair: (±p, ±q) and
//! (±q, ±p). One extended-Euclid run per q yields the four base points
//!
//! ```text
//! B₁(p,q) = (a, b)          B₋₁(p,q) = (p−a, q−b)
//! B₁(q,p) = (q−b, p−a)      B₋₁(q,p) = (b, a)
//! ```
//!
//! and the sign transfer turns each base into its four (±x, ±y) variants,
//! so a seed contributes at most 16 points. Coordinates stay well below
//! 2³¹, so points are stored as `(i64, i64)` to halve the footprint at
//! plotting scale (p = 10⁶ yields a few million points).
//!
//! Generation parallelizes over q; the merge is order-insensitive and the
//! final sort + dedup makes the output canonical, so any thread count
//! produces identical sets.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arcs::arc_coverage;
use crate::bezout::{canonical_plus, BezoutIndex};
use crate::error::{ensure_min, Error, Result};
use crate::nt::gcd_raw;
use crate::MAX_MODULUS;

/// Switches for [`build_bezout_set`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SetOptions {
    /// Keep only the positive B₁ slice (both pair orders, no sign
    /// variants): the first-quadrant point cloud rather than the full set.
    pub quadrant_only: bool,
    /// Record every (source pair, index) that produced each point.
    /// Sequential and memory-hungry; meant for audit scales, not p = 10⁶.
    pub provenance: bool,
}

/// One origin of a set point: the signed source pair and the identity index
/// it satisfies there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSource {
    pair: (i128, i128),
    index: BezoutIndex,
}

impl PointSource {
    /// The signed source pair.
    pub fn pair(self) -> (i128, i128) {
        self.pair
    }

    /// The identity index at that pair.
    pub fn index(self) -> BezoutIndex {
        self.index
    }
}

/// The Bézout set 𝓑ₚ: deduplicated points in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutSet {
    modulus: i128,
    quadrant_only: bool,
    points: Vec<(i64, i64)>,
    provenance: Option<Vec<Vec<PointSource>>>,
}

impl BezoutSet {
    /// The modulus p.
    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    /// Whether this is the positive B₁ slice rather than the full set.
    pub fn quadrant_only(&self) -> bool {
        self.quadrant_only
    }

    /// The points, deduplicated and sorted lexicographically.
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// True for p = 2, which admits no seed at all.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership test by binary search.
    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.points.binary_search(&(x, y)).is_ok()
    }

    /// Per-point source lists, aligned with [`points`](Self::points); only
    /// present when the set was built with provenance.
    pub fn provenance(&self) -> Option<&[Vec<PointSource>]> {
        self.provenance.as_deref()
    }
}

/// Builds 𝓑ₚ (or its positive B₁ slice) for 2 ≤ p ≤ 2³¹.
///
/// p = 2 yields the empty set: no q satisfies 1 < q < 2.
pub fn build_bezout_set(p: i128, options: SetOptions) -> Result<BezoutSet> {
    ensure_min("p", p, 2)?;
    if p > MAX_MODULUS {
        return Err(Error::OutOfRange {
            what: format!("p = {p} exceeds the supported maximum 2^31 for set generation"),
        });
    }
    let (points, provenance) = if options.provenance {
        let (points, provenance) = build_with_provenance(p, options.quadrant_only);
        (points, Some(provenance))
    } else {
        (build_parallel(p, options.quadrant_only), None)
    };
    Ok(BezoutSet {
        modulus: p,
        quadrant_only: options.quadrant_only,
        points,
        provenance,
    })
}

/// The four base points a single extended-Euclid run yields for (p, q).
fn base_points(
    p: i128,
    q: i128,
) -> [((i128, i128), BezoutIndex, (i128, i128)); 4] {
    let (a, b) = canonical_plus(p, q);
    [
        ((p, q), BezoutIndex::Plus, (a, b)),
        ((p, q), BezoutIndex::Minus, (p - a, q - b)),
        ((q, p), BezoutIndex::Plus, (q - b, p - a)),
        ((q, p), BezoutIndex::Minus, (b, a)),
    ]
}

fn build_parallel(p: i128, quadrant_only: bool) -> Vec<(i64, i64)> {
    let mut points: Vec<(i64, i64)> = (2..p as i64)
        .into_par_iter()
        .filter(|&q| gcd_raw(p, q as i128) == 1)
        .fold(Vec::new, |mut acc, q| {
            let bases = base_points(p, q as i128);
            if quadrant_only {
                for (_, _, (x, y)) in [bases[0], bases[2]] {
                    acc.push((x as i64, y as i64));
                }
            } else {
                for (_, _, (x, y)) in bases {
                    for sx in [1, -1] {
                        for sy in [1, -1] {
                            acc.push(((sx * x) as i64, (sy * y) as i64));
                        }
                    }
                }
            }
            acc
        })
        .reduce(Vec::new, |mut lhs, mut rhs| {
            lhs.append(&mut rhs);
            lhs
        });
    points.par_sort_unstable();
    points.dedup();
    points
}

fn build_with_provenance(
    p: i128,
    quadrant_only: bool,
) -> (Vec<(i64, i64)>, Vec<Vec<PointSource>>) {
    let mut map: BTreeMap<(i64, i64), Vec<PointSource>> = BTreeMap::new();
    for q in 2..p {
        if gcd_raw(p, q) != 1 {
            continue;
        }
        let bases = base_points(p, q);
        if quadrant_only {
            for (pair, index, (x, y)) in [bases[0], bases[2]] {
                map.entry((x as i64, y as i64))
                    .or_default()
                    .push(PointSource { pair, index });
            }
            continue;
        }
        for (pair, index, (x, y)) in bases {
            // ε flips the first source slot and lands on y; δ flips the
            // second slot and lands on x.
            for eps in [1i128, -1] {
                for delta in [1i128, -1] {
                    map.entry(((delta * x) as i64, (eps * y) as i64))
                        .or_default()
                        .push(PointSource {
                            pair: (eps * pair.0, delta * pair.1),
                            index,
                        });
                }
            }
        }
    }
    let mut points = Vec::with_capacity(map.len());
    let mut provenance = Vec::with_capacity(map.len());
    for (point, sources) in map {
        points.push(point);
        provenance.push(sources);
    }
    (points, provenance)
}

/// Summary of a built set: size, bounding box, quadrant balance, and how
/// much of the forward B₁ slice sits on multi-point arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetStats {
    cardinality: u64,
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
    quadrant_counts: [u64; 4],
    arc_covered: u64,
    arc_seeds: u64,
}

impl SetStats {
    /// Number of points.
    pub fn cardinality(self) -> u64 {
        self.cardinality
    }

    /// Smallest x; 0 for an empty set.
    pub fn min_x(self) -> i64 {
        self.min_x
    }

    /// Largest x; 0 for an empty set.
    pub fn max_x(self) -> i64 {
        self.max_x
    }

    /// Smallest y; 0 for an empty set.
    pub fn min_y(self) -> i64 {
        self.min_y
    }

    /// Largest y; 0 for an empty set.
    pub fn max_y(self) -> i64 {
        self.max_y
    }

    /// Point counts per quadrant, in the order I, II, III, IV. Set points
    /// never sit on an axis.
    pub fn quadrant_counts(self) -> [u64; 4] {
        self.quadrant_counts
    }

    /// Seeds whose arc keeps at least two in-range points.
    pub fn arc_covered(self) -> u64 {
        self.arc_covered
    }

    /// Total seeds of the forward B₁ slice.
    pub fn arc_seeds(self) -> u64 {
        self.arc_seeds
    }

    /// arc_covered/arc_seeds, or 0 for an empty slice.
    pub fn arc_coverage_fraction(self) -> f64 {
        if self.arc_seeds == 0 {
            0.0
        } else {
            self.arc_covered as f64 / self.arc_seeds as f64
        }
    }
}

/// Computes summary statistics for a built set.
pub fn set_stats(set: &BezoutSet) -> SetStats {
    let mut quadrant_counts = [0u64; 4];
    for &(x, y) in set.points() {
        debug_assert!(x != 0 && y != 0, "set points never sit on an axis");
        let quadrant = match (x > 0, y > 0) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        };
        quadrant_counts[quadrant] += 1;
    }
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0, 0, 0, 0);
    if let Some(&(first_x, first_y)) = set.points().first() {
        (min_x, max_x, min_y, max_y) = (first_x, first_x, first_y, first_y);
        for &(x, y) in set.points() {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
    }
    let coverage =
        arc_coverage(set.modulus()).expect("set modulus was validated at construction");
    SetStats {
        cardinality: set.len() as u64,
        min_x,
        max_x,
        min_y,
        max_y,
        quadrant_counts,
        arc_covered: coverage.covered(),
        arc_seeds: coverage.seeds(),
    }
}

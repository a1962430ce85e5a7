//! Quadratic arcs through the +1 Bézout points.
//!
//! For a seed pair (p, q) with anchor (a, b) = B₁(p, q), let w be the
//! smallest positive integer making p·w a perfect square, root = √(p·w),
//! (r, s) = B₀(root, q − a), and d = r·root. Then B₁(p, q + n·d) follows
//! the all-integer formula
//!
//! ```text
//! x = a − n·d,    y = b − w·(n·s + n²·r²)
//! ```
//!
//! for every index n that keeps both q + n·d and x inside their canonical
//! ranges, and each such point lies on the exact parabola
//! p·y = −1 + (a + q)·x − x². The sum x + (q + n·d) = a + q is constant
//! along an arc and identifies its curve.
//!
//! Everything is checked twice at runtime: the formula value is compared
//! against an independently computed extended-Euclid solution, and each
//! point is substituted back into its curve. A mismatch panics — it would
//! mean the construction itself is wrong, which no error value should
//! mask.

use std::collections::BTreeMap;

use crate::bezout::{bezout_zero, canonical_plus, BezoutIndex, BezoutPoint};
use crate::error::{ensure_min, Error, Result};
use crate::nt::{gcd_raw, squarefree_part};
use crate::MAX_MODULUS;

/// Exact rational coefficients of an arc's parabola
/// y = a₀ + a₁·x + a₂·x², all over the common denominator p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveCoefficients {
    a0_num: i128,
    a1_num: i128,
    a2_num: i128,
    denominator: i128,
}

impl CurveCoefficients {
    /// Numerator of the constant coefficient; always −1.
    pub fn a0_num(self) -> i128 {
        self.a0_num
    }

    /// Numerator of the linear coefficient; equals a + q.
    pub fn a1_num(self) -> i128 {
        self.a1_num
    }

    /// Numerator of the quadratic coefficient; always −1.
    pub fn a2_num(self) -> i128 {
        self.a2_num
    }

    /// The common denominator p. Numerators are kept unreduced over it.
    pub fn denominator(self) -> i128 {
        self.denominator
    }
}

/// A fully constructed arc for a seed pair (p, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcSpec {
    modulus: i128,
    seed: i128,
    anchor: BezoutPoint,
    multiplier: i128,
    root: i128,
    ratio: BezoutPoint,
    step: i128,
}

impl ArcSpec {
    /// The modulus p.
    pub fn modulus(self) -> i128 {
        self.modulus
    }

    /// The seed q.
    pub fn seed(self) -> i128 {
        self.seed
    }

    /// The anchor point (a, b) = B₁(p, q).
    pub fn anchor(self) -> BezoutPoint {
        self.anchor
    }

    /// The smallest w > 0 with p·w a perfect square.
    pub fn multiplier(self) -> i128 {
        self.multiplier
    }

    /// √(p·w).
    pub fn root(self) -> i128 {
        self.root
    }

    /// (r, s) = B₀(root, q − a); s is negative when q < a and zero when
    /// q = a.
    pub fn ratio(self) -> BezoutPoint {
        self.ratio
    }

    /// The common difference d = r·root of the seed progression.
    pub fn step(self) -> i128 {
        self.step
    }

    /// The arc's identifying key a + q; constant over every point of the
    /// arc, since x + (q + n·d) = a + q for all n.
    pub fn curve_key(self) -> i128 {
        self.anchor.x() + self.seed
    }

    /// The exact parabola coefficients (−1, a + q, −1) over p.
    pub fn coefficients(self) -> CurveCoefficients {
        CurveCoefficients {
            a0_num: -1,
            a1_num: self.curve_key(),
            a2_num: -1,
            denominator: self.modulus,
        }
    }

    /// p·y − (−1 + (a + q)·x − x²): zero exactly when (x, y) lies on the
    /// arc's parabola.
    pub fn residual(self, x: i128, y: i128) -> i128 {
        self.modulus * y - (-1 + self.curve_key() * x - x * x)
    }

    /// The inclusive range [lo, hi] of indices n whose arc point is
    /// in range: 1 < q + n·d < p and 0 < a − n·d < p. Always contains 0.
    pub fn index_window(self) -> (i128, i128) {
        let (p, q, d) = (self.modulus, self.seed, self.step);
        let a = self.anchor.x();
        let lo = div_ceil(2 - q, d).max(div_ceil(a + 1 - p, d));
        let hi = div_floor(p - 1 - q, d).min(div_floor(a - 1, d));
        (lo, hi)
    }

    /// Number of in-range points on the arc.
    pub fn in_range_len(self) -> u64 {
        let (lo, hi) = self.index_window();
        (hi - lo + 1) as u64
    }

    /// The arc point at index n, or `None` when q + n·d or the resulting x
    /// falls out of range. An in-range point is cross-checked against the
    /// extended-Euclid solution and its own curve before being returned.
    pub fn point(self, n: i128) -> Option<BezoutPoint> {
        let v = self.seed + n * self.step;
        if v <= 1 || v >= self.modulus {
            return None;
        }
        let x = self.anchor.x() - n * self.step;
        if x <= 0 || x >= self.modulus {
            return None;
        }
        let (r, s) = self.ratio.as_tuple();
        let y = self.anchor.y() - self.multiplier * (n * s + n * n * r * r);
        let euclid = canonical_plus(self.modulus, v);
        assert_eq!(
            (x, y),
            euclid,
            "formula diverged from extended Euclid at n = {n} for seed ({}, {})",
            self.modulus,
            self.seed,
        );
        assert_eq!(
            self.residual(x, y),
            0,
            "point at n = {n} left its own curve for seed ({}, {})",
            self.modulus,
            self.seed,
        );
        Some(BezoutPoint::verified(
            x,
            y,
            BezoutIndex::Plus,
            (self.modulus, v),
        ))
    }

    /// All in-range points, ordered by index n (equivalently by descending
    /// x).
    pub fn points_in_range(self) -> Vec<(i128, BezoutPoint)> {
        let (lo, hi) = self.index_window();
        (lo..=hi)
            .map(|n| (n, self.point(n).expect("index window must be exact")))
            .collect()
    }
}

/// Per-modulus context caching the squarefree decomposition, so building
/// arcs for many seeds of one p factors it once.
struct ArcContext {
    modulus: i128,
    multiplier: i128,
    root: i128,
}

impl ArcContext {
    fn new(p: i128) -> Result<Self> {
        ensure_min("p", p, 3)?;
        if p > MAX_MODULUS {
            return Err(Error::OutOfRange {
                what: format!("p = {p} exceeds the supported maximum 2^31 for arcs"),
            });
        }
        let (multiplier, root) = squarefree_part(p)?;
        Ok(Self {
            modulus: p,
            multiplier,
            root,
        })
    }

    fn build(&self, q: i128) -> Result<ArcSpec> {
        let p = self.modulus;
        ensure_min("q", q, 2)?;
        if q >= p {
            return Err(Error::OutOfRange {
                what: format!("q = {q} must be smaller than p = {p}"),
            });
        }
        let g = gcd_raw(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        let (a, b) = canonical_plus(p, q);
        let anchor = BezoutPoint::verified(a, b, BezoutIndex::Plus, (p, q));
        let offset = q - a;
        let ratio = bezout_zero(self.root, offset)?;
        let (r, s) = ratio.as_tuple();
        assert!(r >= 1, "reduced root component must stay positive");
        let step = r * self.root;
        // The two integrality facts the formula rests on, verified outright.
        assert_eq!(step * step % p, 0, "d² not divisible by p = {p}");
        assert_eq!(step * step / p, r * r * self.multiplier);
        assert_eq!(offset * step, s * self.multiplier * p);
        let spec = ArcSpec {
            modulus: p,
            seed: q,
            anchor,
            multiplier: self.multiplier,
            root: self.root,
            ratio,
            step,
        };
        let (lo, hi) = spec.index_window();
        assert!(
            lo <= 0 && 0 <= hi,
            "anchor index 0 fell outside the window [{lo}, {hi}]",
        );
        Ok(spec)
    }
}

/// Builds the arc for seed (p, q) with 2 ≤ q < p coprime, verifying every
/// construction invariant.
pub fn build_arc(p: i128, q: i128) -> Result<ArcSpec> {
    ArcContext::new(p)?.build(q)
}

/// Groups raw +1 coefficient points of modulus p by their curve key a + q.
///
/// Each (x, y) must be B₁(p, q) for some seed q, which the function
/// recovers from the identity (q = (y·p + 1)/x) and validates; anything
/// else is rejected with [`Error::NotBezoutPoint`]. Groups come back
/// sorted by key, points within a group by descending x (ascending n),
/// deduplicated.
pub fn group_into_arcs(
    p: i128,
    points: &[(i128, i128)],
) -> Result<BTreeMap<i128, Vec<BezoutPoint>>> {
    ensure_min("p", p, 2)?;
    let mut groups: BTreeMap<i128, Vec<BezoutPoint>> = BTreeMap::new();
    for &(x, y) in points {
        let invalid = || Error::NotBezoutPoint { modulus: p, x, y };
        if x < 1 || x >= p || y < 1 {
            return Err(invalid());
        }
        let num = y * p + 1;
        if num % x != 0 {
            return Err(invalid());
        }
        let q = num / x;
        if !(2..p).contains(&q) {
            return Err(invalid());
        }
        groups
            .entry(x + q)
            .or_default()
            .push(BezoutPoint::verified(x, y, BezoutIndex::Plus, (p, q)));
    }
    for members in groups.values_mut() {
        members.sort_by(|lhs, rhs| rhs.x().cmp(&lhs.x()));
        members.dedup();
    }
    Ok(groups)
}

/// How much of the forward B₁ slice of modulus p sits on a multi-point
/// arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcCoverage {
    modulus: i128,
    covered: u64,
    seeds: u64,
}

impl ArcCoverage {
    /// The modulus p.
    pub fn modulus(self) -> i128 {
        self.modulus
    }

    /// Seeds whose arc has at least two in-range points.
    pub fn covered(self) -> u64 {
        self.covered
    }

    /// Total seeds: every q with 1 < q < p coprime to p.
    pub fn seeds(self) -> u64 {
        self.seeds
    }

    /// covered/seeds, or 0 for the empty slice.
    pub fn fraction(self) -> f64 {
        if self.seeds == 0 {
            0.0
        } else {
            self.covered as f64 / self.seeds as f64
        }
    }
}

/// Measures arc coverage over every seed of modulus p.
pub fn arc_coverage(p: i128) -> Result<ArcCoverage> {
    ensure_min("p", p, 2)?;
    if p == 2 {
        return Ok(ArcCoverage {
            modulus: p,
            covered: 0,
            seeds: 0,
        });
    }
    let ctx = ArcContext::new(p)?;
    let mut covered = 0;
    let mut seeds = 0;
    for q in 2..p {
        if gcd_raw(p, q) != 1 {
            continue;
        }
        seeds += 1;
        if ctx.build(q)?.in_range_len() >= 2 {
            covered += 1;
        }
    }
    Ok(ArcCoverage {
        modulus: p,
        covered,
        seeds,
    })
}

/// Floor division for a positive divisor.
fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a < 0 {
        q - 1
    } else {
        q
    }
}

/// Ceiling division for a positive divisor.
fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

//! The three Bézout transformations B₋₁, B₀, B₁ on coprime pairs, their
//! sign extensions, the flip transformation, and the inverse-power route
//! through θₚ.
//!
//! For a coprime pair (p, q) and index i ∈ {−1, 0, +1}, the transformation
//! Bᵢ produces the unique point (x, y) satisfying the Bézout identity
//! x·q − y·p = i inside the canonical bounds 0 < x ≤ p, 0 < y ≤ q (for
//! i = ±1; for i = 0 the point is the reduced ratio). Every constructed
//! [`BezoutPoint`] re-checks its identity; a violation is a bug and panics.

use std::fmt;

use crate::error::{ensure_min, Error, Result};
use crate::nt::{ext_gcd, gcd_raw, mod_pow, totient};

/// The index i of the Bézout identity x·q − y·p = i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BezoutIndex {
    /// i = −1
    Minus,
    /// i = 0
    Zero,
    /// i = +1
    Plus,
}

impl BezoutIndex {
    /// The numeric value of the index.
    pub fn value(self) -> i128 {
        match self {
            BezoutIndex::Minus => -1,
            BezoutIndex::Zero => 0,
            BezoutIndex::Plus => 1,
        }
    }

    /// Parses −1, 0, or +1.
    pub fn from_value(i: i128) -> Result<Self> {
        match i {
            -1 => Ok(BezoutIndex::Minus),
            0 => Ok(BezoutIndex::Zero),
            1 => Ok(BezoutIndex::Plus),
            other => Err(Error::OutOfRange {
                what: format!("index {other} is not one of -1, 0, +1"),
            }),
        }
    }
}

impl fmt::Display for BezoutIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BezoutIndex::Minus => write!(f, "-1"),
            BezoutIndex::Zero => write!(f, "0"),
            BezoutIndex::Plus => write!(f, "+1"),
        }
    }
}

/// A pair of nonzero integers with coprime magnitudes.
///
/// Construction validates coprimality once; the B±₁ operations additionally
/// require both magnitudes to exceed 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoprimePair {
    p: i128,
    q: i128,
}

impl CoprimePair {
    /// Validates that both components are nonzero and coprime in magnitude.
    pub fn new(p: i128, q: i128) -> Result<Self> {
        if p == 0 {
            return Err(Error::Zero { name: "p" });
        }
        if q == 0 {
            return Err(Error::Zero { name: "q" });
        }
        let g = gcd_raw(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        Ok(Self { p, q })
    }

    /// First component.
    pub fn p(self) -> i128 {
        self.p
    }

    /// Second component.
    pub fn q(self) -> i128 {
        self.q
    }

    /// Both components.
    pub fn as_tuple(self) -> (i128, i128) {
        (self.p, self.q)
    }

    /// The flip transformation F(p, q) = (q, p); its own inverse.
    pub fn flip(self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }

    /// Applies the transformation for `index`: B₀ reduces the pair (a no-op
    /// for a coprime pair up to signs), B±₁ go through the sign-extended
    /// canonical solution.
    pub fn transform(self, index: BezoutIndex) -> Result<BezoutPoint> {
        match index {
            BezoutIndex::Zero => bezout_zero(self.p, self.q),
            _ => bezout_signed(index, self),
        }
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// An output point of a Bézout transformation, carrying the source pair and
/// index it was derived from.
///
/// The identity x·q − y·p = i is asserted at construction, so a value of
/// this type is always internally consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BezoutPoint {
    x: i128,
    y: i128,
    index: BezoutIndex,
    pair: (i128, i128),
}

impl BezoutPoint {
    /// Builds a point after asserting its identity against the source pair.
    pub(crate) fn verified(x: i128, y: i128, index: BezoutIndex, pair: (i128, i128)) -> Self {
        let (p, q) = pair;
        assert_eq!(
            x * q - y * p,
            index.value(),
            "identity broke: ({x})*({q}) - ({y})*({p}) != {index} for pair ({p}, {q})",
        );
        Self { x, y, index, pair }
    }

    /// First coordinate.
    pub fn x(self) -> i128 {
        self.x
    }

    /// Second coordinate.
    pub fn y(self) -> i128 {
        self.y
    }

    /// The coordinates as a tuple.
    pub fn as_tuple(self) -> (i128, i128) {
        (self.x, self.y)
    }

    /// The index i of the identity this point satisfies.
    pub fn index(self) -> BezoutIndex {
        self.index
    }

    /// The source pair the point was derived from.
    pub fn pair(self) -> (i128, i128) {
        self.pair
    }

    /// Recomputes x·q − y·p = i; always true for a constructed point, and
    /// cheap enough to re-check before presenting output.
    pub fn identity_holds(self) -> bool {
        let (p, q) = self.pair;
        self.x * q - self.y * p == self.index.value()
    }
}

impl fmt::Display for BezoutPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn require_positive(pair: CoprimePair) -> Result<()> {
    ensure_min("p", pair.p, 2)?;
    ensure_min("q", pair.q, 2)?;
    Ok(())
}

/// The canonical +1 solution for positive coprime p, q ≥ 2: the unique
/// (a, b) with a·q − b·p = 1 and 0 < a < p, 0 < b < q (strict bounds follow
/// from p, q ≥ 2). Callers guarantee the preconditions.
pub(crate) fn canonical_plus(p: i128, q: i128) -> (i128, i128) {
    let (g, x, y) = ext_gcd(q, p);
    assert_eq!(g, 1, "canonical_plus needs coprime inputs, got ({p}, {q})");
    // Minimal-magnitude coefficients give x·q + y·p = 1 with exactly one of
    // x, y positive; fold the negative side into the canonical box.
    let (a, b) = if y <= 0 { (x, -y) } else { (p + x, q - y) };
    assert!(
        0 < a && a < p && 0 < b && b < q,
        "canonical bounds broke for ({p}, {q}): got ({a}, {b})",
    );
    (a, b)
}

/// B₁ for a positive pair p, q ≥ 2: the unique (a, b) with a·q − b·p = 1,
/// 0 < a ≤ p, 0 < b ≤ q.
pub fn bezout_plus(pair: CoprimePair) -> Result<BezoutPoint> {
    require_positive(pair)?;
    let (a, b) = canonical_plus(pair.p, pair.q);
    Ok(BezoutPoint::verified(a, b, BezoutIndex::Plus, (pair.p, pair.q)))
}

/// B₋₁ for a positive pair p, q ≥ 2: the componentwise complement
/// (p, q) − B₁(p, q).
pub fn bezout_minus(pair: CoprimePair) -> Result<BezoutPoint> {
    require_positive(pair)?;
    let (a, b) = canonical_plus(pair.p, pair.q);
    Ok(BezoutPoint::verified(
        pair.p - a,
        pair.q - b,
        BezoutIndex::Minus,
        (pair.p, pair.q),
    ))
}

/// B₀: the reduced ratio of any pair other than (0, 0). Each component
/// keeps its own sign; a zero component stays zero, reducing the other to
/// ±1.
pub fn bezout_zero(a: i128, b: i128) -> Result<BezoutPoint> {
    if a == 0 && b == 0 {
        return Err(Error::Zero { name: "the pair" });
    }
    let g = gcd_raw(a, b);
    Ok(BezoutPoint::verified(a / g, b / g, BezoutIndex::Zero, (a, b)))
}

/// B±₁ for a signed pair with |p|, |q| ≥ 2: computes the positive-pair
/// solution on the magnitudes, then transfers signs — the first component
/// carries the sign of q, the second the sign of p — so the identity
/// x·q − y·p = i survives all four sign combinations.
pub fn bezout_signed(index: BezoutIndex, pair: CoprimePair) -> Result<BezoutPoint> {
    if index == BezoutIndex::Zero {
        return Err(Error::OutOfRange {
            what: "the sign-transfer rule applies to indices ±1 only; use bezout_zero for index 0"
                .to_string(),
        });
    }
    let (p, q) = pair.as_tuple();
    ensure_min("|p|", p.abs(), 2)?;
    ensure_min("|q|", q.abs(), 2)?;
    let (a, b) = canonical_plus(p.abs(), q.abs());
    let (a, b) = match index {
        BezoutIndex::Plus => (a, b),
        BezoutIndex::Minus => (p.abs() - a, q.abs() - b),
        BezoutIndex::Zero => unreachable!(),
    };
    Ok(BezoutPoint::verified(
        a * q.signum(),
        b * p.signum(),
        index,
        (p, q),
    ))
}

/// θₚ(q) = q^(φ(p)−1) mod p: the multiplicative inverse of q in ℤₚ*.
pub fn theta(p: i128, q: i128) -> Result<i128> {
    ensure_min("p", p, 2)?;
    if !(1..p).contains(&q) {
        return Err(Error::OutOfRange {
            what: format!("q = {q} must lie in [1, {p}) to be a residue of Z_{p}*"),
        });
    }
    let g = gcd_raw(p, q);
    if g != 1 {
        return Err(Error::NotCoprime { p, q, gcd: g });
    }
    let t = mod_pow(q, totient(p)? - 1, p)?;
    assert_eq!(
        (q * t).rem_euclid(p),
        1,
        "theta_{p}({q}) = {t} is not an inverse",
    );
    Ok(t)
}

/// B₁ through the θₚ route: (θₚ(q), (q·θₚ(q) − 1)/p), where the division is
/// exact. Agrees with [`bezout_plus`] on its whole domain.
pub fn bezout_plus_via_theta(p: i128, q: i128) -> Result<BezoutPoint> {
    ensure_min("q", q, 2)?;
    let a = theta(p, q)?;
    let num = q * a - 1;
    assert_eq!(num % p, 0, "Euler quotient for ({p}, {q}) is not integral");
    Ok(BezoutPoint::verified(a, num / p, BezoutIndex::Plus, (p, q)))
}

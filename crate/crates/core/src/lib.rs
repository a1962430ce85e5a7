//! Bézout transformations on coprime integer pairs, the point sets they
//! generate, and the quadratic arcs those sets trace.
//!
//! For a coprime pair (p, q) and index i ∈ {−1, 0, +1}, the transformation
//! Bᵢ yields the canonical bounded solution of the Bézout identity
//! x·q − y·p = i. On top of that single primitive the crate offers:
//!
//! - [`bezout`]: B₋₁, B₀, B₁ with sign extensions, the flip transformation,
//!   and the inverse-power route θₚ(q) = q^(φ(p)−1) mod p.
//! - [`set`]: the full Bézout set 𝓑ₚ — every ±1 point of (±p, ±q) and
//!   (±q, ±p) over all seeds — built in parallel yet byte-deterministic.
//! - [`arcs`]: the exact quadratic arcs through the +1 points, their
//!   arithmetic seed progressions, in-range enumeration, grouping, and
//!   coverage statistics.
//! - [`farey`]: Farey sequences and neighbor queries through the Bézout
//!   correspondence.
//! - [`nt`]: the underlying number theory (extended Euclid, factorization,
//!   totient, modular powers, squarefree parts).
//! - [`export`]: deterministic CSV serialization and SVG scatter plots.
//!
//! All arithmetic is exact, in `i128` with overflow checks enabled in every
//! build profile. Domain violations (non-coprime inputs, out-of-range
//! arguments) come back as typed [`Error`] values; a broken internal
//! invariant — an identity that fails to verify, a formula diverging from
//! its independent recomputation — panics instead, because no result is
//! better than a wrong one.

pub mod arcs;
pub mod bezout;
pub mod error;
pub mod export;
pub mod farey;
pub mod nt;
pub mod set;

pub use arcs::{
    arc_coverage, build_arc, group_into_arcs, ArcCoverage, ArcSpec, CurveCoefficients,
};
pub use bezout::{
    bezout_minus, bezout_plus, bezout_plus_via_theta, bezout_signed, bezout_zero, theta,
    BezoutIndex, BezoutPoint, CoprimePair,
};
pub use error::{Error, Result};
pub use export::{points_csv_string, render_points_svg, write_points_csv, PlotConfig, ScaleMode};
pub use farey::{
    farey_sequence, farey_terms, mediant, predecessor, successor, FareySequence, FareyTerms,
    Fraction,
};
pub use set::{build_bezout_set, set_stats, BezoutSet, PointSource, SetOptions, SetStats};

/// Hard cap on the modulus for set generation and arc construction: far
/// beyond any practical plotting scale, and small enough that every
/// intermediate product (up to p⁴ in the arc checks) fits in `i128`.
pub(crate) const MAX_MODULUS: i128 = 1 << 31;

//! Farey sequences and the neighbor correspondence.
//!
//! The Farey sequence Fₙ lists every reduced fraction in [0, 1] with
//! denominator at most n, in increasing order. Consecutive entries b/a, q/p
//! are unimodular (a·q − b·p = 1), which is exactly the +1 Bézout identity;
//! the neighbor queries below exploit that instead of scanning the
//! sequence.

use std::cmp::Ordering;
use std::fmt;

use crate::bezout::{bezout_minus, bezout_plus, CoprimePair};
use crate::error::{ensure_min, Error, Result};
use crate::nt::gcd_raw;

/// A reduced nonnegative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i128,
    den: i128,
}

impl Fraction {
    /// Reduces `num/den`; the numerator must be nonnegative and the
    /// denominator positive.
    pub fn new(num: i128, den: i128) -> Result<Self> {
        ensure_min("numerator", num, 0)?;
        ensure_min("denominator", den, 1)?;
        let g = gcd_raw(num, den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    /// Wraps an already-reduced fraction; internal shortcut.
    fn reduced(num: i128, den: i128) -> Self {
        debug_assert!(den >= 1 && num >= 0 && gcd_raw(num, den) == 1);
        Self { num, den }
    }

    /// Numerator of the reduced form.
    pub fn num(self) -> i128 {
        self.num
    }

    /// Denominator of the reduced form.
    pub fn den(self) -> i128 {
        self.den
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// The mediant (b+d)/(a+c) of b/a and d/c, reduced.
pub fn mediant(x: Fraction, y: Fraction) -> Fraction {
    let num = x.num + y.num;
    let den = x.den + y.den;
    let g = gcd_raw(num, den);
    Fraction::reduced(num / g, den / g)
}

/// Streaming iterator over the terms of Fₙ, from 0/1 to 1/1.
///
/// Uses the next-term recurrence on consecutive unimodular pairs: after
/// b/a, q/p the next term is (kq − b)/(kp − a) with k = ⌊(n + a)/p⌋, so the
/// whole sequence costs O(1) per term and never sorts.
#[derive(Debug, Clone)]
pub struct FareyTerms {
    order: i128,
    prev: (i128, i128),
    cur: Option<(i128, i128)>,
}

impl Iterator for FareyTerms {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        let cur = self.cur?;
        if cur == (1, 1) {
            self.cur = None;
        } else {
            let k = (self.order + self.prev.1) / cur.1;
            let next = (k * cur.0 - self.prev.0, k * cur.1 - self.prev.1);
            self.prev = cur;
            self.cur = Some(next);
        }
        Some(Fraction::reduced(cur.0, cur.1))
    }
}

/// Iterates the terms of Fₙ without materializing the sequence.
pub fn farey_terms(order: i128) -> Result<FareyTerms> {
    ensure_min("order", order, 1)?;
    // The virtual predecessor −1/1 of 0/1 satisfies the unimodular relation,
    // so the very first recurrence step lands on 1/n as required.
    Ok(FareyTerms {
        order,
        prev: (-1, 1),
        cur: Some((0, 1)),
    })
}

/// A fully materialized Farey sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareySequence {
    order: i128,
    entries: Vec<Fraction>,
}

impl FareySequence {
    /// The order n.
    pub fn order(&self) -> i128 {
        self.order
    }

    /// The entries, increasing from 0/1 to 1/1.
    pub fn entries(&self) -> &[Fraction] {
        &self.entries
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: every Fₙ contains at least 0/1 and 1/1.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Builds Fₙ by the next-term recurrence.
pub fn farey_sequence(order: i128) -> Result<FareySequence> {
    let entries: Vec<Fraction> = farey_terms(order)?.collect();
    Ok(FareySequence { order, entries })
}

fn check_reduced_in_unit_interval(p: i128, q: i128) -> Result<()> {
    ensure_min("p", p, 2)?;
    if !(1..p).contains(&q) {
        return Err(Error::OutOfRange {
            what: format!("q = {q} must lie in [1, {p}) so that q/{p} is interior to F_{p}"),
        });
    }
    let g = gcd_raw(p, q);
    if g != 1 {
        return Err(Error::NotCoprime { p, q, gcd: g });
    }
    Ok(())
}

/// The entry immediately before q/p in Fₚ: b/a where (a, b) = B₁(p, q).
pub fn predecessor(p: i128, q: i128) -> Result<Fraction> {
    check_reduced_in_unit_interval(p, q)?;
    if q == 1 {
        // 1/p is the first positive entry of F_p.
        return Ok(Fraction::reduced(0, 1));
    }
    let pt = bezout_plus(CoprimePair::new(p, q)?)?;
    Ok(Fraction::reduced(pt.y(), pt.x()))
}

/// The entry immediately after q/p in Fₚ: d/c where (c, d) = B₋₁(p, q).
pub fn successor(p: i128, q: i128) -> Result<Fraction> {
    check_reduced_in_unit_interval(p, q)?;
    if q == 1 {
        // B₋₁ is undefined at q = 1; one step of the term recurrence from
        // the pair 0/1, 1/p gives the next entry instead.
        let k = (p + 1) / p;
        return Ok(Fraction::reduced(k, k * p - 1));
    }
    let pt = bezout_minus(CoprimePair::new(p, q)?)?;
    Ok(Fraction::reduced(pt.y(), pt.x()))
}

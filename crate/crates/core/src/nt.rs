//! Elementary number theory on 128-bit signed integers.
//!
//! Everything here is exact — no floating point, no probabilistic
//! shortcuts. Factoring is plain trial division, which is entirely adequate
//! for the desk scale the crate targets (inputs around 10¹²); there is no
//! attempt at sub-exponential factoring or cryptographic-size primality.

use crate::error::{ensure_min, Error, Result};

/// Greatest common divisor of `|a|` and `|b|`.
///
/// Errors when both arguments are zero, since every integer divides 0.
pub fn gcd(a: i128, b: i128) -> Result<i128> {
    if a == 0 && b == 0 {
        return Err(Error::Zero {
            name: "at least one gcd argument",
        });
    }
    Ok(gcd_raw(a, b))
}

/// Euclid's algorithm with the convention `gcd_raw(0, 0) = 0`; callers
/// guarantee the input.
pub(crate) fn gcd_raw(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid on positive `p`, `q`: returns `(g, x, y)` with
/// `x·q + y·p = g` and `g = gcd(p, q)`.
///
/// The coefficients are the minimal-magnitude representative, so `|x| < p`
/// and `|y| < q` (sole exception: `p = q = 1` returns `(1, 0, 1)`, where
/// `|y| = q`). When `g = 1`, exactly one of `x`, `y` is positive and the
/// other is `≤ 0`.
pub fn extended_euclid(p: i128, q: i128) -> Result<(i128, i128, i128)> {
    ensure_min("p", p, 1)?;
    ensure_min("q", q, 1)?;
    let (g, x, y) = ext_gcd(q, p);
    debug_assert_eq!(x * q + y * p, g);
    Ok((g, x, y))
}

/// Iterative extended gcd: `ext_gcd(a, b) = (g, s, t)` with `s·a + t·b = g`
/// and the usual minimal-magnitude coefficients.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quo = old_r / r;
        (old_r, r) = (r, old_r - quo * r);
        (old_s, s) = (s, old_s - quo * s);
        (old_t, t) = (t, old_t - quo * t);
    }
    (old_r, old_s, old_t)
}

/// A prime factorization `n = ∏ pᵢ^eᵢ`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: i128,
    factors: Vec<(i128, u32)>,
}

impl Factorization {
    /// The factored integer.
    pub fn n(&self) -> i128 {
        self.n
    }

    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(i128, u32)] {
        &self.factors
    }

    /// True when every exponent is 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Recomputes `∏ pᵢ^eᵢ`.
    pub fn product(&self) -> i128 {
        self.factors.iter().fold(1, |acc, &(p, e)| acc * p.pow(e))
    }
}

/// Factors `n ≥ 1` by trial division up to `√n`.
pub fn factorize(n: i128) -> Result<Factorization> {
    ensure_min("n", n, 1)?;
    let mut factors = Vec::new();
    let mut m = n;
    let mut push = |p: i128, m: &mut i128| {
        let mut e = 0u32;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    let mut d = 3i128;
    while d * d <= m {
        push(d, &mut m);
        d += 2;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Euler's totient φ(n), through the factorization of `n ≥ 1`.
pub fn totient(n: i128) -> Result<i128> {
    let f = factorize(n)?;
    Ok(f.factors()
        .iter()
        .fold(1, |acc, &(p, e)| acc * p.pow(e - 1) * (p - 1)))
}

/// `base^exp mod modulus` by repeated squaring; the result lies in
/// `[0, modulus)` and negative bases are reduced into that range first.
pub fn mod_pow(base: i128, exp: i128, modulus: i128) -> Result<i128> {
    ensure_min("modulus", modulus, 2)?;
    if exp < 0 {
        return Err(Error::OutOfRange {
            what: format!("exponent {exp} is negative"),
        });
    }
    let mut base = base.rem_euclid(modulus);
    let mut exp = exp;
    let mut acc = 1i128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    Ok(acc)
}

/// The smallest positive `w` making `n·w` a perfect square, together with
/// `root = √(n·w)`; `w` is the squarefree part of `n` (the product of the
/// primes appearing to an odd power).
pub fn squarefree_part(n: i128) -> Result<(i128, i128)> {
    let f = factorize(n)?;
    let mut w = 1i128;
    let mut root = 1i128;
    for &(p, e) in f.factors() {
        if e % 2 == 1 {
            w *= p;
        }
        root *= p.pow(e.div_ceil(2));
    }
    assert_eq!(root * root, n * w, "squarefree decomposition of {n} broke");
    Ok((w, root))
}

/// Deterministic primality by trial division; same desk scale as
/// [`factorize`].
pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3i128;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

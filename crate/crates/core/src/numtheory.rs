//! Integer primitives over Q: primality, factorization, Legendre symbols and
//! Hilbert symbols at every place, plus a brute-force Hilbert symbol oracle.

use std::fmt;

use crate::error::{Error, Result};

/// A place of Q. Orders as `Infinity` first, then primes ascending.
///
/// Build finite places through [`Place::finite`], which checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Place> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p as i64))
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Place::Infinity => None,
            Place::Finite(p) => Some(*p),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// Prime factorization of a nonzero integer. The sign is kept separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `(prime, exponent)` pairs, primes strictly ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> i128 {
        let abs: i128 = self
            .factors
            .iter()
            .map(|&(p, e)| (p as i128).pow(e))
            .product();
        abs * self.sign as i128
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub fn factorize(n: i64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut m = n.unsigned_abs();
    let mut factors = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    let mut d = 3u64;
    while d.saturating_mul(d) <= m {
        push(d, &mut m);
        d += 2;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { sign, factors })
}

/// Square-free part of `n`, keeping the sign. `n` and the result differ by a
/// square factor.
pub fn square_free_part(n: i64) -> Result<i64> {
    let f = factorize(n)?;
    let abs: i64 = f
        .factors
        .iter()
        .filter(|&&(_, e)| e % 2 == 1)
        .map(|&(p, _)| p as i64)
        .product();
    Ok(abs * f.sign as i64)
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidModulus(p as i64));
    }
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return Ok(0);
    }
    // Euler's criterion
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Splits `n = p^v * u` with `p` not dividing `u`.
fn split_valuation(n: i64, p: u64) -> (u32, i64) {
    let p = p as i64;
    let mut u = n;
    let mut v = 0;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    (v, u)
}

/// Hilbert symbol `(a, b)_v`: +1 iff `z^2 = a x^2 + b y^2` has a nontrivial
/// solution over the completion of Q at `v`.
pub fn hilbert_symbol(a: i64, b: i64, v: Place) -> Result<i8> {
    if a == 0 {
        return Err(Error::ZeroArgument("a"));
    }
    if b == 0 {
        return Err(Error::ZeroArgument("b"));
    }
    let p = match v {
        Place::Infinity => return Ok(if a < 0 && b < 0 { -1 } else { 1 }),
        Place::Finite(p) => p,
    };
    let (alpha, u) = split_valuation(a, p);
    let (beta, w) = split_valuation(b, p);
    let mut exponent: u64;
    if p == 2 {
        let eps = |x: i64| -> u64 { (x.rem_euclid(4) == 3) as u64 };
        let omega = |x: i64| -> u64 { matches!(x.rem_euclid(8), 3 | 5) as u64 };
        exponent = eps(u) * eps(w) + alpha as u64 * omega(w) + beta as u64 * omega(u);
    } else {
        exponent = (alpha as u64 * beta as u64) * ((p - 1) / 2);
        if beta % 2 == 1 && legendre_symbol(u, p)? == -1 {
            exponent += 1;
        }
        if alpha % 2 == 1 && legendre_symbol(w, p)? == -1 {
            exponent += 1;
        }
    }
    Ok(if exponent % 2 == 0 { 1 } else { -1 })
}

/// Brute-force Hilbert symbol. Searches for a primitive solution of
/// `a x^2 + b y^2 = z^2` modulo `p^3` (odd `p`) or `2^6`.
///
/// `a` and `b` must be square-free.
pub fn hilbert_symbol_oracle(a: i64, b: i64, v: Place) -> Result<i8> {
    for (name, n) in [("a", a), ("b", b)] {
        if n == 0 {
            return Err(Error::ZeroArgument(name));
        }
        if !factorize(n)?.is_square_free() {
            return Err(Error::NotSquareFree(n));
        }
    }
    let p = match v {
        Place::Infinity => return Ok(if a < 0 && b < 0 { -1 } else { 1 }),
        Place::Finite(p) => p,
    };
    let depth = if p == 2 { 6 } else { 3 };
    let m = p.pow(depth);
    let am = (a as i128).rem_euclid(m as i128) as u64;
    let bm = (b as i128).rem_euclid(m as i128) as u64;

    // For each residue r, whether r = z^2 for some z, and whether for some z
    // prime to p.
    let mut square_any = vec![false; m as usize];
    let mut square_unit = vec![false; m as usize];
    for z in 0..m {
        let r = (z * z % m) as usize;
        square_any[r] = true;
        if z % p != 0 {
            square_unit[r] = true;
        }
    }
    for x in 0..m {
        let ax = am * (x * x % m) % m;
        for y in 0..m {
            let r = ((ax + bm * (y * y % m)) % m) as usize;
            let hit = if x % p != 0 || y % p != 0 {
                square_any[r]
            } else {
                square_unit[r]
            };
            if hit {
                return Ok(1);
            }
        }
    }
    Ok(-1)
}

/// Places at which `(a, b)_v` can be -1: infinity and the primes dividing `2ab`.
pub fn relevant_places(a: i64, b: i64) -> Result<Vec<Place>> {
    let mut primes = vec![2u64];
    primes.extend(factorize(a)?.primes());
    primes.extend(factorize(b)?.primes());
    primes.sort_unstable();
    primes.dedup();
    let mut places = vec![Place::Infinity];
    places.extend(primes.into_iter().map(Place::Finite));
    Ok(places)
}

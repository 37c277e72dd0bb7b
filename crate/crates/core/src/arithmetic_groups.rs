//! Indices of principal congruence subgroups of `SL_2` over a maximal order
//! of a quaternion division algebra, and the resulting cusp counts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, is_prime, Factorization};
use crate::quaternion::{class_number, QuaternionAlgebra};

/// Dimension of the group `G = SL_2(D)` (a form of `SL_4`); the index grows
/// by `p^DIM_G` per step in a `p`-power congruence tower.
pub const DIM_G: u32 = 15;

/// Exponent of `N(p^e)` divided out of the index in the cusp formula.
const NORM_EXPONENT: u32 = 4;

/// A level ideal `prod p^e` of Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceLevel {
    factors: Vec<(u64, u32)>,
}

impl CongruenceLevel {
    pub fn one() -> Self {
        CongruenceLevel { factors: Vec::new() }
    }

    pub fn prime_power(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p as i64));
        }
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(CongruenceLevel {
            factors: vec![(p, e)],
        })
    }

    /// Level generated by the positive integer `n`.
    pub fn from_integer(n: u64) -> Result<Self> {
        let n = i64::try_from(n).map_err(|_| Error::Parse(format!("level {n} too large")))?;
        if n <= 0 {
            return Err(Error::ZeroArgument("level"));
        }
        Ok(Self::from_factorization(&factorize(n)?))
    }

    pub fn from_factorization(f: &Factorization) -> Self {
        CongruenceLevel {
            factors: f.factors().to_vec(),
        }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// `N(a) = prod p^e`.
    pub fn norm(&self) -> BigUint {
        self.factors
            .iter()
            .map(|&(p, e)| BigUint::from(p).pow(e))
            .product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactor {
    pub p: u64,
    pub e: u32,
    pub index: BigUint,
}

/// `[Gamma : Gamma(a)]` together with its per-prime factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexResult {
    pub value: BigUint,
    pub local_factors: Vec<LocalFactor>,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as i64))
    }
}

/// `|G(F_p)|`: `|SL_4(F_p)| = p^6 (p^2-1)(p^3-1)(p^4-1)` where the algebra
/// splits at `p`, and `p^10 (p+1)(p^4-1)` where it ramifies.
pub fn local_group_order(algebra: &QuaternionAlgebra, p: u64) -> Result<BigUint> {
    check_prime(p)?;
    let q = BigUint::from(p);
    let one = BigUint::one();
    let order = if algebra.discriminant() % p == 0 {
        q.pow(10) * (&q + &one) * (q.pow(4) - &one)
    } else {
        q.pow(6) * (q.pow(2) - &one) * (q.pow(3) - &one) * (q.pow(4) - &one)
    };
    Ok(order)
}

/// `[Gamma : Gamma(p^e)] = p^(15 (e-1)) |G(F_p)|`.
pub fn local_index(algebra: &QuaternionAlgebra, p: u64, e: u32) -> Result<BigUint> {
    if e == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(BigUint::from(p).pow(DIM_G * (e - 1)) * local_group_order(algebra, p)?)
}

pub fn global_index(algebra: &QuaternionAlgebra, level: &CongruenceLevel) -> Result<IndexResult> {
    let mut value = BigUint::one();
    let mut local_factors = Vec::with_capacity(level.factors.len());
    for &(p, e) in &level.factors {
        let index = local_index(algebra, p, e)?;
        value *= &index;
        local_factors.push(LocalFactor { p, e, index });
    }
    Ok(IndexResult {
        value,
        local_factors,
    })
}

fn require_division(algebra: &QuaternionAlgebra) -> Result<()> {
    if algebra.is_division() {
        Ok(())
    } else {
        Err(Error::SplitAlgebra {
            a: algebra.a(),
            b: algebra.b(),
        })
    }
}

/// Resolves the class number: `h` if given, otherwise the Eichler value for a
/// definite algebra of prime discriminant.
pub fn resolve_class_number(algebra: &QuaternionAlgebra, h: Option<u64>) -> Result<u64> {
    match h {
        Some(0) => Err(Error::NonPositiveInput),
        Some(h) => Ok(h),
        None => {
            let disc = algebra.discriminant();
            if algebra.is_definite() && is_prime(disc) {
                class_number(disc)
            } else {
                Err(Error::ClassNumberRequired(disc))
            }
        }
    }
}

/// Number of cusps of `Gamma = SL_2(Lambda_D)`: `h^2` for definite `D`, `h`
/// for indefinite `D`.
pub fn cusp_count_level_one(algebra: &QuaternionAlgebra, h: Option<u64>) -> Result<BigUint> {
    require_division(algebra)?;
    let h = BigUint::from(resolve_class_number(algebra, h)?);
    Ok(if algebra.is_definite() { &h * &h } else { h })
}

fn exact_quotient(numerator: BigUint, denominator: BigUint) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegralCuspCount {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        })
    }
}

/// `h^2 N^-4 [Gamma : Gamma(a)]`, or `h mu^-1 N^-4 [Gamma : Gamma(a)]` in the
/// indefinite case. At level one this reduces to the level-one count.
fn cusps_from_index(
    definite: bool,
    h: u64,
    mu: Option<u64>,
    norm: BigUint,
    index: BigUint,
) -> Result<BigUint> {
    let h = BigUint::from(h);
    let (numerator, denominator) = if definite {
        (&h * &h * index, norm.pow(NORM_EXPONENT))
    } else {
        let mu = mu.ok_or(Error::MissingMu)?;
        (h * index, BigUint::from(mu) * norm.pow(NORM_EXPONENT))
    };
    exact_quotient(numerator, denominator)
}

/// Cusps of the principal congruence subgroup `Gamma(p^e)`, for a prime `p`
/// at which the algebra splits.
///
/// `mu` is `|Lambda_D^x / Lambda_D^x(p^e)|` and is required exactly when the
/// algebra is indefinite.
pub fn cusp_count(
    algebra: &QuaternionAlgebra,
    h: Option<u64>,
    p: u64,
    e: u32,
    mu: Option<u64>,
) -> Result<BigUint> {
    require_division(algebra)?;
    let level = CongruenceLevel::prime_power(p, e)?;
    if algebra.discriminant() % p == 0 {
        return Err(Error::RamifiedLevel { p });
    }
    let definite = algebra.is_definite();
    match (definite, mu) {
        (true, Some(_)) => return Err(Error::MuNotApplicable),
        (false, None) => return Err(Error::MissingMu),
        (_, Some(0)) => return Err(Error::NonPositiveInput),
        _ => {}
    }
    let h = resolve_class_number(algebra, h)?;
    let index = global_index(algebra, &level)?.value;
    cusps_from_index(definite, h, mu, level.norm(), index)
}

/// Counts `4 x 4` matrices over `F_q` with determinant 1 by enumerating all
/// `q^16` of them. Only `q` in `{2, 3}` is accepted.
///
/// The determinant is evaluated exactly by Laplace expansion along the first
/// two rows: `det = sum over column pairs S of sign(S) * minor_top(S) *
/// minor_bottom(complement S)`. The `q^8` two-row blocks are tabulated once
/// and the outer loop runs in parallel.
pub fn sl4_order_oracle(q: u64) -> Result<u64> {
    if q != 2 && q != 3 {
        return Err(Error::OracleRange(q));
    }
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    // Complement of PAIRS[k] is PAIRS[5 - k]; signs of the complementary
    // products in the generalized Laplace expansion.
    const SIGNS: [i64; 6] = [1, -1, 1, 1, -1, 1];

    let q = q as i64;
    let blocks = q.pow(8) as usize;
    let minors: Vec<[i64; 6]> = (0..blocks)
        .map(|n| {
            let mut rows = [[0i64; 4]; 2];
            let mut rest = n as i64;
            for entry in rows.iter_mut().flatten() {
                *entry = rest % q;
                rest /= q;
            }
            PAIRS.map(|(c0, c1)| (rows[0][c0] * rows[1][c1] - rows[0][c1] * rows[1][c0]).rem_euclid(q))
        })
        .collect();

    let count = minors
        .par_iter()
        .map(|top| {
            minors
                .iter()
                .filter(|bottom| {
                    let det: i64 = (0..6).map(|k| SIGNS[k] * top[k] * bottom[5 - k]).sum();
                    det.rem_euclid(q) == 1
                })
                .count() as u64
        })
        .sum();
    Ok(count)
}

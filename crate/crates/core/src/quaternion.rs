//! Quaternion algebras `Q(a, b | Q)` with basis `1, i, j, ij`, where
//! `i^2 = a`, `j^2 = b` and `ij = -ji`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{hilbert_symbol, is_prime, legendre_symbol, relevant_places, square_free_part, Place};

/// Sorted set of ramified places.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RamificationSet {
    places: BTreeSet<Place>,
}

impl RamificationSet {
    pub fn from_places(places: impl IntoIterator<Item = Place>) -> Self {
        RamificationSet {
            places: places.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn contains(&self, v: Place) -> bool {
        self.places.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Place> + '_ {
        self.places.iter().copied()
    }

    pub fn finite_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.places.iter().filter_map(Place::prime)
    }
}

impl fmt::Display for RamificationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, v) in self.places.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug)]
struct AlgebraInner {
    a: i64,
    b: i64,
    ramification: OnceLock<RamificationSet>,
}

/// The algebra `Q(a, b | Q)`. Cheap to clone; clones share the ramification
/// cache.
#[derive(Clone)]
pub struct QuaternionAlgebra {
    inner: Arc<AlgebraInner>,
}

impl QuaternionAlgebra {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 {
            return Err(Error::ZeroArgument("a"));
        }
        if b == 0 {
            return Err(Error::ZeroArgument("b"));
        }
        Ok(QuaternionAlgebra {
            inner: Arc::new(AlgebraInner {
                a,
                b,
                ramification: OnceLock::new(),
            }),
        })
    }

    /// Builds `Q(a, b)` from rational parameters by clearing denominators with
    /// squares: `n/d` becomes `n*d`, which lies in the same square class.
    pub fn from_rational_parameters(a: &BigRational, b: &BigRational) -> Result<Self> {
        let clear = |x: &BigRational, name: &'static str| -> Result<i64> {
            if x.is_zero() {
                return Err(Error::ZeroArgument(name));
            }
            let v = x.numer() * x.denom();
            i64::try_from(v).map_err(|_| Error::Parse(format!("parameter {x} out of range")))
        };
        Self::new(clear(a, "a")?, clear(b, "b")?)
    }

    pub fn a(&self) -> i64 {
        self.inner.a
    }

    pub fn b(&self) -> i64 {
        self.inner.b
    }

    /// Places where `(a, b)_v = -1`. Computed once and cached.
    pub fn ramification_set(&self) -> &RamificationSet {
        self.inner.ramification.get_or_init(|| {
            let (a, b) = (self.a(), self.b());
            // a, b are nonzero by construction, so none of these calls fail.
            let sa = square_free_part(a).expect("nonzero parameter");
            let sb = square_free_part(b).expect("nonzero parameter");
            let places = relevant_places(sa, sb).expect("nonzero parameter");
            RamificationSet::from_places(
                places
                    .into_iter()
                    .filter(|&v| hilbert_symbol(sa, sb, v).expect("nonzero parameter") == -1),
            )
        })
    }

    pub fn is_definite(&self) -> bool {
        self.ramification_set().contains(Place::Infinity)
    }

    pub fn is_division(&self) -> bool {
        !self.ramification_set().is_empty()
    }

    /// Product of the finite ramified primes.
    pub fn discriminant(&self) -> u64 {
        self.ramification_set().finite_primes().product()
    }

    pub fn element(&self, coords: [BigRational; 4]) -> QuaternionElement {
        QuaternionElement {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn element_from_integers(&self, coords: [i64; 4]) -> QuaternionElement {
        self.element(coords.map(|c| BigRational::from_integer(c.into())))
    }

    /// Element from `(numerator, denominator)` pairs.
    ///
    /// # Panics
    /// If a denominator is zero.
    pub fn element_from_fractions(&self, coords: [(i64, i64); 4]) -> QuaternionElement {
        self.element(coords.map(|(n, d)| BigRational::new(n.into(), d.into())))
    }

    pub fn one(&self) -> QuaternionElement {
        self.element_from_integers([1, 0, 0, 0])
    }

    pub fn zero(&self) -> QuaternionElement {
        self.element_from_integers([0, 0, 0, 0])
    }

    /// The standard basis element `1, i, j, ij` for `index` 0..4.
    pub fn basis_element(&self, index: usize) -> QuaternionElement {
        let mut c = [0i64; 4];
        c[index] = 1;
        self.element_from_integers(c)
    }
}

impl PartialEq for QuaternionAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.a() == other.a() && self.b() == other.b()
    }
}

impl Eq for QuaternionAlgebra {}

impl fmt::Debug for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}, {})", self.a(), self.b())
    }
}

impl fmt::Display for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}, {} | Q)", self.a(), self.b())
    }
}

/// Product of coordinate vectors in `Q(a, b)`.
pub(crate) fn mul_coords(a: &BigInt, b: &BigInt, x: &[BigRational; 4], y: &[BigRational; 4]) -> [BigRational; 4] {
    let a = BigRational::from_integer(a.clone());
    let b = BigRational::from_integer(b.clone());
    let ab = &a * &b;
    [
        &x[0] * &y[0] + &a * &x[1] * &y[1] + &b * &x[2] * &y[2] - &ab * &x[3] * &y[3],
        &x[0] * &y[1] + &x[1] * &y[0] - &b * &x[2] * &y[3] + &b * &x[3] * &y[2],
        &x[0] * &y[2] + &x[2] * &y[0] + &a * &x[1] * &y[3] - &a * &x[3] * &y[1],
        &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] - &x[2] * &y[1],
    ]
}

pub(crate) fn norm_coords(a: &BigInt, b: &BigInt, x: &[BigRational; 4]) -> BigRational {
    let a = BigRational::from_integer(a.clone());
    let b = BigRational::from_integer(b.clone());
    &x[0] * &x[0] - &a * &x[1] * &x[1] - &b * &x[2] * &x[2] + &a * &b * &x[3] * &x[3]
}

/// An element `x0 + x1 i + x2 j + x3 ij` with rational coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct QuaternionElement {
    algebra: QuaternionAlgebra,
    coords: [BigRational; 4],
}

impl QuaternionElement {
    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.coords
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn params(&self) -> (BigInt, BigInt) {
        (self.algebra.a().into(), self.algebra.b().into())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (a, b) = self.params();
        Ok(self.algebra.element(mul_coords(&a, &b, &self.coords, &other.coords)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let c = std::array::from_fn(|n| &self.coords[n] + &other.coords[n]);
        Ok(self.algebra.element(c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let c = std::array::from_fn(|n| &self.coords[n] - &other.coords[n]);
        Ok(self.algebra.element(c))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        self.algebra.element(self.coords.clone().map(|c| c * s))
    }

    pub fn neg(&self) -> Self {
        self.algebra.element(self.coords.clone().map(|c| -c))
    }

    pub fn conjugate(&self) -> Self {
        let [x0, x1, x2, x3] = self.coords.clone();
        self.algebra.element([x0, -x1, -x2, -x3])
    }

    pub fn reduced_trace(&self) -> BigRational {
        &self.coords[0] + &self.coords[0]
    }

    pub fn reduced_norm(&self) -> BigRational {
        let (a, b) = self.params();
        norm_coords(&a, &b, &self.coords)
    }

    /// `(t, n)` such that `X^2 - tX + n` is the reduced characteristic
    /// polynomial.
    pub fn reduced_char_poly(&self) -> (BigRational, BigRational) {
        (self.reduced_trace(), self.reduced_norm())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Whether all coordinates are integers.
    pub fn is_integral_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Debug for QuaternionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuaternionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "ij"];
        let mut wrote = false;
        for (c, name) in self.coords.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let abs = c.abs();
            match (abs.is_one(), name.is_empty()) {
                (true, false) => f.write_str(name)?,
                (_, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "({abs}){name}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Upper bound for the auxiliary prime search in [`algebra_for_prime`].
const AUXILIARY_PRIME_BOUND: u64 = 1_000_000;

/// The definite algebra ramified exactly at `{inf, p}`:
/// `Q(-1, -1)` for `p = 2`, `Q(-1, -p)` for `p = 3 mod 4`, and `Q(-q, -p)`
/// for `p = 1 mod 4`, with `q` the smallest prime `q = 3 mod 4` that is a
/// non-residue mod `p`.
pub fn algebra_for_prime(p: u64) -> Result<QuaternionAlgebra> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as i64));
    }
    let pi = p as i64;
    let algebra = if p == 2 {
        QuaternionAlgebra::new(-1, -1)?
    } else if p % 4 == 3 {
        QuaternionAlgebra::new(-1, -pi)?
    } else {
        let q = (3..AUXILIARY_PRIME_BOUND)
            .step_by(4)
            .find(|&q| is_prime(q) && legendre_symbol(q as i64, p) == Ok(-1))
            .ok_or(Error::SearchBound(p))?;
        QuaternionAlgebra::new(-(q as i64), -pi)?
    };
    debug_assert_eq!(
        algebra.ramification_set(),
        &RamificationSet::from_places([Place::Infinity, Place::Finite(p)])
    );
    Ok(algebra)
}

/// Class number of the definite quaternion algebra of prime discriminant `p`
/// (Eichler's formula).
pub fn class_number(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as i64));
    }
    let h = match p {
        2 | 3 => 1,
        _ => match p % 12 {
            1 => (p - 1) / 12,
            5 => (p + 7) / 12,
            7 => (p + 5) / 12,
            11 => (p + 13) / 12,
            _ => unreachable!("primes above 3 are 1, 5, 7 or 11 mod 12"),
        },
    };
    Ok(h)
}

/// Smallest common multiple of the coordinate denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

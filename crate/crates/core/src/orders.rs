//! Orders in quaternion algebras over Q: validation, reduced discriminants,
//! maximality and maximalization.
//!
//! An order is stored as four basis elements together with the inverse of
//! their coordinate matrix, so membership tests are a single vector-matrix
//! product.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, OrderAxiom, Result};
use crate::linalg::{determinant, inverse, lattice_basis, vec_mul, Mat4, Vec4};
use crate::numtheory::factorize;
use crate::quaternion::{mul_coords, norm_coords, QuaternionAlgebra, QuaternionElement};

#[derive(Clone, Debug)]
pub struct QuaternionOrder {
    algebra: QuaternionAlgebra,
    basis: [QuaternionElement; 4],
    inverse: Mat4,
    reduced_discriminant: BigInt,
}

fn order_err(axiom: OrderAxiom, detail: impl Into<String>) -> Error {
    Error::Order {
        axiom,
        detail: detail.into(),
    }
}

fn params(alg: &QuaternionAlgebra) -> (BigInt, BigInt) {
    (alg.a().into(), alg.b().into())
}

/// Reduced discriminant of the lattice with basis rows `basis`: the positive
/// square root of `|det(trd(e_i e_j))|`.
pub fn gram_discriminant(alg: &QuaternionAlgebra, basis: &Mat4) -> Result<BigInt> {
    let (a, b) = params(alg);
    let gram: Mat4 = std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let prod = mul_coords(&a, &b, &basis[r], &basis[c]);
            &prod[0] + &prod[0]
        })
    });
    let det = determinant(&gram).abs();
    if !det.is_integer() {
        return Err(Error::NonSquareGramDeterminant(det.to_string()));
    }
    let det = det.to_integer();
    let root = det.sqrt();
    if &root * &root != det {
        return Err(Error::NonSquareGramDeterminant(det.to_string()));
    }
    Ok(root)
}

impl QuaternionOrder {
    /// Validates `basis` as a Z-order: independent, containing 1, with
    /// integral reduced traces and norms, and closed under multiplication.
    pub fn new(algebra: &QuaternionAlgebra, basis: [QuaternionElement; 4]) -> Result<Self> {
        if basis.iter().any(|e| e.algebra() != algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let rows: Mat4 = std::array::from_fn(|r| basis[r].coords().clone());
        let inverse = inverse(&rows)
            .ok_or_else(|| order_err(OrderAxiom::Independence, "basis is linearly dependent"))?;

        let coords_in = |x: &Vec4| vec_mul(x, &inverse);
        let in_lattice = |x: &Vec4| coords_in(x).iter().all(|c| c.is_integer());

        if !in_lattice(algebra.one().coords()) {
            return Err(order_err(OrderAxiom::Unit, "1 is not in the lattice"));
        }

        for e in &basis {
            let (t, n) = e.reduced_char_poly();
            if !t.is_integer() || !n.is_integer() {
                return Err(order_err(
                    OrderAxiom::Integrality,
                    format!("{e} has reduced trace {t} and reduced norm {n}"),
                ));
            }
        }
        let mut products = Vec::with_capacity(16);
        for x in &basis {
            for y in &basis {
                let p = x.multiply(y)?;
                let t = p.reduced_trace();
                if !t.is_integer() {
                    return Err(order_err(
                        OrderAxiom::Integrality,
                        format!("({x})({y}) has reduced trace {t}"),
                    ));
                }
                products.push((x, y, p));
            }
        }
        for (x, y, p) in &products {
            if !in_lattice(p.coords()) {
                return Err(order_err(
                    OrderAxiom::Closure,
                    format!("({x})({y}) = {p} is not in the lattice"),
                ));
            }
        }

        let reduced_discriminant = gram_discriminant(algebra, &rows)?;
        Ok(QuaternionOrder {
            algebra: algebra.clone(),
            basis,
            inverse,
            reduced_discriminant,
        })
    }

    fn from_rows(algebra: &QuaternionAlgebra, rows: &Mat4) -> Result<Self> {
        let basis = std::array::from_fn(|r| algebra.element(rows[r].clone()));
        Self::new(algebra, basis)
    }

    /// `Z<1, i, j, ij>`, an order in any `Q(a, b)` with integral `a`, `b`.
    pub fn standard(algebra: &QuaternionAlgebra) -> Self {
        let basis = std::array::from_fn(|n| algebra.basis_element(n));
        Self::new(algebra, basis).expect("Z<1, i, j, ij> has integral structure constants")
    }

    /// The Lipschitz order `Z<1, i, j, ij>` in `Q(-1, -1)`.
    pub fn lipschitz() -> Self {
        Self::standard(&QuaternionAlgebra::new(-1, -1).expect("nonzero"))
    }

    /// The Hurwitz order `Z<1, i, j, (1 + i + j + ij)/2>` in `Q(-1, -1)`,
    /// maximal of reduced discriminant 2.
    pub fn hurwitz() -> Self {
        let alg = QuaternionAlgebra::new(-1, -1).expect("nonzero");
        let basis = [
            alg.one(),
            alg.basis_element(1),
            alg.basis_element(2),
            alg.element_from_fractions([(1, 2), (1, 2), (1, 2), (1, 2)]),
        ];
        Self::new(&alg, basis).expect("Hurwitz order is valid")
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[QuaternionElement; 4] {
        &self.basis
    }

    pub fn reduced_discriminant(&self) -> &BigInt {
        &self.reduced_discriminant
    }

    pub fn is_maximal(&self) -> bool {
        self.reduced_discriminant == BigInt::from(self.algebra.discriminant())
    }

    /// Coordinates of `x` in this order's basis.
    pub fn coordinates(&self, x: &QuaternionElement) -> Result<Vec4> {
        if x.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(vec_mul(x.coords(), &self.inverse))
    }

    pub fn contains(&self, x: &QuaternionElement) -> Result<bool> {
        Ok(self.coordinates(x)?.iter().all(|c| c.is_integer()))
    }

    /// Element with the given integer coordinates in this order's basis.
    pub fn lattice_element(&self, coeffs: [i64; 4]) -> QuaternionElement {
        let coords = std::array::from_fn(|c| {
            (0..4).fold(BigRational::zero(), |acc, r| {
                acc + BigRational::from_integer(coeffs[r].into()) * &self.basis[r].coords()[c]
            })
        });
        self.algebra.element(coords)
    }

    fn rows(&self) -> Mat4 {
        std::array::from_fn(|r| self.basis[r].coords().clone())
    }

    /// A maximal order containing this one.
    ///
    /// While the reduced discriminant `d` exceeds the algebra discriminant,
    /// take the smallest prime `p` dividing the excess and search the `p^4`
    /// cosets of `(1/p)O / O` for an integral element whose ring closure with
    /// `O` is a strictly larger order.
    pub fn maximalize(&self) -> Result<QuaternionOrder> {
        let disc = BigInt::from(self.algebra.discriminant());
        let mut current = self.clone();
        while current.reduced_discriminant > disc {
            let excess = &current.reduced_discriminant / &disc;
            let excess = excess
                .to_i64()
                .ok_or_else(|| Error::Parse(format!("discriminant excess {excess} too large")))?;
            let p = factorize(excess)?
                .primes()
                .next()
                .expect("excess above 1 has a prime factor");
            current = current.enlarge_at(p, &disc)?;
        }
        Ok(current)
    }

    fn enlarge_at(&self, p: u64, disc: &BigInt) -> Result<QuaternionOrder> {
        let (a, b) = params(&self.algebra);
        let inv_p = BigRational::new(BigInt::one(), BigInt::from(p));
        let rows = self.rows();
        for n in 1..p.pow(4) {
            let digits = [n % p, (n / p) % p, (n / p / p) % p, n / p / p / p];
            let x: Vec4 = std::array::from_fn(|c| {
                (0..4).fold(BigRational::zero(), |acc, r| {
                    acc + BigRational::from_integer(digits[r].into()) * &rows[r][c]
                }) * &inv_p
            });
            let trace = &x[0] + &x[0];
            if !trace.is_integer() || !norm_coords(&a, &b, &x).is_integer() {
                continue;
            }
            if let Some(bigger) = self.ring_closure(&x, disc)? {
                return Ok(bigger);
            }
        }
        Err(Error::MaximalizeStalled(p))
    }

    /// Smallest ring containing this order and `x`, if it is an order.
    fn ring_closure(&self, x: &Vec4, disc: &BigInt) -> Result<Option<QuaternionOrder>> {
        let (a, b) = params(&self.algebra);
        // Any order containing self has discriminant divisible by disc, which
        // bounds the index and hence the loop.
        let max_index = &self.reduced_discriminant / disc;
        let mut gens: Vec<Vec4> = self.rows().to_vec();
        gens.push(x.clone());
        let mut lattice = lattice_basis(&gens).expect("contains a full-rank lattice");
        loop {
            let index = match gram_discriminant(&self.algebra, &lattice) {
                Ok(d) if !d.is_zero() => &self.reduced_discriminant / d,
                _ => return Ok(None),
            };
            if index > max_index {
                return Ok(None);
            }
            let mut gens: Vec<Vec4> = lattice.to_vec();
            for r in &lattice {
                for c in &lattice {
                    gens.push(mul_coords(&a, &b, r, c));
                }
            }
            let next = lattice_basis(&gens).expect("contains a full-rank lattice");
            if next == lattice {
                return match Self::from_rows(&self.algebra, &lattice) {
                    Ok(order) => Ok(Some(order)),
                    Err(Error::Order { .. }) => Ok(None),
                    Err(e) => Err(e),
                };
            }
            lattice = next;
        }
    }

    /// Basis as a JSON array of four rows of `"n/d"` strings (coordinates in
    /// `1, i, j, ij`).
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|e| {
                e.coords()
                    .iter()
                    .map(|c| format!("{}/{}", c.numer(), c.denom()))
                    .collect()
            })
            .collect();
        serde_json::to_string(&rows).expect("strings serialize")
    }

    /// Parses the format written by [`QuaternionOrder::to_json`] and validates
    /// the result. Plain integers (`"3"`) are accepted as well.
    pub fn from_json(algebra: &QuaternionAlgebra, json: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(Error::Parse("expected a 4x4 array of rationals".into()));
        }
        let mut elements = Vec::with_capacity(4);
        for row in &rows {
            let mut coords = Vec::with_capacity(4);
            for s in row {
                coords.push(parse_rational(s)?);
            }
            let coords: Vec4 = coords.try_into().expect("length checked");
            elements.push(algebra.element(coords));
        }
        let basis: [QuaternionElement; 4] = elements.try_into().expect("length checked");
        Self::new(algebra, basis)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

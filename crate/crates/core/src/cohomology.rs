//! Dimension bookkeeping for the boundary of the Borel-Serre
//! compactification and for the cohomology at infinity.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quaternion::QuaternionAlgebra;

/// Real dimension of a boundary torus (the fibre `N / (N ∩ Gamma)`).
pub const TORUS_DIM: u32 = 4;

/// `dim H^q(T^4) = C(4, q)`.
pub fn torus_betti(q: i64) -> Result<u64> {
    if !(0..=TORUS_DIM as i64).contains(&q) {
        return Err(Error::BettiDegree(q));
    }
    let n = TORUS_DIM as u64;
    let q = q as u64;
    Ok((0..q).fold(1u64, |acc, k| acc * (n - k) / (k + 1)))
}

/// Boundary Betti numbers and the dimensions of the images `R^q` of the
/// restriction map, for a definite algebra whose congruence subgroup has
/// `cusp_count` cusps. Only the sum `dim R^1 + dim R^3` is determined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspCohomologyReport {
    pub cusp_count: BigUint,
    pub boundary_betti: [BigUint; 5],
    pub r0: BigUint,
    pub r13_sum: BigUint,
    pub r2: BigUint,
    pub r4: BigUint,
}

impl CuspCohomologyReport {
    pub fn total_image(&self) -> BigUint {
        &self.r0 + &self.r13_sum + &self.r2 + &self.r4
    }

    pub fn total_boundary(&self) -> BigUint {
        self.boundary_betti.iter().sum()
    }

    /// The image of restriction has half the dimension of the boundary
    /// cohomology.
    pub fn satisfies_half_dimension(&self) -> bool {
        self.total_image() * 2u32 == self.total_boundary()
    }
}

pub fn boundary_report(cusp_count: &BigUint) -> Result<CuspCohomologyReport> {
    if cusp_count.is_zero() {
        return Err(Error::CuspCountZero);
    }
    let c = cusp_count;
    let boundary_betti: [BigUint; 5] =
        std::array::from_fn(|q| c * torus_betti(q as i64).expect("degree in range"));
    let report = CuspCohomologyReport {
        cusp_count: c.clone(),
        r0: BigUint::one(),
        r2: &boundary_betti[2] / 2u32,
        r13_sum: boundary_betti[3].clone(),
        r4: &boundary_betti[4] - 1u32,
        boundary_betti,
    };
    debug_assert!(report.satisfies_half_dimension());
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCase {
    Definite,
    Indefinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentType {
    Torus,
    TorusBundle,
}

/// Shape of a boundary component of the compactified locally symmetric
/// space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryDescriptor {
    pub case: BoundaryCase,
    pub component_type: ComponentType,
    pub fibre_dim: u32,
    pub base_dim: u32,
    pub total_manifold_dim: u32,
}

impl BoundaryCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryCase::Definite => "definite",
            BoundaryCase::Indefinite => "indefinite",
        }
    }
}

impl ComponentType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComponentType::Torus => "torus",
            ComponentType::TorusBundle => "torus-bundle",
        }
    }
}

/// Definite: each boundary component is a 4-torus and the space is
/// hyperbolic 5-space mod Gamma. Indefinite: a 4-torus bundle over a compact
/// quotient of a product of two upper half planes, inside a 9-manifold.
pub fn boundary_descriptor(algebra: &QuaternionAlgebra) -> Result<BoundaryDescriptor> {
    if !algebra.is_division() {
        return Err(Error::SplitAlgebra {
            a: algebra.a(),
            b: algebra.b(),
        });
    }
    Ok(if algebra.is_definite() {
        BoundaryDescriptor {
            case: BoundaryCase::Definite,
            component_type: ComponentType::Torus,
            fibre_dim: TORUS_DIM,
            base_dim: 0,
            total_manifold_dim: 5,
        }
    } else {
        BoundaryDescriptor {
            case: BoundaryCase::Indefinite,
            component_type: ComponentType::TorusBundle,
            fibre_dim: TORUS_DIM,
            base_dim: 4,
            total_manifold_dim: 9,
        }
    })
}

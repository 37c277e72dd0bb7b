//! Exact arithmetic for definite and indefinite quaternion algebras over Q,
//! their maximal orders, and the principal congruence subgroups of
//! `SL_2` over those orders: indices, cusp counts and the dimensions of the
//! cohomology at infinity.

pub mod arithmetic_groups;
pub mod cohomology;
pub mod error;
mod linalg;
pub mod numtheory;
pub mod orders;
pub mod quaternion;

pub use arithmetic_groups::{
    cusp_count, cusp_count_level_one, global_index, local_group_order, local_index, sl4_order_oracle,
    CongruenceLevel, IndexResult, LocalFactor, DIM_G,
};
pub use cohomology::{boundary_descriptor, boundary_report, torus_betti, BoundaryDescriptor, CuspCohomologyReport};
pub use error::{Error, OrderAxiom, Result};
pub use numtheory::{factorize, hilbert_symbol, hilbert_symbol_oracle, legendre_symbol, Factorization, Place};
pub use orders::QuaternionOrder;
pub use quaternion::{algebra_for_prime, class_number, QuaternionAlgebra, QuaternionElement, RamificationSet};

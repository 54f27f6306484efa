//! Exact intersection theory on normal surfaces with cyclic quotient
//! singularities, and the enumerations behind the vanishing of `H^0(X, 2L)` on
//! fake projective planes with automorphism group of order 21 or 9.

pub mod classes;
pub mod error;
pub mod fiber;
pub mod hj;
pub mod intersection;
pub mod proof;
pub mod rational;
pub mod singularity;
pub mod surface;
pub mod torsion;

pub use error::{Error, Result};
pub use rational::Q;

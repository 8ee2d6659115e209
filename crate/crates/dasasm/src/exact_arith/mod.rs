//! Exact scalars over Q and Q(ζ₁₂), exact linear algebra, Laurent
//! reconstruction and seeded sampling.

mod laurent;
mod linalg;
mod sample;
mod scalar;

pub use laurent::{laurent_from_samples, laurent_value_from_samples, reconstruct_with, LaurentPoly};
pub use linalg::{determinant, matmul, pfaffian, solve, Matrix, SkewTriangle};
pub use sample::{RationalSampler, BOUND};
pub use scalar::{sigma, Cyc12, ExactScalar};

/// Inverse of a nonzero element of Q(ζ₁₂).
pub fn cyc12_inverse(x: &ExactScalar) -> crate::Result<ExactScalar> {
    x.inv()
}

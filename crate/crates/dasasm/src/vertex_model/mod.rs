//! The triangular six-vertex model: weights, boundary specializations,
//! brute-force partition functions and the local and global identities.

mod global;
mod local;
mod partition;
mod weights;

use std::fmt;
use std::str::FromStr;

pub use global::{verify_global_property, GlobalProperty};
pub use local::{
    evaluate_diagram, verify_local_equation, ConstantChoice, DVertex, Diagram, LocalEquation, VKind,
};
pub use partition::{
    config_weight, partition_function, partition_function_with_cap, partition_laurent, Sector,
    DEFAULT_Z_CAP,
};
pub use weights::{vertex_weight, BoundaryConstants, VertexClass, WeightContext, Weights};

use crate::error::{Error, Result};
use crate::exact_arith::{sigma, ExactScalar};

/// q, p and the spectral parameters u_1, …, u_{n+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPoint {
    pub q: ExactScalar,
    pub p: ExactScalar,
    pub u: Vec<ExactScalar>,
}

impl SpectralPoint {
    pub fn new(q: ExactScalar, p: ExactScalar, u: Vec<ExactScalar>) -> Self {
        SpectralPoint { q, p, u }
    }

    /// The same point with other spectral parameters.
    pub fn with_u(&self, u: Vec<ExactScalar>) -> Self {
        SpectralPoint {
            q: self.q.clone(),
            p: self.p.clone(),
            u,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecKind {
    Ast,
    Qast,
    Oosasm,
    Dasasm,
}

impl SpecKind {
    pub const ALL: [SpecKind; 4] = [SpecKind::Ast, SpecKind::Qast, SpecKind::Oosasm, SpecKind::Dasasm];

    pub fn name(self) -> &'static str {
        match self {
            SpecKind::Ast => "ast",
            SpecKind::Qast => "qast",
            SpecKind::Oosasm => "oosasm",
            SpecKind::Dasasm => "dasasm",
        }
    }
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        SpecKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

/// Divisor applied to a partition function after summation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    None,
    /// Π_{i≤n} σ(q²u_i²)σ(q²ū_i²)/σ(q²)².
    Oosasm,
    /// Π_{i≤n} σ(q)²(qu_i + q̄ū_i)(qū_i + q̄u_i)/σ(q²)².
    Dasasm,
}

impl Normalization {
    /// The divisor at q and u_1, …, u_n.
    pub fn divisor(self, q: &ExactScalar, u: &[ExactScalar]) -> Result<ExactScalar> {
        let q2 = q.square();
        let s2 = sigma(&q2)?;
        let s2sq = s2.square();
        let qbar = q.inv()?;
        let mut d = ExactScalar::one();
        for x in u {
            let xb = x.inv()?;
            d *= match self {
                Normalization::None => return Ok(ExactScalar::one()),
                Normalization::Oosasm => {
                    sigma(&(&q2 * &x.square()))? * sigma(&(&q2 * &xb.square()))?
                }
                Normalization::Dasasm => {
                    sigma(q)?.square()
                        * (q * x + &qbar * &xb)
                        * (q * &xb + &qbar * x)
                }
            };
            d = d.checked_div(&s2sq)?;
        }
        Ok(d)
    }
}

/// Published boundary constants of a specialization and the divisor that
/// goes with it. OOSASM and DASASM ignore p.
pub fn boundary_spec(
    kind: SpecKind,
    q: &ExactScalar,
    p: &ExactScalar,
) -> Result<(BoundaryConstants, Normalization)> {
    let s2 = sigma(&q.square())?;
    let s4 = sigma(&q.square().square())?;
    if s2.is_zero() || s4.is_zero() {
        return Err(Error::DegenerateQ);
    }
    let zero = ExactScalar::zero;
    let one = ExactScalar::one;
    let qb = q.inv()?;
    let pb = p.inv()?;
    Ok(match kind {
        SpecKind::Ast => (
            BoundaryConstants::from_array([
                zero(),
                -(&pb * &qb),
                p * q,
                one(),
                zero(),
                -(p * &qb),
                &pb * q,
                one(),
            ]),
            Normalization::None,
        ),
        SpecKind::Qast => (
            BoundaryConstants::from_array([
                zero(),
                p * q,
                -(&pb * &qb),
                one(),
                zero(),
                &pb * q,
                -(p * &qb),
                one(),
            ]),
            Normalization::None,
        ),
        SpecKind::Oosasm => (
            BoundaryConstants::from_array([one(), zero(), zero(), one(), one(), zero(), zero(), one()]),
            Normalization::Oosasm,
        ),
        SpecKind::Dasasm => {
            let s = sigma(q)?;
            (
                BoundaryConstants::from_array([
                    one(),
                    s.clone(),
                    s.clone(),
                    one(),
                    one(),
                    s.clone(),
                    s,
                    one(),
                ]),
                Normalization::Dasasm,
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::RationalSampler;
    use crate::objects::BoundaryState;

    #[test]
    fn ast_constants() {
        let q = ExactScalar::frac(3, 5);
        let p = ExactScalar::frac(-7, 2);
        let (k, norm) = boundary_spec(SpecKind::Ast, &q, &p).unwrap();
        let want = [
            ExactScalar::zero(),
            ExactScalar::frac(10, 21),
            ExactScalar::frac(-21, 10),
            ExactScalar::one(),
            ExactScalar::zero(),
            ExactScalar::frac(35, 6),
            ExactScalar::frac(-6, 35),
            ExactScalar::one(),
        ];
        assert_eq!(k.to_array(), want);
        assert_eq!(norm, Normalization::None);
    }

    #[test]
    fn ast_left_one_vanishes_at_p() {
        let mut s = RationalSampler::new(9);
        for _ in 0..5 {
            let (q, p, u) = (s.scalar(), s.scalar(), s.scalar());
            let Ok((k, _)) = boundary_spec(SpecKind::Ast, &q, &p) else { continue };
            let w = Weights::new(&q, &k).unwrap();
            let want = sigma(&(&p * &u.inv().unwrap())).unwrap() / sigma(&q.square()).unwrap();
            assert_eq!(w.left(BoundaryState::One, &u).unwrap(), want);
            assert!(w.left(BoundaryState::One, &p).unwrap().is_zero());
        }
    }

    #[test]
    fn oosasm_constants() {
        let (k, norm) = boundary_spec(SpecKind::Oosasm, &ExactScalar::int(2), &ExactScalar::int(5)).unwrap();
        let one = ExactScalar::one();
        let zero = ExactScalar::zero();
        assert_eq!(
            k.to_array(),
            [one.clone(), zero.clone(), zero.clone(), one.clone(), one.clone(), zero.clone(), zero, one]
        );
        assert_eq!(norm, Normalization::Oosasm);
    }

    #[test]
    fn degenerate() {
        assert_eq!(
            boundary_spec(SpecKind::Dasasm, &ExactScalar::one(), &ExactScalar::one()).unwrap_err(),
            Error::DegenerateQ
        );
    }

    #[test]
    fn kind_names() {
        for k in SpecKind::ALL {
            assert_eq!(k.name().parse::<SpecKind>().unwrap(), k);
        }
    }
}

//! The vertex weights, with σ(q²) and σ(q⁴) inverted once per q.

use crate::error::{Error, Result};
use crate::exact_arith::{sigma, ExactScalar};
use crate::objects::{BoundaryState, BulkType};

/// α, β, γ, δ on the left and on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryConstants {
    pub alpha_l: ExactScalar,
    pub beta_l: ExactScalar,
    pub gamma_l: ExactScalar,
    pub delta_l: ExactScalar,
    pub alpha_r: ExactScalar,
    pub beta_r: ExactScalar,
    pub gamma_r: ExactScalar,
    pub delta_r: ExactScalar,
}

impl BoundaryConstants {
    /// From (α_L, β_L, γ_L, δ_L, α_R, β_R, γ_R, δ_R).
    pub fn from_array(k: [ExactScalar; 8]) -> Self {
        let [alpha_l, beta_l, gamma_l, delta_l, alpha_r, beta_r, gamma_r, delta_r] = k;
        BoundaryConstants {
            alpha_l,
            beta_l,
            gamma_l,
            delta_l,
            alpha_r,
            beta_r,
            gamma_r,
            delta_r,
        }
    }

    pub fn to_array(&self) -> [ExactScalar; 8] {
        [
            self.alpha_l.clone(),
            self.beta_l.clone(),
            self.gamma_l.clone(),
            self.delta_l.clone(),
            self.alpha_r.clone(),
            self.beta_r.clone(),
            self.gamma_r.clone(),
            self.delta_r.clone(),
        ]
    }

    /// Left and right constants exchanged.
    pub fn swapped(&self) -> Self {
        BoundaryConstants {
            alpha_l: self.alpha_r.clone(),
            beta_l: self.beta_r.clone(),
            gamma_l: self.gamma_r.clone(),
            delta_l: self.delta_r.clone(),
            alpha_r: self.alpha_l.clone(),
            beta_r: self.beta_l.clone(),
            gamma_r: self.gamma_l.clone(),
            delta_r: self.delta_l.clone(),
        }
    }
}

/// Where a vertex sits, together with its local configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Bulk(BulkType),
    Left(BoundaryState),
    Right(BoundaryState),
    /// The degree-1 vertex below the central entry.
    Bottom,
    /// A degree-1 vertex on top.
    TopDeg1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightContext {
    pub class: VertexClass,
    /// Product of the spectral parameters of the paths through the vertex;
    /// for bulk vertices read with the label in the south-west corner.
    pub label: ExactScalar,
}

/// Weight evaluator for one q and one set of boundary constants.
#[derive(Clone, Debug)]
pub struct Weights {
    q: ExactScalar,
    q2: ExactScalar,
    qbar: ExactScalar,
    inv_s2: ExactScalar,
    inv_s4: ExactScalar,
    k: BoundaryConstants,
}

impl Weights {
    pub fn new(q: &ExactScalar, k: &BoundaryConstants) -> Result<Self> {
        let qbar = q.inv()?;
        let q2 = q.square();
        let s2 = sigma(&q2)?;
        let s4 = sigma(&q2.square())?;
        if s2.is_zero() || s4.is_zero() {
            return Err(Error::DegenerateQ);
        }
        Ok(Weights {
            q: q.clone(),
            q2,
            qbar,
            inv_s2: s2.inv()?,
            inv_s4: s4.inv()?,
            k: k.clone(),
        })
    }

    pub fn q(&self) -> &ExactScalar {
        &self.q
    }

    pub fn constants(&self) -> &BoundaryConstants {
        &self.k
    }

    /// σ(q²x)/σ(q⁴) for NE and SW, σ(q²x̄)/σ(q⁴) for SE and NW, 1 otherwise.
    pub fn bulk(&self, t: BulkType, x: &ExactScalar) -> Result<ExactScalar> {
        Ok(match t {
            BulkType::One | BulkType::MinusOne => ExactScalar::one(),
            BulkType::Ne | BulkType::Sw => sigma(&(&self.q2 * x))? * &self.inv_s4,
            BulkType::Se | BulkType::Nw => sigma(&(&self.q2 * &x.inv()?))? * &self.inv_s4,
        })
    }

    fn boundary(
        &self,
        s: BoundaryState,
        u: &ExactScalar,
        [a, b, g, d]: [&ExactScalar; 4],
    ) -> Result<ExactScalar> {
        let qu = &self.q * u;
        let qu_bar = &self.qbar * &u.inv()?;
        let v = match s {
            BoundaryState::One => b * &qu + g * &qu_bar,
            BoundaryState::MinusOne => g * &qu + b * &qu_bar,
            BoundaryState::ZeroIn => a * &sigma(&(&self.q2 * &u.square()))?,
            BoundaryState::ZeroOut => d * &sigma(&(&self.q2 * &u.square()))?,
        };
        Ok(v * &self.inv_s2)
    }

    pub fn left(&self, s: BoundaryState, u: &ExactScalar) -> Result<ExactScalar> {
        let k = &self.k;
        self.boundary(s, u, [&k.alpha_l, &k.beta_l, &k.gamma_l, &k.delta_l])
    }

    /// The left formula at ū with the right constants.
    pub fn right(&self, s: BoundaryState, u: &ExactScalar) -> Result<ExactScalar> {
        let k = &self.k;
        self.boundary(s, &u.inv()?, [&k.alpha_r, &k.beta_r, &k.gamma_r, &k.delta_r])
    }

    pub fn vertex(&self, ctx: &WeightContext) -> Result<ExactScalar> {
        match ctx.class {
            VertexClass::Bulk(t) => self.bulk(t, &ctx.label),
            VertexClass::Left(s) => self.left(s, &ctx.label),
            VertexClass::Right(s) => self.right(s, &ctx.label),
            VertexClass::Bottom | VertexClass::TopDeg1 => Ok(ExactScalar::one()),
        }
    }
}

pub fn vertex_weight(ctx: &WeightContext, q: &ExactScalar, k: &BoundaryConstants) -> Result<ExactScalar> {
    Weights::new(q, k)?.vertex(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::RationalSampler;
    use crate::objects::Dir;

    fn generic(seed: u64) -> (ExactScalar, BoundaryConstants, RationalSampler) {
        let mut s = RationalSampler::new(seed);
        let mut q = s.scalar();
        while Weights::new(&q, &BoundaryConstants::from_array(std::array::from_fn(|_| ExactScalar::one()))).is_err() {
            q = s.scalar();
        }
        let k = BoundaryConstants::from_array(std::array::from_fn(|_| s.scalar()));
        (q, k, s)
    }

    #[test]
    fn nw_vanishes_at_q_squared() {
        let (q, k, _) = generic(1);
        let w = Weights::new(&q, &k).unwrap();
        assert!(w.bulk(BulkType::Nw, &q.square()).unwrap().is_zero());
        assert!(w.bulk(BulkType::Se, &q.square()).unwrap().is_zero());
        assert!(w.bulk(BulkType::Ne, &q.square()).unwrap().is_one());
    }

    #[test]
    fn bulk_weights_one_at_zeta() {
        let k = BoundaryConstants::from_array(std::array::from_fn(|_| ExactScalar::one()));
        let w = Weights::new(&ExactScalar::zeta(), &k).unwrap();
        for t in BulkType::ALL {
            assert!(w.bulk(t, &ExactScalar::one()).unwrap().is_one(), "{t:?}");
        }
    }

    #[test]
    fn degenerate_q() {
        let k = BoundaryConstants::from_array(std::array::from_fn(|_| ExactScalar::one()));
        assert_eq!(Weights::new(&ExactScalar::int(-1), &k).unwrap_err(), Error::DegenerateQ);
        assert_eq!(Weights::new(&ExactScalar::imag_unit(), &k).unwrap_err(), Error::DegenerateQ);
    }

    #[test]
    fn reversal_keeps_bulk_weight() {
        let (q, k, mut s) = generic(2);
        let w = Weights::new(&q, &k).unwrap();
        let flip = |d: Dir| if d == Dir::In { Dir::Out } else { Dir::In };
        for _ in 0..5 {
            let x = s.scalar();
            for t in BulkType::ALL {
                let [u, d, l, r] = t.dirs();
                let rev = BulkType::from_dirs(flip(u), flip(d), flip(l), flip(r)).unwrap();
                assert_eq!(w.bulk(t, &x).unwrap(), w.bulk(rev, &x).unwrap());
            }
        }
    }

    #[test]
    fn mirror_is_inversion_with_swapped_constants() {
        let (q, k, mut s) = generic(3);
        let w = Weights::new(&q, &k).unwrap();
        let m = Weights::new(&q, &k.swapped()).unwrap();
        for _ in 0..5 {
            let x = s.scalar();
            let xb = x.inv().unwrap();
            for t in BulkType::ALL {
                // the vertical mirror exchanges left and right edges
                let [u, d, l, r] = t.dirs();
                let mt = BulkType::from_dirs(u, d, r, l).unwrap();
                assert_eq!(w.bulk(t, &x).unwrap(), m.bulk(mt, &xb).unwrap());
            }
            for st in [
                BoundaryState::One,
                BoundaryState::MinusOne,
                BoundaryState::ZeroIn,
                BoundaryState::ZeroOut,
            ] {
                assert_eq!(w.left(st, &x).unwrap(), m.right(st, &xb).unwrap());
            }
        }
    }

    #[test]
    fn left_zero_out_formula() {
        let (q, k, mut s) = generic(4);
        let w = Weights::new(&q, &k).unwrap();
        let u = s.scalar();
        let want = &k.delta_l * &sigma(&(q.square() * u.square())).unwrap()
            / sigma(&q.square()).unwrap();
        assert_eq!(w.left(BoundaryState::ZeroOut, &u).unwrap(), want);
    }
}

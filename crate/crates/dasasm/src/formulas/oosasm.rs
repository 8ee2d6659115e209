//! The Pfaffian factors P_m and Q_m of the OOSASM partition function.

use super::ast::pair;
use super::pole;
use crate::error::{Error, Result};
use crate::exact_arith::{pfaffian, sigma, ExactScalar, SkewTriangle};
use crate::vertex_model::SpectralPoint;

/// Π_{i<j} σ(q²u_iu_j)σ(q²ū_iū_j)/σ(u_iū_j) over the given parameters.
fn pair_ratio_product(q2: &ExactScalar, u: &[ExactScalar]) -> Result<ExactScalar> {
    let mut acc = ExactScalar::one();
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            acc *= pair(q2, &u[i], &u[j])?;
            acc = acc.checked_div(&sigma(&(&u[i] * &u[j].inv()?))?)?;
        }
    }
    Ok(acc)
}

/// P_m(u_1, …, u_{2m}), the off-diagonal even-order factor.
pub fn p_factor(q: &ExactScalar, u: &[ExactScalar]) -> Result<ExactScalar> {
    let go = || -> Result<ExactScalar> {
        if u.len() % 2 == 1 {
            return Err(Error::OddOrder(u.len()));
        }
        let m = (u.len() / 2) as i64;
        let q2 = q.square();
        let s4 = sigma(&q2.square())?;
        let t = SkewTriangle::try_from_fn(u.len(), |i, j| {
            sigma(&(&u[i] * &u[j].inv()?))?.checked_div(&pair(&q2, &u[i], &u[j])?)
        })?;
        Ok(s4.pow(-(m - 1) * 2 * m)? * pair_ratio_product(&q2, u)? * pfaffian(&t)?)
    };
    go().map_err(pole("P factor"))
}

/// Q_m(u_1, …, u_{2m−1}); the Pfaffian has order 2m with a last column of ones.
pub fn q_factor(q: &ExactScalar, u: &[ExactScalar]) -> Result<ExactScalar> {
    let go = || -> Result<ExactScalar> {
        if u.len() % 2 == 0 {
            return Err(Error::OddOrder(u.len() + 1));
        }
        let m = u.len().div_ceil(2) as i64;
        let q2 = q.square();
        let s4 = sigma(&q2.square())?;
        let t = SkewTriangle::try_from_fn(u.len() + 1, |i, j| {
            if j == u.len() {
                return Ok(ExactScalar::one());
            }
            let x = &u[i] * &u[j];
            let s = sigma(&(&u[i] * &u[j].inv()?))?;
            Ok(s.checked_div(&sigma(&(&q2 * &x))?)? + s.checked_div(&sigma(&(&q2 * &x.inv()?))?)?)
        })?;
        Ok(s4.pow(-(m - 1) * (2 * m - 1))? * pair_ratio_product(&q2, u)? * pfaffian(&t)?)
    };
    go().map_err(pole("Q factor"))
}

/// P_{⌈n/2⌉}(u_1, …, u_{2⌈n/2⌉}) · Q_{⌈(n+1)/2⌉}(u_1, …, u_{2⌈(n+1)/2⌉−1}),
/// the normalized OOSASM partition function.
pub fn oosasm_partition_formula(n: usize, point: &SpectralPoint) -> Result<ExactScalar> {
    if point.u.len() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "order {n} needs {} spectral parameters, got {}",
            n + 1,
            point.u.len()
        )));
    }
    let mp = n.div_ceil(2);
    let mq = (n + 1).div_ceil(2);
    Ok(p_factor(&point.q, &point.u[..2 * mp])? * q_factor(&point.q, &point.u[..2 * mq - 1])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::RationalSampler;

    #[test]
    fn order_zero_is_one() {
        let pt = SpectralPoint::new(ExactScalar::frac(2, 3), ExactScalar::one(), vec![ExactScalar::frac(5, 7)]);
        assert!(oosasm_partition_formula(0, &pt).unwrap().is_one());
    }

    #[test]
    fn small_factors() {
        let mut s = RationalSampler::new(2);
        let q = s.scalar();
        let u = s.scalars(3);
        // the empty and the 2×2 Pfaffians are 1
        assert!(p_factor(&q, &[]).unwrap().is_one());
        assert!(q_factor(&q, &u[..1]).unwrap().is_one());
        assert!(p_factor(&q, &u[..2]).unwrap().is_one());
        assert!(matches!(q_factor(&q, &u[..2]), Err(Error::OddOrder(3))));
    }

    fn at_ones(n: usize) -> ExactScalar {
        crate::formulas::value_at_ones(n + 1, 2 * n as i64 + 2, |u| {
            oosasm_partition_formula(n, &SpectralPoint::new(ExactScalar::zeta(), ExactScalar::one(), u.to_vec()))
        })
        .unwrap()
    }

    #[test]
    fn combinatorial_point_counts() {
        assert_eq!(at_ones(1), ExactScalar::one());
        assert_eq!(at_ones(3), ExactScalar::int(6));
    }
}

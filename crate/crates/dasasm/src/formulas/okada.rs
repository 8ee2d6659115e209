//! A Pfaffian evaluation of Okada type and the Pfaffian analogue of
//! Sylvester's identity used to derive it.

use super::pole;
use crate::error::{Error, Result};
use crate::exact_arith::{determinant, pfaffian, ExactScalar, RationalSampler, SkewTriangle};
use crate::report::{run_points, CheckReport};

/// W(x; a) = det(x_i^{j−1} + a_i·x_i^{n−j}).
pub fn w_det(xs: &[ExactScalar], as_: &[ExactScalar]) -> Result<ExactScalar> {
    let n = xs.len();
    if as_.len() != n {
        return Err(Error::ShapeMismatch(format!("{n} x values, {} a values", as_.len())));
    }
    let m: Vec<Vec<ExactScalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ok(xs[i].pow(j as i64)? + &as_[i] * &xs[i].pow((n - 1 - j) as i64)?))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    determinant(&m)
}

/// Left and right side of the Okada-type evaluation for 2n − 1 values of
/// x and a.
pub fn okada_sides(xs: &[ExactScalar], as_: &[ExactScalar]) -> Result<(ExactScalar, ExactScalar)> {
    let go = || -> Result<(ExactScalar, ExactScalar)> {
        let k = xs.len();
        if k % 2 == 0 || as_.len() != k {
            return Err(Error::ShapeMismatch(format!("need 2n-1 values of x and a, got {k} and {}", as_.len())));
        }
        let one = ExactScalar::one();
        let t = SkewTriangle::try_from_fn(k + 1, |i, j| {
            if j == k {
                return Ok(&one - &as_[i].square());
            }
            let w = w_det(&[xs[i].clone(), xs[j].clone()], &[as_[i].clone(), as_[j].clone()])?;
            (w * (&one + &as_[i] * &as_[j])).checked_div(&(&one - &xs[i] * &xs[j]))
        })?;
        let lhs = pfaffian(&t)?;
        let neg_sq: Vec<ExactScalar> = as_.iter().map(|a| -a.square()).collect();
        let mut den = ExactScalar::one();
        for i in 0..k {
            for j in i + 1..k {
                den *= &one - &xs[i] * &xs[j];
            }
        }
        Ok((lhs, w_det(xs, &neg_sq)?.checked_div(&den)?))
    };
    go().map_err(pole("Okada-type Pfaffian"))
}

/// c_{2n−1,2n}^{n−2}·Pf(c) against the Pfaffian of the 4×4 minors on
/// {i, j, 2n−1, 2n}.
pub fn pf_id_sides(c: &SkewTriangle) -> Result<(ExactScalar, ExactScalar)> {
    let order = c.order();
    if order % 2 == 1 || order < 2 {
        return Err(Error::OddOrder(order));
    }
    let n = (order / 2) as i64;
    let (a, b) = (order - 2, order - 1);
    let corner = c.get(a, b);
    let lhs = corner.pow(n - 2).map_err(|_| Error::PoleHit("Pfaffian corner".into()))? * pfaffian(c)?;
    let inner = SkewTriangle::try_from_fn(order - 2, |i, j| {
        let idx = [i, j, a, b];
        pfaffian(&SkewTriangle::from_fn(4, |x, y| c.get(idx[x], idx[y])))
    })?;
    Ok((lhs, pfaffian(&inner)?))
}

/// Both identities at `points` random points for order parameter n.
pub fn okada_pfaffian_identity_check(n: usize, seed: u64, points: usize) -> CheckReport {
    let mut report = CheckReport::new("okada", Some(n), seed, points);
    if n == 0 {
        report.fail("n must be at least 1");
        return report;
    }
    run_points(&mut report, |s: &mut RationalSampler| {
        let mut fails = Vec::new();
        let xs = s.scalars(2 * n - 1);
        let as_ = s.scalars(2 * n - 1);
        let (l, r) = okada_sides(&xs, &as_)?;
        if l != r {
            fails.push(format!("Okada-type: {l} != {r}"));
        }
        let c = SkewTriangle::from_fn(2 * n, |_, _| s.scalar());
        let (l, r) = pf_id_sides(&c)?;
        if l != r {
            fails.push(format!("Pfaffian Sylvester: {l} != {r}"));
        }
        Ok(fails)
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_corner() {
        let x = ExactScalar::frac(3, 5);
        let a = ExactScalar::frac(-7, 2);
        let (l, r) = okada_sides(std::slice::from_ref(&x), std::slice::from_ref(&a)).unwrap();
        let want = ExactScalar::one() - a.square();
        assert_eq!(l, want);
        assert_eq!(r, want);
        assert_eq!(w_det(&[x], &[-a.square()]).unwrap(), want);
    }

    #[test]
    fn identities_hold() {
        for n in 1..=3 {
            let r = okada_pfaffian_identity_check(n, 9, 3);
            assert!(r.passed(), "{:?}", r.details);
        }
    }

    #[test]
    fn pf_id_corner_power_matters() {
        let mut s = RationalSampler::new(4);
        let c = SkewTriangle::from_fn(6, |_, _| s.scalar());
        let (l, r) = pf_id_sides(&c).unwrap();
        assert_eq!(l, r);
        assert_ne!(l * c.get(4, 5), r);
    }
}

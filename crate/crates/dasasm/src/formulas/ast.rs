//! Determinant formulas for the AST and QAST partition functions.

use num_rational::BigRational;

use super::{pole, Variant};
use crate::error::{Error, Result};
use crate::exact_arith::{determinant, laurent_value_from_samples, sigma, ExactScalar};
use crate::vertex_model::SpectralPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Ast,
    Qast,
}

/// σ(q²xy)·σ(q²x̄ȳ).
pub(crate) fn pair(q2: &ExactScalar, x: &ExactScalar, y: &ExactScalar) -> Result<ExactScalar> {
    let xy = x * y;
    Ok(sigma(&(q2 * &xy))? * sigma(&(q2 * &xy.inv()?))?)
}

/// Z_n(u_1, …, u_n; u_{n+1}) for the AST constants. `Variant::AtP` ignores
/// u_{n+1} and evaluates the n×n form at u_{n+1} = p.
pub fn ast_partition_formula(n: usize, point: &SpectralPoint, variant: Variant) -> Result<ExactScalar> {
    formula(Family::Ast, n, point, variant).map_err(pole("AST determinant"))
}

/// Z↑_n(u_1, …, u_n; u_{n+1}) for the QAST constants.
pub fn qast_partition_formula(n: usize, point: &SpectralPoint, variant: Variant) -> Result<ExactScalar> {
    formula(Family::Qast, n, point, variant).map_err(pole("QAST determinant"))
}

fn formula(fam: Family, n: usize, point: &SpectralPoint, variant: Variant) -> Result<ExactScalar> {
    if point.u.len() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "order {n} needs {} spectral parameters, got {}",
            n + 1,
            point.u.len()
        )));
    }
    let q = &point.q;
    let p = &point.p;
    let pb = p.inv()?;
    let q2 = q.square();
    let s2 = sigma(&q2)?;
    let s4 = sigma(&q2.square())?;
    let u = &point.u;
    let s4_exp = match fam {
        Family::Ast => n * n.saturating_sub(1),
        Family::Qast => n * n,
    };
    let entry = |i: usize, j: usize| -> Result<ExactScalar> {
        match fam {
            Family::Ast => pair(&q2, &u[i], &u[j])?.inv(),
            Family::Qast => {
                let x = &u[i] * &u[j];
                Ok(sigma(&(&q2 * &x))?.inv()? + sigma(&(&q2 * &x.inv()?))?.inv()?)
            }
        }
    };

    let mut num = ExactScalar::one();
    let mut den = s2.pow(2 * n as i64)? * s4.pow(s4_exp as i64)?;
    for i in 0..n {
        for j in i + 1..n {
            den *= sigma(&(&u[i] * &u[j].inv()?))?.square();
        }
    }
    let m = match variant {
        Variant::Full => {
            let last = &u[n];
            for j in 0..n {
                num *= sigma(&(&pb * &u[j]))?;
            }
            for i in 0..n {
                for j in 0..=n {
                    num *= pair(&q2, &u[i], &u[j])?;
                }
                den *= sigma(&(&u[i] * &last.inv()?))?;
            }
            let mut m = Vec::with_capacity(n + 1);
            for i in 0..n {
                m.push((0..=n).map(|j| entry(i, j)).collect::<Result<Vec<_>>>()?);
            }
            let lb = last.inv()?;
            let s_last = sigma(&(&pb * last))?;
            m.push(
                (0..=n)
                    .map(|j| {
                        if j == n {
                            return Ok(ExactScalar::one());
                        }
                        let s = sigma(&(&pb * &u[j]))?;
                        match fam {
                            Family::Ast => Ok(ExactScalar::one() - sigma(&(&lb * &u[j]))?.checked_div(&s)?),
                            Family::Qast => s_last.checked_div(&s),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
            m
        }
        Variant::AtP => {
            for i in 0..n {
                num *= sigma(&(&q2 * p * &u[i]))? * sigma(&(&q2 * &pb * &u[i].inv()?))?;
                for j in 0..n {
                    num *= pair(&q2, &u[i], &u[j])?;
                }
            }
            (0..n)
                .map(|i| (0..n).map(|j| entry(i, j)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(num.checked_div(&den)? * determinant(&m)?)
}

/// Both sides of the reduction of the FULL AST formula at u_{n+1} = q²ū_1
/// to two formulas of order n − 1, at u_{n+1} = u_1 and u_{n+1} = −u_1.
/// `point.u` supplies u_1, …, u_n; its last entry is ignored.
/// u_{n+1} is sampled at 1 + k/1009, k = 1, …, 2n + 3.
pub fn ast_reduction_sides(n: usize, point: &SpectralPoint) -> Result<(ExactScalar, ExactScalar)> {
    if n == 0 || point.u.len() != n + 1 {
        return Err(Error::ShapeMismatch(format!("reduction needs n >= 1 and {} parameters", n + 1)));
    }
    let q = &point.q;
    let qb = q.inv()?;
    let p = &point.p;
    let pb = p.inv()?;
    let q2 = q.square();
    let q4 = q2.square();
    let s2 = sigma(&q2)?;
    let s4 = sigma(&q4)?;
    let u1 = &point.u[0];
    let u1b = u1.inv()?;

    // the matrix has a pole at u_{n+1} = q²ū_1 that the prefactor cancels,
    // so evaluate the Laurent polynomial in u_{n+1} there
    let w = n as i64 + 1;
    let nodes: Vec<BigRational> = (1..=2 * w + 1)
        .map(|k| BigRational::new((1009 + k).into(), 1009.into()))
        .collect();
    let values = nodes
        .iter()
        .map(|x| {
            let mut v = point.u.clone();
            v[n] = ExactScalar::Rational(x.clone());
            ast_partition_formula(n, &point.with_u(v), Variant::Full)
        })
        .collect::<Result<Vec<_>>>()?;
    let at = (&q2 * &u1b)
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::ShapeMismatch("reduction needs rational q and u_1".into()))?;
    let lhs = laurent_value_from_samples(&nodes, &values, -w, w, &at)?;

    let rest: Vec<ExactScalar> = point.u[1..n].to_vec();
    let lower = |last: ExactScalar| {
        let mut v = rest.clone();
        v.push(last);
        ast_partition_formula(n - 1, &point.with_u(v), Variant::Full)
    };
    let mut pre = (q - &(p * &qb * u1)) * sigma(&(&q2 * &u1.square()))?;
    pre = pre.checked_div(&(ExactScalar::int(2) * s2.square()))?;
    for ui in &point.u[1..n] {
        pre *= sigma(&(&q2 * u1 * ui))? * sigma(&(&q4 * &u1b * ui))?;
        pre = pre.checked_div(&s4.square())?;
    }
    let sign = if n % 2 == 1 { ExactScalar::one() } else { -ExactScalar::one() };
    let a = (&u1b + &pb) * (&u1b * q + u1 * &qb) * lower(u1.clone())?;
    let b = sign * (&u1b - &pb) * sigma(&(&u1b * q))? * lower(-u1)?;
    Ok((lhs, pre * (a + b)))
}

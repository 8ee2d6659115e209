//! The domain-wall partition function Y_n of n×n ASMs and its relation to
//! the AST partition function at u_{n+1} = p.

use super::pole;
use crate::error::{Error, Result};
use crate::exact_arith::{determinant, sigma, ExactScalar};
use crate::objects::{enumerate_asms, BulkType};
use crate::vertex_model::{BoundaryConstants, SpectralPoint, Weights};

fn check_lengths(us: &[ExactScalar], vs: &[ExactScalar]) -> Result<()> {
    if us.len() != vs.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} horizontal and {} vertical parameters",
            us.len(),
            vs.len()
        )));
    }
    Ok(())
}

/// Izergin–Korepin determinant for Y_n(u; v) with the bulk weights of the
/// triangular model.
pub fn ik_partition(q: &ExactScalar, us: &[ExactScalar], vs: &[ExactScalar]) -> Result<ExactScalar> {
    check_lengths(us, vs)?;
    ik_det(q, us, vs).map_err(pole("Izergin-Korepin determinant"))
}

fn ik_det(q: &ExactScalar, us: &[ExactScalar], vs: &[ExactScalar]) -> Result<ExactScalar> {
    let n = us.len();
    let q2 = q.square();
    let s4 = sigma(&q2.square())?;
    let mut num = ExactScalar::one();
    let mut m = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let x = &us[i] * &vs[j].inv()?;
            let w = sigma(&(&q2 * &x))? * sigma(&(&q2 * &x.inv()?))?;
            m[i].push(w.inv()?);
            num *= w;
        }
    }
    let mut den = s4.pow((n * n.saturating_sub(1)) as i64)?;
    for i in 0..n {
        for j in i + 1..n {
            den *= sigma(&(&us[i] * &us[j].inv()?))? * sigma(&(&vs[j] * &vs[i].inv()?))?;
        }
    }
    Ok(num.checked_div(&den)? * determinant(&m)?)
}

/// Y_n by summing over ASM(n); the 0-entry at (i, j) carries label u_i·v̄_j.
pub fn ik_bruteforce(q: &ExactScalar, us: &[ExactScalar], vs: &[ExactScalar]) -> Result<ExactScalar> {
    check_lengths(us, vs)?;
    let n = us.len();
    let w = Weights::new(q, &BoundaryConstants::from_array(std::array::from_fn(|_| ExactScalar::zero())))?;
    let mut table = vec![vec![[ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero()]; n]; n];
    let zeros = [BulkType::Ne, BulkType::Sw, BulkType::Se, BulkType::Nw];
    for i in 0..n {
        for j in 0..n {
            let x = &us[i] * &vs[j].inv()?;
            for (k, t) in zeros.iter().enumerate() {
                table[i][j][k] = w.bulk(*t, &x)?;
            }
        }
    }
    let mut total = ExactScalar::zero();
    for a in enumerate_asms(n) {
        let mut col = vec![0i8; n];
        let mut acc = ExactScalar::one();
        for i in 1..=n {
            let mut row = 0i8;
            for j in 1..=n {
                let e = a.get(i, j);
                if e == 0 {
                    let k = zeros
                        .iter()
                        .position(|t| *t == BulkType::of_zero(col[j - 1], row))
                        .expect("0-entry types");
                    acc *= &table[i - 1][j - 1][k];
                }
                col[j - 1] += e;
                row += e;
            }
        }
        total += acc;
    }
    Ok(total)
}

/// Π_i σ(q²pu_i)σ(q²p̄ū_i)/σ(q²)² · Y_n(u; ū), with u = point.u[..n].
pub fn ast_via_ik(n: usize, point: &SpectralPoint) -> Result<ExactScalar> {
    let go = || -> Result<ExactScalar> {
        let q = &point.q;
        let q2 = q.square();
        let s2sq = sigma(&q2)?.square();
        let pb = point.p.inv()?;
        let us = &point.u[..n];
        let vs = us.iter().map(|x| x.inv()).collect::<Result<Vec<_>>>()?;
        let mut pre = ExactScalar::one();
        for (x, xb) in us.iter().zip(&vs) {
            pre *= sigma(&(&q2 * &point.p * x))? * sigma(&(&q2 * &pb * xb))?;
            pre = pre.checked_div(&s2sq)?;
        }
        Ok(pre * ik_det(q, us, &vs)?)
    };
    if point.u.len() < n {
        return Err(Error::ShapeMismatch(format!("order {n} needs {n} spectral parameters")));
    }
    go().map_err(pole("AST from Izergin-Korepin"))
}

//! Exact determinants, linear solves and Pfaffians.

use std::collections::HashMap;

use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Dense row-major matrix.
pub type Matrix = Vec<Vec<ExactScalar>>;

fn check_square(m: &[Vec<ExactScalar>]) -> Result<usize> {
    let n = m.len();
    if let Some(r) = m.iter().position(|row| row.len() != n) {
        return Err(Error::ShapeMismatch(format!(
            "row {} has length {} in a {n}-row matrix",
            r + 1,
            m[r].len()
        )));
    }
    Ok(n)
}

/// Determinant by Gaussian elimination; the pivot is the first nonzero entry
/// of the column. The empty determinant is 1.
pub fn determinant(m: &[Vec<ExactScalar>]) -> Result<ExactScalar> {
    let n = check_square(m)?;
    let mut a: Matrix = m.to_vec();
    let mut det = ExactScalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(ExactScalar::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let inv = a[k][k].inv()?;
        det *= &a[k][k];
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] * &inv;
            for c in k..n {
                let t = &f * &pivot_row[c];
                row[c] -= &t;
            }
        }
    }
    Ok(det)
}

/// Solve `m x = b` for square nonsingular `m`.
pub fn solve(m: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    let n = check_square(m)?;
    if b.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side has length {}, expected {n}",
            b.len()
        )));
    }
    let mut a: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(p, k);
        let inv = a[k][k].inv()?;
        for c in k..=n {
            a[k][c] = &a[k][c] * &inv;
        }
        let pivot_row = a[k].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for c in k..=n {
                let t = &f * &pivot_row[c];
                row[c] -= &t;
            }
        }
    }
    Ok(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn matmul(a: &[Vec<ExactScalar>], b: &[Vec<ExactScalar>]) -> Result<Matrix> {
    let inner = b.len();
    if a.iter().any(|r| r.len() != inner) {
        return Err(Error::ShapeMismatch("inner dimensions differ".into()));
    }
    let cols = b.first().map_or(0, |r| r.len());
    Ok(a
        .iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect())
}

/// Strict upper triangle of a skew-symmetric matrix of order `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTriangle {
    order: usize,
    // row-major over i < j
    entries: Vec<ExactScalar>,
}

impl SkewTriangle {
    /// Build from a function of 0-based (i, j) with i < j.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for i in 0..order {
            for j in i + 1..order {
                entries.push(f(i, j));
            }
        }
        SkewTriangle { order, entries }
    }

    /// Fallible variant of [`SkewTriangle::from_fn`].
    pub fn try_from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize) -> Result<ExactScalar>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for i in 0..order {
            for j in i + 1..order {
                entries.push(f(i, j)?);
            }
        }
        Ok(SkewTriangle { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn index(&self, i: usize, j: usize) -> usize {
        // rows 0..i contribute (order-1) + (order-2) + ... entries
        i * (2 * self.order - i - 1) / 2 + (j - i - 1)
    }

    /// Entry a_{i,j} of the skew-symmetric completion, 0-based.
    pub fn get(&self, i: usize, j: usize) -> ExactScalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.entries[self.index(i, j)].clone(),
            Equal => ExactScalar::zero(),
            Greater => -&self.entries[self.index(j, i)],
        }
    }

    pub fn completion(&self) -> Matrix {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Pfaffian, expanding along the first remaining index with the sign
/// alternating over successive partners; memoized on the remaining set.
pub fn pfaffian(t: &SkewTriangle) -> Result<ExactScalar> {
    let n = t.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "pfaffian".into(),
            n,
            cap: 64,
        });
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_rec(t, full, &mut memo))
}

fn pf_rec(t: &SkewTriangle, mask: u64, memo: &mut HashMap<u64, ExactScalar>) -> ExactScalar {
    if mask == 0 {
        return ExactScalar::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << i);
    let mut acc = ExactScalar::zero();
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let a = t.get(i, j);
        if !a.is_zero() {
            let term = &a * &pf_rec(t, rest & !(1u64 << j), memo);
            if sign_positive {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::sample::RationalSampler;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    fn cofactor_det(m: &Matrix) -> ExactScalar {
        if m.is_empty() {
            return ExactScalar::one();
        }
        let n = m.len();
        (0..n)
            .map(|c| {
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = &m[0][c] * &cofactor_det(&minor);
                if c % 2 == 0 { t } else { -t }
            })
            .sum()
    }

    #[test]
    fn empty_and_2x2() {
        assert_eq!(determinant(&[]).unwrap(), ExactScalar::one());
        let m = vec![vec![s(3), s(7)], vec![s(-2), s(5)]];
        assert_eq!(determinant(&m).unwrap(), s(29));
    }

    #[test]
    fn vandermonde_123() {
        let m: Matrix = (1..=3)
            .map(|x| (0..3).map(|e| s(x).pow(e).unwrap()).collect())
            .collect();
        assert_eq!(determinant(&m).unwrap(), s(2));
        assert_eq!(cofactor_det(&m), s(2));
    }

    #[test]
    fn determinant_matches_cofactor_on_random() {
        let mut rng = RationalSampler::new(9);
        for n in 1..=5 {
            let m: Matrix = (0..n)
                .map(|_| (0..n).map(|_| rng.scalar()).collect())
                .collect();
            assert_eq!(determinant(&m).unwrap(), cofactor_det(&m));
        }
    }

    #[test]
    fn non_square_rejected() {
        let m = vec![vec![s(1), s(2)]];
        assert!(matches!(determinant(&m), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn pfaffian_small_orders() {
        let t = SkewTriangle::from_fn(2, |_, _| s(5));
        assert_eq!(pfaffian(&t).unwrap(), s(5));
        // a12 a34 − a13 a24 + a14 a23
        let vals = [[0, 2, 3, 5], [0, 0, 7, 11], [0, 0, 0, 13], [0, 0, 0, 0]];
        let t = SkewTriangle::from_fn(4, |i, j| s(vals[i][j]));
        assert_eq!(pfaffian(&t).unwrap(), s(2 * 13 - 3 * 11 + 5 * 7));
        assert_eq!(pfaffian(&SkewTriangle::from_fn(3, |_, _| s(1))), Err(Error::OddOrder(3)));
        assert_eq!(pfaffian(&SkewTriangle::from_fn(0, |_, _| s(1))).unwrap(), s(1));
    }

    #[test]
    fn solve_recovers_solution() {
        let m = vec![vec![s(2), s(1)], vec![s(1), s(3)]];
        let x = solve(&m, &[s(5), s(10)]).unwrap();
        assert_eq!(x, vec![s(1), s(3)]);
        let sing = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert_eq!(solve(&sing, &[s(1), s(1)]), Err(Error::SingularSystem));
    }
}

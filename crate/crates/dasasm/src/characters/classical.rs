//! Schur and symplectic characters by determinant ratios, and their
//! principal specializations by product formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Partition;
use crate::error::{Error, Result};
use crate::exact_arith::{determinant, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    Schur,
    Symplectic,
}

/// s_λ(x_1, …, x_n) = det(x_i^{λ_j+n−j}) / Π_{i<j}(x_i − x_j).
pub fn schur(lambda: &Partition, xs: &[ExactScalar]) -> Result<ExactScalar> {
    let n = xs.len();
    if lambda.len() > n {
        return Ok(ExactScalar::zero());
    }
    let mut den = ExactScalar::one();
    for i in 0..n {
        for j in i + 1..n {
            den *= &xs[i] - &xs[j];
        }
    }
    if den.is_zero() {
        return Err(Error::RepeatedVariables);
    }
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| xs[i].pow((lambda.part(j) + n - 1 - j) as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    determinant(&m)?.checked_div(&den)
}

/// sp_λ(x_1, …, x_n) = det(x_i^{λ_j+n−j+1} − x̄_i^{λ_j+n−j+1}) divided by
/// Π_i(x_i − x̄_i)·Π_{i<j}(x_i + x̄_i − x_j − x̄_j).
pub fn symplectic(lambda: &Partition, xs: &[ExactScalar]) -> Result<ExactScalar> {
    let n = xs.len();
    if lambda.len() > n {
        return Ok(ExactScalar::zero());
    }
    if xs.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroInput);
    }
    let inv: Vec<ExactScalar> = xs.iter().map(|x| x.inv()).collect::<Result<_>>()?;
    let mut den = ExactScalar::one();
    for i in 0..n {
        den *= &xs[i] - &inv[i];
        for j in i + 1..n {
            den *= &xs[i] + &inv[i] - &xs[j] - &inv[j];
        }
    }
    if den.is_zero() {
        return Err(Error::RepeatedVariables);
    }
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = (lambda.part(j) + n - j) as i64;
                    Ok(xs[i].pow(e)? - inv[i].pow(e)?)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    determinant(&m)?.checked_div(&den)
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The character at x_1 = … = x_n = 1 via the hook-content product (Schur)
/// or its symplectic analogue.
pub fn principal_specialization(kind: CharacterKind, lambda: &Partition, n: usize) -> BigRational {
    if lambda.len() > n {
        return BigRational::zero();
    }
    let l = |i: usize| lambda.part(i - 1) as i64;
    let n = n as i64;
    let mut acc = BigRational::one();
    for i in 1..=n {
        if kind == CharacterKind::Symplectic {
            acc *= ratio(l(i as usize) + n + 1 - i, n + 1 - i);
        }
        for j in i + 1..=n {
            let (li, lj) = (l(i as usize), l(j as usize));
            acc *= ratio(li - lj + j - i, j - i);
            if kind == CharacterKind::Symplectic {
                acc *= ratio(li + lj + 2 * n + 2 - i - j, 2 * n + 2 - i - j);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::RationalSampler;
    use std::collections::BTreeMap;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&k| ExactScalar::int(k)).collect()
    }

    #[test]
    fn listed_values() {
        let xs = ints(&[1, 2, 3, 4]);
        assert!(schur(&Partition::empty(), &xs).unwrap().is_one());
        assert_eq!(schur(&part(&[1, 1]), &xs).unwrap(), ExactScalar::int(35));
        assert!(symplectic(&Partition::empty(), &ints(&[2, 3])).unwrap().is_one());
        assert!(matches!(schur(&part(&[1]), &ints(&[2, 2])), Err(Error::RepeatedVariables)));
        assert!(matches!(symplectic(&part(&[1]), &ints(&[1])), Err(Error::RepeatedVariables)));
    }

    #[test]
    fn principal_values() {
        use CharacterKind::*;
        assert_eq!(principal_specialization(Schur, &part(&[1, 1]), 4), ratio(6, 1));
        assert_eq!(principal_specialization(Schur, &part(&[2, 1]), 3), ratio(8, 1));
        assert_eq!(principal_specialization(Schur, &Partition::doubled_staircase(3), 6), ratio(189, 1));
        assert_eq!(principal_specialization(Symplectic, &part(&[1, 1]), 2), ratio(5, 1));
        assert_eq!(principal_specialization(Schur, &part(&[1, 1, 1]), 2), ratio(0, 1));
    }

    /// Fillings of `shape` by `alphabet` (an increasing list of letters)
    /// with weakly increasing rows and strictly increasing columns.
    fn tableaux(shape: &[usize], alphabet: usize, allowed: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<Vec<usize>>> {
        let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
        let mut out = Vec::new();
        let mut t: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            t: &mut Vec<Vec<usize>>,
            alphabet: usize,
            allowed: &dyn Fn(usize, usize) -> bool,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if k == cells.len() {
                out.push(t.clone());
                return;
            }
            let (r, c) = cells[k];
            for v in 0..alphabet {
                if c > 0 && t[r][c - 1] > v {
                    continue;
                }
                if r > 0 && t[r - 1][c] >= v {
                    continue;
                }
                if !allowed(r, v) {
                    continue;
                }
                t[r][c] = v;
                rec(k + 1, cells, t, alphabet, allowed, out);
            }
        }
        rec(0, &cells, &mut t, alphabet, allowed, &mut out);
        out
    }

    fn schur_oracle(shape: &[usize], xs: &[ExactScalar]) -> ExactScalar {
        tableaux(shape, xs.len(), &|_, _| true)
            .iter()
            .map(|t| t.iter().flatten().map(|&v| xs[v].clone()).product::<ExactScalar>())
            .sum()
    }

    /// Letters 0, 1, 2, … stand for 1 < 1' < 2 < 2' < …; row r (0-based)
    /// only takes letters from r+1 on.
    fn symplectic_oracle(shape: &[usize], xs: &[ExactScalar]) -> ExactScalar {
        tableaux(shape, 2 * xs.len(), &|r, v| v / 2 >= r)
            .iter()
            .map(|t| {
                let mut e: BTreeMap<usize, i64> = BTreeMap::new();
                for &v in t.iter().flatten() {
                    *e.entry(v / 2).or_default() += if v % 2 == 0 { 1 } else { -1 };
                }
                e.iter().map(|(&i, &k)| xs[i].pow(k).unwrap()).product::<ExactScalar>()
            })
            .sum()
    }

    fn shapes_in_box() -> Vec<Vec<usize>> {
        let mut v = Vec::new();
        for a in 0..=3 {
            for b in 0..=a {
                for c in 0..=b {
                    v.push([a, b, c].into_iter().filter(|&x| x > 0).collect());
                }
            }
        }
        v
    }

    #[test]
    fn agree_with_tableau_sums() {
        let mut s = RationalSampler::new(12);
        for k in 1..=4 {
            let xs = s.scalars(k);
            for shape in shapes_in_box() {
                let lam = part(&shape);
                assert_eq!(schur(&lam, &xs).unwrap(), schur_oracle(&shape, &xs), "s{lam} in {k}");
                assert_eq!(symplectic(&lam, &xs).unwrap(), symplectic_oracle(&shape, &xs), "sp{lam} in {k}");
            }
        }
    }

    #[test]
    fn principal_agrees_with_tableau_counts() {
        for k in 1..=4 {
            let ones = vec![ExactScalar::one(); k];
            for shape in shapes_in_box() {
                let lam = part(&shape);
                let s = principal_specialization(CharacterKind::Schur, &lam, k);
                assert_eq!(ExactScalar::Rational(s), schur_oracle(&shape, &ones));
                let sp = principal_specialization(CharacterKind::Symplectic, &lam, k);
                assert_eq!(ExactScalar::Rational(sp), symplectic_oracle(&shape, &ones));
            }
        }
    }
}

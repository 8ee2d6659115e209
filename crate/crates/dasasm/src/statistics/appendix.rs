//! Counting order-n ASTs with exactly one −1 by summing over the positions
//! of the three nonzero entries in the rows that carry them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixCount {
    pub n: usize,
    /// The double sum over (j₁ < j₂ < j₃, i₁ < i₂).
    pub sum: BigInt,
    /// C(n,3)²·(n−3)!.
    pub closed_form: BigInt,
}

impl AppendixCount {
    pub fn agrees(&self) -> bool {
        self.sum == self.closed_form
    }
}

/// p(a, b) = a(a+1)⋯b, and 1 when a > b.
pub fn p(a: i64, b: i64) -> BigInt {
    let mut r = BigInt::one();
    for k in a..=b {
        r *= k;
    }
    r
}

fn f1(j1: i64, j3: i64, i1: i64) -> BigInt {
    let (a, b) = if j1.abs() <= j3.abs() {
        (j1.abs(), j3.abs())
    } else {
        (j3.abs(), j1.abs())
    };
    p(1, a) * p(a, b - 1) * p(b - 1, i1 - 3)
}

fn f2(j1: i64, j2: i64, j3: i64, i1: i64) -> BigInt {
    let mut s = [j1.abs(), j2.abs(), j3.abs()];
    s.sort_unstable();
    let [mn, md, mx] = s;
    p(1, mn) * p(mn, md - 1) * p(md - 1, mx - 2) * p(mx - 2, i1 - 4)
}

pub fn appendix_one_minus_one(n: usize) -> AppendixCount {
    let ni = n as i64;
    let mut sum = BigInt::zero();
    for j1 in -ni + 1..ni - 1 {
        for j2 in j1 + 1..ni - 1 {
            for j3 in j2 + 1..ni - 1 {
                let mx = j1.abs().max(j2.abs()).max(j3.abs());
                for i1 in mx + 1..=ni {
                    let a = f1(j1, j3, i1);
                    let b = f2(j1, j2, j3, i1);
                    let rest = &a - &b;
                    for i2 in i1 + 1..=ni {
                        sum += &b * p(i1 - 1, i2 - 3) * p(i2, ni - 1)
                            + &rest * p(i1, i2 - 2) * p(i2 + 1, ni);
                    }
                }
            }
        }
    }
    let closed_form = if n < 3 {
        BigInt::zero()
    } else {
        let c = BigInt::from(ni * (ni - 1) * (ni - 2) / 6);
        &c * &c * p(1, ni - 3)
    };
    AppendixCount { n, sum, closed_form }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{visit_sign_triangles, TriFamily};

    #[test]
    fn product_helper() {
        assert_eq!(p(3, 5), BigInt::from(60));
        assert_eq!(p(4, 3), BigInt::one());
        assert_eq!(p(-2, -5), BigInt::one());
        assert_eq!(p(-2, 0), BigInt::zero());
    }

    #[test]
    fn known_values() {
        let want = [0, 0, 0, 1, 16, 200, 2400, 29400, 376320];
        for (n, &w) in want.iter().enumerate() {
            let c = appendix_one_minus_one(n);
            assert_eq!(c.sum, BigInt::from(w), "n = {n}");
            assert!(c.agrees());
        }
    }

    #[test]
    fn brute_force_oracle() {
        for n in 2..=5 {
            let mut k = 0u64;
            visit_sign_triangles(TriFamily::Ast, n, |t| k += (t.count(-1) == 1) as u64);
            assert_eq!(appendix_one_minus_one(n).sum, BigInt::from(k), "n = {n}");
        }
    }
}

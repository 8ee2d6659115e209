use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{statistic, Statistic};
use crate::error::{Error, Result};
use crate::objects::{enumerate_with_cap, Family, DEFAULT_CAP};

/// Counts of objects by a tuple of statistic values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub family: Family,
    pub n: usize,
    pub stats: Vec<Statistic>,
    pub counts: BTreeMap<Vec<i64>, u64>,
}

impl DistributionTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, key: &[i64]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Marginal on the k-th statistic.
    pub fn marginal(&self, k: usize) -> BTreeMap<i64, u64> {
        let mut m = BTreeMap::new();
        for (key, c) in &self.counts {
            *m.entry(key[k]).or_insert(0) += c;
        }
        m
    }

    /// Generating polynomial of a single nonnegative statistic.
    pub fn to_genpoly(&self) -> Result<GenPoly> {
        if self.stats.len() != 1 {
            return Err(Error::ShapeMismatch(format!(
                "generating polynomial needs one statistic, table has {}",
                self.stats.len()
            )));
        }
        let mut coeffs = Vec::new();
        for (key, &c) in &self.counts {
            let e = usize::try_from(key[0]).map_err(|_| {
                Error::ShapeMismatch(format!("negative exponent {}", key[0]))
            })?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += c as i64;
        }
        Ok(GenPoly::new(coeffs))
    }

    /// Header row of the CSV form: the statistic names, then `count`.
    pub fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = self.stats.iter().map(|s| s.name().to_string()).collect();
        h.push("count".to_string());
        h
    }

    /// Data rows of the CSV form, keys in increasing order.
    pub fn csv_rows(&self) -> Vec<Vec<String>> {
        self.counts
            .iter()
            .map(|(k, c)| {
                let mut r: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                r.push(c.to_string());
                r
            })
            .collect()
    }
}

#[derive(serde::Serialize)]
struct Row<'a> {
    key: &'a [i64],
    count: u64,
}

impl Serialize for DistributionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DistributionTable", 5)?;
        st.serialize_field("family", self.family.name())?;
        st.serialize_field("n", &self.n)?;
        let names: Vec<&str> = self.stats.iter().map(|x| x.name()).collect();
        st.serialize_field("statistics", &names)?;
        let rows: Vec<Row> = self
            .counts
            .iter()
            .map(|(k, &c)| Row { key: k, count: c })
            .collect();
        st.serialize_field("rows", &rows)?;
        st.serialize_field("total", &self.total())?;
        st.end()
    }
}

/// Exhaustive joint distribution over `enumerate(family, n)`.
pub fn joint_distribution(family: Family, n: usize, stats: &[Statistic]) -> Result<DistributionTable> {
    joint_distribution_with_cap(family, n, stats, DEFAULT_CAP)
}

pub fn joint_distribution_with_cap(
    family: Family,
    n: usize,
    stats: &[Statistic],
    cap: usize,
) -> Result<DistributionTable> {
    let objs = enumerate_with_cap(family, n, cap)?;
    let keys: Vec<Vec<i64>> = objs
        .par_iter()
        .map(|o| stats.iter().map(|&s| statistic(s, o)).collect::<Result<Vec<i64>>>())
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_insert(0u64) += 1;
    }
    Ok(DistributionTable {
        family,
        n,
        stats: stats.to_vec(),
        counts,
    })
}

/// Integer polynomial in x with finite support; trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenPoly {
    coeffs: Vec<i64>,
}

impl GenPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GenPoly { coeffs }
    }

    pub fn zero() -> Self {
        GenPoly::default()
    }

    /// c·x^k.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        GenPoly::new(v)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: i64) -> GenPoly {
        GenPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }
}

impl Add for &GenPoly {
    type Output = GenPoly;
    fn add(self, o: &GenPoly) -> GenPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        GenPoly::new((0..len).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &GenPoly {
    type Output = GenPoly;
    fn sub(self, o: &GenPoly) -> GenPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        GenPoly::new((0..len).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;
    fn mul(self, o: &GenPoly) -> GenPoly {
        if self.is_zero() || o.is_zero() {
            return GenPoly::zero();
        }
        let mut v = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        GenPoly::new(v)
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (k, a) {
                (0, _) => a.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{a}x"),
                (_, 1) => format!("x^{k}"),
                _ => format!("{a}x^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ast3_mu() {
        let t = joint_distribution(Family::Ast, 3, &[Statistic::MuNabla]).unwrap();
        assert_eq!(t.get(&[0]), 6);
        assert_eq!(t.get(&[1]), 1);
        assert_eq!(t.total(), 7);
    }

    #[test]
    fn ast3_kappa_poly() {
        let t = joint_distribution(Family::Ast, 3, &[Statistic::KappaNabla]).unwrap();
        assert_eq!(t.to_genpoly().unwrap(), GenPoly::new(vec![2, 1, 1, 1, 2]));
        let a = joint_distribution(Family::Asm, 3, &[Statistic::Kappa]).unwrap();
        assert_eq!(a.to_genpoly().unwrap(), GenPoly::new(vec![2, 0, 2, 2, 1]));
    }

    #[test]
    fn ast_mu_inv_matches_asm() {
        for n in 0..=5 {
            let t = joint_distribution(Family::Ast, n, &[Statistic::MuNabla, Statistic::InvNabla]).unwrap();
            let a = joint_distribution(Family::Asm, n, &[Statistic::Mu, Statistic::Inv]).unwrap();
            assert_eq!(t.counts, a.counts, "n = {n}");
        }
    }

    #[test]
    fn totals_are_cardinalities() {
        for (n, want) in [(1, 1), (2, 2), (3, 7), (4, 42)] {
            let t = joint_distribution(Family::Asm, n, &[Statistic::Kappa, Statistic::Mu]).unwrap();
            assert_eq!(t.total(), want);
        }
    }

    #[test]
    fn cap_and_mismatch() {
        assert!(matches!(
            joint_distribution(Family::Ast, 7, &[Statistic::Rho]),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            joint_distribution(Family::Asm, 2, &[Statistic::Rho]),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn poly_arith() {
        let p = GenPoly::new(vec![1, -1]);
        let q = GenPoly::new(vec![1, 1]);
        assert_eq!(&p * &q, GenPoly::new(vec![1, 0, -1]));
        assert_eq!(&(&p + &q) - &q, p);
        assert_eq!(GenPoly::new(vec![2, 1, 0, 0]).degree(), Some(1));
        assert_eq!(GenPoly::new(vec![2, 1, 1, 1, 2]).to_string(), "2+x+x^2+x^3+2x^4");
        assert_eq!(q.eval(3), 4);
    }

    #[test]
    fn csv_form() {
        let t = joint_distribution(Family::Ast, 3, &[Statistic::MuNabla]).unwrap();
        assert_eq!(t.csv_header(), vec!["mu-nabla", "count"]);
        assert_eq!(t.csv_rows(), vec![vec!["0", "6"], vec!["1", "1"]]);
    }
}

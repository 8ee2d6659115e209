//! Univariate Laurent polynomials and their reconstruction from samples.

use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::solve;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Σ c_k x^{low + k}; trailing and leading zero coefficients are stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<ExactScalar>,
}

impl LaurentPoly {
    pub fn new(low: i64, mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentPoly::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn order(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn coeff(&self, e: i64) -> ExactScalar {
        usize::try_from(e - self.low)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn eval(&self, x: &ExactScalar) -> Result<ExactScalar> {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        Ok(acc * x.pow(self.low)?)
    }

    /// c·x^e.
    pub fn monomial(c: ExactScalar, e: i64) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    pub fn constant(c: ExactScalar) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.degree().unwrap().max(o.degree().unwrap());
        LaurentPoly::new(low, (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect())
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![ExactScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + o.low, c)
    }

    /// True when every monomial has even exponent.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (self.low + k as i64) % 2 == 0)
    }
}

/// The Laurent polynomial supported on `[min_exp, max_exp]` through
/// `(nodes[k], values[k])`.
pub fn laurent_from_samples(
    nodes: &[BigRational],
    values: &[ExactScalar],
    min_exp: i64,
    max_exp: i64,
) -> Result<LaurentPoly> {
    if max_exp < min_exp {
        return Err(Error::ShapeMismatch(format!(
            "empty exponent window [{min_exp}, {max_exp}]"
        )));
    }
    let width = (max_exp - min_exp + 1) as usize;
    if nodes.len() != width || values.len() != width {
        return Err(Error::ShapeMismatch(format!(
            "window of width {width} needs {width} samples, got {} nodes and {} values",
            nodes.len(),
            values.len()
        )));
    }
    let mut m = Vec::with_capacity(width);
    for x in nodes {
        let x = ExactScalar::Rational(x.clone());
        if x.is_zero() {
            return Err(Error::SingularSystem);
        }
        let row = (min_exp..=max_exp)
            .map(|e| x.pow(e))
            .collect::<Result<Vec<_>>>()?;
        m.push(row);
    }
    let coeffs = solve(&m, values)?;
    Ok(LaurentPoly::new(min_exp, coeffs))
}

/// Value at `at` of the Laurent polynomial supported on `[min_exp, max_exp]`
/// through `(nodes[k], values[k])`, by Lagrange interpolation of
/// x^{−min_exp}·F(x). Cheaper than [`laurent_from_samples`] when only one
/// value is needed.
pub fn laurent_value_from_samples(
    nodes: &[BigRational],
    values: &[ExactScalar],
    min_exp: i64,
    max_exp: i64,
    at: &BigRational,
) -> Result<ExactScalar> {
    let width = (max_exp - min_exp + 1).max(0) as usize;
    if width == 0 || nodes.len() != width || values.len() != width {
        return Err(Error::ShapeMismatch(format!(
            "window [{min_exp}, {max_exp}] with {} nodes and {} values",
            nodes.len(),
            values.len()
        )));
    }
    if at.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut total = ExactScalar::zero();
    for (j, (xj, v)) in nodes.iter().zip(values).enumerate() {
        if xj.is_zero() {
            return Err(Error::SingularSystem);
        }
        let mut w = ExactScalar::one();
        for (k, xk) in nodes.iter().enumerate() {
            if k != j {
                let d = xj - xk;
                if d.is_zero() {
                    return Err(Error::SingularSystem);
                }
                w *= ExactScalar::Rational((at - xk) / d);
            }
        }
        let shift = ExactScalar::Rational(xj.clone()).pow(-min_exp)?;
        total += w * shift * v;
    }
    Ok(total * ExactScalar::Rational(at.clone()).pow(min_exp)?)
}

/// Sample `f` at the nodes 1, 2, …, width and reconstruct on the window.
///
/// Positive integer nodes keep the Vandermonde system nonsingular.
pub fn reconstruct_with<F>(min_exp: i64, max_exp: i64, mut f: F) -> Result<LaurentPoly>
where
    F: FnMut(&ExactScalar) -> Result<ExactScalar>,
{
    let width = max_exp - min_exp + 1;
    let nodes: Vec<BigRational> = (1..=width)
        .map(|k| BigRational::from_integer(k.into()))
        .collect();
    let values = nodes
        .iter()
        .map(|x| f(&ExactScalar::Rational(x.clone())))
        .collect::<Result<Vec<_>>>()?;
    laurent_from_samples(&nodes, &values, min_exp, max_exp)
}

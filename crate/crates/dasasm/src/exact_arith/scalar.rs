//! Exact scalars: arbitrary-precision rationals and the cyclotomic field Q(ζ)
//! with ζ = e^{iπ/6}, stored in the power basis {1, ζ, ζ², ζ³}.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element c0 + c1ζ + c2ζ² + c3ζ³ of Q(ζ₁₂), reduced with ζ⁴ = ζ² − 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc12 {
    pub c: [BigRational; 4],
}

/// A rational number, or an element of Q(ζ₁₂).
///
/// Values whose ζ-coordinates vanish are always stored as `Rational`, so
/// structural equality is exact equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Cyc12(Cyc12),
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// Dense polynomial helpers over Q, coefficients lowest degree first.
fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    poly_trim(&mut out);
    out
}

/// Quotient and remainder of a by a nonzero b.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        q[shift] = f;
        // the leading term cancels exactly
        r.pop();
        poly_trim(&mut r);
    }
    poly_trim(&mut q);
    (q, r)
}

/// Φ₁₂(x) = x⁴ − x² + 1.
fn phi12() -> Vec<BigRational> {
    vec![rat(1), rat(0), rat(-1), rat(0), rat(1)]
}

impl Cyc12 {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        Cyc12 { c: [c0, c1, c2, c3] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyc12::new(r, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn zeta() -> Self {
        Cyc12::new(rat(0), rat(1), rat(0), rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Reduce a polynomial in ζ of any degree modulo ζ⁴ − ζ² + 1.
    fn reduce(mut p: Vec<BigRational>) -> Self {
        while p.len() > 4 {
            let k = p.len() - 1;
            let t = p.pop().unwrap();
            // ζ^k = ζ^{k-2} − ζ^{k-4}
            p[k - 2] += &t;
            p[k - 4] -= &t;
        }
        p.resize(4, BigRational::zero());
        Cyc12::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone())
    }

    fn add(&self, o: &Cyc12) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }

    fn sub(&self, o: &Cyc12) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }

    fn neg(&self) -> Cyc12 {
        Cyc12 {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }

    fn mul(&self, o: &Cyc12) -> Cyc12 {
        Cyc12::reduce(poly_mul(&self.c, &o.c))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ₁₂.
    pub fn inverse(&self) -> Result<Cyc12> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut a = self.c.to_vec();
        poly_trim(&mut a);
        // invariant: s_i * self ≡ r_i (mod Φ₁₂)
        let (mut r0, mut r1) = (phi12(), a);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![rat(1)]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Φ₁₂ is irreducible, so the gcd r0 is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let s: Vec<BigRational> = s0.into_iter().map(|x| x / &g).collect();
        let (_, s) = poly_divmod(&s, &phi12());
        Ok(Cyc12::reduce(s))
    }
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        ExactScalar::Rational(rat(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        ExactScalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactScalar::Rational(BigRational::from_integer(n))
    }

    /// The primitive 12th root of unity e^{iπ/6}.
    pub fn zeta() -> Self {
        ExactScalar::Cyc12(Cyc12::zeta())
    }

    /// The imaginary unit, ζ³.
    pub fn imag_unit() -> Self {
        ExactScalar::Cyc12(Cyc12::new(rat(0), rat(0), rat(0), rat(1)))
    }

    pub fn from_cyc(c: Cyc12) -> Self {
        if c.c[1].is_zero() && c.c[2].is_zero() && c.c[3].is_zero() {
            let [c0, ..] = c.c;
            ExactScalar::Rational(c0)
        } else {
            ExactScalar::Cyc12(c)
        }
    }

    pub fn to_cyc(&self) -> Cyc12 {
        match self {
            ExactScalar::Rational(r) => Cyc12::from_rational(r.clone()),
            ExactScalar::Cyc12(c) => c.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Cyc12(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactScalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Cyc12(_) => None,
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            ExactScalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::ZeroInput)
                } else {
                    Ok(ExactScalar::Rational(r.recip()))
                }
            }
            ExactScalar::Cyc12(c) => Ok(ExactScalar::from_cyc(c.inverse()?)),
        }
    }

    pub fn checked_div(&self, d: &Self) -> Result<Self> {
        Ok(self * &d.inv()?)
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = ExactScalar::one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

/// σ(x) = x − x⁻¹.
pub fn sigma(x: &ExactScalar) -> Result<ExactScalar> {
    Ok(x - &x.inv()?)
}

fn add_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    match (a, b) {
        (ExactScalar::Rational(x), ExactScalar::Rational(y)) => ExactScalar::Rational(x + y),
        _ => ExactScalar::from_cyc(a.to_cyc().add(&b.to_cyc())),
    }
}

fn sub_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    match (a, b) {
        (ExactScalar::Rational(x), ExactScalar::Rational(y)) => ExactScalar::Rational(x - y),
        _ => ExactScalar::from_cyc(a.to_cyc().sub(&b.to_cyc())),
    }
}

fn mul_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    match (a, b) {
        (ExactScalar::Rational(x), ExactScalar::Rational(y)) => ExactScalar::Rational(x * y),
        (ExactScalar::Rational(x), ExactScalar::Cyc12(c))
        | (ExactScalar::Cyc12(c), ExactScalar::Rational(x)) => {
            if x.is_zero() {
                return ExactScalar::zero();
            }
            ExactScalar::Cyc12(Cyc12 {
                c: std::array::from_fn(|i| &c.c[i] * x),
            })
        }
        (ExactScalar::Cyc12(x), ExactScalar::Cyc12(y)) => ExactScalar::from_cyc(x.mul(y)),
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                $f(self, o)
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                $f(&self, &o)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                $f(&self, o)
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                $f(self, &o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

fn div_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    a.checked_div(b).expect("division by zero")
}
binop!(Div, div, div_ref);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Cyc12(c) => ExactScalar::Cyc12(c.neg()),
        }
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: &ExactScalar) {
        *self = add_ref(self, o);
    }
}

impl AddAssign<ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: ExactScalar) {
        *self = add_ref(self, &o);
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, o: &ExactScalar) {
        *self = sub_ref(self, o);
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, o: &ExactScalar) {
        *self = mul_ref(self, o);
    }
}

impl MulAssign<ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, o: ExactScalar) {
        *self = mul_ref(self, &o);
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |a, b| a * b)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::int(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::from_bigint(n)
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar::one()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Cyc12(c) => {
                let names = ["", "z", "z^2", "z^3"];
                let mut first = true;
                for (k, x) in c.c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let sep = if first {
                        if x.is_negative() { "-" } else { "" }
                    } else if x.is_negative() {
                        " - "
                    } else {
                        " + "
                    };
                    first = false;
                    let a = x.abs();
                    match (k, a.is_one()) {
                        (0, _) => write!(f, "{sep}{a}")?,
                        (_, true) => write!(f, "{sep}{}", names[k])?,
                        _ => write!(f, "{sep}{a}*{}", names[k])?,
                    }
                }
                Ok(())
            }
        }
    }
}

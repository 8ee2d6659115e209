//! Closed product formulas for the enumerations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    /// n×n ASMs.
    Asm,
    /// Cyclically symmetric plane partitions in an n×n×n box.
    Cspp,
    /// OOSASMs of order 4n − 1.
    Oosasm4nMinus1,
    /// OOSASMs of order 4n + 1.
    Oosasm4nPlus1,
    /// VHSASMs of order 2n + 1.
    Vhsasm,
    /// Σ 2^{μ} over ASTs of order n.
    Ast2Enum,
    /// Σ 3^{μ} over ASTs of order 2n + 1.
    Ast3EnumOdd,
    /// Σ 3^{μ} over ASTs of order 2n + 2.
    Ast3EnumEven,
    /// ASMs of order n with exactly one −1.
    AsmOneMinusOne,
}

impl ProductKind {
    pub const ALL: [ProductKind; 9] = [
        ProductKind::Asm,
        ProductKind::Cspp,
        ProductKind::Oosasm4nMinus1,
        ProductKind::Oosasm4nPlus1,
        ProductKind::Vhsasm,
        ProductKind::Ast2Enum,
        ProductKind::Ast3EnumOdd,
        ProductKind::Ast3EnumEven,
        ProductKind::AsmOneMinusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Asm => "ASM",
            ProductKind::Cspp => "CSPP",
            ProductKind::Oosasm4nMinus1 => "OOSASM_4N_MINUS_1",
            ProductKind::Oosasm4nPlus1 => "OOSASM_4N_PLUS_1",
            ProductKind::Vhsasm => "VHSASM",
            ProductKind::Ast2Enum => "AST_2ENUM",
            ProductKind::Ast3EnumOdd => "AST_3ENUM_ODD",
            ProductKind::Ast3EnumEven => "AST_3ENUM_EVEN",
            ProductKind::AsmOneMinusOne => "ASM_ONE_MINUS_ONE",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

fn fact(n: i64) -> BigRational {
    BigRational::from_integer((1..=n.max(0)).map(BigInt::from).product())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Π_{i=1}^n ((3i−1)!/(n+i)!)².
fn three_enum_core(n: i64) -> BigRational {
    (1..=n)
        .map(|i| {
            let r = fact(3 * i - 1) / fact(n + i);
            &r * &r
        })
        .fold(BigRational::one(), |a, b| a * b)
}

/// Exact value of the product for `kind` at n.
pub fn product_formula(kind: ProductKind, n: usize) -> BigRational {
    let n = n as i64;
    let prod = |range: std::ops::RangeInclusive<i64>, f: &dyn Fn(i64) -> BigRational| {
        range.map(f).fold(BigRational::one(), |a, b| a * b)
    };
    match kind {
        ProductKind::Asm => prod(0..=n - 1, &|i| fact(3 * i + 1) / fact(n + i)),
        ProductKind::Cspp => prod(0..=n - 1, &|i| int(3 * i + 2) * fact(3 * i) / fact(n + i)),
        ProductKind::Oosasm4nMinus1 => prod(0..=n - 1, &|i| {
            fact(3 * i + 2) * fact(3 * n + 3 * i) / (fact(2 * n + i) * fact(3 * n + i))
        }),
        ProductKind::Oosasm4nPlus1 => prod(1..=n, &|i| {
            fact(3 * i - 1) * fact(3 * n + 3 * i) / (fact(2 * n + i) * fact(3 * n + i + 1))
        }),
        // order 4m+1 is counted like OOSASMs of order 4m−1, order 4m+3 like 4m+1
        ProductKind::Vhsasm => {
            let m = n as usize / 2;
            if n % 2 == 0 {
                product_formula(ProductKind::Oosasm4nMinus1, m)
            } else {
                product_formula(ProductKind::Oosasm4nPlus1, m)
            }
        }
        ProductKind::Ast2Enum => int(2).pow((n * (n - 1) / 2).max(0) as u32),
        ProductKind::Ast3EnumOdd => int(3).pow((n * (n + 1)) as u32) * three_enum_core(n),
        ProductKind::Ast3EnumEven => {
            int(3).pow((n * (n + 2)) as u32) * fact(3 * n + 2) * fact(n) / (fact(2 * n + 1) * fact(2 * n + 1))
                * three_enum_core(n)
        }
        ProductKind::AsmOneMinusOne => {
            if n < 3 {
                return BigRational::from_integer(BigInt::from(0));
            }
            let c = n * (n - 1) * (n - 2) / 6;
            int(c) * int(c) * fact(n - 3)
        }
    }
}

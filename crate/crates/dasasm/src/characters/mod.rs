//! Schur and symplectic characters, and the character forms of the
//! partition functions at q = ζ = e^{iπ/6}.

mod classical;
mod partition;
mod products;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use classical::{principal_specialization, schur, symplectic, CharacterKind};
pub use partition::Partition;
pub use products::{product_formula, ProductKind};

use crate::error::{Error, Result};
use crate::exact_arith::ExactScalar;
use crate::formulas::{ast_partition_formula, oosasm_partition_formula, qast_partition_formula, Variant};
use crate::report::{run_points, CheckReport};
use crate::vertex_model::SpectralPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterForm {
    AstSchur,
    QastSchur,
    /// n = 2m − 1.
    OosasmSympOdd,
    /// n = 2m.
    OosasmSympEven,
}

impl CharacterForm {
    pub const ALL: [CharacterForm; 4] = [
        CharacterForm::AstSchur,
        CharacterForm::QastSchur,
        CharacterForm::OosasmSympOdd,
        CharacterForm::OosasmSympEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CharacterForm::AstSchur => "AST_SCHUR",
            CharacterForm::QastSchur => "QAST_SCHUR",
            CharacterForm::OosasmSympOdd => "OOSASM_SYMP_ODD",
            CharacterForm::OosasmSympEven => "OOSASM_SYMP_EVEN",
        }
    }

    /// The symplectic form matching the parity of n.
    pub fn oosasm(n: usize) -> Self {
        if n % 2 == 1 {
            CharacterForm::OosasmSympOdd
        } else {
            CharacterForm::OosasmSympEven
        }
    }

    /// Number of spectral parameters taken at order n.
    pub fn arity(self, n: usize) -> usize {
        match self {
            CharacterForm::AstSchur | CharacterForm::QastSchur => n,
            _ => n + 1,
        }
    }

    fn check_parity(self, n: usize) -> Result<()> {
        let ok = match self {
            CharacterForm::OosasmSympOdd => n % 2 == 1,
            CharacterForm::OosasmSympEven => n % 2 == 0,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{self} does not apply at n = {n}")))
        }
    }
}

impl fmt::Display for CharacterForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharacterForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        CharacterForm::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

fn three_pow(e: i64) -> BigRational {
    let t = BigRational::from_integer(BigInt::from(3));
    if e >= 0 {
        num_traits::pow(t, e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

/// Exponent e with the form equal to 3^e times its characters.
fn three_exponent(which: CharacterForm, n: usize) -> i64 {
    let n = n as i64;
    match which {
        CharacterForm::AstSchur | CharacterForm::QastSchur => -(n * (n + 1) / 2),
        CharacterForm::OosasmSympOdd => {
            let m = (n + 1) / 2;
            -(m - 1) * (2 * m - 1)
        }
        CharacterForm::OosasmSympEven => {
            let m = n / 2;
            -m * (2 * m - 1)
        }
    }
}

/// Shapes and variable counts of the character factors.
fn factors(which: CharacterForm, n: usize) -> Vec<(CharacterKind, Partition, usize)> {
    match which {
        CharacterForm::AstSchur => vec![(CharacterKind::Schur, Partition::doubled_staircase(n), 2 * n)],
        CharacterForm::QastSchur => vec![(CharacterKind::Schur, Partition::capped_staircase(n), 2 * n)],
        CharacterForm::OosasmSympOdd => {
            let m = n.div_ceil(2);
            vec![
                (CharacterKind::Symplectic, Partition::doubled_staircase(m), 2 * m),
                (CharacterKind::Symplectic, Partition::capped_staircase(m - 1), 2 * m - 1),
            ]
        }
        CharacterForm::OosasmSympEven => {
            let m = n / 2;
            vec![
                (CharacterKind::Symplectic, Partition::doubled_staircase(m), 2 * m),
                (CharacterKind::Symplectic, Partition::capped_staircase(m), 2 * m + 1),
            ]
        }
    }
}

/// The character form at q = ζ. AST and QAST take u_1, …, u_n and use p;
/// the OOSASM forms take u_1, …, u_{n+1} and ignore p.
pub fn character_formula_eval(
    which: CharacterForm,
    n: usize,
    us: &[BigRational],
    p: &BigRational,
) -> Result<ExactScalar> {
    which.check_parity(n)?;
    if us.len() != which.arity(n) {
        return Err(Error::ShapeMismatch(format!(
            "{which} at n = {n} takes {} parameters, got {}",
            which.arity(n),
            us.len()
        )));
    }
    let sq: Vec<ExactScalar> = us.iter().map(|u| ExactScalar::Rational(u * u)).collect();
    let mut acc = ExactScalar::Rational(three_pow(three_exponent(which, n)));
    for (kind, lambda, k) in factors(which, n) {
        acc *= match kind {
            CharacterKind::Schur => {
                let mut xs = Vec::with_capacity(2 * sq.len());
                for x in &sq {
                    xs.push(x.clone());
                    xs.push(x.inv()?);
                }
                schur(&lambda, &xs[..k])?
            }
            CharacterKind::Symplectic => symplectic(&lambda, &sq[..k])?,
        };
    }
    if matches!(which, CharacterForm::AstSchur | CharacterForm::QastSchur) {
        let p2 = ExactScalar::Rational(p * p);
        let p2b = p2.inv()?;
        for x in &sq {
            acc *= &p2 * x + ExactScalar::one() + &p2b * &x.inv()?;
        }
    }
    Ok(acc)
}

/// The character form at u_i = 1 (and p = 1), through principal
/// specializations.
pub fn character_formula_at_ones(which: CharacterForm, n: usize) -> Result<BigRational> {
    which.check_parity(n)?;
    let mut acc = three_pow(three_exponent(which, n));
    if matches!(which, CharacterForm::AstSchur | CharacterForm::QastSchur) {
        acc *= three_pow(n as i64);
    }
    for (kind, lambda, k) in factors(which, n) {
        acc *= principal_specialization(kind, &lambda, k);
    }
    Ok(acc)
}

/// The partition function the form should reproduce, at q = ζ.
fn formula_side(which: CharacterForm, n: usize, us: &[BigRational], p: &BigRational) -> Result<ExactScalar> {
    let mut u: Vec<ExactScalar> = us.iter().cloned().map(ExactScalar::Rational).collect();
    let p = ExactScalar::Rational(p.clone());
    if u.len() == n {
        u.push(p.clone());
    }
    let point = SpectralPoint::new(ExactScalar::zeta(), p, u);
    match which {
        CharacterForm::AstSchur => ast_partition_formula(n, &point, Variant::AtP),
        CharacterForm::QastSchur => qast_partition_formula(n, &point, Variant::AtP),
        _ => oosasm_partition_formula(n, &point),
    }
}

/// Compare the character form with the corresponding determinant or
/// Pfaffian formula at q = ζ on random rational points; both values must be
/// rational.
pub fn verify_character_form(which: CharacterForm, n: usize, seed: u64, points: usize) -> CheckReport {
    let mut report = CheckReport::new(&format!("character-{}", which.name().to_ascii_lowercase()), Some(n), seed, points);
    if let Err(e) = which.check_parity(n) {
        report.fail(e.to_string());
        return report;
    }
    run_points(&mut report, |s| {
        let us: Vec<BigRational> = (0..which.arity(n)).map(|_| s.rational()).collect();
        let p = s.rational();
        let lhs = character_formula_eval(which, n, &us, &p).map_err(|e| match e {
            Error::RepeatedVariables => Error::PoleHit("character denominator".into()),
            e => e,
        })?;
        let rhs = formula_side(which, n, &us, &p)?;
        let mut fails = Vec::new();
        if !lhs.is_rational() {
            fails.push(format!("character value {lhs} is not rational"));
        }
        if !rhs.is_rational() {
            fails.push(format!("formula value {rhs} is not rational"));
        }
        if lhs != rhs {
            fails.push(format!("character {lhs} != formula {rhs}"));
        }
        Ok(fails)
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::value_at_ones;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn values_at_ones() {
        assert_eq!(character_formula_at_ones(CharacterForm::AstSchur, 3).unwrap(), r(7));
        assert_eq!(character_formula_at_ones(CharacterForm::QastSchur, 3).unwrap(), r(20));
        assert_eq!(character_formula_at_ones(CharacterForm::OosasmSympOdd, 1).unwrap(), r(1));
        assert_eq!(character_formula_at_ones(CharacterForm::OosasmSympEven, 2).unwrap(), r(2));
        assert_eq!(character_formula_at_ones(CharacterForm::OosasmSympOdd, 3).unwrap(), r(6));
        assert_eq!(character_formula_at_ones(CharacterForm::OosasmSympEven, 4).unwrap(), r(33));
    }

    #[test]
    fn at_ones_matches_the_formula_limit() {
        // along u_i = t^i, evaluated at t = 1
        for n in 1..=3 {
            let v = value_at_ones(n, 2 * n as i64 + 2, |u| {
                let us: Vec<BigRational> = u.iter().map(|x| x.as_rational().unwrap().clone()).collect();
                character_formula_eval(CharacterForm::QastSchur, n, &us, &r(1))
            })
            .unwrap();
            assert_eq!(v, ExactScalar::Rational(character_formula_at_ones(CharacterForm::QastSchur, n).unwrap()));
        }
    }

    #[test]
    fn parity_is_enforced() {
        assert!(character_formula_eval(CharacterForm::OosasmSympOdd, 2, &[r(2), r(3), r(5)], &r(1)).is_err());
        assert!(character_formula_eval(CharacterForm::AstSchur, 2, &[r(2)], &r(1)).is_err());
    }

    #[test]
    fn forms_match_formulas() {
        for which in [CharacterForm::AstSchur, CharacterForm::QastSchur] {
            for n in 1..=3 {
                let rep = verify_character_form(which, n, 7, 3);
                assert!(rep.passed(), "{which} {n}: {:?}", rep.details);
            }
        }
        for n in 1..=4 {
            let rep = verify_character_form(CharacterForm::oosasm(n), n, 7, 3);
            assert!(rep.passed(), "oosasm {n}: {:?}", rep.details);
        }
    }

    #[test]
    fn names_parse() {
        for k in CharacterForm::ALL {
            assert_eq!(k.name().parse::<CharacterForm>().unwrap(), k);
        }
    }
}

//! Closed determinant and Pfaffian formulas for the partition functions,
//! compared against brute-force summation.

mod ast;
mod ik;
mod okada;
mod oosasm;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

pub use ast::{ast_partition_formula, ast_reduction_sides, qast_partition_formula};
pub use ik::{ast_via_ik, ik_bruteforce, ik_partition};
pub use okada::{okada_pfaffian_identity_check, okada_sides, pf_id_sides, w_det};
pub use oosasm::{oosasm_partition_formula, p_factor, q_factor};

use crate::error::{Error, Result};
use crate::exact_arith::{laurent_value_from_samples, ExactScalar};
use crate::report::{run_points, CheckReport};
use crate::vertex_model::{boundary_spec, partition_function, Sector, SpecKind, SpectralPoint, DEFAULT_Z_CAP};

/// Which determinant: the general one in u_{n+1}, or its specialization
/// u_{n+1} = p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Full,
    AtP,
}

/// Turn a vanishing denominator into a pole.
pub(crate) fn pole(what: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::ZeroInput => Error::PoleHit(what.to_string()),
        e => e,
    }
}

/// Value at u_1 = … = u_k = 1 of a Laurent polynomial f whose degree and
/// order in each variable are within ±`bound`. The closed forms have
/// removable poles there, so f is sampled along u_i = t^i at t = 2, 3, …
/// and the resulting Laurent polynomial in t is evaluated at t = 1.
pub fn value_at_ones(
    k: usize,
    bound: i64,
    f: impl Fn(&[ExactScalar]) -> Result<ExactScalar>,
) -> Result<ExactScalar> {
    let w = bound * (k * (k + 1) / 2) as i64;
    let nodes: Vec<BigRational> = (2..=2 * w + 2).map(|t| BigRational::from_integer(t.into())).collect();
    let values = nodes
        .iter()
        .map(|t| {
            let t = ExactScalar::Rational(t.clone());
            let u = (1..=k as i64).map(|e| t.pow(e)).collect::<Result<Vec<_>>>()?;
            f(&u)
        })
        .collect::<Result<Vec<_>>>()?;
    laurent_value_from_samples(&nodes, &values, -w, w, &BigRational::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaCase {
    AstFull,
    AstAtP,
    AstAsmRelation,
    QastFull,
    QastAtP,
    Oosasm,
}

impl FormulaCase {
    pub const ALL: [FormulaCase; 6] = [
        FormulaCase::AstFull,
        FormulaCase::AstAtP,
        FormulaCase::AstAsmRelation,
        FormulaCase::QastFull,
        FormulaCase::QastAtP,
        FormulaCase::Oosasm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaCase::AstFull => "ast-full",
            FormulaCase::AstAtP => "ast-at-p",
            FormulaCase::AstAsmRelation => "ast-asm-relation",
            FormulaCase::QastFull => "qast-full",
            FormulaCase::QastAtP => "qast-at-p",
            FormulaCase::Oosasm => "oosasm",
        }
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        FormulaCase::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

/// Outcome of a formula against brute force at seeded random points.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaReport {
    pub case: FormulaCase,
    pub n: usize,
    pub seed: u64,
    pub points: usize,
    /// One entry per accepted point.
    pub outcomes: Vec<bool>,
    pub rejected_points: usize,
    pub counterexample: Option<String>,
    #[serde(skip)]
    report: CheckReport,
}

impl Serialize for FormulaCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FormulaReport {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.outcomes.len() == self.points && self.outcomes.iter().all(|&b| b)
    }

    pub fn into_check_report(self) -> CheckReport {
        self.report
    }
}

fn describe(pt: &SpectralPoint) -> String {
    let u: Vec<String> = pt.u.iter().map(|x| x.to_string()).collect();
    format!("q={}, p={}, u=[{}]", pt.q, pt.p, u.join(", "))
}

/// (formula, brute force) at one point.
fn sides(case: FormulaCase, n: usize, pt: &SpectralPoint) -> Result<(ExactScalar, ExactScalar)> {
    let spec = match case {
        FormulaCase::QastFull | FormulaCase::QastAtP => SpecKind::Qast,
        FormulaCase::Oosasm => SpecKind::Oosasm,
        _ => SpecKind::Ast,
    };
    let (k, norm) = boundary_spec(spec, &pt.q, &pt.p)?;
    let sector = if spec == SpecKind::Qast { Sector::Up } else { Sector::All };
    let brute = partition_function(n, pt, &k, sector, norm)?;
    let formula = match case {
        FormulaCase::AstFull => ast_partition_formula(n, pt, Variant::Full)?,
        FormulaCase::AstAtP => ast_partition_formula(n, pt, Variant::AtP)?,
        FormulaCase::AstAsmRelation => ast_via_ik(n, pt)?,
        FormulaCase::QastFull => qast_partition_formula(n, pt, Variant::Full)?,
        FormulaCase::QastAtP => qast_partition_formula(n, pt, Variant::AtP)?,
        FormulaCase::Oosasm => oosasm_partition_formula(n, pt)?,
    };
    Ok((formula, brute))
}

/// Compare one formula with the brute-force partition function at `points`
/// seeded random points; the at-p cases put u_{n+1} = p.
pub fn formula_vs_bruteforce(case: FormulaCase, n: usize, seed: u64, points: usize) -> Result<FormulaReport> {
    if n > DEFAULT_Z_CAP {
        return Err(Error::CapExceeded {
            what: format!("formula {case}"),
            n,
            cap: DEFAULT_Z_CAP,
        });
    }
    let mut report = CheckReport::new(case.name(), Some(n), seed, points);
    let mut outcomes = Vec::new();
    let mut counterexample = None;
    run_points(&mut report, |s| {
        let q = s.scalar();
        let p = s.scalar();
        let mut u = s.scalars(n + 1);
        if matches!(case, FormulaCase::AstAtP | FormulaCase::AstAsmRelation | FormulaCase::QastAtP) {
            u[n] = p.clone();
        }
        let pt = SpectralPoint::new(q, p, u);
        let (f, b) = sides(case, n, &pt)?;
        let ok = f == b;
        outcomes.push(ok);
        if ok {
            return Ok(vec![]);
        }
        let msg = format!("{}: formula {f}, brute force {b}", describe(&pt));
        counterexample.get_or_insert_with(|| msg.clone());
        Ok(vec![msg])
    });
    Ok(FormulaReport {
        case,
        n,
        seed,
        points,
        outcomes,
        rejected_points: report.rejected_points,
        counterexample,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_names_roundtrip() {
        for c in FormulaCase::ALL {
            assert_eq!(c.name().parse::<FormulaCase>().unwrap(), c);
        }
        assert!("ast-half".parse::<FormulaCase>().is_err());
    }

    #[test]
    fn listed_cases_pass() {
        for (c, n) in [(FormulaCase::AstFull, 3), (FormulaCase::Oosasm, 2), (FormulaCase::QastAtP, 1)] {
            let r = formula_vs_bruteforce(c, n, 1, 20).unwrap();
            assert!(r.passed(), "{c}: {:?}", r.counterexample);
            assert_eq!(r.outcomes.len(), 20);
        }
    }

    #[test]
    fn every_case_small_orders() {
        for c in FormulaCase::ALL {
            for n in 0..=3 {
                let r = formula_vs_bruteforce(c, n, 2, 3).unwrap();
                assert!(r.passed(), "{c} n={n}: {:?}", r.counterexample);
            }
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(
            formula_vs_bruteforce(FormulaCase::AstFull, 6, 0, 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}

//! Outcome of a verification run.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::RationalSampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjecturePass,
    ConjectureFail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjecturePass => "conjecture-pass",
            Status::ConjectureFail => "conjecture-fail",
        }
    }

    pub fn is_conjecture(self) -> bool {
        matches!(self, Status::ConjecturePass | Status::ConjectureFail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: Option<usize>,
    pub seed: u64,
    pub points: usize,
    pub status: Status,
    pub rejected_points: usize,
    pub details: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, n: Option<usize>, seed: u64, points: usize) -> Self {
        CheckReport {
            check: check.to_string(),
            n,
            seed,
            points,
            status: Status::Pass,
            rejected_points: 0,
            details: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::ConjecturePass)
    }

    /// Record a failure; the status becomes Fail.
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.status = Status::Fail;
        self.details.push(msg.into());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }

    /// Fail unless `ok`.
    pub fn expect(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.fail(msg);
        }
    }

    /// Fold another report's outcome into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.rejected_points += other.rejected_points;
        let prefix = match other.n {
            Some(n) => format!("{} n={n}", other.check),
            None => other.check.clone(),
        };
        if !other.passed() {
            self.status = Status::Fail;
        }
        for d in other.details {
            self.details.push(format!("{prefix}: {d}"));
        }
    }

    /// Turn the status into its conjecture counterpart.
    pub fn as_conjecture(mut self) -> Self {
        self.status = match self.status {
            Status::Pass | Status::ConjecturePass => Status::ConjecturePass,
            _ => Status::ConjectureFail,
        };
        self
    }
}

fn is_pole(e: &Error) -> bool {
    matches!(e, Error::ZeroInput | Error::DegenerateQ | Error::PoleHit(_))
}

/// Run `trial` at `report.points` accepted random points drawn from one
/// sampler seeded with `report.seed`. A trial returns its failure messages;
/// a pole rejects the point and draws another, up to a budget.
pub(crate) fn run_points(
    report: &mut CheckReport,
    mut trial: impl FnMut(&mut RationalSampler) -> Result<Vec<String>>,
) {
    let mut s = RationalSampler::new(report.seed);
    let budget = 50 * report.points.max(1);
    let mut accepted = 0;
    while accepted < report.points {
        match trial(&mut s) {
            Ok(fails) => {
                accepted += 1;
                for f in fails {
                    report.fail(format!("point {accepted}: {f}"));
                }
            }
            Err(e) if is_pole(&e) => {
                report.rejected_points += 1;
                if report.rejected_points > budget {
                    report.fail(format!("retry budget exhausted: {e}"));
                    return;
                }
            }
            Err(e) => {
                report.fail(format!("point {}: {e}", accepted + 1));
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poles_are_resampled() {
        let mut r = CheckReport::new("x", None, 0, 3);
        let mut k = 0;
        run_points(&mut r, |_| {
            k += 1;
            if k % 2 == 0 {
                Err(Error::PoleHit("test".into()))
            } else {
                Ok(vec![])
            }
        });
        assert!(r.passed());
        assert_eq!(r.rejected_points, 2);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = CheckReport::new("x", Some(2), 0, 2);
        run_points(&mut r, |_| Ok(vec!["bad".into()]));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.details.len(), 2);
        let c = r.clone().as_conjecture();
        assert_eq!(c.status, Status::ConjectureFail);
    }
}

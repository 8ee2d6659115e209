//! ρ on ASTs against the position of the 1 in the top row of ASMs.

use std::collections::BTreeMap;

use super::distribution::{joint_distribution_with_cap, DistributionTable};
use super::{inv, Statistic};
use crate::error::Result;
use crate::objects::{enumerate_with_cap, Family, Object, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoReport {
    pub n: usize,
    pub ast_rho: BTreeMap<i64, u64>,
    pub asm_top: BTreeMap<i64, u64>,
    /// (μ_∇, inv_∇, ρ) over AST(n).
    pub ast_joint: DistributionTable,
    /// (μ, inv, top-row position) over ASM(n).
    pub asm_joint: BTreeMap<Vec<i64>, u64>,
}

impl RhoReport {
    /// Whether ρ is distributed like the top-row position.
    pub fn distributions_match(&self) -> bool {
        self.ast_rho == self.asm_top
    }

    /// Whether the refinement by (μ, inv) survives.
    pub fn joint_match(&self) -> bool {
        self.ast_joint.counts == self.asm_joint
    }
}

pub fn rho_conjecture(n: usize) -> Result<RhoReport> {
    rho_conjecture_with_cap(n, DEFAULT_CAP)
}

pub fn rho_conjecture_with_cap(n: usize, cap: usize) -> Result<RhoReport> {
    let ast_joint = joint_distribution_with_cap(
        Family::Ast,
        n,
        &[Statistic::MuNabla, Statistic::InvNabla, Statistic::Rho],
        cap,
    )?;
    let ast_rho = ast_joint.marginal(2);
    let mut asm_top = BTreeMap::new();
    let mut asm_joint = BTreeMap::new();
    for o in enumerate_with_cap(Family::Asm, n, cap)? {
        let Object::Asm(a) = o else { unreachable!() };
        if n == 0 {
            continue;
        }
        let top = a.row(1).iter().position(|&x| x == 1).unwrap_or(0) as i64 + 1;
        *asm_top.entry(top).or_insert(0) += 1;
        *asm_joint
            .entry(vec![a.count(-1) as i64, inv(&a), top])
            .or_insert(0) += 1;
    }
    Ok(RhoReport {
        n,
        ast_rho,
        asm_top,
        ast_joint,
        asm_joint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_matches_up_to_five() {
        for n in 1..=5 {
            assert!(rho_conjecture(n).unwrap().distributions_match(), "n = {n}");
        }
    }

    #[test]
    fn refinement_breaks() {
        assert!(rho_conjecture(1).unwrap().joint_match());
        for n in 2..=5 {
            assert!(!rho_conjecture(n).unwrap().joint_match(), "n = {n}");
        }
    }
}

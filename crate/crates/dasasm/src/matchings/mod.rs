//! Perfect matchings of the diamond graph Q_n and their relation to ASTs.

mod graph;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

pub use graph::{build_qn, DiamondGraph, Node};

use crate::error::{Error, Result};
use crate::objects::{enumerate_sign_triangles, Object, SignTriangle, TriFamily};
use crate::report::CheckReport;
use crate::statistics::{statistic, Statistic};

/// Largest n accepted by [`matching_identities`].
pub const DEFAULT_MATCHING_CAP: usize = 4;

type Mask = Vec<u64>;

fn mask_of(g: &DiamondGraph, removed: &BTreeSet<usize>) -> Result<Mask> {
    let mut m = vec![0u64; g.nodes().len().div_ceil(64)];
    let gone: BTreeSet<usize> = removed
        .iter()
        .map(|j| {
            g.labels()
                .get(j)
                .copied()
                .ok_or_else(|| Error::UnknownIdentifier(format!("vertex label {j}")))
        })
        .collect::<Result<_>>()?;
    for v in (0..g.nodes().len()).filter(|v| !gone.contains(v)) {
        m[v / 64] |= 1 << (v % 64);
    }
    Ok(m)
}

fn has(m: &Mask, v: usize) -> bool {
    m[v / 64] >> (v % 64) & 1 == 1
}

fn drop2(m: &Mask, a: usize, b: usize) -> Mask {
    let mut m = m.clone();
    m[a / 64] &= !(1 << (a % 64));
    m[b / 64] &= !(1 << (b % 64));
    m
}

/// A remaining vertex of least remaining degree, or `None` when none is left.
fn pivot(g: &DiamondGraph, m: &Mask) -> Option<(usize, usize)> {
    (0..g.nodes().len())
        .filter(|&v| has(m, v))
        .map(|v| (g.neighbors(v).iter().filter(|&&w| has(m, w)).count(), v))
        .min()
}

fn count_rec(g: &DiamondGraph, m: &Mask, memo: &mut HashMap<Mask, u128>) -> u128 {
    if let Some(&c) = memo.get(m) {
        return c;
    }
    let c = match pivot(g, m) {
        None => 1,
        Some((0, _)) => 0,
        Some((_, v)) => g
            .neighbors(v)
            .iter()
            .filter(|&&w| has(m, w))
            .map(|&w| count_rec(g, &drop2(m, v, w), memo))
            .sum(),
    };
    memo.insert(m.clone(), c);
    c
}

/// Perfect matchings of `g` with the labeled vertices in `removed` deleted.
pub fn count_perfect_matchings(g: &DiamondGraph, removed: &BTreeSet<usize>) -> Result<u128> {
    let m = mask_of(g, removed)?;
    let left: u32 = m.iter().map(|w| w.count_ones()).sum();
    if left % 2 == 1 {
        return Ok(0);
    }
    Ok(count_rec(g, &m, &mut HashMap::new()))
}

/// Every perfect matching of `g` minus `removed`, each as sorted edge indices.
pub fn perfect_matchings(g: &DiamondGraph, removed: &BTreeSet<usize>) -> Result<Vec<Vec<usize>>> {
    let edge_of: HashMap<(usize, usize), usize> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, &(a, b))| [((a, b), k), ((b, a), k)])
        .collect();
    fn rec(
        g: &DiamondGraph,
        edge_of: &HashMap<(usize, usize), usize>,
        m: &Mask,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        match pivot(g, m) {
            None => {
                let mut e = cur.clone();
                e.sort_unstable();
                out.push(e);
            }
            Some((0, _)) => {}
            Some((_, v)) => {
                for &w in g.neighbors(v).iter().filter(|&&w| has(m, w)) {
                    cur.push(edge_of[&(v, w)]);
                    rec(g, edge_of, &drop2(m, v, w), cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &edge_of, &mask_of(g, removed)?, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Diamond entries of a matching: matched edges on each diamond, minus one.
pub fn matching_to_triangle(g: &DiamondGraph, matching: &[usize]) -> Result<SignTriangle> {
    let set: BTreeSet<usize> = matching.iter().copied().collect();
    let n = g.n();
    let rows: Vec<Vec<i8>> = (1..=n)
        .map(|i| {
            (i..=2 * n - i)
                .map(|j| g.diamonds()[&(i, j)].iter().filter(|e| set.contains(e)).count() as i8 - 1)
                .collect()
        })
        .collect();
    SignTriangle::from_rows(TriFamily::Ast, n, &rows)
}

fn subsets(items: &[usize], k: usize) -> Vec<BTreeSet<usize>> {
    if k == 0 {
        return vec![BTreeSet::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<BTreeSet<usize>> = subsets(&items[1..], k - 1);
    for s in &mut with {
        s.insert(items[0]);
    }
    with.extend(subsets(&items[1..], k));
    with
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub n: usize,
    /// 2^{C(n+1,2)}.
    pub expected: u128,
    /// (a): Σ_V #matchings(Q_n − V) over (n−1)-sets V of labels.
    pub matching_total: u128,
    /// Σ_{T ∈ AST(n)} 2^{#1's(T)}.
    pub ones_weighted: u128,
    /// 2^n Σ_{T ∈ AST(n)} 2^{μ_∇(T)}.
    pub two_enumeration: u128,
    /// (c): problems found in the fiber audit; empty when it holds.
    pub fiber_failures: Vec<String>,
}

impl MatchingReport {
    pub fn all_pass(&self) -> bool {
        self.matching_total == self.expected
            && self.ones_weighted == self.expected
            && self.two_enumeration == self.expected
            && self.fiber_failures.is_empty()
    }

    pub fn into_check_report(self) -> CheckReport {
        let mut r = CheckReport::new("matchings", Some(self.n), 0, 0);
        r.expect(
            self.matching_total == self.expected,
            format!("matching total {} != {}", self.matching_total, self.expected),
        );
        r.expect(
            self.ones_weighted == self.expected,
            format!("sum of 2^ones over AST {} != {}", self.ones_weighted, self.expected),
        );
        r.expect(
            self.two_enumeration == self.expected,
            format!("2^n times the 2-enumeration {} != {}", self.two_enumeration, self.expected),
        );
        for f in self.fiber_failures {
            r.fail(f);
        }
        r
    }
}

/// The matching identities at n, with the default cap.
pub fn matching_identities(n: usize) -> Result<MatchingReport> {
    matching_identities_with_cap(n, DEFAULT_MATCHING_CAP)
}

pub fn matching_identities_with_cap(n: usize, cap: usize) -> Result<MatchingReport> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "matching identities".into(),
            n,
            cap,
        });
    }
    if n == 0 {
        return Err(Error::ShapeMismatch("Q_n needs n >= 1".into()));
    }
    let g = build_qn(n);
    let labels: Vec<usize> = g.labels().keys().copied().collect();
    let sets = subsets(&labels, n - 1);
    let matching_total = sets
        .par_iter()
        .map(|v| count_perfect_matchings(&g, v))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();

    let asts = enumerate_sign_triangles(TriFamily::Ast, n);
    let ones_weighted = asts.iter().map(|t| 1u128 << t.count(1)).sum();
    let mut two = 0u128;
    for t in &asts {
        two += 1u128 << statistic(Statistic::MuNabla, &Object::Sign(t.clone()))?;
    }

    let mut fibers: BTreeMap<SignTriangle, u128> = BTreeMap::new();
    let mut fiber_failures = Vec::new();
    for v in &sets {
        for m in perfect_matchings(&g, v)? {
            let t = matching_to_triangle(&g, &m)?;
            if let Err(e) = t.validate() {
                fiber_failures.push(format!("matching with V = {v:?} gives a non-AST {}: {e}", t.to_text()));
            }
            *fibers.entry(t).or_default() += 1;
        }
    }
    for t in &asts {
        let want = 1u128 << t.count(1);
        let got = fibers.remove(t).unwrap_or(0);
        if got != want {
            fiber_failures.push(format!("fiber of {} has {got} matchings, expected {want}", t.to_text()));
        }
    }
    for t in fibers.keys() {
        fiber_failures.push(format!("{} is hit but is not an AST", t.to_text()));
    }

    Ok(MatchingReport {
        n,
        expected: 1u128 << (n * (n + 1) / 2),
        matching_total,
        ones_weighted,
        two_enumeration: two << n,
        fiber_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_perfect_matchings(&build_qn(1), &set(&[])).unwrap(), 2);
        let g = build_qn(2);
        let a = count_perfect_matchings(&g, &set(&[1])).unwrap();
        let b = count_perfect_matchings(&g, &set(&[3])).unwrap();
        assert_eq!(a + b, 8);
        // nothing removed leaves an odd imbalance
        assert_eq!(count_perfect_matchings(&g, &set(&[])).unwrap(), 0);
        assert_eq!(count_perfect_matchings(&g, &set(&[1, 3])).unwrap(), 0);
    }

    #[test]
    fn odd_vertex_count_is_zero() {
        let g = build_qn(3);
        assert_eq!(count_perfect_matchings(&g, &set(&[1])).unwrap(), 0);
    }

    #[test]
    fn unknown_label() {
        assert!(count_perfect_matchings(&build_qn(3), &set(&[3])).is_err());
    }

    #[test]
    fn enumeration_agrees_with_counting() {
        let g = build_qn(3);
        for v in subsets(&[1, 2, 4, 5], 2) {
            assert_eq!(
                perfect_matchings(&g, &v).unwrap().len() as u128,
                count_perfect_matchings(&g, &v).unwrap()
            );
        }
    }

    #[test]
    fn identities_hold() {
        for (n, total) in [(1, 2u128), (2, 8), (3, 64)] {
            let r = matching_identities(n).unwrap();
            assert_eq!(r.matching_total, total);
            assert!(r.all_pass(), "{r:?}");
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(matching_identities(5), Err(Error::CapExceeded { .. })));
    }
}

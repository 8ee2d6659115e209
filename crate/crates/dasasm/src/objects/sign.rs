//! Alternating sign triangles and their dual, quasi and mixed relatives.

use std::fmt;

use super::shape::{alternates, first_nonzero, format_rows, parse_rows, Centered};
use super::Violation;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriFamily {
    Ast,
    Dast,
    Qast,
    Mast,
}

impl fmt::Display for TriFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriFamily::Ast => "AST",
            TriFamily::Dast => "DAST",
            TriFamily::Qast => "QAST",
            TriFamily::Mast => "MAST",
        })
    }
}

/// Entries a_{i,j}, 1 ≤ i ≤ n, i ≤ j ≤ 2n−i, tagged with a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignTriangle {
    family: TriFamily,
    t: Centered,
}

impl SignTriangle {
    pub fn from_rows(family: TriFamily, n: usize, rows: &[Vec<i8>]) -> Result<Self> {
        Ok(SignTriangle {
            family,
            t: Centered::from_rows(n, rows)?,
        })
    }

    pub(crate) fn from_centered(family: TriFamily, t: Centered) -> Self {
        SignTriangle { family, t }
    }

    pub(crate) fn centered(&self) -> &Centered {
        &self.t
    }

    pub fn family(&self) -> TriFamily {
        self.family
    }

    /// The same entries under another family tag.
    pub fn retag(&self, family: TriFamily) -> SignTriangle {
        SignTriangle {
            family,
            t: self.t.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.t.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.t.get(i, j)
    }

    pub fn row(&self, i: usize) -> &[i8] {
        self.t.row(i)
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.t.row_vecs()
    }

    pub fn column(&self, j: usize) -> Vec<i8> {
        self.t.column(j)
    }

    pub fn column_sum(&self, j: usize) -> i8 {
        self.t.column(j).iter().sum()
    }

    pub fn row_sum(&self, i: usize) -> i8 {
        self.t.row(i).iter().sum()
    }

    pub fn count(&self, v: i8) -> usize {
        self.t.count(v)
    }

    /// The bottom entry a_{n,n}; 0 for the empty triangle.
    pub fn bottom(&self) -> i8 {
        let n = self.order();
        if n == 0 {
            0
        } else {
            self.get(n, n)
        }
    }

    /// Check the defining conditions of the tagged family; rows are checked
    /// before columns.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.order();
        for i in 1..=n {
            let r = self.row(i);
            if !alternates(r.iter().copied()) {
                return Err(Violation::new(format!(
                    "row {i}: nonzero entries do not alternate"
                )));
            }
            let s = self.row_sum(i);
            match self.family {
                TriFamily::Ast if s != 1 => {
                    return Err(Violation::new(format!("row {i} sums to {s}, expected 1")));
                }
                TriFamily::Qast if i < n && s != 1 => {
                    return Err(Violation::new(format!("row {i} sums to {s}, expected 1")));
                }
                TriFamily::Qast if i == n && !(0..=1).contains(&s) => {
                    return Err(Violation::new(format!(
                        "row {i} sums to {s}, expected 0 or 1"
                    )));
                }
                TriFamily::Mast if first_nonzero(r) == Some(-1) => {
                    return Err(Violation::new(format!("row {i} first nonzero is -1")));
                }
                _ => {}
            }
        }
        for j in 1..=self.t.width() {
            let c = self.column(j);
            if !alternates(c.iter().copied()) {
                return Err(Violation::new(format!(
                    "column {j}: nonzero entries do not alternate"
                )));
            }
            if first_nonzero(&c) == Some(-1) {
                return Err(Violation::new(format!("column {j} topmost nonzero is -1")));
            }
            let s: i8 = c.iter().sum();
            let zero_sum = match self.family {
                TriFamily::Dast => true,
                TriFamily::Mast => j > n,
                _ => false,
            };
            if zero_sum && s != 0 {
                return Err(Violation::new(format!("column {j} sums to {s}, expected 0")));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        format_rows(self.rows())
    }

    pub fn from_text(family: TriFamily, s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        SignTriangle::from_rows(family, rows.len(), &rows)
    }
}

/// Visit every triangle of the family at order n in lexicographic order.
pub fn visit_sign_triangles(family: TriFamily, n: usize, mut f: impl FnMut(&SignTriangle)) {
    let mut st = SignDfs {
        family,
        n,
        t: SignTriangle::from_centered(family, Centered::zeros(n)),
        col: vec![0; 2 * n + 1],
    };
    st.cell(1, 1, 0, 0, &mut f);
}

pub fn enumerate_sign_triangles(family: TriFamily, n: usize) -> Vec<SignTriangle> {
    let mut out = Vec::new();
    visit_sign_triangles(family, n, |t| out.push(t.clone()));
    out
}

struct SignDfs {
    family: TriFamily,
    n: usize,
    t: SignTriangle,
    // column partial sums; topmost-1 plus alternation keeps them in {0, 1}
    col: Vec<i8>,
}

impl SignDfs {
    /// `last` is the last nonzero entry of the current row (0 if none),
    /// `sum` the row sum so far.
    fn cell(&mut self, i: usize, j: usize, last: i8, sum: i8, f: &mut impl FnMut(&SignTriangle)) {
        let n = self.n;
        if i > n {
            f(&self.t);
            return;
        }
        let right = 2 * n - i;
        if j > right {
            let ok = match self.family {
                TriFamily::Ast => sum == 1,
                TriFamily::Qast => sum == 1 || (i == n && sum == 0),
                TriFamily::Dast | TriFamily::Mast => true,
            };
            if ok {
                self.cell(i + 1, i + 1, 0, 0, f);
            }
            return;
        }
        let bottom_of_column = i == j.min(2 * n - j);
        for v in [-1i8, 0, 1] {
            if v != 0 && v == last {
                continue;
            }
            if self.family == TriFamily::Mast && last == 0 && v == -1 {
                continue;
            }
            let c = self.col[j] + v;
            if !(0..=1).contains(&c) {
                continue;
            }
            if bottom_of_column {
                let zero_sum = match self.family {
                    TriFamily::Dast => true,
                    TriFamily::Mast => j > n,
                    _ => false,
                };
                if zero_sum && c != 0 {
                    continue;
                }
            }
            self.col[j] = c;
            self.t.t.set(i, j, v);
            let nl = if v == 0 { last } else { v };
            self.cell(i, j + 1, nl, sum + v, f);
            self.col[j] -= v;
        }
        self.t.t.set(i, j, 0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ast(rows: &[Vec<i8>]) -> SignTriangle {
        SignTriangle::from_rows(TriFamily::Ast, rows.len(), rows).unwrap()
    }

    #[test]
    fn listed_order_three_asts() {
        let listed = [
            ast(&[vec![1, 0, 0, 0, 0], vec![1, 0, 0], vec![1]]),
            ast(&[vec![0, 0, 0, 1, 0], vec![1, 0, 0], vec![1]]),
            ast(&[vec![0, 0, 0, 0, 1], vec![1, 0, 0], vec![1]]),
            ast(&[vec![1, 0, 0, 0, 0], vec![0, 0, 1], vec![1]]),
            ast(&[vec![0, 1, 0, 0, 0], vec![0, 0, 1], vec![1]]),
            ast(&[vec![0, 0, 0, 0, 1], vec![0, 0, 1], vec![1]]),
            ast(&[vec![0, 0, 1, 0, 0], vec![1, -1, 1], vec![1]]),
        ];
        let mut listed = listed.to_vec();
        listed.sort();
        assert_eq!(enumerate_sign_triangles(TriFamily::Ast, 3), listed);
    }

    #[test]
    fn listed_order_three_dasts() {
        let all = enumerate_sign_triangles(TriFamily::Dast, 3);
        assert_eq!(all.len(), 8);
        let zero = SignTriangle::from_rows(
            TriFamily::Dast,
            3,
            &[vec![0; 5], vec![0; 3], vec![0]],
        )
        .unwrap();
        assert!(zero.validate().is_ok());
        assert!(all.contains(&zero));
        let last = SignTriangle::from_rows(
            TriFamily::Dast,
            3,
            &[vec![0, 0, 0, 1, 0], vec![0, 1, -1], vec![-1]],
        )
        .unwrap();
        assert!(all.contains(&last));
    }

    #[test]
    fn topmost_violation_message() {
        let t = ast(&[vec![1, -1, 1], vec![1]]);
        assert_eq!(
            t.validate().unwrap_err().to_string(),
            "column 2 topmost nonzero is -1"
        );
    }

    #[test]
    fn family_counts() {
        let counts = |f| (1..=4).map(|n| enumerate_sign_triangles(f, n).len()).collect::<Vec<_>>();
        assert_eq!(counts(TriFamily::Ast), vec![1, 2, 7, 42]);
        assert_eq!(counts(TriFamily::Qast), vec![2, 5, 20, 132]);
        assert_eq!(counts(TriFamily::Mast), vec![2, 5, 20, 132]);
    }

    #[test]
    fn dfs_agrees_with_validate_order_2() {
        for fam in [TriFamily::Ast, TriFamily::Dast, TriFamily::Qast, TriFamily::Mast] {
            let mut hits = Vec::new();
            for code in 0..3usize.pow(4) {
                let d: Vec<i8> = (0..4).map(|k| ((code / 3usize.pow(3 - k)) % 3) as i8 - 1).collect();
                let t = SignTriangle::from_rows(fam, 2, &[d[..3].to_vec(), vec![d[3]]]).unwrap();
                if t.validate().is_ok() {
                    hits.push(t);
                }
            }
            assert_eq!(hits, enumerate_sign_triangles(fam, 2), "{fam}");
        }
    }
}

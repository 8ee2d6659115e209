//! Odd DASASM-triangles: the fundamental triangle of a (2n+1)×(2n+1)
//! diagonally and antidiagonally symmetric ASM.

use super::asm::Asm;
use super::shape::{alternates, first_nonzero, format_rows, parse_rows, Centered};
use super::Violation;
use crate::error::{Error, Result};

/// Entries a_{i,j}, 1 ≤ i ≤ n+1, i ≤ j ≤ 2n+2−i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DasasmTriangle {
    t: Centered,
}

impl DasasmTriangle {
    pub fn from_rows(n: usize, rows: &[Vec<i8>]) -> Result<Self> {
        Ok(DasasmTriangle {
            t: Centered::from_rows(n + 1, rows)?,
        })
    }

    pub(crate) fn from_centered(t: Centered) -> Self {
        DasasmTriangle { t }
    }

    pub(crate) fn centered(&self) -> &Centered {
        &self.t
    }

    pub fn order(&self) -> usize {
        self.t.rows() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.t.get(i, j)
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: i8) {
        self.t.set(i, j, v)
    }

    pub fn row(&self, i: usize) -> &[i8] {
        self.t.row(i)
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.t.row_vecs()
    }

    /// The central entry a_{n+1,n+1}.
    pub fn bottom(&self) -> i8 {
        let n = self.order();
        self.get(n + 1, n + 1)
    }

    /// Entries on the diagonal and antidiagonal portions: the left boundary,
    /// the right boundary and the central entry.
    pub fn diagonal_entries(&self) -> Vec<i8> {
        let n = self.order();
        let mut d: Vec<i8> = (1..=n).map(|i| self.get(i, i)).collect();
        d.extend((1..=n).map(|i| self.get(i, 2 * n + 2 - i)));
        d.push(self.bottom());
        d
    }

    /// N_α: the number of α's among [`Self::diagonal_entries`].
    pub fn n_alpha(&self, alpha: i8) -> usize {
        self.diagonal_entries().iter().filter(|&&x| x == alpha).count()
    }

    /// Whether (i, j) is a bulk position (not on a diagonal).
    pub fn is_bulk(&self, i: usize, j: usize) -> bool {
        let n = self.order();
        i <= n && j > i && j < 2 * n + 2 - i
    }

    /// Sum of the bulk entries of column j strictly above row i.
    pub fn column_sum_above(&self, i: usize, j: usize) -> i8 {
        (1..i).filter(|&k| self.is_bulk(k, j)).map(|k| self.get(k, j)).sum()
    }

    /// The hook sequence attached to j ∈ 1..=n+1: down column j, along row j,
    /// up column 2n+2−j.
    pub fn hook(&self, j: usize) -> Vec<i8> {
        let n = self.order();
        let r = 2 * n + 2 - j;
        let mut seq: Vec<i8> = (1..j).map(|i| self.get(i, j)).collect();
        if j == n + 1 {
            seq.push(self.get(j, j));
            seq.extend((1..j).rev().map(|i| self.get(i, j)));
            return seq;
        }
        seq.extend_from_slice(self.row(j));
        seq.extend((1..j).rev().map(|i| self.get(i, r)));
        seq
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.order();
        for j in 1..=n {
            let h = self.hook(j);
            if !alternates(h.iter().copied()) {
                return Err(Violation::new(format!(
                    "hook {j}: nonzero entries do not alternate"
                )));
            }
            let s: i32 = h.iter().map(|&x| i32::from(x)).sum();
            if s != 1 {
                return Err(Violation::new(format!("hook {j} sums to {s}, expected 1")));
            }
        }
        let c = self.t.column(n + 1);
        if !alternates(c.iter().copied()) {
            return Err(Violation::new(format!(
                "hook {}: central column does not alternate",
                n + 1
            )));
        }
        if first_nonzero(&c) != Some(1) {
            return Err(Violation::new(format!(
                "hook {}: central column does not start with 1",
                n + 1
            )));
        }
        if self.bottom() == 0 {
            return Err(Violation::new(format!("hook {}: central entry is 0", n + 1)));
        }
        Ok(())
    }

    /// Unfold to the full (2n+1)×(2n+1) matrix via both reflections.
    pub fn to_matrix(&self) -> Vec<Vec<i8>> {
        let n = self.order();
        let m = 2 * n + 1;
        let mut a = vec![vec![0i8; m]; m];
        for i in 1..=n + 1 {
            for j in i..=2 * n + 2 - i {
                let v = self.get(i, j);
                for (r, c) in [(i, j), (j, i), (m + 1 - j, m + 1 - i), (m + 1 - i, m + 1 - j)] {
                    a[r - 1][c - 1] = v;
                }
            }
        }
        a
    }

    /// Restrict a (2n+1)×(2n+1) matrix to its fundamental triangle.
    pub fn from_matrix(a: &[Vec<i8>]) -> Result<Self> {
        let m = a.len();
        if m % 2 == 0 || a.iter().any(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!(
                "expected an odd square matrix, got {m} rows"
            )));
        }
        let n = (m - 1) / 2;
        let rows: Vec<Vec<i8>> = (1..=n + 1)
            .map(|i| (i..=2 * n + 2 - i).map(|j| a[i - 1][j - 1]).collect())
            .collect();
        DasasmTriangle::from_rows(n, &rows)
    }

    pub fn to_asm(&self) -> Result<Asm> {
        Asm::from_rows(&self.to_matrix())
    }

    pub fn to_text(&self) -> String {
        format_rows(self.rows())
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let rows = parse_rows(s)?;
        let n = rows.len().checked_sub(1).ok_or_else(|| {
            Error::ShapeMismatch("a triangle needs at least one row".into())
        })?;
        DasasmTriangle::from_rows(n, &rows)
    }
}

/// Visit every odd DASASM-triangle of order n in lexicographic order.
///
/// Row prefixes start at the bulk column sum of the row's left column, so
/// the alternation of every hook reduces to partial sums staying in {0, 1}.
pub fn visit_dasasm_triangles(n: usize, mut f: impl FnMut(&DasasmTriangle)) {
    let mut st = TriDfs {
        n,
        t: DasasmTriangle::from_centered(Centered::zeros(n + 1)),
        col: vec![0; 2 * n + 2],
    };
    st.row(1, &mut f);
}

pub fn enumerate_dasasm_triangles(n: usize) -> Vec<DasasmTriangle> {
    let mut out = Vec::new();
    visit_dasasm_triangles(n, |t| out.push(t.clone()));
    out
}

struct TriDfs {
    n: usize,
    t: DasasmTriangle,
    // bulk column partial sums, 1-based
    col: Vec<i8>,
}

impl TriDfs {
    fn row(&mut self, i: usize, f: &mut impl FnMut(&DasasmTriangle)) {
        let n = self.n;
        if i == n + 1 {
            let b = 1 - 2 * self.col[n + 1];
            self.t.set(n + 1, n + 1, b);
            f(&self.t);
            return;
        }
        let start = self.col[i];
        self.cell(i, i, start, f);
    }

    fn cell(&mut self, i: usize, j: usize, r: i8, f: &mut impl FnMut(&DasasmTriangle)) {
        let n = self.n;
        let right = 2 * n + 2 - i;
        if j > right {
            if r + self.col[right] == 1 {
                self.row(i + 1, f);
            }
            return;
        }
        let bulk = j != i && j != right;
        for v in [-1i8, 0, 1] {
            let nr = r + v;
            if !(0..=1).contains(&nr) {
                continue;
            }
            if bulk {
                let nc = self.col[j] + v;
                if !(0..=1).contains(&nc) {
                    continue;
                }
                self.col[j] = nc;
            }
            self.t.set(i, j, v);
            self.cell(i, j + 1, nr, f);
            if bulk {
                self.col[j] -= v;
            }
        }
        self.t.set(i, j, 0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::asm::enumerate_asms;

    fn example_order3() -> DasasmTriangle {
        DasasmTriangle::from_rows(
            3,
            &[
                vec![0, 0, 1, 0, 0, 0, 0],
                vec![1, -1, 0, 1, 0],
                vec![0, 1, -1],
                vec![-1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn counts_small_orders() {
        let c: Vec<usize> = (0..=4).map(|n| enumerate_dasasm_triangles(n).len()).collect();
        assert_eq!(c, vec![1, 3, 15, 126, 1782]);
    }

    #[test]
    fn unfolded_example_is_the_7x7_asm() {
        let a = example_order3().to_asm().unwrap();
        assert!(a.validate().is_ok());
        assert_eq!(a.row(5), &[0, 1, -1, 1, 0, -1, 1]);
        assert!(example_order3().validate().is_ok());
    }

    #[test]
    fn brute_force_oracle_order_3() {
        // every symmetric 7x7 ASM restricts to a valid triangle and back
        let mut sym: Vec<DasasmTriangle> = enumerate_asms(7)
            .into_iter()
            .filter_map(|a| {
                let m = a.rows();
                let t = DasasmTriangle::from_matrix(&m).ok()?;
                (t.to_matrix() == m).then_some(t)
            })
            .collect();
        sym.sort();
        assert_eq!(sym, enumerate_dasasm_triangles(3));
    }

    #[test]
    fn exhaustive_filter_order_2() {
        // all 3^9 arrays, filtered by hook validation
        let mut hits = Vec::new();
        for code in 0..3usize.pow(9) {
            let mut k = code;
            let mut v = [0i8; 9];
            for x in v.iter_mut().rev() {
                *x = (k % 3) as i8 - 1;
                k /= 3;
            }
            let t = DasasmTriangle::from_rows(2, &[v[0..5].to_vec(), v[5..8].to_vec(), vec![v[8]]])
                .unwrap();
            if t.validate().is_ok() {
                hits.push(t);
            }
        }
        assert_eq!(hits, enumerate_dasasm_triangles(2));
    }

    #[test]
    fn text_roundtrip() {
        let t = example_order3();
        assert_eq!(DasasmTriangle::from_text(&t.to_text()).unwrap(), t);
    }
}

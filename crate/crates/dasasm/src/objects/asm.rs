//! Square alternating sign matrices.

use super::shape::{alternates, format_rows, parse_rows};
use super::Violation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Build from rows, checking only the shape and the entry range.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries in a {n}x{n} matrix",
                    i + 1,
                    r.len()
                )));
            }
            if r.iter().any(|x| !(-1..=1).contains(x)) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has an entry outside {{-1, 0, 1}}",
                    i + 1
                )));
            }
            entries.extend_from_slice(r);
        }
        Ok(Asm { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Asm { n, entries }
    }

    /// Permutation matrix with a 1 at (i, perm[i]) (0-based).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut entries = vec![0; n * n];
        for (i, &p) in perm.iter().enumerate() {
            entries[i * n + p] = 1;
        }
        Asm { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry (i, j), 1-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        (1..=self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn count(&self, v: i8) -> usize {
        self.entries.iter().filter(|&&x| x == v).count()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.n;
        for i in 1..=n {
            check_line(self.row(i).iter().copied(), "row", i)?;
        }
        for j in 1..=n {
            check_line((1..=n).map(|i| self.get(i, j)), "column", j)?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        format_rows(self.rows())
    }

    pub fn from_text(s: &str) -> Result<Self> {
        Asm::from_rows(&parse_rows(s)?)
    }
}

fn check_line(
    seq: impl Iterator<Item = i8> + Clone,
    kind: &str,
    idx: usize,
) -> std::result::Result<(), Violation> {
    if !alternates(seq.clone()) {
        return Err(Violation::new(format!(
            "{kind} {idx}: nonzero entries do not alternate"
        )));
    }
    let s: i32 = seq.map(i32::from).sum();
    if s != 1 {
        return Err(Violation::new(format!("{kind} {idx} sums to {s}, expected 1")));
    }
    Ok(())
}

/// All ASMs of order n in lexicographic order of the row-major entries.
pub fn enumerate_asms(n: usize) -> Vec<Asm> {
    let mut out = Vec::new();
    let mut entries = vec![0i8; n * n];
    let mut col = vec![0i8; n];
    fill(n, 0, 0, &mut entries, &mut col, &mut out);
    out
}

fn fill(n: usize, pos: usize, row_sum: i8, e: &mut [i8], col: &mut [i8], out: &mut Vec<Asm>) {
    if pos == n * n {
        if col.iter().all(|&c| c == 1) {
            out.push(Asm {
                n,
                entries: e.to_vec(),
            });
        }
        return;
    }
    let (i, j) = (pos / n, pos % n);
    for v in [-1i8, 0, 1] {
        let r = row_sum + v;
        let c = col[j] + v;
        if !(0..=1).contains(&r) || !(0..=1).contains(&c) {
            continue;
        }
        if j == n - 1 && r != 1 {
            continue;
        }
        if i == n - 1 && c != 1 {
            continue;
        }
        e[pos] = v;
        col[j] = c;
        fill(n, pos + 1, if j == n - 1 { 0 } else { r }, e, col, out);
        col[j] -= v;
    }
    e[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_asms(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 42, 429]);
    }

    #[test]
    fn order_one_is_identity() {
        assert_eq!(enumerate_asms(1), vec![Asm::identity(1)]);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_asms(4);
        assert!(all.windows(2).all(|w| w[0].entries < w[1].entries));
        assert!(all.iter().all(|a| a.validate().is_ok()));
    }

    #[test]
    fn violation_names_line() {
        let a = Asm::from_rows(&[vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(a.validate().unwrap_err().to_string(), "column 1: nonzero entries do not alternate");
    }
}

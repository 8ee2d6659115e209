//! Centered triangular index sets: `rows` rows, row i spanning columns
//! i ..= 2·rows − i (1-based).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Centered {
    rows: usize,
    cells: Vec<i8>,
}

impl Centered {
    pub fn zeros(rows: usize) -> Self {
        Centered {
            rows,
            cells: vec![0; rows * rows],
        }
    }

    /// Build from explicit rows, checking the shape and the entry range.
    pub fn from_rows(rows: usize, data: &[Vec<i8>]) -> Result<Self> {
        if data.len() != rows {
            return Err(Error::ShapeMismatch(format!(
                "expected {rows} rows, got {}",
                data.len()
            )));
        }
        let mut cells = Vec::with_capacity(rows * rows);
        for (k, r) in data.iter().enumerate() {
            let want = 2 * (rows - k) - 1;
            if r.len() != want {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, expected {want}",
                    k + 1,
                    r.len()
                )));
            }
            if let Some(x) = r.iter().find(|x| !(-1..=1).contains(*x)) {
                return Err(Error::ShapeMismatch(format!(
                    "entry {x} in row {} is not in {{-1, 0, 1}}",
                    k + 1
                )));
            }
            cells.extend_from_slice(r);
        }
        Ok(Centered { rows, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// First and last column of row i.
    pub fn span(&self, i: usize) -> (usize, usize) {
        (i, 2 * self.rows - i)
    }

    /// Number of columns, 2·rows − 1.
    pub fn width(&self) -> usize {
        (2 * self.rows).saturating_sub(1)
    }

    /// Lowest row that meets column j.
    pub fn column_depth(&self, j: usize) -> usize {
        j.min(2 * self.rows - j)
    }

    fn offset(&self, i: usize) -> usize {
        // Σ_{k<i} (2·rows − 2k + 1) = (i−1)(2·rows − i + 1)
        (i - 1) * (2 * self.rows - i + 1)
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        debug_assert!(i >= 1 && i <= self.rows && j >= i && j <= 2 * self.rows - i);
        self.cells[self.offset(i) + (j - i)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i8) {
        debug_assert!(i >= 1 && i <= self.rows && j >= i && j <= 2 * self.rows - i);
        let k = self.offset(i) + (j - i);
        self.cells[k] = v;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        let (a, b) = self.span(i);
        let o = self.offset(i);
        &self.cells[o..o + (b - a + 1)]
    }

    pub fn row_vecs(&self) -> Vec<Vec<i8>> {
        (1..=self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries of column j from top to bottom.
    pub fn column(&self, j: usize) -> Vec<i8> {
        (1..=self.column_depth(j)).map(|i| self.get(i, j)).collect()
    }

    pub fn count(&self, v: i8) -> usize {
        self.cells.iter().filter(|&&x| x == v).count()
    }
}

/// Nonzero entries alternate in sign.
pub(crate) fn alternates(seq: impl IntoIterator<Item = i8>) -> bool {
    let mut last = 0i8;
    for x in seq {
        if x != 0 {
            if x == last {
                return false;
            }
            last = x;
        }
    }
    true
}

pub(crate) fn first_nonzero(seq: &[i8]) -> Option<i8> {
    seq.iter().copied().find(|&x| x != 0)
}

/// Rows joined by '/', entries by ','.
pub(crate) fn format_rows<R: AsRef<[i8]>>(rows: impl IntoIterator<Item = R>) -> String {
    rows.into_iter()
        .map(|r| {
            r.as_ref()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

pub(crate) fn parse_rows(s: &str) -> Result<Vec<Vec<i8>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.trim()
        .split('/')
        .map(|r| {
            r.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i8>()
                        .map_err(|_| Error::ShapeMismatch(format!("bad entry {x:?}")))
                })
                .collect()
        })
        .collect()
}

//! Triangular six-vertex configurations on the graph T_n.
//!
//! Coordinates follow the triangle: the vertical edge (i, j) sits directly
//! above vertex (i, j) for 1 ≤ i ≤ n+1 (row 1 holds the top degree-1 edges),
//! and the horizontal edge (i, j) joins (i, j) to (i, j+1).

use super::triangle::DasasmTriangle;
use crate::error::{Error, Result};

/// Orientation of an edge relative to one of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    In,
    Out,
}

/// Side of a vertex on which an edge is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Up,
    Down,
    Left,
    Right,
}

/// Local state of a degree-2 boundary vertex or the bottom vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryState {
    One,
    MinusOne,
    ZeroIn,
    ZeroOut,
}

impl BoundaryState {
    /// Classify from the orientation of the vertical edge and of the other edge.
    pub fn classify(up: Dir, other: Dir) -> Self {
        match (up, other) {
            (Dir::Out, Dir::In) => BoundaryState::One,
            (Dir::In, Dir::Out) => BoundaryState::MinusOne,
            (Dir::In, Dir::In) => BoundaryState::ZeroIn,
            (Dir::Out, Dir::Out) => BoundaryState::ZeroOut,
        }
    }

    pub fn entry(self) -> i8 {
        match self {
            BoundaryState::One => 1,
            BoundaryState::MinusOne => -1,
            _ => 0,
        }
    }
}

/// The six balanced configurations of a degree-4 vertex. The compass names
/// give the two outgoing edges of the 0-entry types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BulkType {
    One,
    MinusOne,
    Ne,
    Sw,
    Se,
    Nw,
}

impl BulkType {
    pub const ALL: [BulkType; 6] = [
        BulkType::One,
        BulkType::MinusOne,
        BulkType::Ne,
        BulkType::Sw,
        BulkType::Se,
        BulkType::Nw,
    ];

    /// None when the vertex is not balanced.
    pub fn from_dirs(up: Dir, down: Dir, left: Dir, right: Dir) -> Option<BulkType> {
        use Dir::{In, Out};
        Some(match (up, down, left, right) {
            (Out, Out, In, In) => BulkType::One,
            (In, In, Out, Out) => BulkType::MinusOne,
            (Out, In, In, Out) => BulkType::Ne,
            (In, Out, Out, In) => BulkType::Sw,
            (In, Out, In, Out) => BulkType::Se,
            (Out, In, Out, In) => BulkType::Nw,
            _ => return None,
        })
    }

    /// Orientations (up, down, left, right).
    pub fn dirs(self) -> [Dir; 4] {
        use Dir::{In, Out};
        match self {
            BulkType::One => [Out, Out, In, In],
            BulkType::MinusOne => [In, In, Out, Out],
            BulkType::Ne => [Out, In, In, Out],
            BulkType::Sw => [In, Out, Out, In],
            BulkType::Se => [In, Out, In, Out],
            BulkType::Nw => [Out, In, Out, In],
        }
    }

    /// Type of a 0 entry from the column sum strictly above it and the row
    /// sum up to it, both in {0, 1}.
    pub fn of_zero(col_above: i8, row_prefix: i8) -> BulkType {
        match (col_above, row_prefix) {
            (0, 0) => BulkType::Ne,
            (1, 1) => BulkType::Sw,
            (1, 0) => BulkType::Se,
            _ => BulkType::Nw,
        }
    }

    pub fn entry(self) -> i8 {
        match self {
            BulkType::One => 1,
            BulkType::MinusOne => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriConfig {
    n: usize,
    // up[i-1][j-i]: vertical edge above (i, j) points up
    up: Vec<Vec<bool>>,
    // right[i-1][j-i]: horizontal edge from (i, j) to (i, j+1) points right
    right: Vec<Vec<bool>>,
}

impl TriConfig {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of vertical and horizontal edges: (n+1)² and n(n+1).
    pub fn edge_counts(&self) -> (usize, usize) {
        (
            self.up.iter().map(Vec::len).sum(),
            self.right.iter().map(Vec::len).sum(),
        )
    }

    pub fn vertical_up(&self, i: usize, j: usize) -> bool {
        self.up[i - 1][j - i]
    }

    pub fn horizontal_right(&self, i: usize, j: usize) -> bool {
        self.right[i - 1][j - i]
    }

    pub fn set_vertical_up(&mut self, i: usize, j: usize, v: bool) {
        self.up[i - 1][j - i] = v;
    }

    pub fn set_horizontal_right(&mut self, i: usize, j: usize, v: bool) {
        self.right[i - 1][j - i] = v;
    }

    /// Orientation of the edge on `side` of vertex (i, j), relative to it.
    pub fn dir(&self, i: usize, j: usize, side: Side) -> Dir {
        let out = match side {
            Side::Up => self.vertical_up(i, j),
            Side::Down => !self.vertical_up(i + 1, j),
            Side::Left => !self.horizontal_right(i, j - 1),
            Side::Right => self.horizontal_right(i, j),
        };
        if out {
            Dir::Out
        } else {
            Dir::In
        }
    }

    pub fn set_dir(&mut self, i: usize, j: usize, side: Side, d: Dir) {
        let out = d == Dir::Out;
        match side {
            Side::Up => self.set_vertical_up(i, j, out),
            Side::Down => self.set_vertical_up(i + 1, j, !out),
            Side::Left => self.set_horizontal_right(i, j - 1, !out),
            Side::Right => self.set_horizontal_right(i, j, out),
        }
    }

    /// State of the left (j = i) or right (j = 2n+2−i) boundary vertex of row i.
    pub fn boundary_state(&self, i: usize, j: usize) -> BoundaryState {
        let n = self.n;
        let other = if j == i {
            self.dir(i, j, Side::Right)
        } else {
            debug_assert_eq!(j, 2 * n + 2 - i);
            self.dir(i, j, Side::Left)
        };
        BoundaryState::classify(self.dir(i, j, Side::Up), other)
    }

    /// Type of the bulk vertex (i, j); None if unbalanced.
    pub fn bulk_type(&self, i: usize, j: usize) -> Option<BulkType> {
        BulkType::from_dirs(
            self.dir(i, j, Side::Up),
            self.dir(i, j, Side::Down),
            self.dir(i, j, Side::Left),
            self.dir(i, j, Side::Right),
        )
    }

    /// Whether the bottom vertical edge points up.
    pub fn bottom_up(&self) -> bool {
        self.vertical_up(self.n + 1, self.n + 1)
    }

    /// First defect: a top edge pointing down or an unbalanced bulk vertex.
    pub fn check(&self) -> Result<()> {
        let n = self.n;
        for j in 1..=2 * n + 1 {
            if !self.vertical_up(1, j) {
                return Err(Error::InvalidConfig(format!("top edge {j} points down")));
            }
        }
        for i in 1..=n {
            for j in i + 1..2 * n + 2 - i {
                if self.bulk_type(i, j).is_none() {
                    let outs = [Side::Up, Side::Down, Side::Left, Side::Right]
                        .iter()
                        .filter(|&&s| self.dir(i, j, s) == Dir::Out)
                        .count();
                    return Err(Error::InvalidConfig(format!(
                        "bulk vertex ({i}, {j}) has {outs} outgoing edges"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The configuration of a triangle: the edge above (i, j) points up iff
    /// the bulk column sum above is 0, the edge right of (i, j) points right
    /// iff the hook prefix through (i, j) is 0.
    pub fn from_triangle(t: &DasasmTriangle) -> TriConfig {
        let n = t.order();
        let mut col = vec![0i8; 2 * n + 2];
        let mut up = Vec::with_capacity(n + 1);
        let mut right = Vec::with_capacity(n);
        for i in 1..=n + 1 {
            let (a, b) = (i, 2 * n + 2 - i);
            up.push((a..=b).map(|j| col[j] == 0).collect());
            if i == n + 1 {
                break;
            }
            let mut r = col[a];
            let mut row = Vec::with_capacity(b - a);
            for j in a..=b {
                let v = t.get(i, j);
                r += v;
                if j < b {
                    row.push(r == 0);
                }
                if j != a && j != b {
                    col[j] += v;
                }
            }
            right.push(row);
        }
        TriConfig { n, up, right }
    }

    /// Read the triangle off a configuration.
    pub fn to_triangle(&self) -> Result<DasasmTriangle> {
        self.check()?;
        let n = self.n;
        let mut rows = Vec::with_capacity(n + 1);
        for i in 1..=n {
            let (a, b) = (i, 2 * n + 2 - i);
            let row = (a..=b)
                .map(|j| {
                    if j == a || j == b {
                        self.boundary_state(i, j).entry()
                    } else {
                        self.bulk_type(i, j).map_or(0, BulkType::entry)
                    }
                })
                .collect();
            rows.push(row);
        }
        rows.push(vec![if self.bottom_up() { 1 } else { -1 }]);
        DasasmTriangle::from_rows(n, &rows)
    }
}

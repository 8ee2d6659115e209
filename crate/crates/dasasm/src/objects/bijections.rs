//! Maps between extreme DASASM-triangles and the triangle families.

use super::config::{Dir, Side, TriConfig};
use super::shape::Centered;
use super::sign::{SignTriangle, TriFamily};
use super::triangle::DasasmTriangle;
use crate::error::{Error, Result};

fn require_family(t: &SignTriangle, fam: TriFamily) -> Result<()> {
    if t.family() != fam {
        return Err(Error::ShapeMismatch(format!(
            "expected a {fam}, got a {}",
            t.family()
        )));
    }
    t.validate()
        .map_err(|v| Error::InvalidConfig(format!("invalid {fam}: {v}")))
}

/// Remove both diagonals, keeping the interior as a triangle of order n.
pub fn delete_diagonals(t: &DasasmTriangle, family: TriFamily) -> SignTriangle {
    let n = t.order();
    let mut c = Centered::zeros(n);
    for i in 1..=n {
        for j in i..=2 * n - i {
            c.set(i, j, t.get(i, j + 1));
        }
    }
    SignTriangle::from_centered(family, c)
}

/// Embed the entries of an order-n triangle as the interior of an order-n
/// DASASM-triangle with zero diagonals.
fn embed_interior(t: &SignTriangle) -> DasasmTriangle {
    let n = t.order();
    let mut d = DasasmTriangle::from_centered(Centered::zeros(n + 1));
    for i in 1..=n {
        for j in i..=2 * n - i {
            d.set(i, j + 1, t.get(i, j));
        }
    }
    d
}

/// Position directly below the bulk part of triangle column j.
fn below_column(n: usize, j: usize) -> (usize, usize) {
    if j <= n + 1 {
        (j, j)
    } else {
        (2 * n + 2 - j, j)
    }
}

/// Put a −1 below every AST column summing to 1 and a 0 below the others.
pub fn ast_diagonal_reconstruct(t: &SignTriangle) -> Result<DasasmTriangle> {
    require_family(t, TriFamily::Ast)?;
    let n = t.order();
    let mut d = embed_interior(t);
    for jp in 1..2 * n {
        if t.column_sum(jp) == 1 {
            let (i, j) = below_column(n, jp + 1);
            d.set(i, j, -1);
        }
    }
    if n == 0 {
        // the 1×1 ASM
        d.set(1, 1, 1);
    }
    Ok(d)
}

/// Number of order-n DASASM-triangles with N₁ = n+1 that restrict to `d`.
pub fn dast_extensions(d: &SignTriangle) -> Result<u64> {
    require_family(d, TriFamily::Dast)?;
    let zero_rows = (1..=d.order()).filter(|&i| d.row(i).iter().all(|&x| x == 0)).count();
    Ok(1u64 << zero_rows)
}

/// The extensions themselves: a 1 below the bottom, each boundary entry
/// chosen from the sign of the nearest nonzero entry, both choices for 0-rows.
pub fn dast_extension_list(d: &SignTriangle) -> Result<Vec<DasasmTriangle>> {
    require_family(d, TriFamily::Dast)?;
    let n = d.order();
    let mut base = embed_interior(d);
    base.set(n + 1, n + 1, 1);
    let mut out = vec![base];
    for i in 1..=n {
        let row = d.row(i);
        let left = row.iter().copied().find(|&x| x != 0);
        let right = row.iter().rev().copied().find(|&x| x != 0);
        let r = 2 * n + 2 - i;
        match (left, right) {
            (Some(l), Some(rt)) => {
                for t in out.iter_mut() {
                    t.set(i, i, if l == -1 { 1 } else { 0 });
                    t.set(i, r, if rt == -1 { 1 } else { 0 });
                }
            }
            _ => {
                let mut next = Vec::with_capacity(out.len() * 2);
                for t in out {
                    let mut a = t.clone();
                    a.set(i, i, 1);
                    let mut b = t;
                    b.set(i, r, 1);
                    next.push(a);
                    next.push(b);
                }
                out = next;
            }
        }
    }
    Ok(out)
}

/// Order-n triangle with N₀ = n to the AST of order n+1 with the same
/// entries, boundary −1's replaced by 0.
pub fn minzero_to_ast(t: &DasasmTriangle) -> Result<SignTriangle> {
    let n = t.order();
    let n0 = t.n_alpha(0);
    if n0 != n {
        return Err(Error::NotExtreme(format!("N0 = {n0}, expected {n}")));
    }
    let mut c = t.centered().clone();
    for i in 1..=n {
        for j in [i, 2 * n + 2 - i] {
            if c.get(i, j) == -1 {
                c.set(i, j, 0);
            }
        }
    }
    Ok(SignTriangle::from_centered(TriFamily::Ast, c))
}

/// Inverse of [`minzero_to_ast`]: a boundary 0 becomes −1 exactly when the
/// bulk entries above it sum to 1.
pub fn ast_to_minzero(a: &SignTriangle) -> Result<DasasmTriangle> {
    require_family(a, TriFamily::Ast)?;
    let m = a.order();
    if m == 0 {
        return Err(Error::ShapeMismatch("order 0 AST has no smaller partner".into()));
    }
    let n = m - 1;
    let mut d = DasasmTriangle::from_centered(a.centered().clone());
    for i in 1..=n {
        for j in [i, 2 * n + 2 - i] {
            if d.get(i, j) == 0 && d.column_sum_above(i, j) == 1 {
                d.set(i, j, -1);
            }
        }
    }
    Ok(d)
}

/// Swap the orientations (relative to the vertex) of two edges at (i, j).
fn swap_sides(c: &mut TriConfig, i: usize, j: usize, s1: Side, s2: Side) {
    let (a, b) = (c.dir(i, j, s1), c.dir(i, j, s2));
    c.set_dir(i, j, s1, b);
    c.set_dir(i, j, s2, a);
}

fn qast_ops(c: &mut TriConfig, inverse: bool) {
    let n = c.order();
    let first = |c: &mut TriConfig| {
        for i in 1..=n {
            swap_sides(c, i, i + 1, Side::Down, Side::Left);
        }
    };
    let second = |c: &mut TriConfig| {
        for i in 1..=n {
            swap_sides(c, i, 2 * n + 1 - i, Side::Down, Side::Right);
        }
    };
    if inverse {
        second(c);
        first(c);
    } else {
        first(c);
        second(c);
    }
}

/// Order-n triangle with N₁ = n+1 to a QAST of order n: two edge swaps next
/// to each boundary, then delete the diagonals.
pub fn qast_from_triangle(t: &DasasmTriangle) -> Result<SignTriangle> {
    let n = t.order();
    let n1 = t.n_alpha(1);
    if n1 != n + 1 {
        return Err(Error::NotExtreme(format!("N1 = {n1}, expected {}", n + 1)));
    }
    let mut c = TriConfig::from_triangle(t);
    qast_ops(&mut c, false);
    let a = c.to_triangle()?;
    Ok(delete_diagonals(&a, TriFamily::Qast))
}

/// Inverse of [`qast_from_triangle`].
pub fn qast_to_triangle(q: &SignTriangle) -> Result<DasasmTriangle> {
    require_family(q, TriFamily::Qast)?;
    let n = q.order();
    let mut a = embed_interior(q);
    let mut col = vec![0i8; 2 * n + 2];
    for i in 1..=n {
        let r = 2 * n + 2 - i;
        a.set(i, i, -col[i]);
        let inner: i8 = (i + 1..r).map(|j| a.get(i, j)).sum();
        a.set(i, r, 1 - col[r] - inner);
        for j in i + 1..r {
            col[j] += a.get(i, j);
        }
    }
    a.set(n + 1, n + 1, 1 - 2 * col[n + 1]);
    let mut c = TriConfig::from_triangle(&a);
    qast_ops(&mut c, true);
    c.to_triangle()
}

/// Whether the leftmost and rightmost vertical edges of every row point up.
pub fn rows_end_upward(c: &TriConfig) -> bool {
    let n = c.order();
    (1..=n).all(|i| {
        c.dir(i, i, Side::Up) == Dir::Out && c.dir(i, 2 * n + 2 - i, Side::Up) == Dir::Out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::sign::enumerate_sign_triangles;
    use crate::objects::triangle::enumerate_dasasm_triangles;

    #[test]
    fn ast_order_one() {
        let a = SignTriangle::from_rows(TriFamily::Ast, 1, &[vec![1]]).unwrap();
        let d = ast_diagonal_reconstruct(&a).unwrap();
        assert_eq!(d.rows(), vec![vec![0, 1, 0], vec![-1]]);
        let m = d.to_matrix();
        assert_eq!(m, vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]);
    }

    #[test]
    fn ast_with_minus_one() {
        let a = SignTriangle::from_rows(
            TriFamily::Ast,
            3,
            &[vec![0, 0, 1, 0, 0], vec![1, -1, 1], vec![1]],
        )
        .unwrap();
        let d = ast_diagonal_reconstruct(&a).unwrap();
        assert!(d.validate().is_ok());
        assert_eq!(d.n_alpha(-1), 3);
        // columns 2, 3, 4 of the AST sum to 1
        assert_eq!(d.get(3, 3), -1);
        assert_eq!(d.get(4, 4), -1);
        assert_eq!(d.get(3, 5), -1);
        assert_eq!(delete_diagonals(&d, TriFamily::Ast), a);
    }

    #[test]
    fn ast_reconstruction_is_the_extreme_set() {
        for n in 1..=4 {
            let mut img: Vec<_> = enumerate_sign_triangles(TriFamily::Ast, n)
                .iter()
                .map(|a| ast_diagonal_reconstruct(a).unwrap())
                .collect();
            img.sort();
            let extreme: Vec<_> = enumerate_dasasm_triangles(n)
                .into_iter()
                .filter(|t| t.n_alpha(-1) == n)
                .collect();
            assert_eq!(img, extreme);
        }
    }

    #[test]
    fn dast_order_three() {
        let all = enumerate_sign_triangles(TriFamily::Dast, 3);
        let mut mult: Vec<u64> = all.iter().map(|d| dast_extensions(d).unwrap()).collect();
        assert_eq!(mult.iter().sum::<u64>(), 20);
        mult.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(mult, vec![8, 2, 2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn dast_extensions_are_the_extreme_set() {
        for n in 1..=4 {
            let mut ext = Vec::new();
            for d in enumerate_sign_triangles(TriFamily::Dast, n) {
                let list = dast_extension_list(&d).unwrap();
                assert_eq!(list.len() as u64, dast_extensions(&d).unwrap());
                ext.extend(list);
            }
            ext.sort();
            let extreme: Vec<_> = enumerate_dasasm_triangles(n)
                .into_iter()
                .filter(|t| t.n_alpha(1) == n + 1)
                .collect();
            assert_eq!(ext, extreme);
        }
    }

    #[test]
    fn minzero_roundtrip() {
        for n in 0..=3 {
            let extreme: Vec<_> = enumerate_dasasm_triangles(n)
                .into_iter()
                .filter(|t| t.n_alpha(0) == n)
                .collect();
            assert_eq!(
                extreme.len(),
                enumerate_sign_triangles(TriFamily::Ast, n + 1).len()
            );
            for t in &extreme {
                let a = minzero_to_ast(t).unwrap();
                assert!(a.validate().is_ok());
                assert_eq!(&ast_to_minzero(&a).unwrap(), t);
            }
        }
    }

    #[test]
    fn minzero_rejects_non_extreme() {
        let t = DasasmTriangle::from_rows(1, &[vec![0, 1, 0], vec![-1]]).unwrap();
        assert!(matches!(minzero_to_ast(&t), Err(Error::NotExtreme(_))));
    }

    #[test]
    fn qast_roundtrip() {
        for n in 1..=3 {
            let extreme: Vec<_> = enumerate_dasasm_triangles(n)
                .into_iter()
                .filter(|t| t.n_alpha(1) == n + 1)
                .collect();
            let mut img: Vec<_> = extreme.iter().map(|t| qast_from_triangle(t).unwrap()).collect();
            for (t, q) in extreme.iter().zip(&img) {
                assert!(rows_end_upward(&TriConfig::from_triangle(t)));
                assert_eq!(&qast_to_triangle(q).unwrap(), t);
            }
            img.sort();
            assert_eq!(img, enumerate_sign_triangles(TriFamily::Qast, n));
        }
    }
}

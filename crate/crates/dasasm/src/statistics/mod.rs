//! Scalar statistics on ASMs and triangles, their distributions, and the
//! refined counts built from them.

mod appendix;
mod distribution;
mod kappa;
mod rho;

use std::fmt;
use std::str::FromStr;

pub use appendix::{appendix_one_minus_one, AppendixCount};
pub use distribution::{joint_distribution, joint_distribution_with_cap, DistributionTable, GenPoly};
pub use kappa::{kappa_recursion_check, kappa_recursion_check_with_cap, KappaReport};
pub use rho::{rho_conjecture, rho_conjecture_with_cap, RhoReport};

use crate::error::{Error, Result};
use crate::objects::{
    ast_diagonal_reconstruct, Asm, BoundaryState, BulkType, DasasmTriangle, Object, SignTriangle,
    TriConfig, TriFamily,
};

/// Entry counts along the diagonals of a triangle, with the boundary zeros
/// split by orientation. The central entry is included in the α counts but
/// not in the in/out split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryStats {
    pub minus_one: usize,
    pub one: usize,
    pub zero: usize,
    pub zero_in: usize,
    pub zero_out: usize,
    pub center: i8,
}

impl BoundaryStats {
    /// 2·N₀,out + a_{n+1,n+1} − 2·N₀,in − (2n+1); zero for every triangle.
    pub fn degree_balance(&self, n: usize) -> i64 {
        2 * self.zero_out as i64 + self.center as i64 - 2 * self.zero_in as i64 - (2 * n as i64 + 1)
    }
}

pub fn boundary_stats(t: &DasasmTriangle) -> BoundaryStats {
    let n = t.order();
    let c = TriConfig::from_triangle(t);
    let (mut zero_in, mut zero_out) = (0, 0);
    for i in 1..=n {
        for j in [i, 2 * n + 2 - i] {
            match c.boundary_state(i, j) {
                BoundaryState::ZeroIn => zero_in += 1,
                BoundaryState::ZeroOut => zero_out += 1,
                _ => {}
            }
        }
    }
    BoundaryStats {
        minus_one: t.n_alpha(-1),
        one: t.n_alpha(1),
        zero: t.n_alpha(0),
        zero_in,
        zero_out,
        center: t.bottom(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Mu,
    MuNabla,
    Inv,
    InvPrime,
    InvNabla,
    InvPrimeNabla,
    Rho,
    Kappa,
    KappaNabla,
}

impl Statistic {
    pub const ALL: [Statistic; 9] = [
        Statistic::Mu,
        Statistic::MuNabla,
        Statistic::Inv,
        Statistic::InvPrime,
        Statistic::InvNabla,
        Statistic::InvPrimeNabla,
        Statistic::Rho,
        Statistic::Kappa,
        Statistic::KappaNabla,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Mu => "mu",
            Statistic::MuNabla => "mu-nabla",
            Statistic::Inv => "inv",
            Statistic::InvPrime => "inv-prime",
            Statistic::InvNabla => "inv-nabla",
            Statistic::InvPrimeNabla => "inv-prime-nabla",
            Statistic::Rho => "rho",
            Statistic::Kappa => "kappa",
            Statistic::KappaNabla => "kappa-nabla",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Statistic::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

fn mismatch(stat: Statistic, obj: &Object) -> Error {
    let object = match obj {
        Object::Asm(_) => "ASM".to_string(),
        Object::Triangle(_) => "DASASM-triangle".to_string(),
        Object::Sign(s) => s.family().to_string(),
    };
    Error::TypeMismatch {
        stat: stat.name().to_string(),
        object,
    }
}

/// Evaluate a statistic. ASM statistics take [`Object::Asm`], the ∇ ones an
/// AST; μ_∇ also accepts a DASASM-triangle, where it is (#−1) − n.
pub fn statistic(stat: Statistic, obj: &Object) -> Result<i64> {
    let ast = match obj {
        Object::Sign(s) if s.family() == TriFamily::Ast => Some(s),
        _ => None,
    };
    let asm = match obj {
        Object::Asm(a) => Some(a),
        _ => None,
    };
    let need_asm = || asm.ok_or_else(|| mismatch(stat, obj));
    let need_ast = || ast.ok_or_else(|| mismatch(stat, obj));
    match stat {
        Statistic::Mu => Ok(need_asm()?.count(-1) as i64),
        Statistic::MuNabla => match obj {
            Object::Triangle(t) => {
                let m = t.rows().iter().flatten().filter(|&&x| x == -1).count();
                Ok(m as i64 - t.order() as i64)
            }
            _ => Ok(need_ast()?.count(-1) as i64),
        },
        Statistic::Inv => Ok(inv(need_asm()?)),
        Statistic::InvPrime => Ok(inv_prime(need_asm()?)),
        Statistic::InvNabla => {
            let t = need_ast()?;
            let by_vertices = inv_nabla_vertices(t)?;
            let by_sum = inv_nabla_sum(t);
            if by_vertices != by_sum {
                return Err(Error::InvalidConfig(format!(
                    "inv_nabla disagrees: {by_vertices} from vertices, {by_sum} from the double sum"
                )));
            }
            Ok(by_vertices)
        }
        Statistic::InvPrimeNabla => inv_prime_nabla(need_ast()?),
        Statistic::Rho => Ok(rho(need_ast()?)),
        Statistic::Kappa => Ok(kappa(need_asm()?)),
        Statistic::KappaNabla => Ok(kappa_nabla(need_ast()?)),
    }
}

/// Six-vertex types of an ASM, row-major.
pub fn asm_vertex_types(a: &Asm) -> Vec<Vec<BulkType>> {
    let n = a.order();
    let mut col = vec![0i8; n + 1];
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = 0i8;
        let mut types = Vec::with_capacity(n);
        for j in 1..=n {
            let v = a.get(i, j);
            row += v;
            types.push(match v {
                1 => BulkType::One,
                -1 => BulkType::MinusOne,
                _ => BulkType::of_zero(col[j], row),
            });
            col[j] += v;
        }
        out.push(types);
    }
    out
}

fn tally<'a>(types: impl IntoIterator<Item = &'a BulkType>, want: BulkType) -> i64 {
    types.into_iter().filter(|&&t| t == want).count() as i64
}

/// Σ_{i′<i, j′≤j} a_{i′j} a_{ij′}.
pub fn inv(a: &Asm) -> i64 {
    let n = a.order();
    let mut s = 0i64;
    for i in 1..=n {
        for ip in 1..i {
            for j in 1..=n {
                let top = a.get(ip, j) as i64;
                if top == 0 {
                    continue;
                }
                for jp in 1..=j {
                    s += top * a.get(i, jp) as i64;
                }
            }
        }
    }
    s
}

/// ½(#SE + #NW) of the six-vertex configuration.
pub fn inv_prime(a: &Asm) -> i64 {
    let types = asm_vertex_types(a);
    let flat: Vec<BulkType> = types.into_iter().flatten().collect();
    (tally(&flat, BulkType::Se) + tally(&flat, BulkType::Nw)) / 2
}

fn ast_bulk_types(t: &SignTriangle) -> Result<Vec<BulkType>> {
    let d = ast_diagonal_reconstruct(t)?;
    let c = TriConfig::from_triangle(&d);
    let n = d.order();
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in i + 1..2 * n + 2 - i {
            out.push(c.bulk_type(i, j).ok_or_else(|| {
                Error::InvalidConfig(format!("unbalanced bulk vertex ({i}, {j})"))
            })?);
        }
    }
    Ok(out)
}

fn half(a: i64, b: i64, what: &str) -> Result<i64> {
    if (a + b) % 2 != 0 {
        return Err(Error::InvalidConfig(format!("{what}: odd vertex total {}", a + b)));
    }
    Ok((a + b) / 2)
}

/// ½(#SW + #NE) over the bulk of the reconstructed triangle's configuration.
pub fn inv_nabla_vertices(t: &SignTriangle) -> Result<i64> {
    let b = ast_bulk_types(t)?;
    half(tally(&b, BulkType::Sw), tally(&b, BulkType::Ne), "inv_nabla")
}

/// Σ_{i′<i, j′≤j} t_{i′j} t_{ij′} over the entries of the triangle.
pub fn inv_nabla_sum(t: &SignTriangle) -> i64 {
    let n = t.order();
    let get = |i: usize, j: usize| {
        if j >= i && j <= 2 * n - i {
            t.get(i, j) as i64
        } else {
            0
        }
    };
    let mut s = 0i64;
    for i in 1..=n {
        for ip in 1..i {
            for j in ip..=2 * n - ip {
                let top = get(ip, j);
                if top == 0 {
                    continue;
                }
                for jp in i..=j.min(2 * n - i) {
                    s += top * get(i, jp);
                }
            }
        }
    }
    s
}

pub fn inv_prime_nabla(t: &SignTriangle) -> Result<i64> {
    let b = ast_bulk_types(t)?;
    half(tally(&b, BulkType::Se), tally(&b, BulkType::Nw), "inv_prime_nabla")
}

/// ℓ + r + 1: ℓ counts 1's at (i, i), r counts 0's at (i, 2n−i) in a column
/// with sum 1, both for i < n.
pub fn rho(t: &SignTriangle) -> i64 {
    let n = t.order();
    let l = (1..n).filter(|&i| t.get(i, i) == 1).count();
    let r = (1..n)
        .filter(|&i| t.get(i, 2 * n - i) == 0 && t.column_sum(2 * n - i) == 1)
        .count();
    (l + r + 1) as i64
}

fn position_of_one(row: &[i8]) -> Option<usize> {
    row.iter().position(|&x| x == 1)
}

/// Position of the 1 in the top row plus position in the first column, minus 2.
pub fn kappa(a: &Asm) -> i64 {
    let n = a.order();
    if n == 0 {
        return 0;
    }
    let top = position_of_one(a.row(1)).unwrap_or(0);
    let left = (1..=n).position(|i| a.get(i, 1) == 1).unwrap_or(0);
    (top + left) as i64
}

/// Position of the 1 in the top row, minus 1.
pub fn kappa_nabla(t: &SignTriangle) -> i64 {
    if t.order() == 0 {
        return 0;
    }
    position_of_one(t.row(1)).unwrap_or(0) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{enumerate, enumerate_asms, enumerate_sign_triangles, Family};

    fn binom2(n: usize) -> i64 {
        (n * n.saturating_sub(1) / 2) as i64
    }

    fn dasasm_example() -> DasasmTriangle {
        let m = Asm::from_rows(&[
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 1, -1, 0, 1, 0, 0],
            vec![1, -1, 0, 1, -1, 1, 0],
            vec![0, 0, 1, -1, 1, 0, 0],
            vec![0, 1, -1, 1, 0, -1, 1],
            vec![0, 0, 1, 0, -1, 1, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
        ])
        .unwrap();
        DasasmTriangle::from_matrix(&m.rows()).unwrap()
    }

    #[test]
    fn seven_by_seven_diagonals() {
        let b = boundary_stats(&dasasm_example());
        assert_eq!((b.minus_one, b.one, b.zero), (2, 1, 4));
        assert_eq!(b.degree_balance(3), 0);
    }

    #[test]
    fn order_six_in_out() {
        let t = DasasmTriangle::from_text(
            "0,0,0,1,0,0,0,0,0,0,0,0,0/1,0,-1,0,0,0,1,0,0,0,0/0,1,0,0,0,-1,0,1,0/\
             -1,1,0,0,0,0,-1/-1,1,0,0,0/-1,0,1/1",
        )
        .unwrap();
        assert!(t.validate().is_ok());
        let b = boundary_stats(&t);
        assert_eq!((b.zero_in, b.zero_out), (0, 6));
        assert_eq!(b.degree_balance(6), 0);
    }

    #[test]
    fn identity_attains_max_ones() {
        for n in 0..5 {
            let t = DasasmTriangle::from_matrix(&Asm::identity(2 * n + 1).rows()).unwrap();
            assert_eq!(boundary_stats(&t).one, n + 1);
        }
    }

    #[test]
    fn balance_holds_for_all_triangles() {
        for n in 0..=4 {
            for o in enumerate(Family::DasasmTri, n).unwrap() {
                let Object::Triangle(t) = o else { unreachable!() };
                assert_eq!(boundary_stats(&t).degree_balance(n), 0, "{}", t.to_text());
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(statistic(Statistic::Mu, &Object::Asm(Asm::identity(4))).unwrap(), 0);
        let swap = Object::Asm(Asm::permutation(&[1, 0]));
        assert_eq!(statistic(Statistic::Inv, &swap).unwrap(), 1);
        // top-row 1 in column 2, first-column 1 in row 2
        assert_eq!(statistic(Statistic::Kappa, &swap).unwrap(), 2);
        assert_eq!(statistic(Statistic::Kappa, &Object::Asm(Asm::identity(3))).unwrap(), 0);
        let t = SignTriangle::from_text(TriFamily::Ast, "0,0,1,0,0/1,-1,1/1").unwrap();
        let d = ast_diagonal_reconstruct(&t).unwrap();
        assert_eq!(statistic(Statistic::MuNabla, &Object::Triangle(d)).unwrap(), 1);
        assert_eq!(statistic(Statistic::MuNabla, &Object::Sign(t)).unwrap(), 1);
    }

    #[test]
    fn type_mismatch() {
        let a = Object::Asm(Asm::identity(2));
        assert!(matches!(
            statistic(Statistic::Rho, &a),
            Err(Error::TypeMismatch { .. })
        ));
        let q = Object::Sign(enumerate_sign_triangles(TriFamily::Qast, 2).remove(0));
        assert!(matches!(
            statistic(Statistic::InvNabla, &q),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn parse_names() {
        for s in Statistic::ALL {
            assert_eq!(s.name().parse::<Statistic>().unwrap(), s);
        }
        assert_eq!("INV_PRIME_NABLA".parse::<Statistic>().unwrap(), Statistic::InvPrimeNabla);
    }

    #[test]
    fn asm_inversions_are_vertex_counts() {
        for n in 0..=4 {
            for a in enumerate_asms(n) {
                let flat: Vec<BulkType> = asm_vertex_types(&a).into_iter().flatten().collect();
                let i = inv(&a);
                assert_eq!(i, tally(&flat, BulkType::Sw));
                assert_eq!(i, tally(&flat, BulkType::Ne));
                assert_eq!(a.count(-1) as i64, binom2(n) - i - inv_prime(&a));
            }
        }
    }

    #[test]
    fn ast_inversion_definitions_agree() {
        for n in 0..=4 {
            for t in enumerate_sign_triangles(TriFamily::Ast, n) {
                let o = Object::Sign(t.clone());
                let v = statistic(Statistic::InvNabla, &o).unwrap();
                let p = statistic(Statistic::InvPrimeNabla, &o).unwrap();
                let mu = statistic(Statistic::MuNabla, &o).unwrap();
                assert_eq!(mu, binom2(n) - v - p, "{}", t.to_text());
            }
        }
    }

    #[test]
    fn permutation_inversions() {
        let a = Asm::permutation(&[2, 0, 1]);
        assert_eq!(inv(&a), 2);
        assert_eq!(inv_prime(&a), 1);
    }
}

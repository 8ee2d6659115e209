//! Brute-force partition functions over odd DASASM-triangles.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::weights::{BoundaryConstants, Weights};
use super::{Normalization, SpectralPoint};
use crate::error::{Error, Result};
use crate::exact_arith::{laurent_from_samples, ExactScalar, LaurentPoly};
use crate::objects::{visit_dasasm_triangles, BoundaryState, BulkType, TriConfig};

/// Largest order summed by default.
pub const DEFAULT_Z_CAP: usize = 5;

/// Which configurations enter the sum, by the bottom vertical edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    All,
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Left(usize),
    Bulk(usize, usize),
    Right(usize),
}

/// Vertices of degree > 1, row by row, left to right.
fn slots(n: usize) -> Vec<Slot> {
    let mut v = Vec::with_capacity(n * n + 2 * n);
    for i in 1..=n {
        v.push(Slot::Left(i));
        for j in i + 1..2 * n + 2 - i {
            v.push(Slot::Bulk(i, j));
        }
        v.push(Slot::Right(i));
    }
    v
}

fn bulk_code(t: BulkType) -> u8 {
    BulkType::ALL.iter().position(|&x| x == t).unwrap() as u8
}

const STATES: [BoundaryState; 4] = [
    BoundaryState::One,
    BoundaryState::MinusOne,
    BoundaryState::ZeroIn,
    BoundaryState::ZeroOut,
];

fn state_code(s: BoundaryState) -> u8 {
    STATES.iter().position(|&x| x == s).unwrap() as u8
}

fn encode(c: &TriConfig, sl: &[Slot]) -> Result<Vec<u8>> {
    sl.iter()
        .map(|&s| match s {
            Slot::Left(i) => Ok(state_code(c.boundary_state(i, i))),
            Slot::Right(i) => Ok(state_code(c.boundary_state(i, 2 * c.order() + 2 - i))),
            Slot::Bulk(i, j) => c
                .bulk_type(i, j)
                .map(bulk_code)
                .ok_or_else(|| Error::InvalidConfig(format!("unbalanced bulk vertex ({i}, {j})"))),
        })
        .collect()
}

struct Coded {
    up: bool,
    codes: Vec<u8>,
}

type Cache = Mutex<HashMap<usize, Arc<Vec<Coded>>>>;

/// Vertex codes of every configuration of order n, computed once.
fn coded(n: usize) -> Arc<Vec<Coded>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let sl = slots(n);
    let mut all = Vec::new();
    visit_dasasm_triangles(n, |t| {
        let c = TriConfig::from_triangle(t);
        all.push(Coded {
            up: c.bottom_up(),
            codes: encode(&c, &sl).expect("triangles give balanced configurations"),
        });
    });
    let all = Arc::new(all);
    cache.lock().unwrap().insert(n, all.clone());
    all
}

/// Weights of every state of every slot: 6 entries for bulk slots, 4 for
/// boundary slots.
fn weight_table(n: usize, w: &Weights, u: &[ExactScalar]) -> Result<Vec<Vec<ExactScalar>>> {
    let path = |j: usize| j.min(2 * n + 2 - j);
    slots(n)
        .into_iter()
        .map(|s| match s {
            Slot::Left(i) => STATES.iter().map(|&st| w.left(st, &u[i - 1])).collect(),
            Slot::Right(i) => STATES.iter().map(|&st| w.right(st, &u[i - 1])).collect(),
            Slot::Bulk(i, j) => {
                let x = &u[i - 1] * &u[path(j) - 1];
                BulkType::ALL.iter().map(|&t| w.bulk(t, &x)).collect()
            }
        })
        .collect()
}

fn check_point(n: usize, point: &SpectralPoint) -> Result<()> {
    if point.u.len() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "order {n} needs {} spectral parameters, got {}",
            n + 1,
            point.u.len()
        )));
    }
    Ok(())
}

/// A rational weight table over per-slot common denominators d_k: entry
/// [k][st] equals nums[k][st] / d_k, and `denominator` is the product of the d_k.
struct IntTable {
    nums: Vec<Vec<BigInt>>,
    denominator: BigInt,
}

impl IntTable {
    fn from_scalars(table: &[Vec<ExactScalar>]) -> Option<IntTable> {
        let mut nums = Vec::with_capacity(table.len());
        let mut denominator = BigInt::one();
        for row in table {
            let rs: Vec<&BigRational> = row.iter().map(|x| x.as_rational()).collect::<Option<_>>()?;
            let d = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            nums.push(rs.iter().map(|r| r.numer() * (&d / r.denom())).collect());
            denominator *= d;
        }
        Some(IntTable { nums, denominator })
    }

    fn product(&self, codes: &[u8]) -> BigInt {
        let mut acc = BigInt::one();
        for (&c, row) in codes.iter().zip(&self.nums) {
            let f = &row[c as usize];
            if f.is_zero() {
                return BigInt::zero();
            }
            acc *= f;
        }
        acc
    }
}

/// Product of the vertex weights of a configuration.
pub fn config_weight(c: &TriConfig, point: &SpectralPoint, k: &BoundaryConstants) -> Result<ExactScalar> {
    let n = c.order();
    check_point(n, point)?;
    let w = Weights::new(&point.q, k)?;
    let table = weight_table(n, &w, &point.u)?;
    let codes = encode(c, &slots(n))?;
    Ok(codes
        .iter()
        .zip(&table)
        .map(|(&code, row)| row[code as usize].clone())
        .product())
}

pub fn partition_function(
    n: usize,
    point: &SpectralPoint,
    k: &BoundaryConstants,
    sector: Sector,
    norm: Normalization,
) -> Result<ExactScalar> {
    partition_function_with_cap(n, point, k, sector, norm, DEFAULT_Z_CAP)
}

pub fn partition_function_with_cap(
    n: usize,
    point: &SpectralPoint,
    k: &BoundaryConstants,
    sector: Sector,
    norm: Normalization,
    cap: usize,
) -> Result<ExactScalar> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "partition function".to_string(),
            n,
            cap,
        });
    }
    check_point(n, point)?;
    let w = Weights::new(&point.q, k)?;
    let table = weight_table(n, &w, &point.u)?;
    let configs = coded(n);
    let keep = |c: &&Coded| match sector {
        Sector::All => true,
        Sector::Up => c.up,
        Sector::Down => !c.up,
    };
    let z = match IntTable::from_scalars(&table) {
        Some(it) => {
            let num = configs
                .par_iter()
                .filter(keep)
                .map(|c| it.product(&c.codes))
                .reduce(BigInt::zero, |a, b| a + b);
            ExactScalar::from(BigRational::new(num, it.denominator))
        }
        None => configs
            .par_iter()
            .filter(keep)
            .map(|c| {
                let mut acc = ExactScalar::one();
                for (&code, row) in c.codes.iter().zip(&table) {
                    let f = &row[code as usize];
                    if f.is_zero() {
                        return ExactScalar::zero();
                    }
                    if !f.is_one() {
                        acc *= f;
                    }
                }
                acc
            })
            .reduce(ExactScalar::zero, |a, b| a + b),
    };
    match norm {
        Normalization::None => Ok(z),
        _ => z.checked_div(&norm.divisor(&point.q, &point.u[..n])?),
    }
}

/// Z as an exact Laurent polynomial in u_{var+1}, the other parameters
/// fixed at `point`. Each vertex weight has width at most 5 in one
/// variable, so it is interpolated on [−2, 2] and the products expanded.
pub fn partition_laurent(
    n: usize,
    point: &SpectralPoint,
    k: &BoundaryConstants,
    sector: Sector,
    var: usize,
) -> Result<LaurentPoly> {
    if n > DEFAULT_Z_CAP {
        return Err(Error::CapExceeded {
            what: "partition function".to_string(),
            n,
            cap: DEFAULT_Z_CAP,
        });
    }
    check_point(n, point)?;
    if var > n {
        return Err(Error::ShapeMismatch(format!("no spectral parameter u{}", var + 1)));
    }
    let w = Weights::new(&point.q, k)?;
    let nodes: Vec<BigRational> = (1..=5).map(|x| BigRational::from_integer(x.into())).collect();
    let samples = nodes
        .iter()
        .map(|x| {
            let mut u = point.u.clone();
            u[var] = ExactScalar::Rational(x.clone());
            weight_table(n, &w, &u)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table: Vec<Vec<LaurentPoly>> = Vec::with_capacity(samples[0].len());
    for (k, row) in samples[0].iter().enumerate() {
        let polys = (0..row.len())
            .map(|st| {
                let values: Vec<ExactScalar> = samples.iter().map(|t| t[k][st].clone()).collect();
                laurent_from_samples(&nodes, &values, -2, 2)
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(polys);
    }
    let configs = coded(n);
    let keep = |c: &&Coded| match sector {
        Sector::All => true,
        Sector::Up => c.up,
        Sector::Down => !c.up,
    };
    if let Some(it) = IntPolyTable::from_polys(&table) {
        let sum = configs
            .par_iter()
            .filter(keep)
            .map(|c| it.product(&c.codes))
            .reduce(BTreeMap::new, |mut a, b| {
                for (e, x) in b {
                    *a.entry(e).or_insert_with(BigInt::zero) += x;
                }
                a
            });
        let mut z = LaurentPoly::zero();
        for (e, x) in sum {
            let c = ExactScalar::from(BigRational::new(x, it.denominator.clone()));
            z = z.add(&LaurentPoly::monomial(c, e));
        }
        return Ok(z);
    }
    let mut z = LaurentPoly::zero();
    for c in configs.iter().filter(keep) {
        let mut acc = LaurentPoly::constant(ExactScalar::one());
        for (&code, row) in c.codes.iter().zip(&table) {
            acc = acc.mul(&row[code as usize]);
            if acc.is_zero() {
                break;
            }
        }
        z = z.add(&acc);
    }
    Ok(z)
}

/// Laurent weight table with rational coefficients over per-slot common
/// denominators. Constant entries are kept apart so that a configuration
/// costs one integer product plus a few polynomial products.
struct IntPolyTable {
    // (low exponent, integer coefficients); a single coefficient at 0 for constants
    nums: Vec<Vec<(i64, Vec<BigInt>)>>,
    denominator: BigInt,
}

impl IntPolyTable {
    fn from_polys(table: &[Vec<LaurentPoly>]) -> Option<IntPolyTable> {
        let mut nums = Vec::with_capacity(table.len());
        let mut denominator = BigInt::one();
        for row in table {
            let mut d = BigInt::one();
            for p in row {
                if let (Some(lo), Some(hi)) = (p.order(), p.degree()) {
                    for e in lo..=hi {
                        d = d.lcm(p.coeff(e).as_rational()?.denom());
                    }
                }
            }
            let entries = row
                .iter()
                .map(|p| match (p.order(), p.degree()) {
                    (Some(lo), Some(hi)) => (
                        lo,
                        (lo..=hi)
                            .map(|e| {
                                let r = p.coeff(e);
                                let r = r.as_rational().expect("checked rational");
                                r.numer() * (&d / r.denom())
                            })
                            .collect(),
                    ),
                    _ => (0, Vec::new()),
                })
                .collect();
            nums.push(entries);
            denominator *= d;
        }
        Some(IntPolyTable { nums, denominator })
    }

    fn product(&self, codes: &[u8]) -> BTreeMap<i64, BigInt> {
        let mut scalar = BigInt::one();
        let mut poly: (i64, Vec<BigInt>) = (0, vec![BigInt::one()]);
        for (&c, row) in codes.iter().zip(&self.nums) {
            let (lo, cs) = &row[c as usize];
            if cs.is_empty() {
                return BTreeMap::new();
            }
            if cs.len() == 1 {
                poly.0 += lo;
                scalar *= &cs[0];
                continue;
            }
            let mut out = vec![BigInt::zero(); poly.1.len() + cs.len() - 1];
            for (a, x) in poly.1.iter().enumerate() {
                for (b, y) in cs.iter().enumerate() {
                    out[a + b] += x * y;
                }
            }
            poly = (poly.0 + lo, out);
        }
        poly.1
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (poly.0 + k as i64, x * &scalar))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{sigma, RationalSampler};
    use crate::objects::{enumerate_sign_triangles, visit_sign_triangles, DasasmTriangle, TriFamily};
    use crate::vertex_model::{boundary_spec, SpecKind};

    fn random_setup(seed: u64, n: usize) -> (SpectralPoint, BoundaryConstants) {
        let mut s = RationalSampler::new(seed);
        loop {
            let q = s.scalar();
            let u = s.scalars(n + 1);
            let k = BoundaryConstants::from_array(std::array::from_fn(|_| s.scalar()));
            if Weights::new(&q, &k).is_ok() {
                return (SpectralPoint::new(q, ExactScalar::one(), u), k);
            }
        }
    }

    #[test]
    fn order_zero_is_one() {
        let (pt, k) = random_setup(1, 0);
        let z = partition_function(0, &pt, &k, Sector::All, Normalization::None).unwrap();
        assert!(z.is_one());
    }

    #[test]
    fn worked_example_weight() {
        let t = DasasmTriangle::from_text("0,0,0,0,1,0,0/1,0,0,-1,1/0,0,1/1").unwrap();
        assert!(t.validate().is_ok());
        let c = TriConfig::from_triangle(&t);
        for seed in 0..5 {
            let (pt, k) = random_setup(100 + seed, 3);
            let q = &pt.q;
            let u = &pt.u;
            let qb = q.inv().unwrap();
            let ub: Vec<ExactScalar> = u.iter().map(|x| x.inv().unwrap()).collect();
            let sg = |x: ExactScalar| sigma(&x).unwrap();
            let q2 = q.square();
            let den = sg(q2.clone()).pow(6).unwrap() * sg(q2.square()).pow(7).unwrap();
            let num = k.delta_l.square()
                * &k.delta_r
                * sg(&q2 * &u[0].square())
                * (&k.beta_l * q * &u[1] + &k.gamma_l * &qb * &ub[1])
                * sg(&q2 * &u[2].square())
                * sg(&q2 * &ub[0].square())
                * (&k.beta_r * q * &ub[1] + &k.gamma_r * &qb * &u[1])
                * (&k.beta_r * q * &ub[2] + &k.gamma_r * &qb * &u[2])
                * sg(&q2 * &u[0] * &u[1])
                * sg(&q2 * &u[0] * &u[2])
                * sg(&q2 * &u[0] * &u[3])
                * sg(&q2 * &ub[0] * &ub[1])
                * sg(&q2 * &ub[1] * &ub[2])
                * sg(&q2 * &ub[1] * &ub[3])
                * sg(&q2 * &u[2] * &u[3]);
            assert_eq!(config_weight(&c, &pt, &k).unwrap(), num / den);
        }
    }

    #[test]
    fn sectors_add_up() {
        for n in 0..=3 {
            let (pt, k) = random_setup(7 + n as u64, n);
            let z = |s| partition_function(n, &pt, &k, s, Normalization::None).unwrap();
            assert_eq!(z(Sector::All), z(Sector::Up) + z(Sector::Down));
        }
    }

    fn combinatorial(kind: SpecKind, n: usize, sector: Sector) -> ExactScalar {
        let one = ExactScalar::one();
        let (k, norm) = boundary_spec(kind, &ExactScalar::zeta(), &one).unwrap();
        let pt = SpectralPoint::new(ExactScalar::zeta(), one.clone(), vec![one; n + 1]);
        partition_function(n, &pt, &k, sector, norm).unwrap()
    }

    #[test]
    fn ast_point_counts_asts() {
        for n in 0..=4 {
            let want = enumerate_sign_triangles(TriFamily::Ast, n).len() as i64;
            assert_eq!(combinatorial(SpecKind::Ast, n, Sector::All), ExactScalar::int(want), "n = {n}");
        }
    }

    #[test]
    fn qast_point_counts_qasts() {
        for n in 1..=4 {
            let mut want = 0i64;
            visit_sign_triangles(TriFamily::Qast, n, |_| want += 1);
            assert_eq!(combinatorial(SpecKind::Qast, n, Sector::Up), ExactScalar::int(want), "n = {n}");
        }
    }

    #[test]
    fn ast_point_weight_is_indicator() {
        let one = ExactScalar::one();
        let (k, _) = boundary_spec(SpecKind::Ast, &ExactScalar::zeta(), &one).unwrap();
        let n = 3;
        let pt = SpectralPoint::new(ExactScalar::zeta(), one.clone(), vec![one; n + 1]);
        visit_dasasm_triangles(n, |t| {
            let w = config_weight(&TriConfig::from_triangle(t), &pt, &k).unwrap();
            let extreme = t.n_alpha(-1) == n;
            assert_eq!(w, ExactScalar::int(extreme as i64), "{}", t.to_text());
        });
    }

    #[test]
    fn laurent_expansion_matches_values() {
        let n = 2;
        let (pt, k) = random_setup(21, n);
        for var in 0..=n {
            for sec in [Sector::All, Sector::Up, Sector::Down] {
                let poly = partition_laurent(n, &pt, &k, sec, var).unwrap();
                let direct = partition_function(n, &pt, &k, sec, Normalization::None).unwrap();
                assert_eq!(poly.eval(&pt.u[var]).unwrap(), direct);
            }
        }
    }

    #[test]
    fn cap() {
        let (pt, k) = random_setup(3, 6);
        assert!(matches!(
            partition_function(6, &pt, &k, Sector::All, Normalization::None),
            Err(Error::CapExceeded { .. })
        ));
    }
}

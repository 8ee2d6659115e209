//! The registry of named verification checks behind `verify --check`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::characters::{product_formula, verify_character_form, CharacterForm, ProductKind};
use crate::error::{Error, Result};
use crate::exact_arith::{determinant, pfaffian, RationalSampler, SkewTriangle};
use crate::formulas::{formula_vs_bruteforce, okada_pfaffian_identity_check, FormulaCase};
use crate::matchings::matching_identities_with_cap;
use crate::objects::{
    ast_to_minzero, enumerate_sign_triangles, enumerate_with_cap, minzero_to_ast, qast_from_triangle,
    qast_to_triangle, visit_dasasm_triangles, DasasmTriangle, Family, Object, TriFamily,
};
use crate::report::{run_points, CheckReport};
use crate::statistics::{
    appendix_one_minus_one, boundary_stats, joint_distribution_with_cap, kappa_recursion_check_with_cap,
    rho_conjecture_with_cap, GenPoly, Statistic,
};
use crate::vertex_model::{
    verify_global_property, verify_local_equation, ConstantChoice, GlobalProperty, LocalEquation, SpecKind,
};

/// A registered check: its id and the orders it runs at by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckInfo {
    pub id: &'static str,
    pub min_n: usize,
    /// Largest order run by default; `None` for checks without an order.
    pub max_n: Option<usize>,
    pub conjecture: bool,
}

const fn hard(id: &'static str, min_n: usize, max_n: usize) -> CheckInfo {
    CheckInfo {
        id,
        min_n,
        max_n: Some(max_n),
        conjecture: false,
    }
}

const fn local(id: &'static str) -> CheckInfo {
    CheckInfo {
        id,
        min_n: 0,
        max_n: None,
        conjecture: false,
    }
}

pub const CHECKS: [CheckInfo; 36] = [
    hard("bounds", 1, 4),
    hard("boundeq", 0, 4),
    hard("bijection-minzero", 0, 4),
    hard("bijection-qast", 0, 4),
    local("ybe"),
    local("refl-left"),
    local("refl-right"),
    local("trivial-cross"),
    local("rue"),
    hard("updown", 0, 3),
    hard("symmetry", 0, 3),
    hard("inversion", 0, 3),
    hard("evenness", 0, 3),
    hard("degree-order", 0, 3),
    hard("eval-full", 1, 3),
    hard("eval-up", 1, 3),
    hard("eval-down", 1, 3),
    hard("eval-u1-q", 1, 3),
    hard("eval-u1-u2", 2, 3),
    hard("zero-at-pq2", 1, 3),
    hard("ast-full", 1, 4),
    hard("ast-at-p", 1, 4),
    hard("ast-asm-relation", 1, 4),
    hard("qast-full", 1, 4),
    hard("qast-at-p", 1, 4),
    hard("oosasm", 1, 4),
    hard("okada", 1, 3),
    hard("schur-ast", 1, 4),
    hard("schur-qast", 1, 4),
    hard("symp-oosasm", 1, 4),
    hard("products", 1, 4),
    hard("two-three-enum", 1, 5),
    hard("kappa-recursion", 1, 5),
    CheckInfo {
        id: "rho-conjecture",
        min_n: 1,
        max_n: Some(5),
        conjecture: true,
    },
    hard("matchings", 1, 4),
    hard("appendix-one", 1, 8),
];

pub fn check_info(id: &str) -> Result<&'static CheckInfo> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentifier(id.to_string()))
}

/// Which orders to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orders {
    /// Exactly this n.
    Single(usize),
    /// The check's default range, clipped at this n.
    UpTo(usize),
    /// The check's default range.
    Default,
}

/// Seed, point count and an optional cap raising the largest accepted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub points: usize,
    pub cap: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            points: 20,
            cap: None,
        }
    }
}

fn orders(info: &CheckInfo, which: Orders, opts: &RunOptions) -> Result<Vec<Option<usize>>> {
    let Some(default_max) = info.max_n else {
        return Ok(vec![None]);
    };
    let cap = opts.cap.unwrap_or(default_max).max(default_max);
    match which {
        Orders::Single(n) if n > cap => Err(Error::CapExceeded {
            what: info.id.to_string(),
            n,
            cap,
        }),
        Orders::Single(n) if n < info.min_n => Err(Error::ShapeMismatch(format!(
            "{} needs n >= {}",
            info.id, info.min_n
        ))),
        Orders::Single(n) => Ok(vec![Some(n)]),
        Orders::UpTo(m) => Ok((info.min_n..=m.min(default_max)).map(Some).collect()),
        Orders::Default => Ok((info.min_n..=default_max).map(Some).collect()),
    }
}

/// Run one registered check, one report per order (or per constant choice
/// for the local equations).
pub fn run_check(id: &str, which: Orders, opts: &RunOptions) -> Result<Vec<CheckReport>> {
    let info = check_info(id)?;
    let enum_cap = opts.cap.unwrap_or(crate::objects::DEFAULT_CAP).max(crate::objects::DEFAULT_CAP);
    let mut out = Vec::new();
    for n in orders(info, which, opts)? {
        match n {
            None => out.extend(local_check(id, opts)?),
            Some(n) => out.extend(ordered_check(id, n, opts, enum_cap)?),
        }
    }
    Ok(out)
}

/// Every registered check at its default orders, clipped at `max_n`.
pub fn run_all(max_n: Option<usize>, opts: &RunOptions) -> Result<Vec<CheckReport>> {
    let which = max_n.map_or(Orders::Default, Orders::UpTo);
    let mut out = Vec::new();
    for c in &CHECKS {
        out.extend(run_check(c.id, which, opts)?);
    }
    Ok(out)
}

fn local_check(id: &str, opts: &RunOptions) -> Result<Vec<CheckReport>> {
    let eq = LocalEquation::ALL
        .into_iter()
        .find(|e| e.name() == id)
        .ok_or_else(|| Error::UnknownIdentifier(id.to_string()))?;
    let mut choices = vec![ConstantChoice::Generic];
    if !matches!(eq, LocalEquation::Ybe | LocalEquation::TrivialCross) {
        choices.extend(SpecKind::ALL.map(ConstantChoice::Spec));
    }
    Ok(choices
        .into_iter()
        .map(|c| verify_local_equation(eq, c, opts.seed, opts.points))
        .collect())
}

fn ordered_check(id: &str, n: usize, opts: &RunOptions, enum_cap: usize) -> Result<Vec<CheckReport>> {
    let (seed, points) = (opts.seed, opts.points);
    if let Some(g) = GlobalProperty::ALL.into_iter().find(|g| g.name() == id) {
        return Ok(vec![verify_global_property(g, n, ConstantChoice::Generic, seed, points)?]);
    }
    if let Some(c) = FormulaCase::ALL.into_iter().find(|c| c.name() == id) {
        return Ok(vec![formula_vs_bruteforce(c, n, seed, points)?.into_check_report()]);
    }
    let report = match id {
        "bounds" => bounds(n, enum_cap)?,
        "boundeq" => boundeq(n, enum_cap)?,
        "bijection-minzero" => bijection_minzero(n, enum_cap)?,
        "bijection-qast" => bijection_qast(n, enum_cap)?,
        "okada" => {
            let mut r = okada_pfaffian_identity_check(n, seed, points);
            r.absorb(pfaffian_squared(2 * n + 2, seed, points));
            r
        }
        "schur-ast" => renamed(id, verify_character_form(CharacterForm::AstSchur, n, seed, points)),
        "schur-qast" => renamed(id, verify_character_form(CharacterForm::QastSchur, n, seed, points)),
        "symp-oosasm" => renamed(id, verify_character_form(CharacterForm::oosasm(n), n, seed, points)),
        "products" => products(n, enum_cap)?,
        "two-three-enum" => two_three_enum(n, enum_cap)?,
        "kappa-recursion" => kappa(n, enum_cap)?,
        "rho-conjecture" => rho(n, enum_cap)?,
        "matchings" => matching_identities_with_cap(n, enum_cap.min(n.max(4)))?.into_check_report(),
        "appendix-one" => appendix(n, enum_cap)?,
        _ => return Err(Error::UnknownIdentifier(id.to_string())),
    };
    Ok(vec![report])
}

fn renamed(id: &str, mut r: CheckReport) -> CheckReport {
    r.check = id.to_string();
    r
}

fn check_enum_cap(what: &str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            n,
            cap,
        });
    }
    Ok(())
}

fn triangles(n: usize, cap: usize) -> Result<Vec<DasasmTriangle>> {
    check_enum_cap("DASASM-triangles", n, cap)?;
    let mut v = Vec::new();
    visit_dasasm_triangles(n, |t| v.push(t.clone()));
    Ok(v)
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Sharp bounds on N_{−1}, N₁, N₀ over DASASM(2n+1).
fn bounds(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("bounds", Some(n), 0, 0);
    let ts = triangles(n, cap)?;
    let ranges: [(&str, fn(&DasasmTriangle) -> usize, usize, usize); 3] = [
        ("N_-1", |t| t.n_alpha(-1), 0, n),
        ("N_1", |t| t.n_alpha(1), 0, n + 1),
        ("N_0", |t| t.n_alpha(0), n, 2 * n),
    ];
    for (name, f, lo, hi) in ranges {
        let vals: Vec<usize> = ts.iter().map(f).collect();
        let (mn, mx) = (vals.iter().min().copied(), vals.iter().max().copied());
        r.expect(mn == Some(lo), format!("min {name} is {mn:?}, expected {lo}"));
        r.expect(mx == Some(hi), format!("max {name} is {mx:?}, expected {hi}"));
    }
    r.note(format!("{} triangles", ts.len()));
    Ok(r)
}

fn boundeq(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("boundeq", Some(n), 0, 0);
    let ts = triangles(n, cap)?;
    for t in &ts {
        let b = boundary_stats(t).degree_balance(n);
        r.expect(b == 0, format!("{}: balance {b}", t.to_text()));
    }
    r.note(format!("{} triangles", ts.len()));
    Ok(r)
}

fn bijection_minzero(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("bijection-minzero", Some(n), 0, 0);
    let extreme: Vec<DasasmTriangle> = triangles(n, cap)?.into_iter().filter(|t| t.n_alpha(0) == n).collect();
    for t in &extreme {
        let a = minzero_to_ast(t)?;
        r.expect(a.validate().is_ok() && a.order() == n + 1, format!("{} maps to a non-AST", t.to_text()));
        r.expect(&ast_to_minzero(&a)? == t, format!("{} does not round-trip", t.to_text()));
    }
    check_enum_cap("AST", n + 1, cap)?;
    let asts = enumerate_sign_triangles(TriFamily::Ast, n + 1);
    for a in &asts {
        r.expect(&minzero_to_ast(&ast_to_minzero(a)?)? == a, format!("AST {} does not round-trip", a.to_text()));
    }
    r.expect(
        extreme.len() == asts.len(),
        format!("{} extreme triangles, {} ASTs of order {}", extreme.len(), asts.len(), n + 1),
    );
    r.expect(
        int(asts.len() as u64) == product_formula(ProductKind::Asm, n + 1),
        format!("|AST({})| = {} is not the ASM product", n + 1, asts.len()),
    );
    Ok(r)
}

fn bijection_qast(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("bijection-qast", Some(n), 0, 0);
    let extreme: Vec<DasasmTriangle> = triangles(n, cap)?
        .into_iter()
        .filter(|t| t.n_alpha(1) == n + 1)
        .collect();
    for t in &extreme {
        let q = qast_from_triangle(t)?;
        r.expect(q.validate().is_ok(), format!("{} maps to a non-QAST", t.to_text()));
        r.expect(&qast_to_triangle(&q)? == t, format!("{} does not round-trip", t.to_text()));
    }
    let qasts = enumerate_sign_triangles(TriFamily::Qast, n);
    for q in &qasts {
        r.expect(&qast_from_triangle(&qast_to_triangle(q)?)? == q, format!("QAST {} does not round-trip", q.to_text()));
    }
    r.expect(
        extreme.len() == qasts.len(),
        format!("{} extreme triangles, {} QASTs", extreme.len(), qasts.len()),
    );
    r.expect(
        int(extreme.len() as u64) == product_formula(ProductKind::Cspp, n),
        format!("{} extreme triangles is not the CSPP product", extreme.len()),
    );
    Ok(r)
}

/// Pf(A)² = det(A) for random skew matrices of every even order up to `max_order`.
fn pfaffian_squared(max_order: usize, seed: u64, points: usize) -> CheckReport {
    let mut r = CheckReport::new("pfaffian-squared", None, seed, points);
    run_points(&mut r, |s: &mut RationalSampler| {
        let mut fails = Vec::new();
        for order in (2..=max_order).step_by(2) {
            let t = SkewTriangle::from_fn(order, |_, _| s.scalar());
            let pf = pfaffian(&t)?;
            let det = determinant(&t.completion())?;
            if pf.square() != det {
                fails.push(format!("order {order}: pf^2 = {} but det = {det}", pf.square()));
            }
        }
        Ok(fails)
    });
    r
}

/// |OOSASM(2n+1)| counted as DASASM-triangles with N₀ = 2n.
pub fn oosasm_count(n: usize, cap: usize) -> Result<u64> {
    check_enum_cap("OOSASM", n, cap)?;
    let mut k = 0;
    visit_dasasm_triangles(n, |t| {
        if t.n_alpha(0) == 2 * n {
            k += 1
        }
    });
    Ok(k)
}

/// Products against brute-force counts at n.
fn products(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("products", Some(n), 0, 0);
    let asms = enumerate_with_cap(Family::Asm, n, cap)?;
    let mut eq = |kind: ProductKind, brute: u64, what: &str| {
        let f = product_formula(kind, n);
        r.expect(f == int(brute), format!("{kind}({n}) = {f}, {what} = {brute}"));
    };
    eq(ProductKind::Asm, asms.len() as u64, "|ASM|");
    let one_minus = asms.iter().filter(|a| matches!(a, Object::Asm(a) if a.count(-1) == 1)).count();
    eq(ProductKind::AsmOneMinusOne, one_minus as u64, "ASMs with one -1");
    let qast = enumerate_sign_triangles(TriFamily::Qast, n).len() as u64;
    eq(ProductKind::Cspp, qast, "|QAST|");
    let oo = oosasm_count(n, cap)?;
    let vh = product_formula(ProductKind::Vhsasm, n + 1);
    r.expect(vh == int(oo), format!("VHSASM({}) = {vh}, |OOSASM({})| = {oo}", n + 1, 2 * n + 1));
    let (kind, m) = if n % 2 == 1 {
        (ProductKind::Oosasm4nMinus1, n.div_ceil(2))
    } else {
        (ProductKind::Oosasm4nPlus1, n / 2)
    };
    let f = product_formula(kind, m);
    r.expect(f == int(oo), format!("{kind}({m}) = {f}, |OOSASM({})| = {oo}", 2 * n + 1));
    Ok(r)
}

fn genpoly(family: Family, stat: Statistic, n: usize, cap: usize) -> Result<GenPoly> {
    joint_distribution_with_cap(family, n, &[stat], cap)?.to_genpoly()
}

fn eval_big(p: &GenPoly, x: i64) -> BigRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(int(0), |acc, &c| acc * int(x) + int(c))
}

/// Σ x^{μ_∇} over AST(n) = Σ x^{μ} over ASM(n), and its values at 2 and 3.
fn two_three_enum(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("two-three-enum", Some(n), 0, 0);
    let ast = genpoly(Family::Ast, Statistic::MuNabla, n, cap)?;
    let asm = genpoly(Family::Asm, Statistic::Mu, n, cap)?;
    r.expect(ast == asm, format!("AST polynomial {ast:?} != ASM polynomial {asm:?}"));
    let two = eval_big(&ast, 2);
    let want = product_formula(ProductKind::Ast2Enum, n);
    r.expect(two == want, format!("2-enumeration {two} != {want}"));
    let three = eval_big(&ast, 3);
    let (kind, m) = if n % 2 == 1 {
        (ProductKind::Ast3EnumOdd, (n - 1) / 2)
    } else {
        (ProductKind::Ast3EnumEven, (n - 2) / 2)
    };
    let want = product_formula(kind, m);
    r.expect(three == want, format!("3-enumeration {three} != {kind}({m}) = {want}"));
    Ok(r)
}

fn kappa(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("kappa-recursion", Some(n), 0, 0);
    let k = kappa_recursion_check_with_cap(n, cap)?;
    r.expect(k.functional_equation, "functional equation fails");
    r.expect(k.recursion, "recursion fails");
    r.expect(k.explicit_solution, "explicit solution fails");
    r.expect(k.d_from_b, "D from B fails");
    if n == 3 {
        r.expect(k.k_ast == GenPoly::new(vec![2, 1, 1, 1, 2]), format!("K_AST(3) = {:?}", k.k_ast));
        r.expect(k.k_asm == GenPoly::new(vec![2, 0, 2, 2, 1]), format!("K_ASM(3) = {:?}", k.k_asm));
    }
    Ok(r)
}

fn rho(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("rho-conjecture", Some(n), 0, 0);
    let k = rho_conjecture_with_cap(n, cap)?;
    r.expect(
        k.distributions_match(),
        format!("rho {:?} != top-row position {:?}", k.ast_rho, k.asm_top),
    );
    r.note(if k.joint_match() {
        "joint (mu, inv, rho) distribution matches".to_string()
    } else {
        "joint (mu, inv, rho) distribution differs".to_string()
    });
    Ok(r.as_conjecture())
}

fn appendix(n: usize, cap: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("appendix-one", Some(n), 0, 0);
    let a = appendix_one_minus_one(n);
    r.expect(a.agrees(), format!("double sum {} != closed form {}", a.sum, a.closed_form));
    let f = product_formula(ProductKind::AsmOneMinusOne, n);
    r.expect(f == int(a.sum.clone()), format!("double sum {} != product {f}", a.sum));
    if n <= 5.min(cap) {
        let brute = enumerate_sign_triangles(TriFamily::Ast, n)
            .iter()
            .filter(|t| t.count(-1) == 1)
            .count();
        r.expect(int(brute as u64) == int(a.sum.clone()), format!("brute force {brute} != double sum {}", a.sum));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        assert_eq!(CHECKS.len(), 36);
        let mut ids: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 36);
        assert!(matches!(run_check("nope", Orders::Default, &RunOptions::default()), Err(Error::UnknownIdentifier(_))));
    }

    #[test]
    fn combinatorial_checks_pass() {
        let opts = RunOptions { points: 2, ..Default::default() };
        for id in ["bounds", "boundeq", "bijection-minzero", "bijection-qast", "products", "two-three-enum", "appendix-one"] {
            for r in run_check(id, Orders::UpTo(3), &opts).unwrap() {
                assert!(r.passed(), "{id}: {:?}", r.details);
            }
        }
    }

    #[test]
    fn cap_applies_to_single_orders() {
        let opts = RunOptions::default();
        assert!(matches!(run_check("matchings", Orders::Single(5), &opts), Err(Error::CapExceeded { .. })));
        assert!(matches!(run_check("eval-u1-u2", Orders::Single(1), &opts), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn rho_is_a_conjecture() {
        let r = run_check("rho-conjecture", Orders::Single(3), &RunOptions::default()).unwrap();
        assert!(r[0].status.is_conjecture());
    }
}

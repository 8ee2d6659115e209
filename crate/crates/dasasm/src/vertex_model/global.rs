//! Symmetry, inversion, evenness, degree windows and the evaluation identities
//! of the partition function, checked at random points.

use std::fmt;
use std::str::FromStr;

use super::local::ConstantChoice;
use super::partition::{partition_function, partition_laurent, Sector};
use super::weights::{BoundaryConstants, Weights};
use super::{boundary_spec, Normalization, SpecKind, SpectralPoint};
use crate::error::{Error, Result};
use crate::exact_arith::{reconstruct_with, ExactScalar, RationalSampler};
use crate::objects::{BoundaryState, BulkType};
use crate::report::{run_points, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalProperty {
    Symmetry,
    Inversion,
    Evenness,
    DegreeOrder,
    UpDown,
    EvalFull,
    EvalUp,
    EvalDown,
    EvalU1Q,
    EvalU1U2,
    ZeroAtPq2,
}

impl GlobalProperty {
    pub const ALL: [GlobalProperty; 11] = [
        GlobalProperty::Symmetry,
        GlobalProperty::Inversion,
        GlobalProperty::Evenness,
        GlobalProperty::DegreeOrder,
        GlobalProperty::UpDown,
        GlobalProperty::EvalFull,
        GlobalProperty::EvalUp,
        GlobalProperty::EvalDown,
        GlobalProperty::EvalU1Q,
        GlobalProperty::EvalU1U2,
        GlobalProperty::ZeroAtPq2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GlobalProperty::Symmetry => "symmetry",
            GlobalProperty::Inversion => "inversion",
            GlobalProperty::Evenness => "evenness",
            GlobalProperty::DegreeOrder => "degree-order",
            GlobalProperty::UpDown => "updown",
            GlobalProperty::EvalFull => "eval-full",
            GlobalProperty::EvalUp => "eval-up",
            GlobalProperty::EvalDown => "eval-down",
            GlobalProperty::EvalU1Q => "eval-u1-q",
            GlobalProperty::EvalU1U2 => "eval-u1-u2",
            GlobalProperty::ZeroAtPq2 => "zero-at-pq2",
        }
    }

    /// Smallest order the property speaks about.
    pub fn min_n(self) -> usize {
        match self {
            GlobalProperty::EvalFull
            | GlobalProperty::EvalUp
            | GlobalProperty::EvalDown
            | GlobalProperty::EvalU1Q
            | GlobalProperty::ZeroAtPq2 => 1,
            GlobalProperty::EvalU1U2 => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for GlobalProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GlobalProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        GlobalProperty::ALL
            .into_iter()
            .find(|g| g.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

const SECTORS: [Sector; 3] = [Sector::All, Sector::Up, Sector::Down];

/// One random sample: q, p, constants and u_1, …, u_{n+1}.
struct Sample {
    n: usize,
    q: ExactScalar,
    p: ExactScalar,
    k: BoundaryConstants,
    u: Vec<ExactScalar>,
    w: Weights,
}

impl Sample {
    fn draw(n: usize, choice: ConstantChoice, s: &mut RationalSampler) -> Result<Sample> {
        let q = s.scalar();
        let k = choice.draw(&q, s)?;
        let w = Weights::new(&q, &k)?;
        Ok(Sample {
            n,
            q,
            p: s.scalar(),
            k,
            u: s.scalars(n + 1),
            w,
        })
    }

    fn z_with(&self, n: usize, u: &[ExactScalar], k: &BoundaryConstants, sector: Sector) -> Result<ExactScalar> {
        let pt = SpectralPoint::new(self.q.clone(), self.p.clone(), u.to_vec());
        partition_function(n, &pt, k, sector, Normalization::None)
    }

    fn z(&self, n: usize, u: &[ExactScalar], sector: Sector) -> Result<ExactScalar> {
        self.z_with(n, u, &self.k, sector)
    }

    fn r(&self, st: BoundaryState, u: &ExactScalar) -> Result<ExactScalar> {
        self.w.right(st, u)
    }

    fn l_out(&self, u: &ExactScalar) -> Result<ExactScalar> {
        self.w.left(BoundaryState::ZeroOut, u)
    }

    fn ne(&self, x: &ExactScalar) -> Result<ExactScalar> {
        self.w.bulk(BulkType::Ne, x)
    }

    /// W_L(0out)(u₁) Π_{i=2}^n W_NE(u₁u_i) W_NE(q²ū₁u_i).
    fn omega(&self) -> Result<ExactScalar> {
        let u1 = &self.u[0];
        let shifted = self.q.square() * &u1.inv()?;
        let mut o = self.l_out(u1)?;
        for ui in &self.u[1..self.n] {
            o *= self.ne(&(u1 * ui))? * self.ne(&(&shifted * ui))?;
        }
        Ok(o)
    }

    /// (u₂, …, u_n; x) for order n−1.
    fn tail_with(&self, x: ExactScalar) -> Vec<ExactScalar> {
        let mut v = self.u[1..self.n].to_vec();
        v.push(x);
        v
    }

    /// u with u_{n+1} = q²ū₁.
    fn at_shift(&self) -> Result<Vec<ExactScalar>> {
        let mut v = self.u.clone();
        v[self.n] = self.q.square() * &self.u[0].inv()?;
        Ok(v)
    }
}

fn sector_name(s: Sector) -> &'static str {
    match s {
        Sector::All => "Z",
        Sector::Up => "Z_up",
        Sector::Down => "Z_down",
    }
}

fn neg_one_pow(n: usize) -> ExactScalar {
    ExactScalar::int(if n % 2 == 0 { 1 } else { -1 })
}

fn symmetry(s: &Sample) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    for sec in SECTORS {
        let base = s.z(s.n, &s.u, sec)?;
        for i in 0..s.n.saturating_sub(1) {
            let mut v = s.u.clone();
            v.swap(i, i + 1);
            if s.z(s.n, &v, sec)? != base {
                fails.push(format!("{} changes under u{} <-> u{}", sector_name(sec), i + 1, i + 2));
            }
        }
    }
    Ok(fails)
}

fn inversion(s: &Sample) -> Result<Vec<String>> {
    let inv: Vec<ExactScalar> = s.u.iter().map(|x| x.inv()).collect::<Result<_>>()?;
    let sw = s.k.swapped();
    let mut fails = Vec::new();
    for sec in SECTORS {
        if s.z(s.n, &s.u, sec)? != s.z_with(s.n, &inv, &sw, sec)? {
            fails.push(format!("{} not invariant", sector_name(sec)));
        }
    }
    Ok(fails)
}

fn evenness(s: &Sample) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    for sec in SECTORS {
        let base = s.z(s.n, &s.u, sec)?;
        for i in 0..s.n {
            let mut v = s.u.clone();
            v[i] = -&v[i];
            if s.z(s.n, &v, sec)? != base {
                fails.push(format!("{} not even in u{}", sector_name(sec), i + 1));
            }
        }
    }
    Ok(fails)
}

/// Expand Z exactly in each variable and check the support; the window in
/// u_{n+1} is also reconstructed from samples one wider on each side.
fn degree_order(s: &Sample) -> Result<Vec<String>> {
    let n = s.n;
    let pt = SpectralPoint::new(s.q.clone(), s.p.clone(), s.u.clone());
    let mut fails = Vec::new();
    for sec in SECTORS {
        let direct = s.z(n, &s.u, sec)?;
        for var in 0..=n {
            let bound = if var == n { n as i64 } else { 2 * n as i64 + 2 };
            let poly = partition_laurent(n, &pt, &s.k, sec, var)?;
            if poly.eval(&s.u[var])? != direct {
                fails.push(format!("{} expansion in u{} disagrees with the sum", sector_name(sec), var + 1));
            }
            let ok = poly.degree().is_none_or(|d| d <= bound) && poly.order().is_none_or(|o| o >= -bound);
            if !ok {
                fails.push(format!(
                    "{} in u{}: degree {:?}, order {:?}, allowed [-{bound}, {bound}]",
                    sector_name(sec),
                    var + 1,
                    poly.degree(),
                    poly.order()
                ));
            }
            if var < n && !poly.is_even() {
                fails.push(format!("{} expansion in u{} has an odd monomial", sector_name(sec), var + 1));
            }
        }
        let sampled = reconstruct_with(-(n as i64) - 1, n as i64 + 1, |x| {
            let mut v = s.u.clone();
            v[n] = x.clone();
            s.z(n, &v, sec)
        })?;
        if sampled != partition_laurent(n, &pt, &s.k, sec, n)? {
            fails.push(format!("{} sampled reconstruction in u{} differs", sector_name(sec), n + 1));
        }
    }
    Ok(fails)
}

fn updown(s: &Sample) -> Result<Vec<String>> {
    let n = s.n;
    let z = s.z(n, &s.u, Sector::All)?;
    let mut v = s.u.clone();
    v[n] = -&v[n];
    let zm = neg_one_pow(n) * s.z(n, &v, Sector::All)?;
    let half = ExactScalar::frac(1, 2);
    let mut fails = Vec::new();
    if s.z(n, &s.u, Sector::Up)? != &half * &(&z + &zm) {
        fails.push("Z_up identity".to_string());
    }
    if s.z(n, &s.u, Sector::Down)? != &half * &(&z - &zm) {
        fails.push("Z_down identity".to_string());
    }
    Ok(fails)
}

fn right_weights(s: &Sample) -> Result<[ExactScalar; 4]> {
    let u1 = &s.u[0];
    Ok([
        s.r(BoundaryState::One, u1)?,
        s.r(BoundaryState::ZeroOut, u1)?,
        s.r(BoundaryState::ZeroIn, u1)?,
        s.r(BoundaryState::MinusOne, u1)?,
    ])
}

fn eval_identity(s: &Sample, which: GlobalProperty) -> Result<Vec<String>> {
    let n = s.n;
    let at = s.at_shift()?;
    let omega = s.omega()?;
    let [r1, rout, rin, rm1] = right_weights(s)?;
    let tail = s.tail_with(s.u[0].clone());
    let zu = s.z(n - 1, &tail, Sector::Up)?;
    let zd = s.z(n - 1, &tail, Sector::Down)?;
    let mut fails = Vec::new();
    match which {
        GlobalProperty::EvalUp => {
            let rhs = (&r1 * &zu + &rin * &zd) * &omega;
            if s.z(n, &at, Sector::Up)? != rhs {
                fails.push("Z_up at u_{n+1} = q^2/u1".to_string());
            }
        }
        GlobalProperty::EvalDown => {
            let rhs = (&rout * &zu + &rm1 * &zd) * &omega;
            if s.z(n, &at, Sector::Down)? != rhs {
                fails.push("Z_down at u_{n+1} = q^2/u1".to_string());
            }
        }
        _ => {
            let lhs = s.z(n, &at, Sector::All)?;
            let full_sub = s.z(n - 1, &tail, Sector::All)?;
            let neg_sub = s.z(n - 1, &s.tail_with(-&s.u[0]), Sector::All)?;
            let sum = &r1 + &rout + &rin + &rm1;
            let diff = &r1 + &rout - &rin - &rm1;
            let rhs = ExactScalar::frac(1, 2)
                * (sum * full_sub + neg_one_pow(n + 1) * diff * neg_sub)
                * &omega;
            if lhs != rhs {
                fails.push("Z at u_{n+1} = q^2/u1".to_string());
            }
            let split = ((&r1 + &rout) * &zu + (&rin + &rm1) * &zd) * &omega;
            if lhs != split {
                fails.push("refinement-split form at u_{n+1} = q^2/u1".to_string());
            }
        }
    }
    Ok(fails)
}

fn eval_u1_q(s: &Sample) -> Result<Vec<String>> {
    let n = s.n;
    let mut fails = Vec::new();
    for (name, u1) in [("q", s.q.clone()), ("iq", ExactScalar::imag_unit() * &s.q)] {
        let mut v = s.u.clone();
        v[0] = u1.clone();
        let mut f = s.l_out(&u1)? * s.r(BoundaryState::One, &u1)? * s.ne(&(&u1 * &v[n]))?;
        for uj in &v[1..n] {
            f *= s.ne(&(&u1 * uj))?.square();
        }
        for sec in SECTORS {
            if s.z(n, &v, sec)? != &f * &s.z(n - 1, &v[1..], sec)? {
                fails.push(format!("{} at u1 = {name}", sector_name(sec)));
            }
        }
    }
    Ok(fails)
}

fn eval_u1_u2(s: &Sample) -> Result<Vec<String>> {
    let n = s.n;
    let mut v = s.u.clone();
    v[0] = s.q.square() * &v[1].inv()?;
    let (u1, u2) = (&v[0], &v[1]);
    let mut f = (s.r(BoundaryState::ZeroOut, u1)? * s.r(BoundaryState::ZeroIn, u2)?
        + s.r(BoundaryState::One, u1)? * s.r(BoundaryState::One, u2)?)
        * s.l_out(u1)?
        * s.l_out(u2)?
        * s.ne(&(u1 * &v[n]))?
        * s.ne(&(u2 * &v[n]))?;
    for uj in &v[2..n] {
        f *= s.ne(&(u1 * uj))?.square() * s.ne(&(u2 * uj))?.square();
    }
    let mut fails = Vec::new();
    for sec in SECTORS {
        if s.z(n, &v, sec)? != &f * &s.z(n - 2, &v[2..], sec)? {
            fails.push(format!("{} at u1 = q^2/u2", sector_name(sec)));
        }
    }
    Ok(fails)
}

/// AST: Z vanishes; QAST: Z_up vanishes (the sector that counts QASTs).
fn zero_at_pq2(s: &Sample) -> Result<Vec<String>> {
    let n = s.n;
    let mut v = s.u.clone();
    v[0] = s.q.square() * &s.p.inv()?;
    v[n] = s.p.clone();
    let mut fails = Vec::new();
    for (kind, sec) in [(SpecKind::Ast, Sector::All), (SpecKind::Qast, Sector::Up)] {
        let (k, _) = boundary_spec(kind, &s.q, &s.p)?;
        let z = s.z_with(n, &v, &k, sec)?;
        if !z.is_zero() {
            fails.push(format!("{kind} {} = {z}", sector_name(sec)));
        }
    }
    Ok(fails)
}

/// Check a property of the order-n partition function at `points` random
/// points.
pub fn verify_global_property(
    which: GlobalProperty,
    n: usize,
    constants: ConstantChoice,
    seed: u64,
    points: usize,
) -> Result<CheckReport> {
    if n < which.min_n() {
        return Err(Error::ShapeMismatch(format!("{which} needs n >= {}", which.min_n())));
    }
    if n > super::partition::DEFAULT_Z_CAP {
        return Err(Error::CapExceeded {
            what: which.name().to_string(),
            n,
            cap: super::partition::DEFAULT_Z_CAP,
        });
    }
    let mut report = CheckReport::new(which.name(), Some(n), seed, points);
    run_points(&mut report, |rs| {
        let s = Sample::draw(n, constants, rs)?;
        match which {
            GlobalProperty::Symmetry => symmetry(&s),
            GlobalProperty::Inversion => inversion(&s),
            GlobalProperty::Evenness => evenness(&s),
            GlobalProperty::DegreeOrder => degree_order(&s),
            GlobalProperty::UpDown => updown(&s),
            GlobalProperty::EvalFull | GlobalProperty::EvalUp | GlobalProperty::EvalDown => eval_identity(&s, which),
            GlobalProperty::EvalU1Q => eval_u1_q(&s),
            GlobalProperty::EvalU1U2 => eval_u1_u2(&s),
            GlobalProperty::ZeroAtPq2 => zero_at_pq2(&s),
        }
    });
    if which != GlobalProperty::ZeroAtPq2 {
        report.note(format!("constants {}", constants.name()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: GlobalProperty, n: usize, c: ConstantChoice) {
        let r = verify_global_property(g, n, c, 11, 2).unwrap();
        assert!(r.passed(), "{g} n={n}: {:?}", r.details);
    }

    #[test]
    fn all_properties_small_n() {
        for g in GlobalProperty::ALL {
            for n in g.min_n().max(1)..=3 {
                check(g, n, ConstantChoice::Generic);
            }
        }
    }

    #[test]
    fn eval_up_qast_two() {
        check(GlobalProperty::EvalUp, 2, ConstantChoice::Spec(SpecKind::Qast));
    }

    #[test]
    fn degree_one_window() {
        check(GlobalProperty::DegreeOrder, 1, ConstantChoice::Generic);
        check(GlobalProperty::DegreeOrder, 0, ConstantChoice::Generic);
    }

    #[test]
    fn too_small_n_is_rejected() {
        assert!(verify_global_property(GlobalProperty::EvalU1U2, 1, ConstantChoice::Generic, 0, 1).is_err());
    }

    #[test]
    fn parse() {
        for g in GlobalProperty::ALL {
            assert_eq!(g.name().parse::<GlobalProperty>().unwrap(), g);
        }
    }
}

//! Finite diagrams of weighted vertices and the local equations between them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::weights::{BoundaryConstants, Weights};
use super::{boundary_spec, SpecKind};
use crate::error::{Error, Result};
use crate::exact_arith::{ExactScalar, RationalSampler};
use crate::objects::{BoundaryState, BulkType, Dir, Side};
use crate::report::{run_points, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VKind {
    Bulk,
    /// Uses its Up and Right edges.
    Left,
    /// Uses its Up and Left edges.
    Right,
}

#[derive(Clone, Debug)]
pub struct DVertex {
    pub kind: VKind,
    pub label: ExactScalar,
    pub edges: Vec<(Side, &'static str)>,
}

impl DVertex {
    pub fn new(kind: VKind, label: ExactScalar, edges: &[(Side, &'static str)]) -> Self {
        DVertex {
            kind,
            label,
            edges: edges.to_vec(),
        }
    }
}

/// Vertices joined by named edges. A name used twice is an internal edge,
/// a name used once is external.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub vertices: Vec<DVertex>,
}

impl Diagram {
    pub fn new(vertices: Vec<DVertex>) -> Self {
        Diagram { vertices }
    }

    pub fn then(mut self, other: Diagram) -> Self {
        self.vertices.extend(other.vertices);
        self
    }
}

fn flip(d: Dir) -> Dir {
    match d {
        Dir::In => Dir::Out,
        Dir::Out => Dir::In,
    }
}

fn vertex_value(v: &DVertex, dirs: &HashMap<Side, Dir>, w: &Weights) -> Result<ExactScalar> {
    let d = |s: Side| {
        dirs.get(&s)
            .copied()
            .ok_or_else(|| Error::ShapeMismatch(format!("vertex has no {s:?} edge")))
    };
    match v.kind {
        VKind::Bulk => match BulkType::from_dirs(d(Side::Up)?, d(Side::Down)?, d(Side::Left)?, d(Side::Right)?) {
            Some(t) => w.bulk(t, &v.label),
            None => Ok(ExactScalar::zero()),
        },
        VKind::Left => w.left(BoundaryState::classify(d(Side::Up)?, d(Side::Right)?), &v.label),
        VKind::Right => w.right(BoundaryState::classify(d(Side::Up)?, d(Side::Left)?), &v.label),
    }
}

/// Sum over orientations of the internal edges of the product of vertex
/// weights, external edges fixed relative to their only endpoint.
pub fn evaluate_diagram(d: &Diagram, ext: &HashMap<&'static str, Dir>, w: &Weights) -> Result<ExactScalar> {
    let mut ends: HashMap<&str, Vec<(usize, Side)>> = HashMap::new();
    for (vi, v) in d.vertices.iter().enumerate() {
        for &(s, e) in &v.edges {
            ends.entry(e).or_default().push((vi, s));
        }
    }
    let mut internal: Vec<&str> = ends.iter().filter(|(_, v)| v.len() == 2).map(|(k, _)| *k).collect();
    internal.sort_unstable();
    for (e, v) in &ends {
        if v.len() == 1 && !ext.contains_key(e) {
            return Err(Error::ShapeMismatch(format!("external edge {e} has no orientation")));
        }
        if v.len() > 2 {
            return Err(Error::ShapeMismatch(format!("edge {e} has {} endpoints", v.len())));
        }
    }
    let mut total = ExactScalar::zero();
    for mask in 0u32..1 << internal.len() {
        let mut dirs: Vec<HashMap<Side, Dir>> = vec![HashMap::new(); d.vertices.len()];
        for (k, e) in internal.iter().enumerate() {
            let (a, sa) = ends[e][0];
            let (b, sb) = ends[e][1];
            let from_a = mask >> k & 1 == 0;
            let da = if from_a { Dir::Out } else { Dir::In };
            dirs[a].insert(sa, da);
            dirs[b].insert(sb, flip(da));
        }
        for (e, &o) in ext {
            if let Some(v) = ends.get(e) {
                let (a, sa) = v[0];
                dirs[a].insert(sa, o);
            }
        }
        let mut prod = ExactScalar::one();
        for (v, dv) in d.vertices.iter().zip(&dirs) {
            let x = vertex_value(v, dv, w)?;
            if x.is_zero() {
                prod = ExactScalar::zero();
                break;
            }
            prod *= x;
        }
        total += prod;
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalEquation {
    Ybe,
    ReflLeft,
    ReflRight,
    TrivialCross,
    Rue,
}

impl LocalEquation {
    pub const ALL: [LocalEquation; 5] = [
        LocalEquation::Ybe,
        LocalEquation::ReflLeft,
        LocalEquation::ReflRight,
        LocalEquation::TrivialCross,
        LocalEquation::Rue,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LocalEquation::Ybe => "ybe",
            LocalEquation::ReflLeft => "refl-left",
            LocalEquation::ReflRight => "refl-right",
            LocalEquation::TrivialCross => "trivial-cross",
            LocalEquation::Rue => "rue",
        }
    }

    /// Number of external edges.
    pub fn arity(self) -> usize {
        match self {
            LocalEquation::Ybe => 6,
            LocalEquation::Rue => 2,
            _ => 4,
        }
    }

    /// Orientations of the external edges checked at each point.
    pub fn orientation_cases(self) -> usize {
        1 << self.arity()
    }
}

impl fmt::Display for LocalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LocalEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        LocalEquation::ALL
            .into_iter()
            .find(|e| e.name() == key)
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

use Side::{Down as D, Left as L, Right as R, Up as U};

fn bulk(label: ExactScalar, edges: &[(Side, &'static str)]) -> DVertex {
    DVertex::new(VKind::Bulk, label, edges)
}

/// A crossing whose label corner is the south-west one (frame 0) or the
/// north-west one (frame 1); corners are named upper-left, upper-right,
/// lower-left, lower-right.
fn crossing(label: ExactScalar, frame: u8, ul: &'static str, ur: &'static str, ll: &'static str, lr: &'static str) -> DVertex {
    if frame == 0 {
        bulk(label, &[(U, ul), (R, ur), (D, lr), (L, ll)])
    } else {
        bulk(label, &[(L, ul), (U, ur), (R, lr), (D, ll)])
    }
}

/// Both sides of an equation, and the value its right-hand side must take
/// when it is not a diagram.
enum Sides {
    Diagrams(Diagram, Diagram),
    Closed(Diagram, Box<dyn Fn(&[Dir]) -> Result<ExactScalar>>),
}

const EXT: [&str; 6] = ["e1", "e2", "e3", "e4", "e5", "e6"];

fn ybe(y: &ExactScalar, zbar: &ExactScalar, q: &ExactScalar) -> Result<Sides> {
    // x y z = q²
    Ok(ybe_with(q.square() * zbar * &y.inv()?, y, zbar))
}

fn ybe_with(x: ExactScalar, y: &ExactScalar, zbar: &ExactScalar) -> Sides {
    let before = Diagram::new(vec![
        crossing(x.clone(), 0, "e1", "e2", "i1", "i2"),
        bulk(y.clone(), &[(U, "i1"), (D, "e5"), (L, "e3"), (R, "i3")]),
        bulk(zbar.clone(), &[(U, "i2"), (D, "e6"), (L, "i3"), (R, "e4")]),
    ]);
    let after = Diagram::new(vec![
        bulk(zbar.clone(), &[(U, "e1"), (D, "j1"), (L, "e3"), (R, "j3")]),
        bulk(y.clone(), &[(U, "e2"), (D, "j2"), (L, "j3"), (R, "e4")]),
        crossing(x, 0, "j1", "j2", "e5", "e6"),
    ]);
    Sides::Diagrams(before, after)
}

fn refl_left(u: &ExactScalar, v: &ExactScalar, q: &ExactScalar) -> Result<Sides> {
    let x = q.square() * v * &u.inv()?;
    let uv = u * v;
    let before = Diagram::new(vec![
        crossing(x.clone(), 0, "e1", "e2", "i1", "i2"),
        DVertex::new(VKind::Left, u.clone(), &[(U, "i1"), (R, "i3")]),
        bulk(uv.clone(), &[(U, "i2"), (L, "i3"), (R, "e3"), (D, "i4")]),
        DVertex::new(VKind::Left, v.clone(), &[(U, "i4"), (R, "e4")]),
    ]);
    let after = Diagram::new(vec![
        DVertex::new(VKind::Left, v.clone(), &[(U, "e1"), (R, "j1")]),
        bulk(uv, &[(U, "e2"), (L, "j1"), (R, "j2"), (D, "j3")]),
        DVertex::new(VKind::Left, u.clone(), &[(U, "j3"), (R, "j4")]),
        crossing(x, 1, "j2", "e3", "j4", "e4"),
    ]);
    Ok(Sides::Diagrams(before, after))
}

/// Two right boundary vertices joined through a bulk vertex: the lower row
/// has parameter `b`, the upper one `a`.
fn right_corner(
    a: &ExactScalar,
    b: &ExactScalar,
    e_up: &'static str,
    e_low: &'static str,
    top_l: &'static str,
    top_r: &'static str,
    k: [&'static str; 2],
) -> Diagram {
    Diagram::new(vec![
        DVertex::new(VKind::Right, b.clone(), &[(U, k[0]), (L, e_low)]),
        bulk(a * b, &[(D, k[0]), (L, e_up), (R, k[1]), (U, top_l)]),
        DVertex::new(VKind::Right, a.clone(), &[(L, k[1]), (U, top_r)]),
    ])
}

fn refl_right(u: &ExactScalar, v: &ExactScalar, q: &ExactScalar) -> Result<Sides> {
    let x = q.square() * v * &u.inv()?;
    let before = Diagram::new(vec![crossing(x.clone(), 1, "e1", "i1", "e2", "i2")])
        .then(right_corner(u, v, "i1", "i2", "e3", "e4", ["a1", "a2"]));
    let after = right_corner(v, u, "e1", "e2", "j1", "j2", ["b1", "b2"])
        .then(Diagram::new(vec![crossing(x, 0, "j1", "j2", "e3", "e4")]));
    Ok(Sides::Diagrams(before, after))
}

fn trivial_cross(q: &ExactScalar) -> Sides {
    let d = Diagram::new(vec![bulk(q.square(), &[(U, "e1"), (L, "e2"), (D, "e3"), (R, "e4")])]);
    Sides::Closed(
        d,
        Box::new(|o: &[Dir]| {
            Ok(ExactScalar::int((o[0] == flip(o[1]) && o[2] == flip(o[3])) as i64))
        }),
    )
}

fn rue(u: &ExactScalar, w: &Weights) -> Result<Sides> {
    let qu = w.q() * u;
    let qub = w.q() * &u.inv()?;
    let d = Diagram::new(vec![
        DVertex::new(VKind::Right, qu.clone(), &[(U, "e1"), (L, "m")]),
        DVertex::new(VKind::Right, qub.clone(), &[(U, "m"), (L, "e2")]),
    ]);
    let c = w.right(BoundaryState::One, &qu)? * w.right(BoundaryState::One, &qub)?
        + w.right(BoundaryState::ZeroIn, &qu)? * w.right(BoundaryState::ZeroOut, &qub)?;
    Ok(Sides::Closed(
        d,
        Box::new(move |o: &[Dir]| {
            Ok(if o[0] == flip(o[1]) { c.clone() } else { ExactScalar::zero() })
        }),
    ))
}

/// Where the boundary constants of a check come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantChoice {
    /// Eight independent random rationals.
    Generic,
    /// A named specialization at a random p.
    Spec(SpecKind),
}

impl ConstantChoice {
    pub fn draw(self, q: &ExactScalar, s: &mut RationalSampler) -> Result<BoundaryConstants> {
        match self {
            ConstantChoice::Generic => Ok(BoundaryConstants::from_array(std::array::from_fn(|_| s.scalar()))),
            ConstantChoice::Spec(kind) => Ok(boundary_spec(kind, q, &s.scalar())?.0),
        }
    }

    pub fn name(self) -> String {
        match self {
            ConstantChoice::Generic => "generic".to_string(),
            ConstantChoice::Spec(k) => k.name().to_string(),
        }
    }
}

fn all_orientations(k: usize) -> impl Iterator<Item = Vec<Dir>> {
    (0u32..1 << k).map(move |m| {
        (0..k)
            .map(|b| if m >> (k - 1 - b) & 1 == 0 { Dir::In } else { Dir::Out })
            .collect()
    })
}

fn show(o: &[Dir]) -> String {
    o.iter()
        .map(|d| if *d == Dir::In { "in" } else { "out" })
        .collect::<Vec<_>>()
        .join(",")
}

/// Check every external orientation at `points` random admissible points.
pub fn verify_local_equation(
    which: LocalEquation,
    constants: ConstantChoice,
    seed: u64,
    points: usize,
) -> CheckReport {
    let mut report = CheckReport::new(which.name(), None, seed, points);
    let mut cases = 0usize;
    let mut both_zero = 0usize;
    run_points(&mut report, |s| {
        let q = s.scalar();
        let k = constants.draw(&q, s)?;
        let w = Weights::new(&q, &k)?;
        let (a, b) = (s.scalar(), s.scalar());
        let sides = match which {
            LocalEquation::Ybe => ybe(&a, &b, &q)?,
            LocalEquation::ReflLeft => refl_left(&a, &b, &q)?,
            LocalEquation::ReflRight => refl_right(&a, &b, &q)?,
            LocalEquation::TrivialCross => trivial_cross(&q),
            LocalEquation::Rue => rue(&a, &w)?,
        };
        let mut fails = Vec::new();
        for o in all_orientations(which.arity()) {
            let ext: HashMap<&'static str, Dir> = EXT.iter().copied().zip(o.iter().copied()).collect();
            let (lhs, rhs) = match &sides {
                Sides::Diagrams(l, r) => (evaluate_diagram(l, &ext, &w)?, evaluate_diagram(r, &ext, &w)?),
                Sides::Closed(l, f) => (evaluate_diagram(l, &ext, &w)?, f(&o)?),
            };
            cases += 1;
            if lhs.is_zero() && rhs.is_zero() {
                both_zero += 1;
            }
            if lhs != rhs {
                fails.push(format!("orientation ({}): {lhs} != {rhs}", show(&o)));
            }
        }
        Ok(fails)
    });
    report.note(format!(
        "constants {}; {cases} orientation cases, {both_zero} with both sides 0",
        constants.name()
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ybe_generic() {
        let r = verify_local_equation(LocalEquation::Ybe, ConstantChoice::Generic, 42, 3);
        assert!(r.passed(), "{:?}", r.details);
    }

    #[test]
    fn reflections_with_every_choice() {
        let mut choices = vec![ConstantChoice::Generic];
        choices.extend(SpecKind::ALL.map(ConstantChoice::Spec));
        for c in choices {
            for e in [LocalEquation::ReflLeft, LocalEquation::ReflRight] {
                let r = verify_local_equation(e, c, 5, 2);
                assert!(r.passed(), "{e} {c:?}: {:?}", r.details);
            }
        }
    }

    #[test]
    fn trivial_and_rue() {
        for e in [LocalEquation::TrivialCross, LocalEquation::Rue] {
            let r = verify_local_equation(e, ConstantChoice::Generic, 1, 3);
            assert!(r.passed(), "{e}: {:?}", r.details);
        }
    }

    #[test]
    fn unbalanced_externals_give_zero() {
        let mut s = RationalSampler::new(3);
        let q = ExactScalar::frac(2, 3);
        let k = ConstantChoice::Generic.draw(&q, &mut s).unwrap();
        let w = Weights::new(&q, &k).unwrap();
        let Sides::Diagrams(l, r) = ybe(&s.scalar(), &s.scalar(), &q).unwrap() else { unreachable!() };
        // six externals all pointing in: no balanced filling
        let ext: HashMap<&'static str, Dir> = EXT.iter().map(|&e| (e, Dir::In)).collect();
        assert!(evaluate_diagram(&l, &ext, &w).unwrap().is_zero());
        assert!(evaluate_diagram(&r, &ext, &w).unwrap().is_zero());
    }

    #[test]
    fn wrong_label_breaks_ybe() {
        let mut s = RationalSampler::new(8);
        let q = ExactScalar::frac(3, 7);
        let k = ConstantChoice::Generic.draw(&q, &mut s).unwrap();
        let w = Weights::new(&q, &k).unwrap();
        let (y, zb) = (ExactScalar::frac(5, 2), ExactScalar::frac(-4, 9));
        let wrong = q.square() * &y / &zb;
        let Sides::Diagrams(l, r) = ybe_with(wrong, &y, &zb) else { unreachable!() };
        let differs = all_orientations(6).any(|o| {
            let ext: HashMap<&'static str, Dir> = EXT.iter().copied().zip(o).collect();
            evaluate_diagram(&l, &ext, &w).unwrap() != evaluate_diagram(&r, &ext, &w).unwrap()
        });
        assert!(differs);
    }
}

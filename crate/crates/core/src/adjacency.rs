//! Exact wall crossings and the adjacency graphs of chambers and walls.
//!
//! A crossing first moves points inside the chamber, never meeting a
//! degeneracy, until the requested one occurs alone. One point is then
//! pushed off the wall to either side. The side whose labeled data equals
//! the start is the near side; the other is across the wall.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{primitive, scale, sub, Vec3};
use crate::catalog::{Catalog, EntryKind};
use crate::classify::{seven_class, six_class, six_labeled_key, SevenClassName, SixClass};
use crate::crossing::{
    height, leave_wall, mask_of, random_clean_step, random_vec, reach_line_wall, Event, MoverFrame, WORK_BITS,
};
use crate::error::{Error, Result};
use crate::pencil::SixPointData;
use crate::projective::{combinations, conic_through_five_raw, Label, ProjectivePoint};
use crate::walls::{
    conic_wall_class, line_wall_canonical, line_wall_class, refined_wall_fingerprint, RefinedFingerprint,
    WallDescriptor,
};

/// Search budget of one crossing, in rounds of targeted moves.
pub const DEFAULT_ROUNDS: usize = 12;

/// The degeneracy to cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallSpec {
    /// Three labels to become collinear.
    Line([Label; 3]),
    /// Six labels to become coconic.
    Conic([Label; 6]),
}

/// Class of a chamber: six or seven points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CameraClass {
    Six(SixClass),
    Seven(SevenClassName),
}

impl CameraClass {
    pub fn of(points: &[ProjectivePoint]) -> Result<CameraClass> {
        match points.len() {
            6 => Ok(CameraClass::Six(six_class(points)?)),
            7 => Ok(CameraClass::Seven(seven_class(points)?)),
            n => Err(Error::WrongArity { expected: "6 or 7", got: n }),
        }
    }

    /// The class with the subscript dropped, which is what line-walls alone
    /// can separate.
    pub fn coarse(self) -> CameraClass {
        match self {
            CameraClass::Seven(c) => CameraClass::Seven(SevenClassName { quadruple: c.quadruple, index: None }),
            x => x,
        }
    }

    pub fn name(&self) -> String {
        match self {
            CameraClass::Six(c) => c.greek().to_string(),
            CameraClass::Seven(c) => c.compact(),
        }
    }
}

impl fmt::Display for CameraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Result of one wall crossing.
#[derive(Clone, Debug)]
pub struct Crossing {
    /// Generic points on the start side, in the same labeled chamber.
    pub near: Vec<ProjectivePoint>,
    /// The exact degenerate configuration.
    pub wall: Vec<ProjectivePoint>,
    /// Generic points across the wall.
    pub far: Vec<ProjectivePoint>,
    /// Label of the point pushed through the wall.
    pub mover: Label,
    pub descriptor: WallDescriptor,
    pub before: CameraClass,
    pub after: CameraClass,
}

fn to_vecs(points: &[ProjectivePoint]) -> Vec<Vec3> {
    points.iter().map(|p| p.coords().clone()).collect()
}

fn to_points(v: &[Vec3]) -> Result<Vec<ProjectivePoint>> {
    v.iter().map(|x| ProjectivePoint::from_vec(x.clone())).collect()
}

/// Labeled data of all six-point subsets; equal keys mean the same
/// labeled chamber.
pub fn labeled_key(pts: &[Vec3]) -> Result<Vec<u8>> {
    let n = pts.len();
    let mut key = Vec::new();
    for six in combinations(n, 6) {
        let sp: [&Vec3; 6] = std::array::from_fn(|k| &pts[six[k]]);
        let labels: [Label; 6] = std::array::from_fn(|k| six[k] as Label + 1);
        key.extend(six_labeled_key(&SixPointData::compute(&sp, labels)?));
    }
    Ok(key)
}

/// Second intersection with the conic `c` of the line through `a` (on `c`)
/// in direction `x`.
fn second_point(c: &crate::projective::ConicForm, a: &Vec3, x: &Vec3) -> Vec3 {
    let qx = c.eval(x);
    let b = c.polar2(a, x);
    sub(&scale(&qx, a), &scale(&b, x))
}

/// Moves points without meeting any degeneracy until the six points of
/// `six` become coconic and nothing else degenerates.
pub fn reach_conic_wall(
    start: &[Vec3],
    six: [usize; 6],
    rng: &mut ChaCha8Rng,
    rounds: usize,
) -> Option<(Vec<Vec3>, usize)> {
    let want = vec![Event::Conic(mask_of(&six))];
    let mut pts = start.to_vec();
    for round in 0..rounds {
        for r in 0..6 {
            let i = six[(r + round) % 6];
            let five: Vec<usize> = six.iter().copied().filter(|&k| k != i).collect();
            let trial = &pts;
            let exact: Vec<&Vec3> = five.iter().map(|&k| &trial[k]).collect();
            let c = conic_through_five_raw(exact[0], exact[1], exact[2], exact[3], exact[4]);
            if c.coefficients().iter().all(Zero::is_zero) {
                continue;
            }
            let frame = MoverFrame::new(trial, i);
            let mut dirs = vec![trial[i].clone()];
            for _ in 0..8 {
                dirs.push(random_vec(rng, WORK_BITS));
            }
            for a in &exact {
                for x in &dirs {
                    let q = primitive(second_point(&c, a, x));
                    if q.iter().all(Zero::is_zero) {
                        continue;
                    }
                    for q in [q.clone(), q.map(|v| -v)] {
                        if frame.path(&q, None).as_ref() == Some(&want) {
                            let mut out = trial.clone();
                            out[i] = q;
                            return Some((out, i));
                        }
                    }
                }
            }
        }
        for _ in 0..3 {
            random_clean_step(&mut pts, rng, 20);
        }
    }
    None
}

/// Directions used to push a point off a wall.
fn push_directions(p: &Vec3) -> Vec<Vec3> {
    let h = height(p);
    let mut out = Vec::new();
    for k in 0..3 {
        for s in [1i64, -1] {
            let mut e: Vec3 = crate::arith::vec3(0, 0, 0);
            e[k] = &h * BigInt::from(s);
            out.push(e);
        }
    }
    out
}

fn wall_event(spec: WallSpec) -> Event {
    match spec {
        WallSpec::Line(t) => Event::Line(mask_of(&t.map(|l| l as usize - 1))),
        WallSpec::Conic(s) => Event::Conic(mask_of(&s.map(|l| l as usize - 1))),
    }
}

fn check_spec(spec: WallSpec, n: usize) -> Result<()> {
    let labels: Vec<Label> = match spec {
        WallSpec::Line(t) => t.to_vec(),
        WallSpec::Conic(s) => s.to_vec(),
    };
    let set: BTreeSet<Label> = labels.iter().copied().collect();
    if set.len() != labels.len() {
        return Err(Error::NotOnWall);
    }
    match labels.iter().find(|&&l| l == 0 || l as usize > n) {
        Some(&l) => Err(Error::BadLabel(l)),
        None => Ok(()),
    }
}

/// Descriptor of a wall state.
pub fn wall_descriptor(wall: &[ProjectivePoint]) -> Result<WallDescriptor> {
    match crate::walls::degeneracy_detect(wall) {
        crate::walls::Degeneracy::CollinearTriple(_) => Ok(WallDescriptor::Line(line_wall_class(wall)?)),
        crate::walls::Degeneracy::CoconicSextuple(_) if wall.len() == 6 => Ok(WallDescriptor::SixConic),
        crate::walls::Degeneracy::CoconicSextuple(_) => Ok(WallDescriptor::Conic(conic_wall_class(wall)?)),
        crate::walls::Degeneracy::Generic => Err(Error::NotOnWall),
        crate::walls::Degeneracy::Other => Err(Error::MultipleDegeneracies),
    }
}

/// Reaches the wall `spec` from the chamber of `points` and crosses it.
pub fn cross_wall(points: &[ProjectivePoint], spec: WallSpec, seed: u64) -> Result<Crossing> {
    cross_wall_with(points, spec, seed, DEFAULT_ROUNDS)
}

pub fn cross_wall_with(points: &[ProjectivePoint], spec: WallSpec, seed: u64, rounds: usize) -> Result<Crossing> {
    let n = points.len();
    if n != 6 && n != 7 {
        return Err(Error::WrongArity { expected: "6 or 7", got: n });
    }
    check_spec(spec, n)?;
    let pts = to_vecs(points);
    if !crate::crossing::events(&pts).is_empty() {
        return Err(Error::NonGeneric);
    }
    let before = CameraClass::of(points)?;
    let key0 = labeled_key(&pts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reached = match spec {
        WallSpec::Line(t) => reach_line_wall(&pts, t.map(|l| l as usize - 1), &mut rng, rounds),
        WallSpec::Conic(s) => reach_conic_wall(&pts, s.map(|l| l as usize - 1), &mut rng, rounds),
    };
    let (wall, mover) = reached.ok_or(Error::PathBlocked)?;
    let ev = wall_event(spec);
    let mut near = None;
    let mut far = None;
    for dir in push_directions(&wall[mover]) {
        if near.is_some() && far.is_some() {
            break;
        }
        let Some(side) = leave_wall(&wall, mover, ev, &dir) else { continue };
        if labeled_key(&side)? == key0 {
            near.get_or_insert(side);
        } else {
            far.get_or_insert(side);
        }
    }
    let (near, far) = match (near, far) {
        (Some(a), Some(b)) => (to_points(&a)?, to_points(&b)?),
        _ => return Err(Error::PathBlocked),
    };
    let wall = to_points(&wall)?;
    let descriptor = wall_descriptor(&wall)?;
    let after = CameraClass::of(&far)?;
    Ok(Crossing { near, wall, far, mover: mover as Label + 1, descriptor, before, after })
}

/// Triples whose wall bounds the chamber of `points`, found by exact
/// search for a clean path to each.
pub fn admissible_triples(points: &[ProjectivePoint], seed: u64) -> Vec<[Label; 3]> {
    admissible_triples_with(points, seed, DEFAULT_ROUNDS)
}

pub fn admissible_triples_with(points: &[ProjectivePoint], seed: u64, rounds: usize) -> Vec<[Label; 3]> {
    let pts = to_vecs(points);
    combinations(pts.len(), 3)
        .into_iter()
        .filter_map(|t| {
            let triple = [t[0], t[1], t[2]];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            reach_line_wall(&pts, triple, &mut rng, rounds).map(|_| triple.map(|i| i as Label + 1))
        })
        .collect()
}

/// Bounding triples by the four-occurrence rule over six-point subsets.
pub fn admissible_triples_by_subsets(points: &[ProjectivePoint]) -> Result<Vec<[Label; 3]>> {
    let refs = &crate::classify::references().six;
    let pts = to_vecs(points);
    let one = |i: usize| i as Label + 1;
    match pts.len() {
        6 => {
            let sp: [&Vec3; 6] = std::array::from_fn(|k| &pts[k]);
            let d = SixPointData::compute(&sp, [1, 2, 3, 4, 5, 6])?;
            let (_, t) = crate::admissible::six_line_walls(&d, refs).ok_or(Error::UnknownClass)?;
            Ok(t.into_iter().map(|t| t.map(one)).collect())
        }
        7 => {
            let d = crate::classify::seven_data(points)?;
            let t = crate::admissible::seven_line_walls(&d.subs, refs).ok_or(Error::UnknownClass)?;
            Ok(t.into_iter().map(|t| t.map(one)).collect())
        }
        n => Err(Error::WrongArity { expected: "6 or 7", got: n }),
    }
}

/// Which walls the adjacency graph is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratification {
    LinesOnly,
    LinesAndConics,
}

/// Wall class of an edge, as used for deduplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallKey {
    Line(Vec<u8>),
    Conic(char),
    SixConic,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub a: CameraClass,
    pub b: CameraClass,
    pub key: WallKey,
    pub label: String,
}

#[derive(Clone, Debug, Default)]
pub struct AdjacencyGraph {
    pub vertices: BTreeSet<CameraClass>,
    pub edges: BTreeSet<Edge>,
}

impl AdjacencyGraph {
    fn add(&mut self, c: &Crossing, coarse: bool) {
        let f = |x: CameraClass| if coarse { x.coarse() } else { x };
        let (mut a, mut b) = (f(c.before), f(c.after));
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
        let key = match &c.descriptor {
            WallDescriptor::Line(l) => WallKey::Line(l.canonical.clone()),
            WallDescriptor::Conic(k) => WallKey::Conic(k.letter),
            WallDescriptor::SixConic => WallKey::SixConic,
        };
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.insert(Edge { a, b, key, label: c.descriptor.label() });
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph adjacency {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{}\";\n", v.name()));
        }
        for e in &self.edges {
            s.push_str(&format!("  \"{}\" -- \"{}\" [label=\"{}\"];\n", e.a.name(), e.b.name(), e.label));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\nedges {}\n", self.vertices.len(), self.edges.len());
        for e in &self.edges {
            s.push_str(&format!("{} -- {} : {}\n", e.a.name(), e.b.name(), e.label));
        }
        s
    }
}

/// Representatives of every chamber at the given level.
pub fn representatives(level: usize) -> Result<Vec<(String, Vec<ProjectivePoint>)>> {
    let cat = Catalog::shipped();
    let kind = match level {
        6 => EntryKind::Six,
        7 => EntryKind::Seven,
        n => return Err(Error::WrongArity { expected: "6 or 7", got: n }),
    };
    Ok(cat.of_kind(kind).map(|e| (e.name.clone(), e.points.clone())).collect())
}

/// Every crossing of a bounding wall from each representative.
pub fn crossings_from_catalog(level: usize, strat: Stratification, seed: u64) -> Result<Vec<(String, Crossing)>> {
    let mut jobs = Vec::new();
    for (name, pts) in representatives(level)? {
        for t in admissible_triples_by_subsets(&pts)? {
            jobs.push((name.clone(), pts.clone(), WallSpec::Line(t)));
        }
        if strat == Stratification::LinesAndConics {
            let six: Vec<[Label; 6]> = if level == 6 {
                vec![[1, 2, 3, 4, 5, 6]]
            } else {
                (1..=7u8)
                    .map(|apex| {
                        let v: Vec<Label> = (1..=7).filter(|&l| l != apex).collect();
                        v.try_into().unwrap()
                    })
                    .collect()
            };
            for s in six {
                jobs.push((name.clone(), pts.clone(), WallSpec::Conic(s)));
            }
        }
    }
    use rayon::prelude::*;
    let results: Vec<Option<Result<(String, Crossing)>>> = jobs
        .par_iter()
        .enumerate()
        .map(|(k, (name, pts, spec))| {
            match cross_wall(pts, *spec, seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)) {
                Ok(c) => Some(Ok((name.clone(), c))),
                // conic walls are tried blindly; a missing one is not an error
                Err(Error::PathBlocked) if matches!(spec, WallSpec::Conic(_)) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect();
    results.into_iter().flatten().collect()
}

/// Adjacency graph of chambers and walls. With lines only, seven-point
/// classes differing only by their subscript are merged, since only
/// conic-walls separate them.
pub fn adjacency_graph(level: usize, strat: Stratification, seed: u64) -> Result<AdjacencyGraph> {
    let mut g = AdjacencyGraph::default();
    let coarse = strat == Stratification::LinesOnly;
    for (_, c) in crossings_from_catalog(level, strat, seed)? {
        g.add(&c, coarse);
    }
    Ok(g)
}

/// Refined line-walls reached from the seven-point catalog, with the
/// line-wall class of each.
pub fn refined_census(seed: u64) -> Result<BTreeMap<RefinedFingerprint, Vec<u8>>> {
    let mut out = BTreeMap::new();
    for (_, c) in crossings_from_catalog(7, Stratification::LinesOnly, seed)? {
        let (cls, fp) = refined_wall_fingerprint(&c.wall)?;
        out.insert(fp, cls.canonical);
    }
    Ok(out)
}

/// Random generic points with coordinates in `[-bound, bound]`.
pub fn random_generic(n: usize, bound: i64, rng: &mut ChaCha8Rng) -> Vec<ProjectivePoint> {
    loop {
        let pts: Vec<Vec3> =
            (0..n).map(|_| std::array::from_fn(|_| BigInt::from(rng.gen_range(-bound..=bound)))).collect();
        if pts.iter().any(|p| p.iter().all(Zero::is_zero)) {
            continue;
        }
        if crate::crossing::events(&pts).is_empty() {
            return to_points(&pts).expect("nonzero vectors");
        }
    }
}

/// Line-wall canonical codes of the walls crossed from a point set.
pub fn line_wall_codes(crossings: &[Crossing]) -> BTreeSet<Vec<u8>> {
    crossings
        .iter()
        .filter_map(|c| match &c.descriptor {
            WallDescriptor::Line(l) => Some(line_wall_canonical(&l.sequence)),
            _ => None,
        })
        .collect()
}

/// Triples through the apex whose line-walls meet the conic-wall of a
/// seven-point set with exactly six coconic points, by the four-occurrence
/// rule over the six generic subsets containing the apex.
pub fn coconic_admissible_triples(points: &[ProjectivePoint]) -> Result<Vec<[Label; 3]>> {
    if points.len() != 7 {
        return Err(Error::WrongArity { expected: "7", got: points.len() });
    }
    let six = match crate::walls::degeneracy_detect(points) {
        crate::walls::Degeneracy::CoconicSextuple(s) => s,
        crate::walls::Degeneracy::Other => return Err(Error::MultipleDegeneracies),
        _ => return Err(Error::NotOnWall),
    };
    let apex = (1..=7).find(|l| !six.contains(l)).unwrap();
    // new index k holds old label order[k]
    let mut order: Vec<Label> = six.to_vec();
    order.push(apex);
    let pts: Vec<Vec3> = order.iter().map(|&l| points[l as usize - 1].coords().clone()).collect();
    let mut subs = Vec::with_capacity(6);
    for p in 0..6 {
        let idx: Vec<usize> = (0..7).filter(|&i| i != p).collect();
        let sp: [&Vec3; 6] = std::array::from_fn(|k| &pts[idx[k]]);
        let labels: [Label; 6] = std::array::from_fn(|k| idx[k] as Label + 1);
        subs.push(SixPointData::compute(&sp, labels)?);
    }
    let refs = &crate::classify::references().six;
    let ts = crate::admissible::coconic_line_walls(&subs, refs).ok_or(Error::UnknownClass)?;
    let mut out: Vec<[Label; 3]> = ts
        .into_iter()
        .map(|t| {
            let mut u = t.map(|i| order[i]);
            u.sort_unstable();
            u
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

//! Pencils of nodal cubics based at six points, and the pencil of conics
//! obtained after a quadratic transformation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{self, cross, Vec3};
use crate::cubic::{cubic_monomials, node_partial_rows, CubicForm};
use crate::cyclic::{dihedral_min, rp1_cyclic_order, CyclicWord, Rp1};
use crate::error::{Error, Result};
use crate::linalg;
use crate::projective::{
    conic_through_five_raw, cremona_frame, cyclic_order_on_conic_raw, ConicForm, Label, ProjectivePoint,
};

/// Pencil of cubics through six points, singular at one of them.
#[derive(Clone, Debug)]
pub struct PencilOfCubics {
    pub basis: [CubicForm; 2],
    pub node: Label,
    pub labels: Vec<Label>,
    points: Vec<ProjectivePoint>,
}

/// Null space of the 8×10 system of incidences and node conditions.
/// Points are labeled `1..=6` in order; `node` is a label.
pub fn nodal_pencil_basis(points: &[ProjectivePoint], node: Label) -> Result<PencilOfCubics> {
    if points.len() != 6 {
        return Err(Error::WrongArity { expected: "6", got: points.len() });
    }
    if node == 0 || node > 6 {
        return Err(Error::BadLabel(node));
    }
    let n = points[node as usize - 1].coords();
    let mut rows: Vec<Vec<BigInt>> = points.iter().map(|p| cubic_monomials(p.coords()).to_vec()).collect();
    rows.extend(node_partial_rows(n));
    let ns = linalg::nullspace(rows, 10);
    if ns.len() != 2 {
        return Err(Error::UnexpectedRank { expected: 2, got: ns.len() });
    }
    let basis =
        [CubicForm::new(ns[0].clone().try_into().unwrap())?, CubicForm::new(ns[1].clone().try_into().unwrap())?];
    Ok(PencilOfCubics { basis, node, labels: (1..=6).collect(), points: points.to_vec() })
}

impl PencilOfCubics {
    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn member(&self, lambda: &BigInt, mu: &BigInt) -> CubicForm {
        CubicForm::combine(lambda, &self.basis[0], mu, &self.basis[1])
    }
}

/// `(λ:μ)` with `member ∝ λ C0 + μ C1`.
pub fn pencil_coordinate(pencil: &PencilOfCubics, member: &CubicForm) -> Result<Rp1> {
    let cols = [&pencil.basis[0], &pencil.basis[1], member];
    let rows: Vec<Vec<BigInt>> = (0..10).map(|k| cols.iter().map(|c| c.coefficients()[k].clone()).collect()).collect();
    let ns = linalg::nullspace(rows, 3);
    if ns.len() != 1 || ns[0][2].is_zero() {
        return Err(Error::NotInPencil);
    }
    // v0 C0 + v1 C1 + v2 M = 0, so M ∝ v0 C0 + v1 C1
    Ok(Rp1::new(ns[0][0].clone(), ns[0][1].clone()))
}

/// `1m ∪ (conic through the node and the four other labels)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombinatorialReducibleCubic {
    pub node: Label,
    pub m: Label,
    pub conic: CyclicWord,
}

impl fmt::Display for CombinatorialReducibleCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}∪{}", self.node, self.m, self.conic)
    }
}

impl CombinatorialReducibleCubic {
    /// Parses `12∪51436` (also accepts `U` or `u` for the union sign).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, msg: format!("bad reducible cubic {s:?}") };
        let s = s.trim();
        let (line, conic) =
            s.split_once('∪').or_else(|| s.split_once('U')).or_else(|| s.split_once('u')).ok_or_else(bad)?;
        let line = CyclicWord::parse(line.trim())?;
        let conic = CyclicWord::parse(conic.trim())?;
        let raw: Vec<u8> = line.labels().to_vec();
        if raw.len() != 2 || conic.len() != 5 {
            return Err(bad());
        }
        // the node is the label the line shares with the conic
        let (node, m) = if conic.contains(raw[0]) && !conic.contains(raw[1]) {
            (raw[0], raw[1])
        } else if conic.contains(raw[1]) && !conic.contains(raw[0]) {
            (raw[1], raw[0])
        } else {
            return Err(bad());
        };
        Ok(CombinatorialReducibleCubic { node, m, conic })
    }
}

/// The five reducible members with their pencil coordinates.
pub fn reducible_members(pencil: &PencilOfCubics) -> Result<Vec<(CombinatorialReducibleCubic, Rp1)>> {
    let pts: Vec<&Vec3> = pencil.points.iter().map(|p| p.coords()).collect();
    let labels = &pencil.labels;
    let ni = labels.iter().position(|&l| l == pencil.node).unwrap();
    let mut out: Vec<(CombinatorialReducibleCubic, Rp1)> = Vec::with_capacity(5);
    for mi in 0..6 {
        if mi == ni {
            continue;
        }
        let rest: Vec<usize> = (0..6).filter(|&i| i != mi).collect();
        let conic = conic_of(&pts, &rest)?;
        let member = CubicForm::product(&cross(pts[ni], pts[mi]), &conic);
        let coord = pencil_coordinate(pencil, &member)?;
        let word_pts: Vec<&Vec3> = rest.iter().map(|&i| pts[i]).collect();
        let word_labels: Vec<Label> = rest.iter().map(|&i| labels[i]).collect();
        let word = cyclic_order_on_conic_raw(&conic, &word_pts, &word_labels)?;
        if out.iter().any(|(_, c)| c.same(&coord)) {
            return Err(Error::NonGeneric);
        }
        out.push((CombinatorialReducibleCubic { node: pencil.node, m: labels[mi], conic: word }, coord));
    }
    Ok(out)
}

/// Normalized conic through the points with the given indices.
pub(crate) fn conic_of(pts: &[&Vec3], idx: &[usize]) -> Result<ConicForm> {
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            for c in b + 1..idx.len() {
                if arith::det3(pts[idx[a]], pts[idx[b]], pts[idx[c]]).is_zero() {
                    return Err(Error::DegenerateConic);
                }
            }
        }
    }
    conic_through_five_raw(pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]], pts[idx[4]]).normalize()
}

/// Cyclic sequence of the five reducible cubics, up to rotation and reversal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombinatorialPencil {
    node: Label,
    members: Vec<CombinatorialReducibleCubic>,
}

impl CombinatorialPencil {
    pub fn new(members: Vec<CombinatorialReducibleCubic>) -> Result<Self> {
        if members.len() != 5 {
            return Err(Error::WrongArity { expected: "5", got: members.len() });
        }
        let node = members[0].node;
        let mut ms: Vec<Label> = members.iter().map(|c| c.m).collect();
        ms.sort_unstable();
        ms.dedup();
        if ms.len() != 5 || members.iter().any(|c| c.node != node || c.m == node) {
            return Err(Error::Parse { line: 0, msg: "members do not form a pencil".into() });
        }
        Ok(CombinatorialPencil { node, members: dihedral_min(&members) })
    }

    /// Parses a comma separated list of five reducible cubics.
    pub fn parse(s: &str) -> Result<Self> {
        let members = s.split(',').map(CombinatorialReducibleCubic::parse).collect::<Result<Vec<_>>>()?;
        CombinatorialPencil::new(members)
    }

    pub fn node(&self) -> Label {
        self.node
    }

    pub fn members(&self) -> &[CombinatorialReducibleCubic] {
        &self.members
    }

    /// The cyclic order of the line labels `m`.
    pub fn m_sequence(&self) -> CyclicWord {
        CyclicWord::new(&self.members.iter().map(|c| c.m).collect::<Vec<_>>()).unwrap()
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label + Copy) -> CombinatorialPencil {
        let members = self
            .members
            .iter()
            .map(|c| CombinatorialReducibleCubic { node: f(c.node), m: f(c.m), conic: c.conic.relabel(f) })
            .collect();
        CombinatorialPencil::new(members).unwrap()
    }
}

impl fmt::Display for CombinatorialPencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Combinatorial data of six points: the conic through each five, the
/// side of the sixth, and the order of the reducible cubics at every node.
#[derive(Clone, Debug)]
pub struct SixPointData {
    pub labels: [Label; 6],
    /// `words[i]`: order on the conic through all points but `i`.
    pub words: [CyclicWord; 6],
    /// `interior[i]`: point `i` is inside the conic through the others.
    pub interior: [bool; 6],
    /// `m_orders[n]`: indices `m` in pencil order at node `n`.
    pub m_orders: [Vec<usize>; 6],
}

impl SixPointData {
    pub fn compute(pts: &[&Vec3; 6], labels: [Label; 6]) -> Result<Self> {
        let mut conics = Vec::with_capacity(6);
        for m in 0..6 {
            let rest: Vec<usize> = (0..6).filter(|&i| i != m).collect();
            conics.push(conic_of(pts, &rest)?);
        }
        Self::from_conics(pts, labels, &conics)
    }

    /// `conics[m]` must be the normalized conic through all points but `m`.
    pub fn from_conics(pts: &[&Vec3; 6], labels: [Label; 6], conics: &[ConicForm]) -> Result<Self> {
        let mut words = Vec::with_capacity(6);
        let mut interior = [false; 6];
        for m in 0..6 {
            let rest: Vec<usize> = (0..6).filter(|&i| i != m).collect();
            let wp: Vec<&Vec3> = rest.iter().map(|&i| pts[i]).collect();
            let wl: Vec<Label> = rest.iter().map(|&i| labels[i]).collect();
            words.push(cyclic_order_on_conic_raw(&conics[m], &wp, &wl)?);
            let v = conics[m].eval(pts[m]);
            if v.is_zero() {
                return Err(Error::NonGeneric);
            }
            interior[m] = v < BigInt::zero();
        }
        let mut m_orders: [Vec<usize>; 6] = Default::default();
        for (n, slot) in m_orders.iter_mut().enumerate() {
            *slot = pencil_m_order(pts, conics, n)?;
        }
        Ok(SixPointData { labels, words: words.try_into().unwrap(), interior, m_orders })
    }

    pub fn pencil(&self, n: usize) -> CombinatorialPencil {
        let members = self.m_orders[n]
            .iter()
            .map(|&m| CombinatorialReducibleCubic {
                node: self.labels[n],
                m: self.labels[m],
                conic: self.words[m].clone(),
            })
            .collect();
        CombinatorialPencil::new(members).unwrap()
    }

    pub fn interior_count(&self) -> usize {
        self.interior.iter().filter(|&&b| b).count()
    }
}

/// Pencil order at node `n`: the member `line(n, m) · conics[m]` has
/// coordinate `(C1(x) : -C0(x))` for any `x` on `line(n, m)` off the base locus.
fn pencil_m_order(pts: &[&Vec3; 6], conics: &[ConicForm], n: usize) -> Result<Vec<usize>> {
    let ms: Vec<usize> = (0..6).filter(|&m| m != n).collect();
    let lines: Vec<Vec3> = (0..6).map(|m| cross(pts[n], pts[m])).collect();
    let value = |m: usize, x: &Vec3| arith::dot(&lines[m], x) * conics[m].eval(x);
    let (m0, m1) = (ms[0], ms[1]);
    let mut params = Vec::with_capacity(5);
    for &m in &ms {
        let mut found = None;
        for k in 1i64..16 {
            let x = arith::add(pts[n], &arith::scale(&BigInt::from(k), pts[m]));
            let (v0, v1) = (value(m0, &x), value(m1, &x));
            if !(v0.is_zero() && v1.is_zero()) {
                found = Some(Rp1::new(v1, -v0));
                break;
            }
        }
        params.push(found.ok_or(Error::NonGeneric)?);
    }
    let order = rp1_cyclic_order(&params).map_err(|_| Error::NonGeneric)?;
    Ok(order.into_iter().map(|i| ms[i]).collect())
}

/// Combinatorial pencil at `node` (a label in `1..=6`).
pub fn combinatorial_pencil(points: &[ProjectivePoint], node: Label) -> Result<CombinatorialPencil> {
    if points.len() != 6 {
        return Err(Error::WrongArity { expected: "6", got: points.len() });
    }
    if node == 0 || node > 6 {
        return Err(Error::BadLabel(node));
    }
    let pts: [&Vec3; 6] = std::array::from_fn(|i| points[i].coords());
    let data = SixPointData::compute(&pts, [1, 2, 3, 4, 5, 6])?;
    Ok(data.pencil(node as usize - 1))
}

/// Special member of a pencil of conics through four points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConicMember {
    /// Two lines, each given by its sorted pair of labels; pairs sorted.
    LinePair([Label; 2], [Label; 2]),
    /// Smooth conic through five named points.
    Conic(CyclicWord),
}

impl ConicMember {
    pub fn line_pair(a: [Label; 2], b: [Label; 2]) -> ConicMember {
        let mut a = a;
        let mut b = b;
        a.sort_unstable();
        b.sort_unstable();
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
        ConicMember::LinePair(a, b)
    }

    pub fn parse(s: &str) -> Result<ConicMember> {
        let s = s.trim();
        let bad = || Error::Parse { line: 0, msg: format!("bad conic member {s:?}") };
        let split = s.split_once('∪').or_else(|| s.split_once('U')).or_else(|| s.split_once('u'));
        match split {
            Some((a, b)) => {
                let pair = |t: &str| -> Result<[Label; 2]> {
                    let v: Vec<Label> = t
                        .trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as u8))
                        .collect::<Option<_>>()
                        .ok_or_else(bad)?;
                    v.try_into().map_err(|_| bad())
                };
                Ok(ConicMember::line_pair(pair(a)?, pair(b)?))
            }
            None => {
                let w = CyclicWord::parse(s)?;
                if w.len() != 5 {
                    return Err(bad());
                }
                Ok(ConicMember::Conic(w))
            }
        }
    }
}

impl fmt::Display for ConicMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicMember::LinePair(a, b) => write!(f, "{}{}∪{}{}", a[0], a[1], b[0], b[1]),
            ConicMember::Conic(w) => write!(f, "{w}"),
        }
    }
}

/// Cyclic sequence of the five special conics after the transformation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicPencil {
    pub node: Label,
    pub base: [Label; 2],
    members: Vec<ConicMember>,
}

impl ConicPencil {
    pub fn new(node: Label, base: [Label; 2], members: Vec<ConicMember>) -> Self {
        ConicPencil { node, base, members: dihedral_min(&members) }
    }

    pub fn parse(node: Label, base: [Label; 2], s: &str) -> Result<Self> {
        let members = s.split(',').map(ConicMember::parse).collect::<Result<Vec<_>>>()?;
        if members.len() != 5 {
            return Err(Error::WrongArity { expected: "5", got: members.len() });
        }
        Ok(ConicPencil::new(node, base, members))
    }

    pub fn members(&self) -> &[ConicMember] {
        &self.members
    }

    /// Reducible cubic label `m` corresponding to each member: the line
    /// pair containing `node·c` pulls back to `m = c`, and the conic through
    /// one base point pulls back to the cubic containing the line to the other.
    pub fn pullback_m_sequence(&self) -> CyclicWord {
        let ms: Vec<Label> = self
            .members
            .iter()
            .map(|mem| match mem {
                ConicMember::LinePair(a, b) => {
                    let p = if a.contains(&self.node) { a } else { b };
                    if p[0] == self.node {
                        p[1]
                    } else {
                        p[0]
                    }
                }
                ConicMember::Conic(w) => {
                    if w.contains(self.base[0]) {
                        self.base[1]
                    } else {
                        self.base[0]
                    }
                }
            })
            .collect();
        CyclicWord::new(&ms).unwrap()
    }
}

impl fmt::Display for ConicPencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Apply the quadratic transformation based at `node, a, b` and read off
/// the pencil of conics through the node image and the three other images.
pub fn conic_pencil_after_cremona(points: &[ProjectivePoint], node: Label, a: Label, b: Label) -> Result<ConicPencil> {
    if points.len() != 6 {
        return Err(Error::WrongArity { expected: "6", got: points.len() });
    }
    for l in [node, a, b] {
        if l == 0 || l > 6 {
            return Err(Error::BadLabel(l));
        }
    }
    if node == a || node == b || a == b {
        return Err(Error::IdenticalInputs);
    }
    let base = [points[node as usize - 1].clone(), points[a as usize - 1].clone(), points[b as usize - 1].clone()];
    if arith::det3(base[0].coords(), base[1].coords(), base[2].coords()).is_zero() {
        return Err(Error::CollinearBase);
    }
    let e0 = arith::vec3(1, 0, 0);
    let e1 = arith::vec3(0, 1, 0);
    let e2 = arith::vec3(0, 0, 1);
    let rest: Vec<Label> = (1..=6).filter(|&l| l != node && l != a && l != b).collect();
    let imgs: Vec<Vec3> = rest.iter().map(|&l| cremona_frame(&base, points[l as usize - 1].coords())).collect();
    for v in &imgs {
        if arith::is_zero(v) {
            return Err(Error::NonGeneric);
        }
    }
    // pairs: line(e0, c_j) · line(c_k, c_l)
    let pair_form = |j: usize| {
        let (k, l) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        ConicForm::from_line_pair(&cross(&e0, &imgs[j]), &cross(&imgs[k], &imgs[l]))
    };
    let q0 = pair_form(0);
    let q1 = pair_form(1);
    let coord = |x: &Vec3| Rp1::new(q1.eval(x), -q0.eval(x));
    let mut members = Vec::with_capacity(5);
    let mut params = Vec::with_capacity(5);
    for j in 0..3 {
        let (k, l) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        members.push(ConicMember::line_pair([node, rest[j]], [rest[k], rest[l]]));
        params.push(coord(&arith::add(&e0, &imgs[j])));
    }
    for (name, e) in [(a, &e1), (b, &e2)] {
        let c = conic_through_five_raw(&e0, &imgs[0], &imgs[1], &imgs[2], e);
        let pts = [&e0, &imgs[0], &imgs[1], &imgs[2], e];
        let labels = [node, rest[0], rest[1], rest[2], name];
        if c.det2().is_zero() {
            return Err(Error::NonGeneric);
        }
        members.push(ConicMember::Conic(cyclic_order_on_conic_raw(&c, &pts, &labels)?));
        params.push(coord(e));
    }
    let order = rp1_cyclic_order(&params).map_err(|_| Error::NonGeneric)?;
    let seq: Vec<ConicMember> = order.into_iter().map(|i| members[i].clone()).collect();
    Ok(ConicPencil::new(node, [a, b], seq))
}

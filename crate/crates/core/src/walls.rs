//! Walls: point sets with exactly one degeneracy, and their classes.
//!
//! A line-wall is described by the cyclic order on the line `L` of the three
//! aligned points and of the intersections of `L` with the lines through
//! pairs of the other points. Moving `L` across the meeting point of two
//! disjoint pairs swaps them on `L` without leaving the wall, so classes are
//! minimized over the orbit of such swaps. A conic-wall is described by the
//! conic-diagram of the apex and an interior bit.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::arith::{det3, Vec3};
use crate::catalog::{Catalog, EntryKind};
use crate::classify::permutations;
use crate::crossing::{events, Event};
use crate::cyclic::{dihedral_min, rp1_cyclic_order, Rp1};
use crate::error::{Error, Result};
use crate::projective::{
    conic_side, conic_through_five, conic_through_five_raw, cyclic_order_in_line_pencil, cyclic_order_on_conic, Label,
    ProjectivePoint, Side,
};

pub const WALL_NAMES_TEXT: &str = include_str!("../data/walls.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    Generic,
    CollinearTriple([Label; 3]),
    CoconicSextuple([Label; 6]),
    Other,
}

pub fn degeneracy_detect(points: &[ProjectivePoint]) -> Degeneracy {
    let pts: Vec<Vec3> = points.iter().map(|p| p.coords().clone()).collect();
    let ev = events(&pts);
    let labels = |e: &Event| e.indices().iter().map(|&i| i as Label + 1).collect::<Vec<_>>();
    match ev.as_slice() {
        [] => Degeneracy::Generic,
        [e @ Event::Line(_)] => Degeneracy::CollinearTriple(labels(e).try_into().unwrap()),
        [e @ Event::Conic(_)] => Degeneracy::CoconicSextuple(labels(e).try_into().unwrap()),
        _ => Degeneracy::Other,
    }
}

/// An element of the cyclic sequence on `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LItem {
    Point(Label),
    Pair(Label, Label),
}

impl fmt::Display for LItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LItem::Point(a) => write!(f, "{a}"),
            LItem::Pair(a, b) => write!(f, "{a}{b}"),
        }
    }
}

/// Formats a cyclic sequence as `4, 5, 17, 6, ...`.
pub fn format_sequence(seq: &[LItem]) -> String {
    seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn disjoint_pairs(x: LItem, y: LItem) -> bool {
    matches!((x, y), (LItem::Pair(a, b), LItem::Pair(c, d)) if a != c && a != d && b != c && b != d)
}

/// Formats a cyclic sequence with neighbouring disjoint pairs, whose order
/// changes as the line moves within the wall, in braces:
/// `4, 5, 17, 6, 27, {37,12}, 13, 23`.
pub fn format_sequence_braced(seq: &[LItem]) -> String {
    let m = seq.len();
    let mut s = seq.to_vec();
    // keep a brace from straddling the end of the reading
    if m > 1 && disjoint_pairs(s[m - 1], s[0]) {
        s.rotate_right(1);
    }
    let mut out = Vec::new();
    let mut k = 0;
    while k < m {
        if k + 1 < m && disjoint_pairs(s[k], s[k + 1]) {
            out.push(format!("{{{},{}}}", s[k], s[k + 1]));
            k += 2;
        } else {
            out.push(s[k].to_string());
            k += 1;
        }
    }
    out.join(", ")
}

/// Cyclic order on the line through `triple` of the three points and of
/// the intersections with the lines through pairs of the remaining points.
/// The reading starts at the smallest aligned label.
pub fn l_sequence(points: &[ProjectivePoint], triple: [Label; 3]) -> Result<Vec<LItem>> {
    let n = points.len();
    let pts: Vec<&Vec3> = points.iter().map(|p| p.coords()).collect();
    let mut t = triple;
    t.sort_unstable();
    if t[0] == 0 || t[2] as usize > n || t[0] == t[1] || t[1] == t[2] {
        return Err(Error::NotOnWall);
    }
    let (a, b, c) = (pts[t[0] as usize - 1], pts[t[1] as usize - 1], pts[t[2] as usize - 1]);
    if !det3(a, b, c).is_zero() {
        return Err(Error::NotOnWall);
    }
    let off: Vec<usize> = (0..n).filter(|&i| !t.contains(&(i as Label + 1))).collect();
    let line = crate::arith::cross(a, b);
    let c0 = pts[off[0]];
    let base = det3(a, b, c0);
    let param = |x: &Vec3| Rp1::new(det3(x, b, c0), det3(a, x, c0));
    let mut items = Vec::new();
    let mut params = Vec::new();
    for &l in &t {
        items.push(LItem::Point(l));
        params.push(param(pts[l as usize - 1]));
    }
    for (x, &i) in off.iter().enumerate() {
        for &j in &off[x + 1..] {
            let lij = crate::arith::cross(pts[i], pts[j]);
            let meet = crate::arith::cross(&line, &lij);
            if crate::arith::is_zero(&meet) {
                return Err(Error::MultipleDegeneracies);
            }
            items.push(LItem::Pair(i as Label + 1, j as Label + 1));
            params.push(param(&meet));
        }
    }
    debug_assert!(!base.is_zero());
    let order = rp1_cyclic_order(&params).map_err(|_| Error::MultipleDegeneracies)?;
    let seq: Vec<LItem> = order.iter().map(|&k| items[k]).collect();
    // rotate to the first aligned point; read in the direction of the smaller neighbour
    let start = seq.iter().position(|x| *x == LItem::Point(t[0])).unwrap();
    let m = seq.len();
    let fwd: Vec<LItem> = (0..m).map(|k| seq[(start + k) % m]).collect();
    let bwd: Vec<LItem> = (0..m).map(|k| seq[(start + m - k) % m]).collect();
    Ok(if fwd <= bwd { fwd } else { bwd })
}

/// All readings reachable by swapping neighbouring intersections of
/// disjoint pairs.
pub fn swap_orbit(seq: &[LItem]) -> Vec<Vec<LItem>> {
    let mut seen: BTreeSet<Vec<LItem>> = BTreeSet::new();
    let mut stack = vec![seq.to_vec()];
    seen.insert(seq.to_vec());
    let m = seq.len();
    while let Some(s) = stack.pop() {
        for k in 0..m {
            let (x, y) = (s[k], s[(k + 1) % m]);
            if let (LItem::Pair(a, b), LItem::Pair(c, d)) = (x, y) {
                if a != c && a != d && b != c && b != d {
                    let mut s2 = s.clone();
                    s2.swap(k, (k + 1) % m);
                    if seen.insert(s2.clone()) {
                        stack.push(s2);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn pair_code(x: u8, y: u8, k: u8) -> u8 {
    let (x, y) = (x.min(y), x.max(y));
    // index of the pair among the pairs of 0..k in lexicographic order
    let mut idx = 0;
    for i in 0..k {
        for j in i + 1..k {
            if (i, j) == (x, y) {
                return idx + 1;
            }
            idx += 1;
        }
    }
    unreachable!()
}

fn off_labels(seq: &[LItem]) -> Vec<Label> {
    let mut s: BTreeSet<Label> = BTreeSet::new();
    for x in seq {
        if let LItem::Pair(a, b) = x {
            s.insert(*a);
            s.insert(*b);
        }
    }
    s.into_iter().collect()
}

/// Canonical code of a line-wall with the aligned points anonymized:
/// `0` for an aligned point, `1 + pair index` for an intersection.
pub fn line_wall_canonical(seq: &[LItem]) -> Vec<u8> {
    let off = off_labels(seq);
    let k = off.len() as u8;
    let mut best: Option<Vec<u8>> = None;
    for s in swap_orbit(seq) {
        for perm in permutations(off.len()) {
            let f = |l: Label| perm[off.iter().position(|&x| x == l).unwrap()] as u8;
            let codes: Vec<u8> = s
                .iter()
                .map(|x| match *x {
                    LItem::Point(_) => 0,
                    LItem::Pair(a, b) => pair_code(f(a), f(b), k),
                })
                .collect();
            let c = dihedral_min(&codes);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap()
}

/// Readable form of a canonical code: `*` for aligned points, digit pairs
/// for intersections.
pub fn format_canonical(code: &[u8], off: usize) -> String {
    let mut pairs = Vec::new();
    for i in 0..off {
        for j in i + 1..off {
            pairs.push(format!("{}{}", i + 1, j + 1));
        }
    }
    code.iter()
        .map(|&c| if c == 0 { "*".to_string() } else { pairs[c as usize - 1].clone() })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_canonical(s: &str) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "*" {
            out.push(0);
            continue;
        }
        let d: Vec<u8> = tok.bytes().map(|b| b.wrapping_sub(b'0')).collect();
        if d.len() != 2 || d[0] == 0 || d[0] >= d[1] || d[1] > 4 {
            return Err(Error::Parse { line: 0, msg: format!("bad wall item {tok:?}") });
        }
        out.push(pair_code(d[0] - 1, d[1] - 1, 4));
    }
    Ok(out)
}

/// Reference names of the line-walls of seven points and their canonical codes.
pub fn wall_names() -> &'static [(u8, Vec<u8>)] {
    static CELL: OnceLock<Vec<(u8, Vec<u8>)>> = OnceLock::new();
    CELL.get_or_init(|| parse_wall_names(WALL_NAMES_TEXT).expect("shipped wall table parses"))
}

pub fn parse_wall_names(text: &str) -> Result<Vec<(u8, Vec<u8>)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let s = raw.split('#').next().unwrap_or("").trim();
        if s.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let (name, code) = s.split_once('|').ok_or_else(|| err(format!("missing '|' in {s:?}")))?;
        let n: u8 = name
            .trim()
            .strip_prefix('W')
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| err(format!("bad wall name {name:?}")))?;
        let c = parse_canonical(code).map_err(|_| err(format!("bad wall code {code:?}")))?;
        if c.len() != 9 {
            return Err(err("a wall code has nine items".into()));
        }
        out.push((n, c));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWallClass {
    pub triple: [Label; 3],
    pub sequence: Vec<LItem>,
    pub canonical: Vec<u8>,
    /// `Wn` name when the wall is a known seven-point line-wall.
    pub name: Option<u8>,
}

impl LineWallClass {
    pub fn name_string(&self) -> String {
        match self.name {
            Some(n) => format!("W{n}"),
            None => format!("[{}]", format_canonical(&self.canonical, off_labels(&self.sequence).len())),
        }
    }
}

/// Line-wall class of a point set with exactly one collinear triple.
pub fn line_wall_class(points: &[ProjectivePoint]) -> Result<LineWallClass> {
    let t = match degeneracy_detect(points) {
        Degeneracy::CollinearTriple(t) => t,
        Degeneracy::Generic | Degeneracy::CoconicSextuple(_) => return Err(Error::NotOnWall),
        Degeneracy::Other => return Err(Error::MultipleDegeneracies),
    };
    let sequence = l_sequence(points, t)?;
    let canonical = line_wall_canonical(&sequence);
    let name = wall_names().iter().find(|(_, c)| *c == canonical).map(|(n, _)| *n);
    Ok(LineWallClass { triple: t, sequence, canonical, name })
}

/// Interior bits of every point against the conics through five others not
/// containing `triple`: `0` exterior, `1` interior, `2` undefined.
fn conic_bits(points: &[ProjectivePoint], triple: [Label; 3]) -> Result<Vec<Vec<u8>>> {
    let n = points.len();
    let mut bits = vec![vec![2u8; n]; n];
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let five: Vec<usize> = (0..n).filter(|&i| i != p && i != q).collect();
            if triple.iter().all(|&l| five.contains(&(l as usize - 1))) {
                continue;
            }
            let f: Vec<ProjectivePoint> = five.iter().map(|&i| points[i].clone()).collect();
            let side = conic_side(&conic_through_five(&f)?, &points[p])?;
            if side == Side::On {
                return Err(Error::MultipleDegeneracies);
            }
            bits[p][q] = u8::from(side == Side::Interior);
        }
    }
    Ok(bits)
}

/// Line-wall data refined by the interior bits of all points against the
/// conics that avoid the aligned triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinedFingerprint(pub Vec<u8>);

pub fn refined_wall_fingerprint(points: &[ProjectivePoint]) -> Result<(LineWallClass, RefinedFingerprint)> {
    let class = line_wall_class(points)?;
    let t = class.triple;
    let bits = conic_bits(points, t)?;
    let n = points.len();
    let black: Vec<usize> = t.iter().map(|&l| l as usize - 1).collect();
    let off: Vec<usize> = (0..n).filter(|i| !black.contains(i)).collect();
    let orbit = swap_orbit(&class.sequence);
    let mut best: Option<Vec<u8>> = None;
    for pb in permutations(3) {
        for po in permutations(off.len()) {
            // new index of each old index
            let mut new = vec![0usize; n];
            for (k, &b) in black.iter().enumerate() {
                new[b] = pb[k];
            }
            for (k, &o) in off.iter().enumerate() {
                new[o] = 3 + po[k];
            }
            let mut bitcode = vec![0u8; n * n];
            for p in 0..n {
                for q in 0..n {
                    if p != q {
                        bitcode[new[p] * n + new[q]] = bits[p][q];
                    }
                }
            }
            let mut seqbest: Option<Vec<u8>> = None;
            for s in &orbit {
                let codes: Vec<u8> = s
                    .iter()
                    .map(|x| match *x {
                        LItem::Point(a) => new[a as usize - 1] as u8,
                        LItem::Pair(a, b) => {
                            let (x, y) = (new[a as usize - 1] as u8, new[b as usize - 1] as u8);
                            10 + 8 * x.min(y) + x.max(y)
                        }
                    })
                    .collect();
                let c = dihedral_min(&codes);
                if seqbest.as_ref().is_none_or(|b| c < *b) {
                    seqbest = Some(c);
                }
            }
            let mut enc = seqbest.unwrap();
            enc.extend(bitcode);
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    Ok((class, RefinedFingerprint(best.unwrap())))
}

/// Conic-diagram of an apex against six coconic points, relabeled so that
/// the conic reads `1..6`; `pencil` is the order of the lines at the apex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConicDiagram {
    pub pencil: Vec<u8>,
    pub apex_interior: bool,
}

impl fmt::Display for ConicDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.pencil {
            write!(f, "{l}")?;
        }
        f.write_str(if self.apex_interior { " inside" } else { " outside" })
    }
}

/// Least reading of a pencil word under the symmetries of the hexagon
/// `1..6` and rotation or reversal of the word itself.
pub fn unmarked_canonical(pencil: &[u8]) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for g in 0..12u8 {
        let m = |i: u8| -> u8 {
            let i = i - 1;
            (if g < 6 { (i + g) % 6 } else { (g + 6 - i) % 6 }) + 1
        };
        let w: Vec<u8> = pencil.iter().map(|&l| m(l)).collect();
        let c = dihedral_min(&w);
        if best.as_ref().is_none_or(|b| c < *b) {
            best = Some(c);
        }
    }
    best.unwrap()
}

/// The unmarked diagrams allowed by the shape of the map from the conic to
/// the pencil at the apex: a double cover when the apex is interior, a fold
/// between the two tangents when it is exterior.
pub fn admissible_diagrams() -> (BTreeSet<Vec<u8>>, BTreeSet<Vec<u8>>) {
    fn merges(a: &[u8], b: &[u8], acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if a.is_empty() || b.is_empty() {
            let mut w = acc.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.push(w);
            return;
        }
        acc.push(a[0]);
        merges(&a[1..], b, acc, out);
        acc.pop();
        acc.push(b[0]);
        merges(a, &b[1..], acc, out);
        acc.pop();
    }
    let mut inside = BTreeSet::new();
    let mut outside = BTreeSet::new();
    for k in 0..=6usize {
        let cyc: Vec<u8> = (1..=6).collect();
        let (a, b) = cyc.split_at(k);
        let mut ws = Vec::new();
        merges(a, b, &mut Vec::new(), &mut ws);
        inside.extend(ws.iter().map(|w| unmarked_canonical(w)));
        let rb: Vec<u8> = b.iter().rev().copied().collect();
        let mut ws = Vec::new();
        merges(a, &rb, &mut Vec::new(), &mut ws);
        outside.extend(ws.iter().map(|w| unmarked_canonical(w)));
    }
    (inside, outside)
}

/// Every unmarked diagram: closed hexagons through `1..6` up to symmetry.
pub fn all_unmarked_diagrams() -> BTreeSet<Vec<u8>> {
    permutations(5)
        .iter()
        .map(|p| {
            let mut w = vec![1u8];
            w.extend(p.iter().map(|&i| i as u8 + 2));
            unmarked_canonical(&w)
        })
        .collect()
}

/// Canonical conic-diagram of seven points with exactly six coconic.
pub fn conic_diagram(points: &[ProjectivePoint]) -> Result<(ConicDiagram, [Label; 6])> {
    let six = match degeneracy_detect(points) {
        Degeneracy::CoconicSextuple(s) => s,
        Degeneracy::Generic | Degeneracy::CollinearTriple(_) => return Err(Error::NotOnWall),
        Degeneracy::Other => return Err(Error::MultipleDegeneracies),
    };
    if points.len() != 7 {
        return Err(Error::WrongArity { expected: "7", got: points.len() });
    }
    let apex = (1..=7).find(|l| !six.contains(l)).unwrap();
    let on: Vec<(Label, ProjectivePoint)> = six.iter().map(|&l| (l, points[l as usize - 1].clone())).collect();
    let five: Vec<ProjectivePoint> = on[..5].iter().map(|(_, p)| p.clone()).collect();
    let conic = conic_through_five(&five)?;
    let word = cyclic_order_on_conic(&conic, &on)?;
    let apex_pt = &points[apex as usize - 1];
    let pencil = cyclic_order_in_line_pencil(apex_pt, &on)?;
    let interior = conic_side(&conic, apex_pt)? == Side::Interior;
    // relabel so the conic reads 1..6
    let pos = |l: Label| word.labels().iter().position(|&x| x == l).unwrap() as u8 + 1;
    let w: Vec<u8> = pencil.labels().iter().map(|&l| pos(l)).collect();
    Ok((ConicDiagram { pencil: unmarked_canonical(&w), apex_interior: interior }, six))
}

/// Conic-diagrams of the catalog arrangements `A..K`.
pub fn coconic_references() -> &'static [(char, ConicDiagram)] {
    static CELL: OnceLock<Vec<(char, ConicDiagram)>> = OnceLock::new();
    CELL.get_or_init(|| {
        Catalog::shipped()
            .of_kind(EntryKind::Coconic)
            .map(|e| {
                let (d, _) = conic_diagram(&e.points).expect("catalog coconic entry is a conic-wall");
                (e.name.chars().next().unwrap(), d)
            })
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicWallClass {
    pub letter: char,
    pub sextuple: [Label; 6],
    pub diagram: ConicDiagram,
}

/// Letter `A..K` of a seven-point set with six coconic points.
pub fn conic_wall_class(points: &[ProjectivePoint]) -> Result<ConicWallClass> {
    let (diagram, sextuple) = conic_diagram(points)?;
    let (inside, outside) = admissible_diagrams();
    let allowed = if diagram.apex_interior { inside } else { outside };
    if !allowed.contains(&diagram.pencil) {
        return Err(Error::NonRealizableDiagram);
    }
    coconic_references()
        .iter()
        .find(|(_, d)| *d == diagram)
        .map(|(l, _)| ConicWallClass { letter: *l, sextuple, diagram })
        .ok_or(Error::UnknownClass)
}

/// Whether the five points of a wall conic actually avoid collinear triples.
pub fn is_smooth_conic(pts: &[&Vec3; 5]) -> bool {
    let c = conic_through_five_raw(pts[0], pts[1], pts[2], pts[3], pts[4]);
    !c.coefficients().iter().all(Zero::is_zero) && !c.det2().is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallDescriptor {
    Line(LineWallClass),
    Conic(ConicWallClass),
    /// A conic through all six points of a six-point set.
    SixConic,
}

impl WallDescriptor {
    pub fn label(&self) -> String {
        match self {
            WallDescriptor::Line(l) => l.name_string(),
            WallDescriptor::Conic(c) => format!("conic {}", c.letter),
            WallDescriptor::SixConic => "conic".to_string(),
        }
    }
}

impl fmt::Display for WallDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn detect_kinds() {
        let cat = Catalog::shipped();
        assert_eq!(degeneracy_detect(&cat.seven("(E,6)").unwrap().points), Degeneracy::Generic);
        assert_eq!(
            degeneracy_detect(&cat.coconic('A').unwrap().points),
            Degeneracy::CoconicSextuple([1, 2, 3, 4, 5, 6])
        );
        let mut ps = cat.seven("(E,6)").unwrap().points.clone();
        ps[0] = pt(1, 0, 0);
        ps[1] = pt(0, 1, 0);
        let mut found = false;
        for k in 2..40 {
            ps[2] = pt(1, k, 0);
            if degeneracy_detect(&ps) == Degeneracy::CollinearTriple([1, 2, 3]) {
                found = true;
                break;
            }
        }
        assert!(found);
        ps[3] = pt(5, 7, 0);
        assert_eq!(degeneracy_detect(&ps), Degeneracy::Other);
    }

    #[test]
    fn admissible_diagram_counts() {
        let (i, o) = admissible_diagrams();
        assert_eq!(i.len(), 5);
        assert_eq!(o.len(), 6);
        assert_eq!(i.union(&o).count(), 8);
        assert_eq!(all_unmarked_diagrams().len(), 12);
    }

    #[test]
    fn swap_orbit_respects_blacks() {
        use LItem::*;
        let s =
            vec![Point(4), Point(5), Pair(1, 7), Point(6), Pair(2, 7), Pair(3, 7), Pair(1, 2), Pair(1, 3), Pair(2, 3)];
        let o = swap_orbit(&s);
        assert_eq!(o.len(), 2);
        assert!(o.iter().any(|x| x[5] == Pair(1, 2) && x[6] == Pair(3, 7)));
    }

    #[test]
    fn canonical_code_round_trip() {
        let c = vec![0, 0, 3, 0, 5, 6, 1, 2, 4];
        assert_eq!(parse_canonical(&format_canonical(&c, 4)).unwrap(), c);
        assert!(parse_canonical("* 15").is_err());
    }
}

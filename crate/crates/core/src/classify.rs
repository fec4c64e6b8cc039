//! Canonical fingerprints of labeled six- and seven-point sets under
//! relabeling.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::admissible::SixReference;
use crate::arith::Vec3;
use crate::catalog::{Catalog, EntryKind};
use crate::cubic::{nodal_cubic_descriptor, seven_point_nodal_cubic_fast, NodalCubicDescriptor, NodeKind};
use crate::cyclic::{canonical_distinct, dihedral_min};
use crate::error::{Error, Result};
use crate::golden::Golden;
use crate::pencil::{combinatorial_pencil, conic_of, CombinatorialPencil, SixPointData};
use crate::projective::{conic_side, conic_through_five, ConicForm, Label, ProjectivePoint, Side};

/// Canonical byte string identifying a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub arity: u8,
    pub bytes: Vec<u8>,
}

impl Fingerprint {
    pub fn hex(&self) -> String {
        let mut s = format!("{:02x}", self.arity);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// All orders `order[k] = old index placed at new position k` that minimize
/// the sorted keys followed by the pair table read in order of position.
/// Every relabeling achieving the least prefix is returned, so any
/// relabeling-invariant tail can be minimized over the result.
pub(crate) fn canonical_orders(keys: &[u64], pair: &dyn Fn(usize, usize) -> u8) -> (Vec<u8>, Vec<Vec<usize>>) {
    let n = keys.len();
    let mut sorted = keys.to_vec();
    sorted.sort_unstable();
    let mut prefix: Vec<u8> = sorted.iter().flat_map(|k| k.to_be_bytes()).collect();
    let mut states: Vec<Vec<usize>> = vec![Vec::new()];
    for (k, want) in sorted.iter().enumerate() {
        let mut best: Option<Vec<u8>> = None;
        let mut next = Vec::new();
        for st in &states {
            for c in 0..n {
                if keys[c] != *want || st.contains(&c) {
                    continue;
                }
                let mut seg = Vec::with_capacity(2 * k);
                for &o in st {
                    seg.push(pair(o, c));
                    seg.push(pair(c, o));
                }
                match &best {
                    Some(b) if seg > *b => continue,
                    Some(b) if seg == *b => {}
                    _ => {
                        best = Some(seg);
                        next.clear();
                    }
                }
                let mut s2 = st.clone();
                s2.push(c);
                next.push(s2);
            }
        }
        prefix.extend(best.unwrap_or_default());
        states = next;
    }
    (prefix, states)
}

/// Inverse of an order: `new[old]`.
fn positions(order: &[usize]) -> Vec<u8> {
    let mut pos = vec![0u8; order.len()];
    for (k, &o) in order.iter().enumerate() {
        pos[o] = k as u8;
    }
    pos
}

/// Canonical encoding of a six-point data set with labels `0..6` as indices.
pub fn six_fingerprint_of(d: &SixPointData) -> Fingerprint {
    six_canonical(d).0
}

/// Fingerprint together with one canonical order.
pub(crate) fn six_canonical(d: &SixPointData) -> (Fingerprint, Vec<usize>) {
    let idx = |l: Label| d.labels.iter().position(|&x| x == l).unwrap();
    let word_idx: Vec<Vec<usize>> = d.words.iter().map(|w| w.labels().iter().map(|&l| idx(l)).collect()).collect();
    // adjacency counts in conic words and in pencil orders
    let mut adj = [[0u8; 6]; 6];
    for seq in word_idx.iter().chain(d.m_orders.iter()) {
        let k = seq.len();
        for t in 0..k {
            let (a, b) = (seq[t], seq[(t + 1) % k]);
            adj[a][b] += 1;
            adj[b][a] += 1;
        }
    }
    let keys: Vec<u64> = (0..6).map(|i| u64::from(!d.interior[i])).collect();
    let pair = |a: usize, b: usize| adj[a][b];
    let (prefix, orders) = canonical_orders(&keys, &pair);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for order in orders {
        let tail = six_tail(&word_idx, d, &order);
        if best.as_ref().is_none_or(|(b, _)| tail < *b) {
            best = Some((tail, order));
        }
    }
    let (tail, order) = best.unwrap();
    let mut bytes = prefix;
    bytes.extend(tail);
    (Fingerprint { arity: 6, bytes }, order)
}

fn six_tail(word_idx: &[Vec<usize>], d: &SixPointData, order: &[usize]) -> Vec<u8> {
    let pos = positions(order);
    let mut tail = Vec::with_capacity(60);
    for &old in order {
        let w: Vec<u8> = word_idx[old].iter().map(|&i| pos[i]).collect();
        tail.extend(canonical_distinct(&w));
    }
    for &old in order {
        let m: Vec<u8> = d.m_orders[old].iter().map(|&i| pos[i]).collect();
        tail.extend(dihedral_min(&m));
    }
    tail
}

/// Encoding of the labeled data without relabeling; equal keys mean the
/// same labeled arrangement.
pub fn six_labeled_key(d: &SixPointData) -> Vec<u8> {
    let idx = |l: Label| d.labels.iter().position(|&x| x == l).unwrap();
    let word_idx: Vec<Vec<usize>> = d.words.iter().map(|w| w.labels().iter().map(|&l| idx(l)).collect()).collect();
    let mut key: Vec<u8> = d.interior.iter().map(|&b| u8::from(b)).collect();
    key.extend(six_tail(&word_idx, d, &[0, 1, 2, 3, 4, 5]));
    key
}

/// Six-point data for six labeled points.
pub fn six_data(points: &[ProjectivePoint]) -> Result<SixPointData> {
    if points.len() != 6 {
        return Err(Error::WrongArity { expected: "6", got: points.len() });
    }
    let pts: [&Vec3; 6] = std::array::from_fn(|i| points[i].coords());
    SixPointData::compute(&pts, [1, 2, 3, 4, 5, 6])
}

pub fn six_fingerprint(points: &[ProjectivePoint]) -> Result<Fingerprint> {
    Ok(six_fingerprint_of(&six_data(points)?))
}

/// Least encoding of a pencil over relabelings of the non-node points.
pub fn pencil_canonical(p: &CombinatorialPencil) -> Vec<u8> {
    let others: Vec<Label> = p.members().iter().map(|c| c.m).collect();
    let mut best: Option<Vec<u8>> = None;
    for perm in permutations(5) {
        let f = |l: Label| {
            if l == p.node() {
                0
            } else {
                perm[others.iter().position(|&x| x == l).unwrap()] as u8 + 1
            }
        };
        let q = p.relabel(f);
        let enc: Vec<u8> =
            q.members().iter().flat_map(|c| std::iter::once(c.m).chain(c.conic.labels().iter().copied())).collect();
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    best.unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Counts `(n_β, n_δ, n_γ, n_α)` of six-point types among the seven subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple(pub [u8; 4]);

impl Quadruple {
    pub fn parse(s: &str) -> Result<Quadruple> {
        let bad = || Error::Parse { line: 0, msg: format!("bad quadruple {s:?}") };
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let v: Vec<u8> = inner.split(',').map(|t| t.trim().parse::<u8>().map_err(|_| bad())).collect::<Result<_>>()?;
        let q: [u8; 4] = v.try_into().map_err(|_| bad())?;
        if q.iter().map(|&x| x as u32).sum::<u32>() != 7 {
            return Err(bad());
        }
        Ok(Quadruple(q))
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        write!(f, "({}, {}, {}, {})", q[0], q[1], q[2], q[3])
    }
}

/// The four configurations of six generic points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SixClass {
    Beta,
    Delta,
    Gamma,
    Alpha,
}

impl SixClass {
    /// Classes in quadruple order `(β, δ, γ, α)`.
    pub const ALL: [SixClass; 4] = [SixClass::Beta, SixClass::Delta, SixClass::Gamma, SixClass::Alpha];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            SixClass::Alpha => "alpha",
            SixClass::Beta => "beta",
            SixClass::Gamma => "gamma",
            SixClass::Delta => "delta",
        }
    }

    pub fn greek(self) -> &'static str {
        match self {
            SixClass::Alpha => "α",
            SixClass::Beta => "β",
            SixClass::Gamma => "γ",
            SixClass::Delta => "δ",
        }
    }

    /// Number of points inside the conic through the other five.
    pub fn interior_count(self) -> usize {
        match self {
            SixClass::Alpha => 6,
            SixClass::Beta | SixClass::Gamma => 3,
            SixClass::Delta => 2,
        }
    }

    pub fn parse(s: &str) -> Result<SixClass> {
        let s = s.trim();
        SixClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.greek() == s)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown six-point class {s:?}") })
    }
}

impl fmt::Display for SixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.greek())
    }
}

/// Name of a seven-point configuration: its quadruple and, when several
/// configurations share the quadruple, a subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SevenClassName {
    pub quadruple: Quadruple,
    pub index: Option<u8>,
}

impl SevenClassName {
    /// Parses `(3,4,0,0)_1` or `(7, 0, 0, 0)`.
    pub fn parse(s: &str) -> Result<SevenClassName> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (q, idx) = match s.split_once('_') {
            Some((q, i)) => {
                let i =
                    i.parse::<u8>().map_err(|_| Error::Parse { line: 0, msg: format!("bad subscript in {s:?}") })?;
                (q.to_string(), Some(i))
            }
            None => (s.clone(), None),
        };
        Ok(SevenClassName { quadruple: Quadruple::parse(&q)?, index: idx })
    }

    /// Compact form without spaces, as used for graph node ids.
    pub fn compact(&self) -> String {
        let q = self.quadruple.0;
        let base = format!("({},{},{},{})", q[0], q[1], q[2], q[3]);
        match self.index {
            Some(i) => format!("{base}_{i}"),
            None => base,
        }
    }
}

impl fmt::Display for SevenClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// The exact data behind a seven-point fingerprint.
#[derive(Clone, Debug)]
pub struct SevenPointData {
    pub subs: Vec<SixPointData>,
    pub sub_fingerprints: Vec<Fingerprint>,
    pub descriptors: Vec<NodalCubicDescriptor>,
    /// `inside[p][q]`: point `p` is interior to the conic through the
    /// five points other than `p` and `q`.
    pub inside: [[bool; 7]; 7],
}

/// Normalized conics through every five of seven points.
pub(crate) struct FiveConics {
    conics: Vec<Option<ConicForm>>,
}

impl FiveConics {
    pub(crate) fn compute(pts: &[&Vec3]) -> Result<Self> {
        let n = pts.len();
        let mut conics = vec![None; n * n];
        for p in 0..n {
            for q in p + 1..n {
                let rest: Vec<usize> = (0..n).filter(|&i| i != p && i != q).collect();
                let c = conic_of(pts, &rest)?;
                conics[p * n + q] = Some(c.clone());
                conics[q * n + p] = Some(c);
            }
        }
        Ok(FiveConics { conics })
    }

    pub(crate) fn without(&self, p: usize, q: usize) -> &ConicForm {
        let n = (self.conics.len() as f64).sqrt() as usize;
        self.conics[p * n + q].as_ref().unwrap()
    }
}

pub fn seven_data(points: &[ProjectivePoint]) -> Result<SevenPointData> {
    if points.len() != 7 {
        return Err(Error::WrongArity { expected: "7", got: points.len() });
    }
    let pts: Vec<&Vec3> = points.iter().map(|p| p.coords()).collect();
    let five = FiveConics::compute(&pts)?;
    let mut inside = [[false; 7]; 7];
    for p in 0..7 {
        for q in 0..7 {
            if p == q {
                continue;
            }
            let v = five.without(p, q).eval(pts[p]);
            if v.is_zero() {
                return Err(Error::NonGeneric);
            }
            inside[p][q] = v < num_bigint::BigInt::zero();
        }
    }
    let mut subs = Vec::with_capacity(7);
    let mut sub_fingerprints = Vec::with_capacity(7);
    for p in 0..7 {
        let idx: Vec<usize> = (0..7).filter(|&i| i != p).collect();
        let sp: [&Vec3; 6] = std::array::from_fn(|k| pts[idx[k]]);
        let labels: [Label; 6] = std::array::from_fn(|k| idx[k] as Label + 1);
        let conics: Vec<ConicForm> = idx.iter().map(|&m| five.without(p, m).clone()).collect();
        let d = SixPointData::from_conics(&sp, labels, &conics)?;
        sub_fingerprints.push(six_fingerprint_of(&d));
        subs.push(d);
    }
    let mut descriptors = Vec::with_capacity(7);
    for n in 0..7 {
        let cubic = seven_point_nodal_cubic_fast(&pts, n, |q, m| five.without(q, m).clone());
        let others: Vec<(Label, ProjectivePoint)> =
            (0..7).filter(|&i| i != n).map(|i| (i as Label + 1, points[i].clone())).collect();
        descriptors.push(nodal_cubic_descriptor(&cubic, (n as Label + 1, &points[n]), &others)?);
    }
    Ok(SevenPointData { subs, sub_fingerprints, descriptors, inside })
}

/// Canonical seven-point fingerprint; `sub_id` maps a six-point fingerprint
/// to a small class number.
pub fn seven_fingerprint_of(d: &SevenPointData, sub_id: &dyn Fn(&Fingerprint) -> u8) -> Fingerprint {
    seven_canonical(d, sub_id).0
}

pub(crate) fn seven_canonical(d: &SevenPointData, sub_id: &dyn Fn(&Fingerprint) -> u8) -> (Fingerprint, Vec<usize>) {
    let ids: Vec<u8> = d.sub_fingerprints.iter().map(sub_id).collect();
    let keys: Vec<u64> = (0..7)
        .map(|i| {
            let dsc = &d.descriptors[i];
            let ins = d.inside[i].iter().filter(|&&b| b).count() as u64;
            (ids[i] as u64) << 24
                | u64::from(dsc.kind == NodeKind::Crunode) << 16
                | (dsc.loop_set.len() as u64) << 8
                | ins
        })
        .collect();
    let on_loop = |n: usize, j: usize| d.descriptors[n].loop_set.contains(&(j as Label + 1));
    let pair = |a: usize, b: usize| u8::from(d.inside[a][b]) * 2 + u8::from(on_loop(a, b));
    let (prefix, orders) = canonical_orders(&keys, &pair);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for order in orders {
        let pos = positions(&order);
        let mut tail = Vec::with_capacity(7 * 8);
        for &old in &order {
            tail.extend(d.descriptors[old].encode(|l| pos[l as usize - 1]));
        }
        if best.as_ref().is_none_or(|(b, _)| tail < *b) {
            best = Some((tail, order));
        }
    }
    let (tail, order) = best.unwrap();
    let mut bytes = prefix;
    bytes.extend(tail);
    (Fingerprint { arity: 7, bytes }, order)
}

/// Stored canonical forms every classification is matched against, built
/// once from the shipped catalog and pencil table.
pub struct References {
    pub six: Vec<SixReference>,
    /// Zone letter, canonical pencil at node 1, and whether the node is
    /// interior to the conic of the other five.
    pub zones: Vec<(char, Vec<u8>, bool)>,
    /// Catalog name, class name and fingerprint of each seven-point class.
    pub seven: Vec<(String, SevenClassName, Fingerprint)>,
}

pub fn references() -> &'static References {
    static CELL: OnceLock<References> = OnceLock::new();
    CELL.get_or_init(|| {
        let cat = Catalog::shipped();
        let six: Vec<SixReference> = SixClass::ALL
            .iter()
            .map(|&c| {
                let e = cat.six(c);
                let d = six_data(&e.points).expect("catalog six-point entry is generic");
                let triples = e.triples.iter().map(|t| t.map(|l| l as usize - 1)).collect();
                SixReference::new(c, &d, triples)
            })
            .collect();
        let zones =
            Golden::load().cubic_pencils.iter().map(|r| (r.zone, pencil_canonical(&r.pencil), r.zone <= 'D')).collect();
        let mut refs = References { six, zones, seven: Vec::new() };
        let seven = cat
            .of_kind(EntryKind::Seven)
            .map(|e| {
                let d = seven_data(&e.points).expect("catalog seven-point entry is generic");
                let fp = seven_fingerprint_of(&d, &|f| refs.sub_id(f));
                (e.name.clone(), e.class.expect("seven-point entries carry a class"), fp)
            })
            .collect();
        refs.seven = seven;
        refs
    })
}

impl References {
    fn sub_id(&self, f: &Fingerprint) -> u8 {
        self.six.iter().find(|r| &r.fingerprint == f).map_or(u8::MAX, |r| r.class.index() as u8)
    }
}

pub fn six_class_of(d: &SixPointData) -> Result<SixClass> {
    let f = six_fingerprint_of(d);
    references().six.iter().find(|r| r.fingerprint == f).map(|r| r.class).ok_or(Error::UnknownClass)
}

pub fn six_class(points: &[ProjectivePoint]) -> Result<SixClass> {
    six_class_of(&six_data(points)?)
}

/// Zone A..G of the node against the other five points.
pub fn zone_letter(points: &[ProjectivePoint], node: Label) -> Result<char> {
    if points.len() != 6 {
        return Err(Error::WrongArity { expected: "6", got: points.len() });
    }
    if node == 0 || node > 6 {
        return Err(Error::BadLabel(node));
    }
    let canon = pencil_canonical(&combinatorial_pencil(points, node)?);
    let rest: Vec<ProjectivePoint> = (0..6).filter(|&i| i + 1 != node as usize).map(|i| points[i].clone()).collect();
    let interior = conic_side(&conic_through_five(&rest)?, &points[node as usize - 1])? == Side::Interior;
    references()
        .zones
        .iter()
        .find(|(_, c, i)| *c == canon && *i == interior)
        .map(|(z, _, _)| *z)
        .ok_or(Error::UnknownZone)
}

fn quadruple_of(d: &SevenPointData) -> Result<Quadruple> {
    let refs = references();
    let mut q = [0u8; 4];
    for f in &d.sub_fingerprints {
        let id = refs.sub_id(f);
        if id == u8::MAX {
            return Err(Error::UnknownClass);
        }
        q[id as usize] += 1;
    }
    Ok(Quadruple(q))
}

pub fn seven_quadruple(points: &[ProjectivePoint]) -> Result<Quadruple> {
    quadruple_of(&seven_data(points)?)
}

pub fn seven_fingerprint(points: &[ProjectivePoint]) -> Result<Fingerprint> {
    let d = seven_data(points)?;
    quadruple_of(&d)?;
    let refs = references();
    Ok(seven_fingerprint_of(&d, &|f| refs.sub_id(f)))
}

pub fn seven_class_of(f: &Fingerprint) -> Result<SevenClassName> {
    references().seven.iter().find(|(_, _, g)| g == f).map(|(_, c, _)| *c).ok_or(Error::UnknownClass)
}

pub fn seven_class(points: &[ProjectivePoint]) -> Result<SevenClassName> {
    seven_class_of(&seven_fingerprint(points)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(a, b, c).unwrap()
    }

    fn six() -> Vec<ProjectivePoint> {
        vec![pt(0, 0, 1), pt(7, 1, 3), pt(-2, 5, 1), pt(3, -4, 2), pt(1, 9, -4), pt(-6, -1, 5)]
    }

    fn relabel(ps: &[ProjectivePoint], perm: &[usize]) -> Vec<ProjectivePoint> {
        perm.iter().map(|&i| ps[i].clone()).collect()
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn six_fingerprint_invariant_under_all_relabelings() {
        let ps = six();
        let f = six_fingerprint(&ps).unwrap();
        for perm in permutations(6) {
            assert_eq!(six_fingerprint(&relabel(&ps, &perm)).unwrap(), f);
        }
    }

    #[test]
    fn canonical_orders_matches_brute_force() {
        let ps = six();
        let d = six_data(&ps).unwrap();
        let (fp, _) = six_canonical(&d);
        // brute force over all 720 orders with the same encoding layout
        let idx = |l: Label| d.labels.iter().position(|&x| x == l).unwrap();
        let word_idx: Vec<Vec<usize>> = d.words.iter().map(|w| w.labels().iter().map(|&l| idx(l)).collect()).collect();
        let mut adj = [[0u8; 6]; 6];
        for seq in word_idx.iter().chain(d.m_orders.iter()) {
            for t in 0..seq.len() {
                let (a, b) = (seq[t], seq[(t + 1) % seq.len()]);
                adj[a][b] += 1;
                adj[b][a] += 1;
            }
        }
        let keys: Vec<u64> = (0..6).map(|i| u64::from(!d.interior[i])).collect();
        let mut best: Option<Vec<u8>> = None;
        for order in permutations(6) {
            let ks: Vec<u64> = order.iter().map(|&o| keys[o]).collect();
            if ks.windows(2).any(|w| w[0] > w[1]) {
                continue;
            }
            let pos = positions(&order);
            let mut enc: Vec<u8> = ks.iter().flat_map(|k| k.to_be_bytes()).collect();
            for k in 0..6 {
                for j in 0..k {
                    enc.push(adj[order[j]][order[k]]);
                    enc.push(adj[order[k]][order[j]]);
                }
            }
            for &old in &order {
                let w: Vec<u8> = word_idx[old].iter().map(|&i| pos[i]).collect();
                enc.extend(canonical_distinct(&w));
            }
            for &old in &order {
                let m: Vec<u8> = d.m_orders[old].iter().map(|&i| pos[i]).collect();
                enc.extend(dihedral_min(&m));
            }
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
        assert_eq!(fp.bytes, best.unwrap());
    }

    #[test]
    fn quadruple_parse() {
        assert_eq!(Quadruple::parse("(3, 4, 0, 0)").unwrap(), Quadruple([3, 4, 0, 0]));
        assert!(Quadruple::parse("(3, 4, 0, 1)").is_err());
        assert_eq!(Quadruple([0, 6, 1, 0]).to_string(), "(0, 6, 1, 0)");
    }

    #[test]
    fn catalog_six_classes_and_zones() {
        let cat = Catalog::shipped();
        for c in SixClass::ALL {
            let e = cat.six(c);
            assert_eq!(six_class(&e.points).unwrap(), c);
            let d = six_data(&e.points).unwrap();
            assert_eq!(d.interior_count(), c.interior_count());
        }
        for z in "ABCDEFG".chars() {
            let e = cat.zone(z).unwrap();
            assert_eq!(zone_letter(&e.points, 1).unwrap(), z);
        }
    }

    #[test]
    fn catalog_seven_classes_distinct() {
        let refs = references();
        assert_eq!(refs.seven.len(), 14);
        for (i, a) in refs.seven.iter().enumerate() {
            for b in &refs.seven[i + 1..] {
                assert_ne!(a.2, b.2, "{} vs {}", a.0, b.0);
            }
        }
        for e in Catalog::shipped().of_kind(EntryKind::Seven) {
            let q = seven_quadruple(&e.points).unwrap();
            assert_eq!(q, e.class.unwrap().quadruple, "{}", e.name);
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::arith::mat_vec;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn generic_six() -> impl Strategy<Value = Vec<ProjectivePoint>> {
        proptest::collection::vec(proptest::array::uniform3(-40i64..40), 6).prop_filter_map("not generic", |v| {
            let p: Option<Vec<ProjectivePoint>> =
                v.iter().map(|c| ProjectivePoint::from_ints(c[0], c[1], c[2]).ok()).collect();
            p.filter(|p| six_data(p).is_ok())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn fingerprint_ignores_labels(p in generic_six(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
            let q: Vec<ProjectivePoint> = perm.iter().map(|&i| p[i].clone()).collect();
            prop_assert_eq!(six_fingerprint(&q).unwrap(), six_fingerprint(&p).unwrap());
        }

        #[test]
        fn fingerprint_ignores_projective_maps(p in generic_six(), m in proptest::array::uniform3(proptest::array::uniform3(-4i64..4))) {
            let m: [Vec3; 3] = m.map(|r| r.map(BigInt::from));
            prop_assume!(!crate::arith::det3(&m[0], &m[1], &m[2]).is_zero());
            let q: Vec<ProjectivePoint> = p.iter().map(|x| ProjectivePoint::from_vec(mat_vec(&m, x.coords())).unwrap()).collect();
            prop_assert_eq!(six_class(&q).unwrap(), six_class(&p).unwrap());
            prop_assert_eq!(six_fingerprint(&q).unwrap(), six_fingerprint(&p).unwrap());
        }
    }
}

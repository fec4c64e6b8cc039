//! Shipped representative point sets.
//!
//! Each entry is a header line `kind name [class] [| triples]` followed by
//! its points, one `x0 x1 x2` per line. Kinds: `six` (one per six-point
//! class, with its bounding triples), `zone` (node 1 in a zone A..G),
//! `coconic` (points 1..6 on a conic, 7 in a zone A..K), and `seven` (one
//! per seven-point class).

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::classify::{SevenClassName, SixClass};
use crate::crossing::{mask_of, Event, MoverFrame};
use crate::error::{Error, Result};
use crate::golden::parse_triple;
use crate::projective::{Label, ProjectivePoint};

pub const CATALOG_TEXT: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Six,
    Zone,
    Coconic,
    Seven,
}

impl EntryKind {
    fn parse(s: &str) -> Option<EntryKind> {
        match s {
            "six" => Some(EntryKind::Six),
            "zone" => Some(EntryKind::Zone),
            "coconic" => Some(EntryKind::Coconic),
            "seven" => Some(EntryKind::Seven),
            _ => None,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            EntryKind::Six | EntryKind::Zone => 6,
            EntryKind::Coconic | EntryKind::Seven => 7,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            EntryKind::Six => "six",
            EntryKind::Zone => "zone",
            EntryKind::Coconic => "coconic",
            EntryKind::Seven => "seven",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub kind: EntryKind,
    pub name: String,
    pub class: Option<SevenClassName>,
    /// Bounding triples, 1-based and sorted.
    pub triples: Vec<[Label; 3]>,
    pub points: Vec<ProjectivePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.split('#').next().unwrap_or("").trim();
            if s.is_empty() {
                continue;
            }
            let first = s.split_whitespace().next().unwrap_or("");
            if let Some(kind) = EntryKind::parse(first) {
                if let Some(last) = entries.last() {
                    if last.points.len() != last.kind.arity() {
                        return Err(err(line, format!("entry {} has {} points", last.name, last.points.len())));
                    }
                }
                let (head, walls) = match s.split_once('|') {
                    Some((h, w)) => (h, Some(w)),
                    None => (s, None),
                };
                let toks: Vec<&str> = head.split_whitespace().collect();
                if toks.len() < 2 || toks.len() > 3 {
                    return Err(err(line, format!("bad header {s:?}")));
                }
                let class = match toks.get(2) {
                    Some(c) => Some(SevenClassName::parse(c).map_err(|_| err(line, format!("bad class {c:?}")))?),
                    None => None,
                };
                let mut triples = Vec::new();
                for t in walls.unwrap_or("").split_whitespace() {
                    triples.push(parse_triple(line, t)?);
                }
                triples.sort_unstable();
                entries.push(CatalogEntry { kind, name: toks[1].to_string(), class, triples, points: Vec::new() });
            } else {
                let Some(e) = entries.last_mut() else {
                    return Err(err(line, "point before any header".into()));
                };
                if e.points.len() == e.kind.arity() {
                    return Err(err(line, format!("too many points in {}", e.name)));
                }
                let p: ProjectivePoint = s.parse().map_err(|_| err(line, format!("bad point {s:?}")))?;
                e.points.push(p);
            }
        }
        if let Some(last) = entries.last() {
            if last.points.len() != last.kind.arity() {
                return Err(err(text.lines().count(), format!("entry {} is incomplete", last.name)));
            }
        }
        Ok(Catalog { entries })
    }

    /// The catalog shipped with the crate.
    pub fn shipped() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| Catalog::parse(CATALOG_TEXT).expect("shipped catalog parses"))
    }

    pub fn of_kind(&self, kind: EntryKind) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.kind == kind)
    }

    pub fn find(&self, kind: EntryKind, name: &str) -> Option<&CatalogEntry> {
        self.of_kind(kind).find(|e| e.name == name)
    }

    pub fn six(&self, class: SixClass) -> &CatalogEntry {
        self.find(EntryKind::Six, class.name()).expect("every six-point class is cataloged")
    }

    pub fn zone(&self, letter: char) -> Option<&CatalogEntry> {
        self.find(EntryKind::Zone, &letter.to_string())
    }

    pub fn coconic(&self, letter: char) -> Option<&CatalogEntry> {
        self.find(EntryKind::Coconic, &letter.to_string())
    }

    pub fn seven(&self, name: &str) -> Option<&CatalogEntry> {
        self.find(EntryKind::Seven, name)
    }
}

/// Moves point 6 of a set whose points 1..6 are coconic radially off the
/// conic, about the origin of the affine chart `x2 = 1`. The step is halved
/// until no other degeneracy is met on the way.
pub fn displace_sixth(points: &[ProjectivePoint], outward: bool) -> Result<Vec<ProjectivePoint>> {
    let pts: Vec<_> = points.iter().map(|p| p.coords().clone()).collect();
    let frame = MoverFrame::new(&pts, 5);
    let wall = Event::Conic(mask_of(&[0, 1, 2, 3, 4, 5]));
    let p = &pts[5];
    for k in 2..80 {
        let n = BigInt::from(1) << k;
        let f = if outward { &n + 1 } else { &n - 1 };
        let q = [&p[0] * &f, &p[1] * &f, &p[2] * &n];
        if frame.path(&q, Some(wall)) == Some(vec![]) {
            let mut out = points.to_vec();
            out[5] = ProjectivePoint::from_vec(q)?;
            return Ok(out);
        }
    }
    Err(Error::PathBlocked)
}

/// The relabeling `(61)(52)(43)` of points 1..6, point 7 fixed.
pub fn mirror_hexagon(points: &[ProjectivePoint]) -> Vec<ProjectivePoint> {
    let mut out = points.to_vec();
    for i in 0..6 {
        out[5 - i] = points[i].clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::events;

    #[test]
    fn shipped_catalog_shape() {
        let c = Catalog::shipped();
        assert_eq!(c.of_kind(EntryKind::Six).count(), 4);
        assert_eq!(c.of_kind(EntryKind::Zone).count(), 7);
        assert_eq!(c.of_kind(EntryKind::Coconic).count(), 11);
        assert_eq!(c.of_kind(EntryKind::Seven).count(), 14);
        for e in c.of_kind(EntryKind::Seven) {
            assert!(e.class.is_some());
        }
    }

    #[test]
    fn entries_are_generic_or_coconic() {
        let c = Catalog::shipped();
        for e in &c.entries {
            let pts: Vec<_> = e.points.iter().map(|p| p.coords().clone()).collect();
            let ev = events(&pts);
            match e.kind {
                EntryKind::Coconic => assert_eq!(ev, vec![Event::Conic(mask_of(&[0, 1, 2, 3, 4, 5]))], "{}", e.name),
                _ => assert!(ev.is_empty(), "{}", e.name),
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(Catalog::parse("six alpha\n1 0 0\n").is_err());
        assert!(Catalog::parse("1 0 0\n").is_err());
        assert!(Catalog::parse("seven R (9,9,9,9)\n").is_err());
        assert!(Catalog::parse("zone A\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 2 3\n4 5 6\n7 8 9\n").is_err());
        assert!(Catalog::parse("# only a comment\n").unwrap().entries.is_empty());
    }
}

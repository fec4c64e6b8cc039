//! Regeneration of the reference tables from the catalog and the engines,
//! with a cell-level comparison against the shipped transcriptions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::adjacency::{coconic_admissible_triples, cross_wall, refined_census, CameraClass, Crossing, WallSpec};
use crate::catalog::Catalog;
use crate::classify::{seven_class, six_class, six_data, zone_letter};
use crate::error::{Error, Result};
use crate::golden::Golden;
use crate::pencil::{combinatorial_pencil, conic_pencil_after_cremona};
use crate::projective::{Label, Side};
use crate::walls::{format_sequence_braced, refined_wall_fingerprint, wall_names, WallDescriptor};

/// One differing cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDiff {
    pub row: usize,
    pub cell: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} {}: expected {} got {}", self.row, self.cell, self.expected, self.got)
    }
}

/// A regenerated table.
#[derive(Clone, Debug)]
pub struct TableReport {
    pub name: &'static str,
    pub rows: usize,
    /// Regenerated rows, in the layout of the transcription.
    pub text: String,
    pub diffs: Vec<CellDiff>,
}

impl TableReport {
    fn new(name: &'static str) -> Self {
        TableReport { name, rows: 0, text: String::new(), diffs: Vec::new() }
    }

    fn cell(&mut self, row: usize, cell: &str, expected: impl fmt::Display, got: impl fmt::Display, same: bool) {
        if !same {
            self.diffs.push(CellDiff { row, cell: cell.into(), expected: expected.to_string(), got: got.to_string() });
        }
    }

    fn line(&mut self, s: String) {
        self.text.push_str(&s);
        self.text.push('\n');
        self.rows += 1;
    }

    pub fn ok(&self) -> bool {
        self.diffs.is_empty()
    }
}

fn seven_entry(arr: &str) -> Result<&'static crate::catalog::CatalogEntry> {
    Catalog::shipped().seven(arr).ok_or_else(|| Error::GoldenMismatch(format!("arrangement {arr} not in catalog")))
}

fn show<T: fmt::Display, E: fmt::Display>(r: &std::result::Result<T, E>) -> String {
    match r {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn triple_str(t: &[Label; 3]) -> String {
    t.iter().map(|l| l.to_string()).collect()
}

pub fn cubic_pencils() -> Result<TableReport> {
    let mut r = TableReport::new("cubic_pencils");
    for (k, row) in Golden::load().cubic_pencils.iter().enumerate() {
        let e = Catalog::shipped().zone(row.zone).ok_or(Error::UnknownZone)?;
        let got = combinatorial_pencil(&e.points, 1);
        r.cell(k + 1, "pencil", &row.pencil, show(&got), got.as_ref() == Ok(&row.pencil));
        r.line(format!("{} | {}", row.zone, show(&got)));
    }
    Ok(r)
}

pub fn conic_pencils() -> Result<TableReport> {
    let mut r = TableReport::new("conic_pencils");
    for (k, row) in Golden::load().conic_pencils.iter().enumerate() {
        let e = Catalog::shipped().zone(row.zone).ok_or(Error::UnknownZone)?;
        let [n, a, b] = row.base;
        let got = conic_pencil_after_cremona(&e.points, n, a, b);
        r.cell(k + 1, "pencil", &row.pencil, show(&got), got.as_ref() == Ok(&row.pencil));
        let direct = combinatorial_pencil(&e.points, n)?.m_sequence();
        if let Ok(g) = &got {
            let pb = g.pullback_m_sequence();
            r.cell(k + 1, "pullback", &direct, &pb, pb == direct);
        }
        r.line(format!("{} | {}{}{} | {}", row.zone, n, a, b, show(&got)));
    }
    Ok(r)
}

pub fn six_lists() -> Result<TableReport> {
    let mut r = TableReport::new("six_lists");
    let mut k = 0;
    for block in &Golden::load().six_lists {
        let e = Catalog::shipped().six(block.class);
        k += 1;
        let class = six_class(&e.points);
        r.cell(k, "class", block.class, show(&class), class.as_ref() == Ok(&block.class));
        let zone = zone_letter(&e.points, 1);
        r.cell(k, "zone", block.zone, show(&zone), zone.as_ref() == Ok(&block.zone));
        r.line(format!("{} {}", block.class.name(), show(&zone)));
        let d = six_data(&e.points)?;
        for row in &block.rows {
            k += 1;
            let i = row.node as usize - 1;
            let side = if d.interior[i] { Side::Interior } else { Side::Exterior };
            let pencil = d.pencil(i);
            r.cell(k, "side", row.side.symbol(), side.symbol(), side == row.side);
            r.cell(k, "word", &row.word, &d.words[i], d.words[i] == row.word);
            r.cell(k, "pencil", &row.pencil, &pencil, pencil == row.pencil);
            r.line(format!("{} {} {} | {}", row.node, side.symbol(), d.words[i], pencil));
        }
    }
    Ok(r)
}

pub fn quadruples() -> Result<TableReport> {
    let mut r = TableReport::new("quadruples");
    for (k, row) in Golden::load().quadruples.iter().enumerate() {
        let got = seven_class(&seven_entry(&row.arrangement)?.points);
        let same = got == Ok(row.class);
        let shown = show(&got.map(|c| c.compact()));
        r.cell(k + 1, "configuration", row.class.compact(), &shown, same);
        r.line(format!("{} | {}", row.arrangement, shown));
    }
    Ok(r)
}

fn wall_label(c: &Crossing) -> String {
    c.descriptor.label()
}

pub fn line_walls(seed: u64) -> Result<TableReport> {
    let mut r = TableReport::new("line_walls");
    let rows = &Golden::load().line_walls;
    let crossings: Vec<Result<Crossing>> = rows
        .par_iter()
        .enumerate()
        .map(|(k, row)| cross_wall(&seven_entry(&row.arrangement)?.points, WallSpec::Line(row.triple), seed + k as u64))
        .collect();
    for (k, (row, c)) in rows.iter().zip(crossings).enumerate() {
        let k = k + 1;
        match c {
            Ok(c) => {
                let before = CameraClass::Seven(row.class);
                let after = CameraClass::Seven(row.across);
                let w = format!("W{}", row.wall);
                r.cell(k, "configuration", before, c.before, c.before == before);
                r.cell(k, "wall", &w, wall_label(&c), wall_label(&c) == w);
                r.cell(k, "across", after, c.after, c.after == after);
                r.line(format!(
                    "{} | {} | {} | {} | {}",
                    row.arrangement,
                    c.before,
                    triple_str(&row.triple),
                    wall_label(&c),
                    c.after
                ));
            }
            Err(e) => {
                r.cell(k, "crossing", "a crossing", format!("error: {e}"), false);
                r.line(format!("{} | | {} | error: {e} |", row.arrangement, triple_str(&row.triple)));
            }
        }
    }
    Ok(r)
}

/// Conic-walls bounding a seven-point set: letter and far class.
pub fn conic_walls_of(points: &[crate::projective::ProjectivePoint], seed: u64) -> Result<Vec<(char, CameraClass)>> {
    let results: Vec<Result<Option<(char, CameraClass)>>> = (1..=7u8)
        .into_par_iter()
        .map(|apex| {
            let six: Vec<Label> = (1..=7).filter(|&l| l != apex).collect();
            match cross_wall(points, WallSpec::Conic(six.try_into().unwrap()), seed + apex as u64) {
                Ok(c) => match c.descriptor {
                    WallDescriptor::Conic(w) => Ok(Some((w.letter, c.after))),
                    _ => Err(Error::NotOnWall),
                },
                Err(Error::PathBlocked) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect();
    let mut out: Vec<(char, CameraClass)> = results.into_iter().filter_map(|x| x.transpose()).collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

pub fn conic_walls(seed: u64) -> Result<TableReport> {
    let mut r = TableReport::new("conic_walls");
    let mut cache: BTreeMap<String, Vec<(char, CameraClass)>> = BTreeMap::new();
    for (k, row) in Golden::load().conic_walls.iter().enumerate() {
        if !cache.contains_key(&row.arrangement) {
            let walls = conic_walls_of(&seven_entry(&row.arrangement)?.points, seed)?;
            cache.insert(row.arrangement.clone(), walls);
        }
        let walls = &cache[&row.arrangement];
        let got = walls.iter().find(|(l, _)| *l == row.letter).map(|(_, c)| *c);
        let want = CameraClass::Seven(row.across);
        match got {
            Some(c) => r.cell(k + 1, "across", want, c, c == want),
            None => r.cell(k + 1, "wall", row.letter, "none", false),
        }
        r.line(format!(
            "{} | {} | {} | {}",
            row.arrangement,
            row.class.compact(),
            row.letter,
            got.map_or("none".to_string(), |c| c.to_string())
        ));
    }
    // every conic-wall found must be tabulated
    for (arr, walls) in &cache {
        for (l, c) in walls {
            let listed = Golden::load().conic_walls.iter().any(|row| &row.arrangement == arr && row.letter == *l);
            r.cell(0, &format!("{arr} conic {l}"), "listed", format!("extra wall to {c}"), listed);
        }
    }
    Ok(r)
}

pub fn coconic_triples() -> Result<TableReport> {
    let mut r = TableReport::new("coconic_triples");
    for (k, row) in Golden::load().coconic_triples.iter().enumerate() {
        let e = Catalog::shipped().coconic(row.letter).ok_or(Error::UnknownClass)?;
        let got = coconic_admissible_triples(&e.points)?;
        let want: BTreeSet<[Label; 3]> = row.triples.iter().copied().collect();
        let gs: BTreeSet<[Label; 3]> = got.iter().copied().collect();
        let fmt = |s: &BTreeSet<[Label; 3]>| s.iter().map(triple_str).collect::<Vec<_>>().join(" ");
        r.cell(k + 1, "triples", fmt(&want), fmt(&gs), gs == want);
        r.line(format!("{} | {}", row.letter, fmt(&gs)));
    }
    Ok(r)
}

pub fn refined_walls(seed: u64) -> Result<TableReport> {
    let mut r = TableReport::new("refined_walls");
    let rows = &Golden::load().refined_walls;
    let found: Vec<Result<(Crossing, crate::walls::RefinedFingerprint)>> = rows
        .par_iter()
        .enumerate()
        .map(|(k, row)| {
            let c = cross_wall(&seven_entry(&row.arrangement)?.points, WallSpec::Line(row.triple), seed + k as u64)?;
            let (_, fp) = refined_wall_fingerprint(&c.wall)?;
            Ok((c, fp))
        })
        .collect();
    let mut parts: BTreeMap<(u8, Option<u8>), crate::walls::RefinedFingerprint> = BTreeMap::new();
    for (k, (row, f)) in rows.iter().zip(found).enumerate() {
        let k = k + 1;
        let name = match row.part {
            Some(p) => format!("W{}_{}", row.wall, p),
            None => format!("W{}", row.wall),
        };
        match f {
            Ok((c, fp)) => {
                let ends = [CameraClass::Seven(row.class), CameraClass::Seven(row.across)];
                let got = [c.before, c.after];
                let same_ends = got == ends || got == [ends[1], ends[0]];
                r.cell(
                    k,
                    "configurations",
                    format!("{} {}", ends[0], ends[1]),
                    format!("{} {}", got[0], got[1]),
                    same_ends,
                );
                let w = format!("W{}", row.wall);
                r.cell(k, "wall", &w, wall_label(&c), wall_label(&c) == w);
                for ((w2, p2), fp2) in &parts {
                    if *w2 == row.wall {
                        let same_part = *p2 == row.part;
                        r.cell(
                            k,
                            "refinement",
                            if same_part { "equal" } else { "distinct" },
                            format!("vs W{w2}_{p2:?}"),
                            same_part == (*fp2 == fp),
                        );
                    }
                }
                parts.entry((row.wall, row.part)).or_insert(fp);
                r.line(format!(
                    "{} | {} | {} | {}{}",
                    c.before,
                    name,
                    c.after,
                    row.arrangement,
                    triple_str(&row.triple)
                ));
            }
            Err(e) => {
                r.cell(k, "crossing", "a crossing", format!("error: {e}"), false);
                r.line(format!("| {name} | error: {e} |"));
            }
        }
    }
    // split multiplicities over the whole census
    let census = refined_census(seed)?;
    let mut per_wall: BTreeMap<u8, usize> = BTreeMap::new();
    for code in census.values() {
        let w = wall_names().iter().find(|(_, c)| c == code).map_or(0, |(n, _)| *n);
        *per_wall.entry(w).or_default() += 1;
    }
    for (w, n) in &per_wall {
        let tabulated: BTreeSet<Option<u8>> = rows.iter().filter(|x| x.wall == *w).map(|x| x.part).collect();
        let want = tabulated.len().max(1);
        r.cell(0, &format!("W{w} split"), want, n, *n == want);
    }
    r.cell(0, "total", 38, census.len(), census.len() == 38);
    r.line(format!("total | {}", census.len()));
    Ok(r)
}

/// Regenerates every table.
pub fn all_tables(seed: u64) -> Result<Vec<TableReport>> {
    Ok(vec![
        conic_pencils()?,
        cubic_pencils()?,
        six_lists()?,
        quadruples()?,
        line_walls(seed)?,
        conic_walls(seed)?,
        coconic_triples()?,
        refined_walls(seed)?,
    ])
}

/// The quoted cyclic order of the wall reached from `(D,6)` at `456`.
pub fn anchor_sequence(seed: u64) -> Result<(String, String)> {
    let c = cross_wall(&seven_entry("(D,6)")?.points, WallSpec::Line([4, 5, 6]), seed)?;
    match &c.descriptor {
        WallDescriptor::Line(l) => Ok((format_sequence_braced(&l.sequence), l.name_string())),
        _ => Err(Error::NotOnWall),
    }
}
